#include "tolspace/real.hpp"

#include "tolspace/error.hpp"
#include "tolspace/figures.hpp"

namespace tolspace {

CarrierPtr grid_carrier(const RealGrid& grid) {
    if (grid.granularity < 1 || grid.bound < 1) {
        throw Error::input("grid needs G >= 1 and M >= 1");
    }
    BigInt steps = BigInt(grid.bound) << static_cast<unsigned>(grid.granularity);
    Rational spacing = Rational::pow2(-grid.granularity);
    std::vector<Rational> values;
    for (BigInt k = -steps; k <= steps; ++k) {
        values.push_back(Rational(k) * spacing);
    }
    return make_numeric_carrier(values);
}

namespace {

std::vector<Relation> numeric_levels(const Carrier& carrier, int levels,
                                     bool sign_split_far_branch) {
    if (!carrier.numeric()) {
        throw Error::input("real continuum needs a numeric carrier");
    }
    if (levels < 1) throw Error::input("real continuum needs L >= 1");
    std::vector<Relation> out;
    out.push_back(Relation::full(carrier.size()));
    for (int n = 1; n <= levels; ++n) {
        Rational near = Rational::pow2(-n);
        Rational far = Rational::pow2(n);
        out.push_back(Relation::from_predicate(
            carrier.size(), [&](Index i, Index j) {
                const Rational& a = carrier.value(i);
                const Rational& b = carrier.value(j);
                if ((a - b).abs() < near) return true;
                if (sign_split_far_branch) {
                    return (a > far && b > far) || (a < -far && b < -far);
                }
                return (a - b).abs() > far;
            }));
    }
    return out;
}

} // namespace

Continuum real_continuum(const RealGrid& grid) {
    if (grid.levels < 1) throw Error::input("real continuum needs L >= 1");
    if (grid.granularity < grid.levels + 1) {
        throw Error::input("grid granularity must exceed the finest level (G >= L+1)");
    }
    CarrierPtr carrier = grid_carrier(grid);

    // On a uniform grid the thresholds reduce to index windows: with spacing
    // 2^-G, |a-b| < 2^-n means |i-j| < 2^(G-n), and a > 2^n means the index
    // sits more than 2^(G+n) above the center. Same relations as the generic
    // rational evaluation, built without big-number arithmetic.
    const long long step_count = (1LL << grid.granularity);
    const long long center = grid.bound * step_count;
    const long long top = 2 * center;
    const std::size_t n_positions = carrier->size();

    std::vector<Relation> rels;
    rels.push_back(Relation::full(n_positions));
    for (int n = 1; n <= grid.levels; ++n) {
        Relation r(n_positions);
        const long long window = step_count >> n; // 2^(G-n), >= 2 because G >= L+1
        for (long long i = 0; i <= top; ++i) {
            long long lo = std::max<long long>(0, i - window + 1);
            long long hi = std::min<long long>(top, i + window - 1);
            for (long long j = lo; j <= hi; ++j) {
                r.set(static_cast<Index>(i), static_cast<Index>(j));
            }
        }
        if (n < 63 - grid.granularity) {
            const long long far_offset = step_count << n; // index distance for value 2^n
            long long far_pos_start = center + far_offset + 1;
            if (far_pos_start <= top) {
                Class far_pos(n_positions);
                for (long long i = far_pos_start; i <= top; ++i) far_pos.set(i);
                for (long long i = far_pos_start; i <= top; ++i) {
                    r.mutable_row(static_cast<Index>(i)) |= far_pos;
                }
            }
            long long far_neg_end = center - far_offset - 1;
            if (far_neg_end >= 0) {
                Class far_neg(n_positions);
                for (long long i = 0; i <= far_neg_end; ++i) far_neg.set(i);
                for (long long i = 0; i <= far_neg_end; ++i) {
                    r.mutable_row(static_cast<Index>(i)) |= far_neg;
                }
            }
        }
        rels.push_back(std::move(r));
    }
    return Continuum(std::move(carrier), std::move(rels));
}

Continuum real_continuum_on(CarrierPtr carrier, int levels) {
    auto rels = numeric_levels(*carrier, levels, true);
    return Continuum(std::move(carrier), std::move(rels));
}

Continuum literal_real_continuum_on(CarrierPtr carrier, int levels) {
    auto rels = numeric_levels(*carrier, levels, false);
    return Continuum(std::move(carrier), std::move(rels));
}

bool real_eq(const Rational& a, const Rational& b, int n) {
    if (n < 0) throw Error::input("level must be nonnegative");
    if (n == 0) return true;
    if ((a - b).abs() < Rational::pow2(-n)) return true;
    Rational far = Rational::pow2(n);
    return (a > far && b > far) || (a < -far && b < -far);
}

BigInt archimedean_witness(const Rational& q) {
    BigInt n = q.floor() + 1;
    return n < 0 ? BigInt(0) : n;
}

Rational lub(std::span<const Rational> members, const Rational& a, const Rational& b,
             int iterations) {
    if (members.empty()) throw Error::precondition("lub needs a nonempty member set");
    if (iterations < 0) throw Error::input("iteration count must be nonnegative");

    auto is_upper_bound = [&](const Rational& c) {
        for (const auto& m : members) {
            if (m > c) return false;
        }
        return true;
    };

    if (!is_upper_bound(b)) {
        for (const auto& m : members) {
            if (m > b) {
                throw Error::precondition("b = " + b.str() + " is not an upper bound: member " +
                                          m.str() + " exceeds it");
            }
        }
    }
    if (is_upper_bound(a)) {
        throw Error::precondition("a = " + a.str() +
                                  " is already an upper bound; no member exceeds it");
    }

    Rational c = b;
    Rational step = a - b; // negative: the bisection walks downward
    for (int i = 1; i <= iterations; ++i) {
        Rational candidate = c + step / Rational::pow2(i);
        if (is_upper_bound(candidate)) c = candidate;
    }
    return c;
}

namespace {

Index grid_index_of(const Continuum& grid, const Rational& q, const char* role) {
    if (!grid.carrier().numeric()) {
        throw Error::input("interval needs a numeric carrier");
    }
    auto idx = grid.carrier().find(q.str());
    if (!idx) {
        throw Error::input(std::string(role) + " endpoint " + q.str() + " is off the grid");
    }
    return *idx;
}

} // namespace

std::pair<Class, Class> interval_constructions(const Continuum& grid, const Rational& a,
                                               const Rational& b, IntervalKind kind, int n) {
    grid.require_level(n);
    if (!(a < b)) throw Error::input("interval needs a < b");
    Index ia = grid_index_of(grid, a, "left");
    Index ib = grid_index_of(grid, b, "right");

    Class raw(grid.carrier_size());
    for (Index i = 0; i < grid.carrier_size(); ++i) {
        const Rational& q = grid.carrier().value(i);
        if (a < q && q < b) raw.set(i);
    }

    Class cl = closure(grid, raw, n);
    Class in = interior(grid, raw, n);
    Class mon_a = grid.image(ia, n);
    Class mon_b = grid.image(ib, n);

    switch (kind) {
    case IntervalKind::open:
        return {in, in};
    case IntervalKind::closed:
        return {cl, cl};
    case IntervalKind::half_open_left: // (a, b]
        return {cl - mon_a, in | mon_b};
    case IntervalKind::half_open_right: // [a, b)
        return {cl - mon_b, in | mon_a};
    }
    throw Error::input("unknown interval kind");
}

Class interval(const Continuum& grid, const Rational& a, const Rational& b, IntervalKind kind,
               int n) {
    return interval_constructions(grid, a, b, kind, n).first;
}

} // namespace tolspace
