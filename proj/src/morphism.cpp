#include "tolspace/morphism.hpp"

#include "tolspace/error.hpp"
#include "tolspace/figures.hpp"

#include <algorithm>

namespace tolspace {

MorphismTable make_morphism(ContinuumPtr source, ContinuumPtr target, std::vector<Index> map) {
    if (!source || !target) throw Error::input("morphism needs source and target continua");
    if (map.size() != source->carrier_size()) {
        throw Error::input("morphism table is not total over the source carrier");
    }
    for (Index v : map) {
        if (v >= target->carrier_size()) {
            throw Error::input("morphism image leaves the target carrier");
        }
    }
    return {std::move(source), std::move(target), std::move(map)};
}

MorphismTable make_identity(ContinuumPtr c) {
    std::vector<Index> map(c->carrier_size());
    for (Index i = 0; i < map.size(); ++i) map[i] = i;
    auto target = c;
    return make_morphism(std::move(c), std::move(target), std::move(map));
}

MorphismTable make_affine(ContinuumPtr source, ContinuumPtr target, const Rational& a,
                          const Rational& b) {
    if (!source->carrier().numeric() || !target->carrier().numeric()) {
        throw Error::input("affine rules need numeric carriers");
    }
    std::vector<Index> map;
    map.reserve(source->carrier_size());
    for (Index i = 0; i < source->carrier_size(); ++i) {
        Rational y = a * source->carrier().value(i) + b;
        auto idx = target->carrier().find(y.str());
        if (!idx) {
            throw Error::input("affine image " + y.str() + " of position " +
                               source->carrier().at(i).id + " is off the target carrier");
        }
        map.push_back(*idx);
    }
    return make_morphism(std::move(source), std::move(target), std::move(map));
}

MorphismTable step_morphism(ContinuumPtr grid) {
    if (!grid->carrier().numeric()) throw Error::input("step morphism needs a numeric carrier");
    auto zero = grid->carrier().find("0");
    auto one = grid->carrier().find("1");
    if (!zero || !one) throw Error::input("step morphism needs 0 and 1 on the carrier");
    Rational cutoff = Rational::pow2(-grid->max_level());
    std::vector<Index> map;
    map.reserve(grid->carrier_size());
    for (Index i = 0; i < grid->carrier_size(); ++i) {
        bool near_zero = grid->carrier().value(i).abs() < cutoff;
        map.push_back(near_zero ? *one : *zero);
    }
    auto target = grid;
    return make_morphism(std::move(grid), std::move(target), std::move(map));
}

bool preserves_at(const MorphismTable& f, int j, int k) {
    f.source->require_level(j);
    f.target->require_level(k);
    const Relation& src = f.source->relation(j);
    const Relation& dst = f.target->relation(k);
    for (Index x = 0; x < f.source->carrier_size(); ++x) {
        const Class& row = src.row(x);
        for (auto y = row.find_first(); y != Class::npos; y = row.find_next(y)) {
            if (!dst.contains(f.map[x], f.map[static_cast<Index>(y)])) return false;
        }
    }
    return true;
}

ModulusTable modulus(const MorphismTable& f) {
    ModulusTable table;
    for (int k = 0; k <= f.target->max_level(); ++k) {
        std::optional<int> least;
        for (int j = 0; j <= f.source->max_level(); ++j) {
            if (preserves_at(f, j, k)) {
                least = j;
                break;
            }
        }
        table.least_source_level.push_back(least);
    }
    return table;
}

bool is_uniformly_continuous(const MorphismTable& f) {
    ModulusTable table = modulus(f);
    return std::all_of(table.least_source_level.begin(), table.least_source_level.end(),
                       [](const std::optional<int>& j) { return j.has_value(); });
}

std::optional<int> pointwise_modulus(const MorphismTable& f, Index x, int k) {
    if (x >= f.source->carrier_size()) throw Error::input("position index out of range");
    f.target->require_level(k);
    const Relation& dst = f.target->relation(k);
    for (int j = 0; j <= f.source->max_level(); ++j) {
        const Class& row = f.source->relation(j).row(x);
        bool ok = true;
        for (auto y = row.find_first(); y != Class::npos && ok; y = row.find_next(y)) {
            ok = dst.contains(f.map[x], f.map[static_cast<Index>(y)]);
        }
        if (ok) return j;
    }
    return std::nullopt;
}

ConnectednessCheck preserves_connected(const MorphismTable& f, int n1, int n2) {
    f.source->require_level(n1);
    f.target->require_level(n2);
    const Relation& src = f.source->relation(n1);
    const Relation& dst = f.target->relation(n2);
    for (Index x = 0; x < f.source->carrier_size(); ++x) {
        const Class& row = src.row(x);
        for (auto y = row.find_first(); y != Class::npos; y = row.find_next(y)) {
            Index fx = f.map[x];
            Index fy = f.map[static_cast<Index>(y)];
            if (fx != fy && !dst.contains(fx, fy)) {
                return {false, std::pair<Index, Index>{x, static_cast<Index>(y)}};
            }
        }
    }
    return {true, std::nullopt};
}

PushResult push_motion(const MorphismTable& f, const Motion& m, int n2) {
    if (!is_motion(*f.source, m.steps, m.level)) {
        throw Error::precondition("input is not a motion of the source at level " +
                                  std::to_string(m.level));
    }
    f.target->require_level(n2);
    PushResult result;
    result.image.level = n2;
    result.image.steps.reserve(m.steps.size());
    for (Index s : m.steps) result.image.steps.push_back(f.map[s]);
    for (std::size_t i = 0; i + 1 < result.image.steps.size(); ++i) {
        if (!f.target->relation(n2).contains(result.image.steps[i], result.image.steps[i + 1])) {
            result.ok = false;
            result.failed_step = i;
            return result;
        }
    }
    result.ok = true;
    return result;
}

namespace {

Class preimage(const MorphismTable& f, const Class& target_class) {
    Class out(f.source->carrier_size());
    for (Index x = 0; x < f.source->carrier_size(); ++x) {
        if (target_class.test(f.map[x])) out.set(x);
    }
    return out;
}

} // namespace

bool is_interior_image(const Continuum& c, const Class& members, int n) {
    return interior(c, closure(c, members, n), n) == members;
}

bool is_closure_image(const Continuum& c, const Class& members, int n) {
    return closure(c, interior(c, members, n), n) == members;
}

namespace {

void require_preimage_scale(const MorphismTable& f) {
    if (f.source->carrier_size() > 20 || f.target->carrier_size() > 20) {
        throw Error::limit("preimage checks are exhaustive and capped at 20 positions");
    }
}

} // namespace

PreimageCheck preimage_open_check(const MorphismTable& f, int n1, int n2) {
    require_preimage_scale(f);
    f.source->require_level(n1);
    f.target->require_level(n2);
    const std::size_t m = f.target->carrier_size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        Class x(m);
        for (std::size_t i = 0; i < m; ++i) {
            if (mask & (std::uint64_t{1} << i)) x.set(i);
        }
        if (!is_interior_image(*f.target, x, n2)) continue;
        if (!is_interior_image(*f.source, preimage(f, x), n1)) {
            return {false, x};
        }
    }
    return {true, std::nullopt};
}

PreimageCheck preimage_closed_check(const MorphismTable& f, int n1, int n2) {
    require_preimage_scale(f);
    f.source->require_level(n1);
    f.target->require_level(n2);
    const std::size_t m = f.target->carrier_size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        Class y(m);
        for (std::size_t i = 0; i < m; ++i) {
            if (mask & (std::uint64_t{1} << i)) y.set(i);
        }
        if (!is_closure_image(*f.target, y, n2)) continue;
        if (!is_closure_image(*f.source, preimage(f, y), n1)) {
            return {false, y};
        }
    }
    return {true, std::nullopt};
}

bool functions_equal_at(const MorphismTable& f, const MorphismTable& g, int k) {
    bool same_target = f.target == g.target || *f.target == *g.target;
    if (f.source->carrier_size() != g.source->carrier_size() || !same_target) {
        throw Error::input("function comparison needs a shared source size and target");
    }
    if (!f.target->carrier().numeric()) {
        throw Error::input("function comparison needs a numeric target");
    }
    if (k < 0) throw Error::input("level must be nonnegative");
    Rational bound = Rational::pow2(-k);
    for (Index x = 0; x < f.source->carrier_size(); ++x) {
        const Rational& fv = f.target->carrier().value(f.map[x]);
        const Rational& gv = g.target->carrier().value(g.map[x]);
        if ((fv - gv).abs() > bound) return false;
    }
    return true;
}

EpsilonDeltaResult epsilon_delta_check(const MorphismTable& f, const MetricTable& source_metric,
                                       const MetricTable& target_metric,
                                       std::span<const Rational> epsilons) {
    if (source_metric.carrier().size() != f.source->carrier_size() ||
        target_metric.carrier().size() != f.target->carrier_size()) {
        throw Error::input("metrics do not match the morphism's continua");
    }
    EpsilonDeltaResult result;
    for (const Rational& e : epsilons) {
        if (e.sign() <= 0) throw Error::input("epsilon samples must be positive rationals");
        std::optional<Rational> found;
        for (int i = 0; i <= f.source->max_level() && !found; ++i) {
            Rational d = Rational::pow2(-i);
            bool works = true;
            for (Index x = 0; x < f.source->carrier_size() && works; ++x) {
                for (Index a = 0; a < f.source->carrier_size() && works; ++a) {
                    if (source_metric.distance(x, a) < d) {
                        works = target_metric.distance(f.map[x], f.map[a]) < e;
                    }
                }
            }
            if (works) found = d;
        }
        if (!found) result.ok = false;
        result.per_sample.emplace_back(e, found);
    }
    return result;
}

} // namespace tolspace
