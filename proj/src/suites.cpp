#include "tolspace/suites.hpp"

#include "tolspace/connectivity.hpp"
#include "tolspace/continuum.hpp"
#include "tolspace/error.hpp"
#include "tolspace/figures.hpp"
#include "tolspace/fixtures.hpp"
#include "tolspace/graded.hpp"
#include "tolspace/metric.hpp"
#include "tolspace/morphism.hpp"
#include "tolspace/real.hpp"
#include "tolspace/spacespec.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace tolspace::suites {

namespace {

using Rng = std::mt19937_64;

std::uint64_t rand_below(Rng& rng, std::uint64_t n) { return n == 0 ? 0 : rng() % n; }

Class mask_class(std::size_t n, std::uint64_t mask) {
    Class c(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::uint64_t{1} << i)) c.set(i);
    }
    return c;
}

Class random_class(Rng& rng, std::size_t n) {
    Class c(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rng() & 1) c.set(i);
    }
    return c;
}

/// Distinct integer values plus halving integer thresholds: always a valid
/// generating sequence (absolute difference is a metric).
ContinuumPtr random_threshold_continuum(Rng& rng, std::size_t max_size, int max_levels) {
    std::size_t n = 2 + rand_below(rng, max_size - 1);
    std::vector<long long> pool(3 * max_size + 4);
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = static_cast<long long>(i);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Rational> values;
    for (std::size_t i = 0; i < n; ++i) values.emplace_back(pool[i]);
    std::sort(values.begin(), values.end());

    int L = 1 + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(max_levels)));
    std::vector<Rational> thresholds;
    long long t = 1 + static_cast<long long>(rand_below(rng, 20));
    for (int k = 1; k <= L; ++k) {
        thresholds.emplace_back(t);
        t /= 2;
    }
    return fixtures::threshold_continuum(values, thresholds);
}

/// Nested random partitions: every level an equivalence, limit partition =
/// the finest blocks. These satisfy the discernibility side condition.
ContinuumPtr random_nested_continuum(Rng& rng, std::size_t max_size, int max_levels) {
    std::size_t n = 2 + rand_below(rng, max_size - 1);
    int L = 1 + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(max_levels)));

    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
    CarrierPtr carrier = make_carrier(ids);

    std::vector<Index> block_of(n, 0);
    std::vector<Relation> levels;
    levels.push_back(Relation::full(n));
    for (int lvl = 1; lvl <= L; ++lvl) {
        // refine: each block may split in two
        Index next = 0;
        std::vector<Index> fresh(n);
        std::map<std::pair<Index, int>, Index> seen;
        for (std::size_t i = 0; i < n; ++i) {
            int half = static_cast<int>(rng() & 1);
            auto key = std::make_pair(block_of[i], half);
            auto it = seen.find(key);
            if (it == seen.end()) it = seen.emplace(key, next++).first;
            fresh[i] = it->second;
        }
        block_of = fresh;
        levels.push_back(Relation::from_predicate(
            n, [&](Index a, Index b) { return block_of[a] == block_of[b]; }));
    }
    std::vector<std::vector<Index>> blocks;
    std::map<Index, std::size_t> slot;
    for (Index i = 0; i < n; ++i) {
        auto it = slot.find(block_of[i]);
        if (it == slot.end()) {
            it = slot.emplace(block_of[i], blocks.size()).first;
            blocks.emplace_back();
        }
        blocks[it->second].push_back(i);
    }
    Partition limit = Partition::from_blocks(n, blocks);
    return std::make_shared<Continuum>(std::move(carrier), std::move(levels), limit);
}

Motion random_motion(Rng& rng, const Continuum& c, int max_len) {
    int n = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(c.max_level() + 1)));
    Motion m;
    m.level = n;
    Index here = static_cast<Index>(rand_below(rng, c.carrier_size()));
    m.steps.push_back(here);
    int len = 1 + static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(max_len)));
    for (int i = 1; i < len; ++i) {
        const Class& row = c.relation(n).row(here);
        std::size_t degree = row.count();
        std::size_t pick = rand_below(rng, degree);
        auto j = row.find_first();
        while (pick-- > 0) j = row.find_next(j);
        here = static_cast<Index>(j);
        m.steps.push_back(here);
    }
    return m;
}

struct Tally {
    bool pass = true;
    long long evaluations = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++evaluations;
        if (!ok && pass) {
            pass = false;
            first_failure = what;
        }
    }
    std::string detail(const std::string& summary) const {
        std::ostringstream out;
        out << summary << " (" << evaluations << " evaluations)";
        if (!pass) out << "; first failure: " << first_failure;
        return out.str();
    }
};

CheckResult make_result(std::string id, std::string module, int criterion, const Tally& tally,
                        const std::string& summary) {
    return {std::move(id), std::move(module), criterion, tally.pass, tally.detail(summary)};
}

std::vector<std::pair<std::string, ContinuumPtr>> small_fixtures() {
    std::vector<std::pair<std::string, ContinuumPtr>> out;
    for (auto& [name, c] : fixtures::shipped_continua()) {
        if (c->carrier_size() <= 10) out.emplace_back(name, c);
    }
    return out;
}

// ---------------------------------------------------------------- criterion 1

CheckResult check_validator_accepts(std::uint64_t) {
    Tally t;
    for (const auto& [name, c] : fixtures::shipped_continua()) {
        ValidationReport report = validate(*c);
        t.expect(report.ok, "fixture " + name + " rejected");
        t.expect(report.ok == report.violations.empty(), "report flag mismatch on " + name);
        for (int n = 0; n < c->max_level(); ++n) {
            t.expect(c->relation(n + 1).is_subset_of(c->relation(n)),
                     name + " levels not nested at " + std::to_string(n));
        }
    }
    // far branch inert on the M=2 grid
    Continuum grid = real_continuum(RealGrid{4, 2, 3});
    for (int n = 1; n <= 3; ++n) {
        Rational near = Rational::pow2(-n);
        for (Index i = 0; i < grid.carrier_size(); ++i) {
            const Class& row = grid.relation(n).row(i);
            for (auto j = row.find_first(); j != Class::npos; j = row.find_next(j)) {
                Rational d = (grid.carrier().value(i) -
                              grid.carrier().value(static_cast<Index>(j))).abs();
                t.expect(d < near, "far branch active on M=2 grid at level " + std::to_string(n));
            }
        }
    }
    // wide grid: everything beyond 2^L pairwise related at level L (the far monad)
    {
        Continuum wide = real_continuum(RealGrid{5, 20, 4});
        t.expect(validate(wide).ok, "wide grid rejected");
        Rational bound = Rational::pow2(4);
        std::vector<Index> far;
        for (Index i = 0; i < wide.carrier_size(); ++i) {
            if (wide.carrier().value(i) > bound) far.push_back(i);
        }
        t.expect(!far.empty(), "wide grid has no far points");
        for (Index a : far) {
            for (Index b : far) {
                t.expect(wide.relation(4).contains(a, b), "far points split at level 4");
            }
        }
    }
    return make_result("core.validator-accepts", "core", 1, t,
                       "fixtures, real grid, and metric family validate");
}

CheckResult check_validator_rejects_literal_real(std::uint64_t) {
    Tally t;
    std::vector<Rational> values = {Rational(0), Rational(8), Rational(48)};
    Continuum literal = literal_real_continuum_on(make_numeric_carrier(values), 4);
    ValidationReport report = validate(literal);
    t.expect(!report.ok, "paper-literal real family accepted");
    bool witnessed = false;
    for (const auto& v : report.violations) {
        if (v.condition == "composition" && v.level == 3 &&
            v.witness == std::vector<std::string>{"0", "48", "8"}) {
            witnessed = true;
        }
    }
    t.expect(witnessed, "missing composition witness (0, 48, 8) at n=3");
    return make_result("core.reject-literal-real", "core", 1, t,
                       "literal far branch rejected with the (0,48,8) witness");
}

CheckResult check_validator_rejects_literal_metric(std::uint64_t) {
    Tally t;
    MetricTable m = MetricTable::absdiff(grid_carrier(RealGrid{3, 1, 2}));
    Continuum literal = literal_metric_continuum(m, Rational(1, 2), 3);
    ValidationReport report = validate(literal);
    t.expect(!report.ok, "paper-literal metric family accepted");
    bool reflexivity = false;
    for (const auto& v : report.violations) {
        if (v.condition == "reflexivity") reflexivity = true;
    }
    t.expect(reflexivity, "no reflexivity violation reported for e < 1");
    return make_result("metric.reject-literal-family", "metric", 1, t,
                       "literal ball family rejected for reflexivity when e < 1");
}

CheckResult check_validator_witnesses(std::uint64_t seed) {
    Rng rng(seed ^ 0x11);
    Tally t;
    for (int round = 0; round < 40; ++round) {
        ContinuumPtr base = random_threshold_continuum(rng, 7, 3);
        std::vector<Relation> levels = base->levels();
        const std::size_t n = base->carrier_size();
        // break something at random
        int mode = static_cast<int>(rand_below(rng, 4));
        std::size_t lvl = 1 + rand_below(rng, levels.size() - 1);
        Index a = static_cast<Index>(rand_below(rng, n));
        Index b = static_cast<Index>(rand_below(rng, n));
        if (mode == 0) {
            Relation r(n);
            for (Index i = 0; i < n; ++i) {
                for (Index j = 0; j < n; ++j) {
                    if (levels[lvl].contains(i, j) && !(i == a && j == a)) r.set(i, j);
                }
            }
            levels[lvl] = r;
        } else if (mode == 1 && a != b) {
            Relation r(n);
            for (Index i = 0; i < n; ++i) {
                for (Index j = 0; j < n; ++j) {
                    if (levels[lvl].contains(i, j) && !(i == a && j == b)) r.set(i, j);
                }
            }
            levels[lvl] = r;
        } else if (mode == 2) {
            Relation r(n);
            for (Index i = 0; i < n; ++i) {
                for (Index j = 0; j < n; ++j) {
                    if (levels[0].contains(i, j) && !((i == a && j == b) || (i == b && j == a))) {
                        r.set(i, j);
                    }
                }
            }
            levels[0] = r;
        } else {
            levels[lvl].set_symmetric(a, b); // may break composition below
        }

        ValidationReport report = validate(base->carrier(), levels);
        for (const auto& v : report.violations) {
            auto idx = [&](const std::string& id) { return base->carrier().require(id); };
            if (v.condition == "reflexivity") {
                Index x = idx(v.witness[0]);
                t.expect(!levels[static_cast<std::size_t>(v.level)].contains(x, x),
                         "reflexivity witness does not violate");
            } else if (v.condition == "symmetry") {
                Index x = idx(v.witness[0]), y = idx(v.witness[1]);
                const auto& r = levels[static_cast<std::size_t>(v.level)];
                t.expect(r.contains(x, y) && !r.contains(y, x),
                         "symmetry witness does not violate");
            } else if (v.condition == "r0-full") {
                t.expect(!levels[0].contains(idx(v.witness[0]), idx(v.witness[1])),
                         "r0 witness does not violate");
            } else if (v.condition == "composition") {
                Index x = idx(v.witness[0]), y = idx(v.witness[1]), z = idx(v.witness[2]);
                const auto& fine = levels[static_cast<std::size_t>(v.level) + 1];
                const auto& coarse = levels[static_cast<std::size_t>(v.level)];
                t.expect(fine.contains(x, y) && fine.contains(y, z) && !coarse.contains(x, z),
                         "composition witness does not violate");
            }
        }
        t.expect(true, "round"); // count rounds even when nothing broke semantically
    }
    return make_result("core.witness-recheck", "core", 0, t,
                       "validator witnesses re-verify against the named condition");
}

CheckResult check_total_disconnection(std::uint64_t) {
    Tally t;
    auto e1 = fixtures::e1();
    auto e2 = fixtures::e2();
    auto nested = fixtures::nested_partition_space();
    t.expect(!e1->is_totally_disconnected(), "e1 should not be totally disconnected");
    t.expect(e2->is_totally_disconnected(), "e2 should be totally disconnected");
    t.expect(nested->is_totally_disconnected(), "nested space should be totally disconnected");
    for (const auto& c : {e2, nested}) {
        int L = c->max_level();
        for (const Class& piece : components(*c, c->carrier().full_class(), L)) {
            t.expect(is_clopen(*c, piece, L), "level-L class not clopen");
        }
        t.expect(c->limit().blocks.size() <= c->carrier_size(), "monad class not finite");
    }
    return make_result("core.total-disconnection", "core", 0, t,
                       "equivalence levels make level-L classes clopen");
}

// ---------------------------------------------------------------- criterion 2

CheckResult check_figure_laws(std::uint64_t seed) {
    Rng rng(seed ^ 0x22);
    Tally t;
    for (const auto& [name, c] : small_fixtures()) {
        const std::size_t n = c->carrier_size();
        const std::uint64_t subsets = std::uint64_t{1} << n;
        Class carrier_all = c->carrier().full_class();
        for (int lvl = 0; lvl <= c->max_level(); ++lvl) {
            for (Index x = 0; x < n; ++x) {
                Class single(n);
                single.set(x);
                t.expect(c->image(x, lvl) == c->level_figure(single, lvl),
                         name + ": image != singleton figure");
            }
            for (std::uint64_t mask = 0; mask < subsets; ++mask) {
                Class x = mask_class(n, mask);
                Class cl = closure(*c, x, lvl);
                t.expect(x.is_subset_of(cl), name + ": X not inside its closure");
                t.expect(is_figure(*c, figure_of(*c, cl)), name + ": saturation not a figure");
                t.expect(closure(*c, carrier_all - x, lvl) == carrier_all - interior(*c, x, lvl),
                         name + ": duality cl(C\\X) = C\\int(X)");
                t.expect(cl == carrier_all - interior(*c, carrier_all - x, lvl),
                         name + ": duality cl(X) = C\\int(C\\X)");
                if (lvl >= 1) {
                    t.expect(closure(*c, cl, lvl).is_subset_of(closure(*c, x, lvl - 1)),
                             name + ": graded idempotence");
                }
            }
            // two-class laws
            auto check_pair = [&](const Class& x, const Class& y) {
                Class fx = c->level_figure(x, lvl);
                Class fy = c->level_figure(y, lvl);
                t.expect(c->level_figure(x | y, lvl) == (fx | fy), name + ": additivity");
                if (x.is_subset_of(y)) {
                    t.expect(fx.is_subset_of(fy), name + ": monotonicity");
                }
                if (!fx.intersects(fy)) {
                    t.expect(!fx.intersects(y), name + ": disjointness transfer");
                }
            };
            if (n <= 6) {
                for (std::uint64_t mx = 0; mx < subsets; ++mx) {
                    for (std::uint64_t my = 0; my < subsets; ++my) {
                        check_pair(mask_class(n, mx), mask_class(n, my));
                    }
                }
            } else {
                for (std::uint64_t mx = 0; mx < subsets; ++mx) {
                    Class x = mask_class(n, mx);
                    for (int r = 0; r < 50; ++r) {
                        Class y = random_class(rng, n);
                        check_pair(x, y);
                        check_pair(x, x | y); // guaranteed superset case
                    }
                }
            }
        }
    }
    t.expect(t.evaluations >= 3 * 1024, "fewer than 3*2^10 evaluations");
    return make_result("figures.basic-clo-laws", "figures", 2, t,
                       "figure/closure laws, duality, graded idempotence (exhaustive)");
}

CheckResult check_closed_open_structure(std::uint64_t) {
    Tally t;
    for (const auto& [name, c] : small_fixtures()) {
        const std::size_t n = c->carrier_size();
        if (n > 8) continue;
        Class carrier_all = c->carrier().full_class();
        for (int lvl = 0; lvl <= c->max_level(); ++lvl) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                Class x = mask_class(n, mask);
                bool closed = is_closed(*c, x, lvl);
                t.expect(closed == is_open(*c, carrier_all - x, lvl),
                         name + ": closed/open complement mismatch");
                if (closed) {
                    t.expect(c->level_figure(x, lvl) == x, name + ": closed but not a level figure");
                }
                Class hull = closed_hull(*c, x, lvl);
                t.expect(is_closed(*c, hull, lvl) && x.is_subset_of(hull),
                         name + ": hull not a closed superset");
                for (std::uint64_t sup = mask; sup < (std::uint64_t{1} << n);
                     sup = (sup + 1) | mask) {
                    Class s = mask_class(n, sup);
                    if (is_closed(*c, s, lvl)) {
                        t.expect(hull.is_subset_of(s), name + ": hull not minimal");
                    }
                    if (sup == (std::uint64_t{1} << n) - 1) break;
                }
            }
        }
    }
    return make_result("figures.closed-structure", "figures", 2, t,
                       "closed-open duality and closed-hull minimality (exhaustive)");
}

// ---------------------------------------------------------------- criterion 3

CheckResult check_topology_axioms(std::uint64_t seed) {
    Rng rng(seed ^ 0x33);
    Tally t;
    auto verify = [&](const std::string& name, const Continuum& c) {
        for (int lvl = 0; lvl <= c.max_level(); ++lvl) {
            std::vector<Class> family = open_family(c, lvl);
            std::set<Class> members(family.begin(), family.end());
            t.expect(members.count(Class(c.carrier_size())) == 1, name + ": empty class missing");
            t.expect(members.count(c.carrier().full_class()) == 1, name + ": carrier missing");
            for (const Class& x : family) {
                for (const Class& y : family) {
                    t.expect(members.count(x & y) == 1, name + ": intersection escapes family");
                    t.expect(members.count(x | y) == 1, name + ": union escapes family");
                }
            }
        }
    };
    verify("e1", *fixtures::e1());
    verify("e2", *fixtures::e2());
    for (int i = 0; i < 50; ++i) {
        verify("random#" + std::to_string(i), *random_threshold_continuum(rng, 10, 3));
    }
    return make_result("figures.topology-axioms", "figures", 3, t,
                       "open families contain 0, C and are closed under unions/intersections");
}

// ---------------------------------------------------------------- criterion 4

CheckResult check_separation(std::uint64_t seed) {
    Rng rng(seed ^ 0x44);
    Tally t;
    auto verify_qualifying = [&](const std::string& name, const Continuum& c) {
        if (monad_discernibility_failure(c)) return false;
        const auto& blocks = c.limit().blocks;
        for (std::size_t a = 0; a < blocks.size(); ++a) {
            for (std::size_t b = a + 1; b < blocks.size(); ++b) {
                SeparabilityAnswer ans = separable(c, blocks[a], blocks[b]);
                t.expect(ans.separable && ans.level && *ans.level <= c.max_level(),
                         name + ": distinct monads not separable");
                if (ans.separable) {
                    t.expect(!c.level_figure(blocks[a], *ans.level)
                                  .intersects(c.level_figure(blocks[b], *ans.level)),
                             name + ": separability witness level wrong");
                }
            }
        }
        return true;
    };
    t.expect(verify_qualifying("e2p", *fixtures::e2_partitioned()), "e2p should qualify");
    t.expect(verify_qualifying("nested", *fixtures::nested_partition_space()),
             "nested should qualify");
    t.expect(monad_discernibility_failure(*fixtures::e1()).has_value(),
             "e1 identity partition should fail the side condition");
    int qualifying = 0;
    for (int i = 0; i < 25; ++i) {
        if (verify_qualifying("random#" + std::to_string(i),
                              *random_nested_continuum(rng, 9, 3))) {
            ++qualifying;
        }
    }
    t.expect(qualifying >= 20, "too few qualifying random nested continua");
    return make_result("figures.separation", "figures", 4, t,
                       "discernible monads are separable at some level <= L");
}

// ---------------------------------------------------------------- criterion 5

CheckResult check_motion_traces(std::uint64_t seed) {
    Rng rng(seed ^ 0x55);
    Tally t;
    auto pool = fixtures::shipped_continua();
    for (int i = 0; i < 700; ++i) {
        const auto& [name, c] = pool[rand_below(rng, pool.size())];
        Motion m = random_motion(rng, *c, 8);
        t.expect(is_motion(*c, m.steps, m.level), name + ": generated walk is not a motion");
        t.expect(is_connected_set(*c, trace(*c, m), m.level), name + ": trace not connected");
    }
    for (int i = 0; i < 300; ++i) {
        ContinuumPtr c = random_threshold_continuum(rng, 9, 3);
        Motion m = random_motion(rng, *c, 8);
        t.expect(is_connected_set(*c, trace(*c, m), m.level), "random: trace not connected");
    }
    return make_result("connectivity.motion-traces", "connectivity", 5, t,
                       "1000 random motions all have connected traces");
}

CheckResult check_motion_through(std::uint64_t) {
    Tally t;
    for (const auto& [name, c] : small_fixtures()) {
        const std::size_t n = c->carrier_size();
        if (n > 8) continue;
        for (int lvl = 0; lvl <= c->max_level(); ++lvl) {
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                Class u = mask_class(n, mask);
                if (u.count() > 6) continue;
                if (is_connected_set(*c, u, lvl)) {
                    Motion m = motion_through(*c, u, lvl);
                    t.expect(is_motion(*c, m.steps, lvl), name + ": walk is not a motion");
                    t.expect(trace(*c, m) == u, name + ": trace differs from u");
                    t.expect(m.steps.size() <= 2 * u.count(), name + ": walk too long");
                } else {
                    bool threw = false;
                    try {
                        motion_through(*c, u, lvl);
                    } catch (const Error& e) {
                        threw = e.kind() == ErrorKind::precondition;
                    }
                    t.expect(threw, name + ": disconnected class accepted");
                }
            }
        }
    }
    return make_result("connectivity.motion-through", "connectivity", 5, t,
                       "walks cover exactly each connected class (exhaustive |u| <= 6)");
}

CheckResult check_connectedness_theorems(std::uint64_t) {
    Tally t;
    for (const auto& [name, c] : small_fixtures()) {
        const std::size_t n = c->carrier_size();
        if (n > 8) continue;
        Class carrier_all = c->carrier().full_class();
        for (int lvl = 0; lvl <= c->max_level(); ++lvl) {
            // (i) connected continuum <=> no proper nonempty clopen figure
            bool one_component = components(*c, carrier_all, lvl).size() == 1;
            bool found_clopen = false;
            for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
                Class x = mask_class(n, mask);
                if (is_clopen(*c, x, lvl) && is_figure(*c, x)) {
                    found_clopen = true;
                    break;
                }
            }
            t.expect(one_component == !found_clopen, name + ": clopen criterion (i)");

            std::vector<Class> closed_classes;
            for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub) {
                Class yc = mask_class(n, sub);
                if (is_closed(*c, yc, lvl)) closed_classes.push_back(yc);
            }

            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                Class x = mask_class(n, mask);
                bool connected = is_connected_set(*c, x, lvl);

                // (ii) no clopen split inside the subcontinuum on x
                bool split = false;
                if (x.any()) {
                    const Relation& rel = c->relation(lvl);
                    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n) && !split; ++sub) {
                        Class y = mask_class(n, sub) & x;
                        if (!y.any() || y == x) continue;
                        bool crossing = false;
                        for (auto i = y.find_first(); i != Class::npos && !crossing;
                             i = y.find_next(i)) {
                            crossing = (rel.row(static_cast<Index>(i)) & (x - y)).any();
                        }
                        if (!crossing) split = true; // y clopen in the subcontinuum
                    }
                }
                t.expect(connected == !split, name + ": subcontinuum criterion (ii)");

                // (iii) closed-figure split version, for closed figures x
                if (x.any() && is_closed(*c, x, lvl) && is_figure(*c, x)) {
                    bool closed_split = false;
                    for (std::size_t i = 0; i < closed_classes.size() && !closed_split; ++i) {
                        for (std::size_t j = 0; j < closed_classes.size() && !closed_split; ++j) {
                            const Class& y1 = closed_classes[i];
                            const Class& y2 = closed_classes[j];
                            if (x.is_subset_of(y1 | y2) && !(y1 & y2 & x).any() &&
                                (y1 & x).any() && (y2 & x).any()) {
                                closed_split = true;
                            }
                        }
                    }
                    t.expect(connected == !closed_split, name + ": closed-split criterion (iii)");
                }
            }

            // corollary: in a one-component continuum every pair lies in a connected set
            if (one_component) {
                t.expect(is_connected_set(*c, carrier_all, lvl),
                         name + ": carrier itself not connected");
            }
        }
    }
    return make_result("connectivity.splitting-criteria", "connectivity", 5, t,
                       "the three connectedness criteria agree with graph connectivity");
}

// ---------------------------------------------------------------- criterion 6

std::size_t max_independent_set(const Continuum& c, const Class& within, int lvl) {
    const std::size_t n = c.carrier_size();
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Class x = mask_class(n, mask);
        if (!x.is_subset_of(within)) continue;
        bool independent = true;
        for (auto i = x.find_first(); i != Class::npos && independent; i = x.find_next(i)) {
            Class others = x;
            others.reset(i);
            independent = !c.relation(lvl).row(static_cast<Index>(i)).intersects(others);
        }
        if (independent) best = std::max(best, x.count());
    }
    return best;
}

CheckResult check_nets(std::uint64_t seed) {
    Rng rng(seed ^ 0x66);
    Tally t;
    for (const auto& [name, c] : fixtures::shipped_continua()) {
        for (int lvl = 0; lvl <= c->max_level(); ++lvl) {
            Net net = maximal_net(*c, c->carrier().full_class(), lvl);
            t.expect(net.maximal, name + ": greedy net not maximal/independent");
        }
    }
    for (const auto& [name, c] : small_fixtures()) {
        const std::size_t n = c->carrier_size();
        if (n > 8) continue;
        for (int lvl = 0; lvl <= c->max_level(); ++lvl) {
            Class all = c->carrier().full_class();
            Net net = maximal_net(*c, all, lvl);
            std::size_t alpha = max_independent_set(*c, all, lvl);
            t.expect(net.members.count() <= alpha, name + ": greedy larger than alpha");
            // every net (independent set) is subvalent to alpha = |greedy| + slack
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
                Class x = mask_class(n, mask);
                bool independent = true;
                for (auto i = x.find_first(); i != Class::npos && independent;
                     i = x.find_next(i)) {
                    Class others = x;
                    others.reset(i);
                    independent = !c->relation(lvl).row(static_cast<Index>(i)).intersects(others);
                }
                if (independent) {
                    t.expect(x.count() <= alpha, name + ": net exceeds the finite bound");
                }
            }
            // random subsets as the net's base class
            for (int r = 0; r < 5; ++r) {
                Class base = random_class(rng, n);
                Net sub = maximal_net(*c, base, lvl);
                t.expect(sub.maximal, name + ": greedy net on a subclass not maximal");
                t.expect(sub.members.is_subset_of(base), name + ": net escapes its class");
            }
        }
    }
    return make_result("connectivity.nets", "connectivity", 6, t,
                       "greedy nets maximal+independent; sizes bounded by exhaustive alpha");
}

CheckResult check_cluster_pigeonhole(std::uint64_t seed) {
    Rng rng(seed ^ 0x77);
    Tally t;
    auto pool = small_fixtures();
    for (int round = 0; round < 300; ++round) {
        const auto& [name, c] = pool[rand_below(rng, pool.size())];
        int lvl = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(c->max_level() + 1)));
        std::size_t m = 1 + rand_below(rng, 12);
        SequencePrefix seq;
        for (std::size_t i = 0; i < m; ++i) {
            seq.push_back(static_cast<Index>(rand_below(rng, c->carrier_size())));
        }
        ClusterPosition cp = cluster_position(*c, seq, lvl);
        std::size_t net_size = cp.net.count();
        t.expect(cp.count * net_size >= m, name + ": pigeonhole bound violated");
        t.expect(cp.net.test(cp.member), name + ": cluster member not in the net");
        const Class& zone = c->image(cp.member, lvl);
        std::size_t recount = 0;
        for (Index s : seq) {
            if (zone.test(s)) ++recount;
        }
        t.expect(recount == cp.count, name + ": cluster count wrong");
    }
    // worked examples
    auto e1 = fixtures::e1();
    ClusterPosition a = cluster_position(*e1, {0, 1, 0, 1, 0}, 2);
    t.expect(a.member == 0 && a.count == 5, "e1 (0,1,0,1,0) expects member 0 count 5");
    ClusterPosition b = cluster_position(*e1, {4, 4, 4}, 2);
    t.expect(b.count == 3, "constant prefix expects count 3");
    ClusterPosition d = cluster_position(*e1, {0, 4, 0, 4}, 2);
    t.expect(d.count == 2, "alternating prefix expects count 2");
    return make_result("connectivity.cluster-pigeonhole", "connectivity", 6, t,
                       "cluster counts always reach ceil(m/|net|)");
}

CheckResult check_closed_limits(std::uint64_t) {
    Tally t;
    for (const auto& [name, c] : small_fixtures()) {
        const std::size_t n = c->carrier_size();
        if (n > 8) continue;
        for (int lvl = 0; lvl <= c->max_level(); ++lvl) {
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                Class a = mask_class(n, mask);
                if (is_closed(*c, a, lvl)) {
                    // every prefix from A with certified depth >= lvl lands inside A
                    std::vector<Index> members;
                    for (auto i = a.find_first(); i != Class::npos; i = a.find_next(i)) {
                        members.push_back(static_cast<Index>(i));
                    }
                    std::vector<SequencePrefix> prefixes;
                    for (Index p : members) prefixes.push_back({p});
                    for (Index p : members) {
                        for (Index q : members) prefixes.push_back({p, q});
                    }
                    for (const auto& seq : prefixes) {
                        for (Index x = 0; x < n; ++x) {
                            if (converges_to(*c, seq, x) >= lvl) {
                                t.expect(c->monad(x).is_subset_of(a),
                                         name + ": limit monad escapes a closed class");
                            }
                        }
                    }
                    // comclo analog: cluster positions stay inside closure(X) = X
                    SequencePrefix seq;
                    for (Index p : members) seq.push_back(p);
                    ClusterPosition cp = cluster_position(*c, seq, lvl);
                    t.expect(c->monad(cp.member).is_subset_of(closure(*c, a, lvl)),
                             name + ": cluster monad escapes the closure");
                } else {
                    // a witness prefix converging out of A exists
                    Class cl = closure(*c, a, lvl);
                    Class outside = cl - a;
                    t.expect(outside.any(), name + ": non-closed class with empty boundary");
                    Index z = static_cast<Index>(outside.find_first());
                    Class inside = c->image(z, lvl) & a;
                    t.expect(inside.any(), name + ": boundary point with no related member");
                    Index witness = static_cast<Index>(inside.find_first());
                    t.expect(converges_to(*c, {witness}, z) >= lvl,
                             name + ": witness prefix does not certify depth");
                }
            }
        }
    }
    return make_result("connectivity.closed-limits", "connectivity", 6, t,
                       "closed classes hold their limits; non-closed ones leak (exhaustive)");
}

CheckResult check_accumulation_extraction(std::uint64_t) {
    Tally t;
    for (const auto& [name, c] : small_fixtures()) {
        const std::size_t n = c->carrier_size();
        int L = c->max_level();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            Class a = mask_class(n, mask);
            Class acc = accumulation_points(*c, a, L);
            Class iso = isolation_points(*c, a, L);
            t.expect(!acc.intersects(iso), name + ": accumulation and isolation overlap");
            t.expect((figure_of(*c, a) - acc) == iso, name + ": isolation complement broken");
            for (Index x = 0; x < n; ++x) {
                Class candidates = c->image(x, L) & (a - c->monad(x));
                bool extractable = candidates.any();
                if (extractable) {
                    Index w = static_cast<Index>(candidates.find_first());
                    t.expect(converges_to(*c, {w}, x) == L,
                             name + ": extracted prefix does not converge at depth L");
                }
                t.expect(acc.test(x) == extractable, name + ": accumulation <=> extraction");
            }
        }
    }
    return make_result("connectivity.accumulation-extraction", "connectivity", 0, t,
                       "accumulation points are exactly the extractable limits");
}

CheckResult check_position_sequences(std::uint64_t) {
    Tally t;
    for (const auto& [name, c] : small_fixtures()) {
        for (int lvl = 0; lvl <= c->max_level(); ++lvl) {
            if (components(*c, c->carrier().full_class(), lvl).size() != 1) continue;
            for (Index from = 0; from < c->carrier_size(); ++from) {
                for (Index to = 0; to < c->carrier_size(); ++to) {
                    // BFS path is a motion from `from` to `to`
                    std::vector<int> parent(c->carrier_size(), -1);
                    std::vector<Index> order{from};
                    parent[from] = static_cast<int>(from);
                    for (std::size_t head = 0; head < order.size(); ++head) {
                        const Class& row = c->relation(lvl).row(order[head]);
                        for (auto j = row.find_first(); j != Class::npos; j = row.find_next(j)) {
                            if (parent[j] < 0) {
                                parent[j] = static_cast<int>(order[head]);
                                order.push_back(static_cast<Index>(j));
                            }
                        }
                    }
                    t.expect(parent[to] >= 0, name + ": connected level has unreachable pair");
                    SequencePrefix path;
                    for (Index at = to; at != from; at = static_cast<Index>(parent[at])) {
                        path.push_back(at);
                    }
                    path.push_back(from);
                    std::reverse(path.begin(), path.end());
                    t.expect(is_motion(*c, path, lvl), name + ": BFS path is not a motion");
                    t.expect(converges_to(*c, path, to) >= lvl,
                             name + ": walked prefix does not certify the level");
                    t.expect(tails_in_neighborhoods(*c, path, to, lvl),
                             name + ": tails escape canonical neighborhoods");
                }
            }
        }
    }
    return make_result("connectivity.position-sequences", "connectivity", 0, t,
                       "motions between positions induce converging prefixes");
}

// ---------------------------------------------------------------- criterion 7

Rational random_rational(Rng& rng) {
    long long num = static_cast<long long>(rand_below(rng, 2001)) - 1000;
    long long den = 1 + static_cast<long long>(rand_below(rng, 60));
    return Rational(BigInt(num), BigInt(den));
}

CheckResult check_ordered_field(std::uint64_t seed) {
    Rng rng(seed ^ 0x88);
    Tally t;
    const Rational zero(0), one(1);
    for (int i = 0; i < 10000; ++i) {
        Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
        t.expect((a + b) + c == a + (b + c), "additive associativity");
        t.expect(a + b == b + a, "additive commutativity");
        t.expect(a + zero == a, "additive identity");
        t.expect(a + (-a) == zero, "additive inverse");
        t.expect((a * b) * c == a * (b * c), "multiplicative associativity");
        t.expect(a * b == b * a, "multiplicative commutativity");
        t.expect(a * one == a, "multiplicative identity");
        if (!a.is_zero()) {
            t.expect(a * (one / a) == one, "multiplicative inverse");
        }
        t.expect(a * (b + c) == a * b + a * c, "distributivity");
        if (real_le(a, b)) {
            t.expect(real_le(a + c, b + c), "order respects addition");
        }
        if (real_le(zero, a) && real_le(zero, b)) {
            t.expect(real_le(zero, a * b), "order respects multiplication");
        }
        int rel = (a < b ? 1 : 0) + (a == b ? 1 : 0) + (b < a ? 1 : 0);
        t.expect(rel == 1, "trichotomy");
    }
    return make_result("real.ordered-field", "real", 7, t,
                       "ordered-field axioms on 10^4 exact random triples");
}

CheckResult check_lub(std::uint64_t seed) {
    Rng rng(seed ^ 0x99);
    Tally t;
    {
        std::vector<Rational> ms = {Rational(1, 3), Rational(1, 2)};
        t.expect(lub(ms, Rational(0), Rational(1), 8) == Rational(1, 2),
                 "lub({1/3,1/2},0,1,8) != 1/2");
    }
    {
        std::vector<Rational> ms = {Rational(1, 3)};
        Rational got = lub(ms, Rational(0), Rational(1), 8);
        t.expect(got == Rational(43, 128), "lub({1/3},0,1,8) != 43/128");
        t.expect(got - Rational(1, 3) == Rational(1, 384), "gap != 1/384");
        t.expect(got - Rational(1, 3) <= Rational::pow2(-8), "gap exceeds 2^-8");
    }
    for (int tcount = 1; tcount <= 6; ++tcount) {
        Rational q = random_rational(rng);
        std::vector<Rational> ms = {q};
        Rational got = lub(ms, q - Rational(1), q + Rational(1), tcount);
        t.expect(got >= q, "symmetric bracket result not an upper bound");
        t.expect(got - q <= Rational(2) / Rational::pow2(tcount),
                 "symmetric bracket misses the 2/2^T bound");
    }
    for (int round = 0; round < 100; ++round) {
        std::size_t count = 1 + rand_below(rng, 8);
        std::vector<Rational> ms;
        for (std::size_t i = 0; i < count; ++i) ms.push_back(random_rational(rng));
        Rational top = *std::max_element(ms.begin(), ms.end());
        Rational a = top - Rational(1 + static_cast<long long>(rand_below(rng, 5)));
        Rational b = top + Rational(static_cast<long long>(rand_below(rng, 5)), 1);
        int iters = 1 + static_cast<int>(rand_below(rng, 10));
        Rational got = lub(ms, a, b, iters);
        t.expect(got >= top, "lub result not an upper bound");
        t.expect(got - top <= (b - a) / Rational::pow2(iters), "lub gap bound violated");
    }
    bool threw = false;
    try {
        std::vector<Rational> ms = {Rational(2)};
        lub(ms, Rational(0), Rational(1), 4);
    } catch (const Error& e) {
        threw = e.kind() == ErrorKind::precondition;
    }
    t.expect(threw, "non-upper-bound b accepted");
    return make_result("real.lub", "real", 7, t,
                       "bisection hits 43/128 and the (b-a)/2^T bound on random sets");
}

CheckResult check_interval_identity_literal(std::uint64_t) {
    Tally t;
    for (int G = 2; G <= 5; ++G) {
        RealGrid grid{G, 1, G - 1};
        Continuum c = real_continuum(grid);
        for (int lvl = 1; lvl <= grid.levels; ++lvl) {
            for (Index i = 0; i < c.carrier_size(); ++i) {
                for (Index j = i + 1; j < c.carrier_size(); ++j) {
                    const Rational& a = c.carrier().value(i);
                    const Rational& b = c.carrier().value(j);
                    for (IntervalKind kind :
                         {IntervalKind::half_open_left, IntervalKind::half_open_right}) {
                        auto [r1, r2] = interval_constructions(c, a, b, kind, lvl);
                        t.expect(r1 == r2, "G=" + std::to_string(G) + " n=" +
                                               std::to_string(lvl) + " (" + a.str() + "," +
                                               b.str() + "): constructions differ");
                    }
                }
            }
        }
    }
    return make_result(
        "real.interval-identity-literal", "real", 7, t,
        "literal half-open identity; on a uniform grid the interior route keeps the kept "
        "endpoint's outer fringe point, so this check documents a discretization artifact "
        "and is expected to fail (the corrected-identity check passes)");
}

CheckResult check_interval_identity_corrected(std::uint64_t) {
    Tally t;
    // bound 4 puts grid points beyond 2^1 and 2^2, so the far branch is live
    for (int G = 2; G <= 5; ++G) {
        RealGrid grid{G, G <= 4 ? 4 : 2, G - 1};
        Continuum c = real_continuum(grid);
        for (int lvl = 1; lvl <= grid.levels; ++lvl) {
            for (Index i = 0; i < c.carrier_size(); ++i) {
                for (Index j = i + 1; j < c.carrier_size(); ++j) {
                    const Rational& a = c.carrier().value(i);
                    const Rational& b = c.carrier().value(j);
                    {
                        auto [r1, r2] = interval_constructions(
                            c, a, b, IntervalKind::half_open_left, lvl);
                        t.expect((r1 | c.image(j, lvl)) == r2,
                                 "(a,b]: closure route + kept monad != interior route");
                        t.expect(r1.is_subset_of(r2), "(a,b]: closure route not below");
                    }
                    {
                        auto [r1, r2] = interval_constructions(
                            c, a, b, IntervalKind::half_open_right, lvl);
                        t.expect((r1 | c.image(i, lvl)) == r2,
                                 "[a,b): closure route + kept monad != interior route");
                        t.expect(r1.is_subset_of(r2), "[a,b): closure route not below");
                    }
                }
            }
        }
    }
    return make_result("real.interval-identity-corrected", "real", 0, t,
                       "half-open routes agree once the kept endpoint monad is adjoined");
}

CheckResult check_archimedean(std::uint64_t seed) {
    Rng rng(seed ^ 0xAA);
    Tally t;
    for (int i = 0; i < 1000; ++i) {
        Rational q = random_rational(rng);
        BigInt w = archimedean_witness(q);
        t.expect(q < Rational(w), "witness is not above q");
        // independent oracle: linear scan from zero
        BigInt scan = 0;
        while (!(q < Rational(scan))) ++scan;
        t.expect(w == scan, "witness differs from the linear-scan oracle");
    }
    t.expect(archimedean_witness(Rational(5, 3)) == 2, "5/3 -> 2");
    t.expect(archimedean_witness(Rational(-7)) == 0, "-7 -> 0");
    t.expect(archimedean_witness(Rational(1000001, 1000)) == 1001, "1000001/1000 -> 1001");
    return make_result("real.archimedean", "real", 7, t,
                       "least-natural witnesses match the scan oracle on 10^3 rationals");
}

CheckResult check_real_eq(std::uint64_t seed) {
    Rng rng(seed ^ 0xAB);
    Tally t;
    for (int i = 0; i < 500; ++i) {
        Rational a = random_rational(rng), b = random_rational(rng);
        int n = static_cast<int>(rand_below(rng, 6));
        t.expect(real_eq(a, a, n), "real_eq not reflexive");
        t.expect(real_eq(a, b, n) == real_eq(b, a, n), "real_eq not symmetric");
    }
    for (int n = 1; n <= 6; ++n) {
        t.expect(real_eq(Rational(0), Rational::pow2(-(n + 1)), n), "0 ~ 2^-(n+1) at n");
        t.expect(!real_eq(Rational(0), Rational::pow2(-n), n), "0 !~ 2^-n at n");
        Rational big = Rational::pow2(n) + Rational(1);
        t.expect(real_eq(big, big + Rational(7), n), "far same-sign points must merge");
        t.expect(!real_eq(big, -big, n), "opposite far points must stay apart");
    }
    t.expect(real_add(Rational(1, 2), Rational(1, 3)) == Rational(5, 6), "1/2 + 1/3 = 5/6");
    t.expect(real_mul(Rational(2, 3), Rational(3, 4)) == Rational(1, 2), "2/3 * 3/4 = 1/2");
    return make_result("real.monad-equality", "real", 0, t,
                       "level equality thresholds and representative arithmetic");
}

// ---------------------------------------------------------------- criterion 8

CheckResult check_ball_identity(std::uint64_t) {
    Tally t;
    for (int G = 2; G <= 5; ++G) {
        CarrierPtr carrier = grid_carrier(RealGrid{G, 1, 1});
        MetricTable m = MetricTable::absdiff(carrier);
        const long long steps = 2LL << G; // radius numerators up to 2 (diameter)
        for (Index center = 0; center < carrier->size(); ++center) {
            for (long long k = 1; k <= steps + 2; ++k) {
                Rational e(BigInt(k), BigInt(1) << G);
                Class got = ball(m, center, e, G + 1);
                Class expected(carrier->size());
                for (Index x = 0; x < carrier->size(); ++x) {
                    if (m.distance(center, x) < e) expected.set(x);
                }
                t.expect(got == expected, "ball != {d < e} at depth G+1 (G=" +
                                              std::to_string(G) + ", e=" + e.str() + ")");
                Class depth0 = ball(m, center, e, 0);
                Class first(carrier->size());
                for (Index x = 0; x < carrier->size(); ++x) {
                    if (m.distance(center, x) < e - Rational(1)) first.set(x);
                }
                t.expect(depth0 == first, "depth-0 ball != first union term");
            }
        }
    }
    return make_result("metric.ball-identity", "metric", 8, t,
                       "balls equal {d < e} at sufficient depth (exhaustive dyadic radii)");
}

CheckResult check_ball_openness(std::uint64_t) {
    Tally t;
    for (int G = 2; G <= 4; ++G) {
        CarrierPtr carrier = grid_carrier(RealGrid{G, 1, 1});
        MetricTable m = MetricTable::absdiff(carrier);
        int L = G + 1;
        Continuum c = continuum_from_metric(m, L);
        t.expect(validate(c).ok, "metric continuum fails validation");
        const long long steps = 2LL << G;
        for (Index center = 0; center < carrier->size(); ++center) {
            for (long long k = 1; k <= steps; ++k) {
                Rational e(BigInt(k), BigInt(1) << G);
                Class b = ball(m, center, e, G + 1);
                for (int n = G; n <= L; ++n) {
                    t.expect(is_open(c, b, n), "ball not open at level n >= G (G=" +
                                                   std::to_string(G) + ", n=" +
                                                   std::to_string(n) + ", e=" + e.str() + ")");
                }
            }
        }
    }
    return make_result("metric.ball-openness", "metric", 8, t,
                       "every dyadic ball is open at levels at or above the granularity");
}

CheckResult check_metric_validation(std::uint64_t) {
    Tally t;
    {
        std::vector<Rational> vals;
        for (int i = 0; i <= 4; ++i) vals.emplace_back(i);
        MetricTable m = MetricTable::absdiff(make_numeric_carrier(vals));
        t.expect(validate_metric(m).ok, "absolute difference rejected");
        t.expect(validate(continuum_from_metric(m, 3)).ok, "metric continuum rejected");
    }
    {
        std::vector<std::string> ids = {"0", "1"};
        CarrierPtr carrier = make_carrier(ids);
        std::vector<Rational> dense = {Rational(0), Rational(0), Rational(0), Rational(0)};
        ValidationReport r = validate_metric(MetricTable(carrier, dense));
        bool identity = false;
        for (const auto& v : r.violations) identity |= v.condition == "identity";
        t.expect(!r.ok && identity, "d(0,1)=0 not flagged as identity violation");
    }
    {
        std::vector<std::string> ids = {"0", "1", "2"};
        CarrierPtr carrier = make_carrier(ids);
        std::vector<Rational> dense(9, Rational(0));
        auto set = [&](Index i, Index j, long long v) {
            dense[i * 3 + j] = Rational(v);
            dense[j * 3 + i] = Rational(v);
        };
        set(0, 2, 5);
        set(0, 1, 1);
        set(1, 2, 1);
        ValidationReport r = validate_metric(MetricTable(carrier, dense));
        bool triangle = false;
        for (const auto& v : r.violations) {
            if (v.condition == "triangle") {
                triangle = v.witness == std::vector<std::string>{"0", "1", "2"};
            }
        }
        t.expect(!r.ok && triangle, "triangle violation (0,1,2) not witnessed");
    }
    return make_result("metric.axioms", "metric", 1, t,
                       "metric validation reports each axiom with witnesses");
}

// ---------------------------------------------------------------- criterion 9

ContinuumPtr block_tower(const std::vector<std::vector<std::vector<Index>>>& partitions,
                         std::size_t n) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back(std::to_string(i));
    CarrierPtr carrier = make_carrier(ids);
    std::vector<Relation> levels;
    levels.push_back(Relation::full(n));
    std::vector<Index> block_of(n);
    for (const auto& partition : partitions) {
        for (std::size_t b = 0; b < partition.size(); ++b) {
            for (Index i : partition[b]) block_of[i] = static_cast<Index>(b);
        }
        levels.push_back(Relation::from_predicate(
            n, [&](Index a, Index b) { return block_of[a] == block_of[b]; }));
    }
    Partition limit = Partition::from_blocks(n, partitions.back());
    return std::make_shared<Continuum>(std::move(carrier), std::move(levels), limit);
}

bool literal_preserves_connected(const MorphismTable& f, int n1, int n2) {
    // the literal quantification over connected sets, for cross-checks
    const std::size_t n = f.source->carrier_size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Class u = mask_class(n, mask);
        if (!is_connected_set(*f.source, u, n1)) continue;
        Class image(f.target->carrier_size());
        for (auto i = u.find_first(); i != Class::npos; i = u.find_next(i)) {
            image.set(f.map[static_cast<Index>(i)]);
        }
        if (!is_connected_set(*f.target, image, n2)) return false;
    }
    return true;
}

CheckResult check_cont_equivalence(std::uint64_t) {
    Tally t;
    auto path4 = fixtures::threshold_continuum(
        {Rational(0), Rational(1), Rational(2), Rational(3)}, {Rational(2), Rational(1)});
    auto towerA = block_tower({{{0, 1}, {2, 3}}, {{0}, {1}, {2, 3}}}, 4);
    auto towerB = block_tower({{{0, 1, 2}, {3}}, {{0, 1}, {2}, {3}}}, 4);
    auto towerC = block_tower({{{0}, {1, 2, 3}}, {{0}, {1}, {2, 3}}}, 4);

    std::vector<ContinuumPtr> transitive = {towerA, towerB, towerC};
    long long full_cases = 0;
    for (const auto& src : transitive) {
        for (const auto& dst : transitive) {
            for (std::uint32_t code = 0; code < 256; ++code) {
                std::vector<Index> map = {static_cast<Index>(code & 3),
                                          static_cast<Index>((code >> 2) & 3),
                                          static_cast<Index>((code >> 4) & 3),
                                          static_cast<Index>((code >> 6) & 3)};
                MorphismTable f = make_morphism(src, dst, map);
                for (int n1 = 0; n1 <= 2; ++n1) {
                    for (int n2 = 0; n2 <= 2; ++n2) {
                        bool edge = preserves_connected(f, n1, n2).ok;
                        bool open_ok = preimage_open_check(f, n1, n2).ok;
                        bool closed_ok = preimage_closed_check(f, n1, n2).ok;
                        ++full_cases;
                        t.expect(edge == open_ok && open_ok == closed_ok,
                                 "three-way equivalence broken on transitive pair");
                    }
                }
            }
        }
    }
    t.expect(full_cases >= 9 * 256, "fewer than 256 tables per continuum pair");

    // with a non-transitive source only the open<->closed duality is a theorem
    for (const auto& dst : transitive) {
        for (std::uint32_t code = 0; code < 256; ++code) {
            std::vector<Index> map = {static_cast<Index>(code & 3),
                                      static_cast<Index>((code >> 2) & 3),
                                      static_cast<Index>((code >> 4) & 3),
                                      static_cast<Index>((code >> 6) & 3)};
            MorphismTable f = make_morphism(path4, dst, map);
            for (int n1 = 0; n1 <= 2; ++n1) {
                for (int n2 = 0; n2 <= 2; ++n2) {
                    t.expect(preimage_open_check(f, n1, n2).ok ==
                                 preimage_closed_check(f, n1, n2).ok,
                             "open/closed duality broken");
                }
            }
        }
    }
    return make_result("morphism.cont-equivalence", "morphism", 9, t,
                       "preserves_connected <=> preimage checks on complete table enumerations");
}

CheckResult check_cont_random(std::uint64_t seed) {
    Rng rng(seed ^ 0xBB);
    Tally t;
    for (int round = 0; round < 200; ++round) {
        ContinuumPtr src = random_nested_continuum(rng, 8, 3);
        ContinuumPtr dst = random_nested_continuum(rng, 8, 3);
        std::vector<Index> map;
        for (Index i = 0; i < src->carrier_size(); ++i) {
            map.push_back(static_cast<Index>(rand_below(rng, dst->carrier_size())));
        }
        MorphismTable f = make_morphism(src, dst, map);
        int n1 = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(src->max_level() + 1)));
        int n2 = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(dst->max_level() + 1)));
        bool edge = preserves_connected(f, n1, n2).ok;
        bool open_ok = preimage_open_check(f, n1, n2).ok;
        bool closed_ok = preimage_closed_check(f, n1, n2).ok;
        t.expect(edge == open_ok && open_ok == closed_ok,
                 "equivalence broken on random transitive pair");
    }
    for (int round = 0; round < 100; ++round) {
        ContinuumPtr src = random_threshold_continuum(rng, 6, 2);
        ContinuumPtr dst = random_threshold_continuum(rng, 6, 2);
        std::vector<Index> map;
        for (Index i = 0; i < src->carrier_size(); ++i) {
            map.push_back(static_cast<Index>(rand_below(rng, dst->carrier_size())));
        }
        MorphismTable f = make_morphism(src, dst, map);
        int n1 = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(src->max_level() + 1)));
        int n2 = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(dst->max_level() + 1)));
        t.expect(preimage_open_check(f, n1, n2).ok == preimage_closed_check(f, n1, n2).ok,
                 "duality broken on generic pair");
    }
    return make_result("morphism.cont-random", "morphism", 9, t,
                       "random transitive pairs keep the equivalence; duality holds generally");
}

CheckResult check_doubling(std::uint64_t) {
    Tally t;
    auto src = std::make_shared<Continuum>(real_continuum(RealGrid{6, 1, 5}));
    auto dst = std::make_shared<Continuum>(real_continuum(RealGrid{6, 2, 4}));
    MorphismTable dbl = make_affine(src, dst, Rational(2), Rational(0));
    ModulusTable table = modulus(dbl);
    t.expect(table.least_source_level[0] == 0, "modulus(0) != 0");
    for (int k = 1; k <= 4; ++k) {
        t.expect(table.least_source_level[static_cast<std::size_t>(k)] == k + 1,
                 "modulus(" + std::to_string(k) + ") != k+1");
        t.expect(preserves_at(dbl, k + 1, k), "doubling fails preserves_at(k+1,k)");
        t.expect(!preserves_at(dbl, k, k), "doubling passes preserves_at(k,k)");
    }
    t.expect(is_uniformly_continuous(dbl), "doubling not uniformly continuous");
    for (int k = 1; k <= 4; ++k) {
        t.expect(preserves_connected(dbl, k + 1, k).ok, "doubling breaks a k+1 edge");
    }
    t.expect(preserves_at(make_identity(src), 2, 2), "identity fails preserves_at(k,k)");

    // preimage checks on the small doubling pair
    auto small_src = std::make_shared<Continuum>(real_continuum(RealGrid{3, 1, 2}));
    auto small_dst = std::make_shared<Continuum>(real_continuum(RealGrid{2, 2, 1}));
    MorphismTable small = make_affine(small_src, small_dst, Rational(2), Rational(0));
    t.expect(preimage_open_check(small, 2, 1).ok, "doubling fails preimage open at (2,1)");
    t.expect(preimage_closed_check(small, 2, 1).ok, "doubling fails preimage closed at (2,1)");
    // a doubling motion pushes down one level
    Motion m{{small_src->carrier().require("0"), small_src->carrier().require("1/8"),
              small_src->carrier().require("1/4")},
             2};
    PushResult pushed = push_motion(small, m, 1);
    t.expect(pushed.ok, "doubling fails to push a level-2 motion to level 1");
    return make_result("morphism.doubling", "morphism", 9, t,
                       "doubling modulus is k+1 on G=6 grids; preimage checks pass at (k+1,k)");
}

CheckResult check_step_morphism(std::uint64_t) {
    Tally t;
    auto grid = std::make_shared<Continuum>(real_continuum(RealGrid{5, 1, 3}));
    MorphismTable step = step_morphism(grid);
    const Carrier& carrier = grid->carrier();
    t.expect(carrier.at(step.apply(carrier.require("0"))).id == "1", "F(0) != 1");
    t.expect(carrier.at(step.apply(carrier.require("1/2"))).id == "0", "F(1/2) != 0");
    t.expect(carrier.at(step.apply(carrier.require("1/16"))).id == "1",
             "monad-granularity smoothing broken: F(2^-(L+1)) != 1");

    int L = grid->max_level();
    ConnectednessCheck cc = preserves_connected(step, L, L);
    t.expect(!cc.ok, "step preserves connectedness");
    if (cc.witness_edge) {
        auto [x, y] = *cc.witness_edge;
        Rational fx = carrier.value(step.apply(x));
        Rational fy = carrier.value(step.apply(y));
        t.expect((fx - fy).abs() == Rational(1), "witness edge does not jump by 1");
        t.expect(grid->relation(L).contains(x, y), "witness edge not a source edge");
    } else {
        t.expect(false, "no witness edge reported");
    }

    // a motion crossing the cutoff fails to push
    std::vector<Index> crossing;
    for (Index i = 0; i < carrier.size(); ++i) {
        crossing.push_back(i);
    }
    Motion m{crossing, L};
    PushResult pushed = push_motion(step, m, L);
    t.expect(!pushed.ok && pushed.failed_step.has_value(), "crossing motion pushed successfully");

    auto small = std::make_shared<Continuum>(real_continuum(RealGrid{3, 1, 2}));
    MorphismTable small_step = step_morphism(small);
    t.expect(!preimage_open_check(small_step, 1, 1).ok, "step passes preimage open at (1,1)");
    t.expect(!preimage_closed_check(small_step, 1, 1).ok, "step passes preimage closed at (1,1)");

    MetricTable metric = MetricTable::absdiff(small->carrier_ptr());
    std::vector<Rational> eps = {Rational(1, 2)};
    EpsilonDeltaResult ed = epsilon_delta_check(small_step, metric, metric, eps);
    t.expect(!ed.ok, "step passes the epsilon-delta check at e=1/2");

    MetricTable big_metric = MetricTable::absdiff(grid->carrier_ptr());
    MorphismTable ident = make_identity(grid);
    std::vector<Rational> eps2 = {Rational(1, 4), Rational(1, 2)};
    EpsilonDeltaResult ed_id = epsilon_delta_check(ident, big_metric, big_metric, eps2);
    t.expect(ed_id.ok, "identity fails epsilon-delta");
    return make_result("morphism.step", "morphism", 9, t,
                       "the step morphism fails all four continuity checks but smooths values");
}

CheckResult check_uniform_continuity(std::uint64_t) {
    Tally t;
    auto towerA = block_tower({{{0, 1}, {2, 3}}, {{0}, {1}, {2, 3}}}, 4);
    auto towerB = block_tower({{{0, 1, 2}, {3}}, {{0, 1}, {2}, {3}}}, 4);
    for (const auto& src : {towerA, towerB}) {
        for (const auto& dst : {towerA, towerB}) {
            for (std::uint32_t code = 0; code < 256; ++code) {
                std::vector<Index> map = {static_cast<Index>(code & 3),
                                          static_cast<Index>((code >> 2) & 3),
                                          static_cast<Index>((code >> 4) & 3),
                                          static_cast<Index>((code >> 6) & 3)};
                MorphismTable f = make_morphism(src, dst, map);
                ModulusTable table = modulus(f);
                for (int k = 0; k <= dst->max_level(); ++k) {
                    std::optional<int> uniform = table.least_source_level[static_cast<std::size_t>(k)];
                    std::optional<int> worst;
                    bool all_pointwise = true;
                    for (Index x = 0; x < src->carrier_size(); ++x) {
                        auto pw = pointwise_modulus(f, x, k);
                        if (!pw) {
                            all_pointwise = false;
                            break;
                        }
                        worst = std::max(worst.value_or(0), *pw);
                    }
                    t.expect(uniform.has_value() == all_pointwise,
                             "uniform modulus exists iff all pointwise moduli do");
                    if (uniform && all_pointwise) {
                        t.expect(*uniform == *worst, "uniform modulus != max pointwise modulus");
                    }
                    if (uniform && k > 0) {
                        auto prev = table.least_source_level[static_cast<std::size_t>(k - 1)];
                        t.expect(prev.has_value() && *prev <= *uniform,
                                 "modulus table not monotone");
                    }
                }
            }
        }
    }
    return make_result("morphism.uniform-continuity", "morphism", 9, t,
                       "pointwise moduli everywhere give the uniform modulus (enumerated)");
}

CheckResult check_morphism_formulations(std::uint64_t seed) {
    Rng rng(seed ^ 0xCC);
    Tally t;
    // Eq(1) edgewise <=> Eq(2) motions <=> the literal forall-u quantification
    auto pool = small_fixtures();
    for (int round = 0; round < 60; ++round) {
        const auto& [sname, src] = pool[rand_below(rng, pool.size())];
        const auto& [dname, dst] = pool[rand_below(rng, pool.size())];
        if (src->carrier_size() > 6) continue;
        std::vector<Index> map;
        for (Index i = 0; i < src->carrier_size(); ++i) {
            map.push_back(static_cast<Index>(rand_below(rng, dst->carrier_size())));
        }
        MorphismTable f = make_morphism(src, dst, map);
        int n1 = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(src->max_level() + 1)));
        int n2 = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(dst->max_level() + 1)));
        bool edge = preserves_connected(f, n1, n2).ok;
        t.expect(edge == literal_preserves_connected(f, n1, n2),
                 sname + "->" + dname + ": edgewise vs literal quantification");
        // exhaustive motions of length <= 4
        bool motions_ok = true;
        std::vector<std::vector<Index>> walks;
        for (Index s = 0; s < src->carrier_size(); ++s) walks.push_back({s});
        for (int len = 1; len < 4; ++len) {
            std::vector<std::vector<Index>> next;
            for (const auto& w : walks) {
                const Class& row = src->relation(n1).row(w.back());
                for (auto j = row.find_first(); j != Class::npos; j = row.find_next(j)) {
                    auto extended = w;
                    extended.push_back(static_cast<Index>(j));
                    next.push_back(std::move(extended));
                }
            }
            for (const auto& w : next) {
                if (!push_motion(f, Motion{w, n1}, n2).ok) motions_ok = false;
            }
            walks = std::move(next);
            if (walks.size() > 4000) break;
        }
        t.expect(edge == motions_ok, sname + "->" + dname + ": edgewise vs motion pushing");
    }

    // sequence formulation: modulus j at level k maps depth->j prefixes to depth->k
    auto src = std::make_shared<Continuum>(real_continuum(RealGrid{6, 1, 5}));
    auto dst = std::make_shared<Continuum>(real_continuum(RealGrid{6, 2, 4}));
    MorphismTable dbl = make_affine(src, dst, Rational(2), Rational(0));
    ModulusTable table = modulus(dbl);
    for (int round = 0; round < 50; ++round) {
        Index target = static_cast<Index>(rand_below(rng, src->carrier_size()));
        SequencePrefix seq;
        for (int i = 0; i < 6; ++i) {
            const Class& zone = src->image(target, std::min(i, src->max_level()));
            std::size_t pick = rand_below(rng, zone.count());
            auto j = zone.find_first();
            while (pick-- > 0) j = zone.find_next(j);
            seq.push_back(static_cast<Index>(j));
        }
        int depth = converges_to(*src, seq, target);
        SequencePrefix image;
        for (Index s : seq) image.push_back(dbl.map[s]);
        int image_depth = converges_to(*dst, image, dbl.map[target]);
        for (int k = 0; k <= dst->max_level(); ++k) {
            auto j = table.least_source_level[static_cast<std::size_t>(k)];
            if (j && depth >= *j) {
                t.expect(image_depth >= k, "image prefix misses depth k despite modulus");
            }
        }
    }

    // functions_equal_at examples on a shifted identity
    {
        auto gsrc = std::make_shared<Continuum>(real_continuum(RealGrid{5, 1, 3}));
        auto gdst = std::make_shared<Continuum>(real_continuum(RealGrid{5, 2, 3}));
        int k = 2;
        MorphismTable f = make_affine(gsrc, gdst, Rational(1), Rational(0));
        MorphismTable g = make_affine(gsrc, gdst, Rational(1), Rational::pow2(-(k + 1)));
        t.expect(functions_equal_at(f, g, k), "identity vs shifted: not equal at k");
        t.expect(!functions_equal_at(f, g, k + 2), "identity vs shifted: equal at k+2");
        t.expect(functions_equal_at(f, f, 3), "f != f");
    }
    return make_result("morphism.formulations", "morphism", 0, t,
                       "edgewise, motion, literal and sequence formulations agree");
}

// ---------------------------------------------------------------- graded

CheckResult check_graded_laws(std::uint64_t seed) {
    Rng rng(seed ^ 0xDD);
    Tally t;
    auto random_family = [&](GradedKind kind, std::size_t universe, int levels) {
        std::vector<Class> family;
        Class current = random_class(rng, universe);
        family.push_back(current);
        for (int i = 1; i <= levels; ++i) {
            Class next = random_class(rng, universe);
            current = kind == GradedKind::pi ? (current & next) : (current | next);
            family.push_back(current);
        }
        if (kind == GradedKind::pi) return GradedClass::pi(std::move(family));
        return GradedClass::sigma(std::move(family));
    };

    for (int round = 0; round < 500; ++round) {
        std::size_t n = 2 + rand_below(rng, 7);
        int L = 1 + static_cast<int>(rand_below(rng, 4));
        GradedKind kind = (rng() & 1) ? GradedKind::pi : GradedKind::sigma;
        GradedClass a = random_family(kind, n, L);
        GradedClass b = random_family(kind, n, L);

        GradedClass u = a.union_with(b);
        GradedClass i = a.intersect_with(b);
        t.expect(u.kind() == kind && i.kind() == kind, "kind not preserved");
        for (int lvl = 0; lvl <= L; ++lvl) {
            t.expect(u.eval(lvl) == (a.eval(lvl) | b.eval(lvl)), "union not pointwise");
            t.expect(i.eval(lvl) == (a.eval(lvl) & b.eval(lvl)), "intersection not pointwise");
        }
        GradedClass comp = a.complement();
        t.expect(comp.kind() != kind, "complement kind unchanged");
        t.expect(comp.complement() == a, "double complement differs");

        GradedClass prod = a.product_with(b);
        t.expect(prod.kind() == kind && prod.pair_shape().has_value(), "product malformed");
        GradedClass dom = prod.domain();
        for (int lvl = 0; lvl <= L; ++lvl) {
            Class expected = b.eval(lvl).any() ? a.eval(lvl) : Class(n);
            t.expect(dom.eval(lvl) == expected, "domain(product) != left side");
        }
        t.expect(a.intersect_with(a) == a, "intersection not idempotent");
    }

    for (const auto& [name, c] : small_fixtures()) {
        Class members = random_class(rng, c->carrier_size());
        GradedClass fam = closure_family(*c, members);
        t.expect(fam.kind() == GradedKind::pi, name + ": closure family not pi");
        t.expect(fam.complement().kind() == GradedKind::sigma,
                 name + ": complement family not sigma");
        t.expect(fam.limit() == closure(*c, members, c->max_level()),
                 name + ": family limit differs from the deepest closure");
    }
    return make_result("graded.kind-laws", "graded", 0, t,
                       "union/intersection/product/domain preserve kind and monotonicity");
}

// ---------------------------------------------------------------- cli module

CheckResult check_spec_roundtrip(std::uint64_t) {
    Tally t;
    const char* samples[] = {
        "continuum e1\n"
        "  carrier 0 1 2 3 4\n"
        "  level 1 absdiff<=2\n"
        "  level 2 absdiff<=1\n"
        "  class X0 = 0\n"
        "  class X4 = 4\n"
        "end\n",
        "continuum g\n"
        "  grid 4 2 3\n"
        "end\n",
        "continuum e1p\n"
        "  carrier 0 1 2 3 4\n"
        "  level 1 absdiff<=2\n"
        "  level 2 absdiff<=1\n"
        "  partition (0,1) (3,4)\n"
        "end\n"
        "metric m on e1p absdiff\n",
    };
    for (const char* text : samples) {
        Workspace ws = parse_workspace(text);
        std::string printed = print_workspace(ws);
        Workspace again = parse_workspace(printed);
        t.expect(semantically_equal(ws, again), "parse(print(ws)) differs");
        t.expect(print_workspace(again) == printed, "print not a fixed point");
    }
    {
        Workspace ws = parse_workspace("continuum g\n  grid 3 1 2\nend\n"
                                       "function id on g identity\n"
                                       "function st on g step\n"
                                       "metric d on g absdiff\n");
        std::string printed = print_workspace(ws);
        Workspace again = parse_workspace(printed);
        t.expect(semantically_equal(ws, again), "function/metric round trip differs");
    }
    // asymmetric literal pair list is malformed input
    bool threw = false;
    try {
        parse_workspace("continuum bad\n  carrier a b\n  level 1 pairs (a,a) (b,b) (a,b)\nend\n");
    } catch (const Error& e) {
        threw = e.kind() == ErrorKind::bad_input;
    }
    t.expect(threw, "asymmetric pair list accepted");
    // paper-literal selector loads but fails validation
    {
        Workspace ws = parse_workspace(
            "continuum lit\n  carrier 0 8 48\n  levels paper-literal-real 4\nend\n");
        t.expect(!validate(*ws.space("lit").continuum).ok, "literal selector validates");
    }
    return make_result("cli.spec-roundtrip", "cli", 10, t,
                       "spec print/parse round trips; malformed input rejected");
}

// ---------------------------------------------------------------- registry

using CheckFn = CheckResult (*)(std::uint64_t);

struct Entry {
    const char* module;
    int criterion;
    CheckFn fn;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = {
        {"core", 1, check_validator_accepts},
        {"core", 1, check_validator_rejects_literal_real},
        {"metric", 1, check_validator_rejects_literal_metric},
        {"core", 0, check_validator_witnesses},
        {"core", 0, check_total_disconnection},
        {"figures", 2, check_figure_laws},
        {"figures", 2, check_closed_open_structure},
        {"figures", 3, check_topology_axioms},
        {"figures", 4, check_separation},
        {"connectivity", 5, check_motion_traces},
        {"connectivity", 5, check_motion_through},
        {"connectivity", 5, check_connectedness_theorems},
        {"connectivity", 6, check_nets},
        {"connectivity", 6, check_cluster_pigeonhole},
        {"connectivity", 6, check_closed_limits},
        {"connectivity", 0, check_accumulation_extraction},
        {"connectivity", 0, check_position_sequences},
        {"real", 7, check_ordered_field},
        {"real", 7, check_lub},
        {"real", 7, check_interval_identity_literal},
        {"real", 0, check_interval_identity_corrected},
        {"real", 7, check_archimedean},
        {"real", 0, check_real_eq},
        {"metric", 8, check_ball_identity},
        {"metric", 8, check_ball_openness},
        {"metric", 1, check_metric_validation},
        {"morphism", 9, check_cont_equivalence},
        {"morphism", 9, check_cont_random},
        {"morphism", 9, check_doubling},
        {"morphism", 9, check_step_morphism},
        {"morphism", 9, check_uniform_continuity},
        {"morphism", 0, check_morphism_formulations},
        {"graded", 0, check_graded_laws},
        {"cli", 10, check_spec_roundtrip},
    };
    return entries;
}

} // namespace

std::vector<std::string> module_names() {
    return {"core", "figures", "graded", "connectivity", "real", "metric", "morphism", "cli"};
}

std::vector<CheckResult> run_all(std::uint64_t seed) {
    std::vector<CheckResult> out;
    for (const auto& entry : registry()) {
        out.push_back(entry.fn(seed));
    }
    return out;
}

std::vector<CheckResult> run_module(const std::string& module, std::uint64_t seed) {
    if (module == "all") return run_all(seed);
    auto names = module_names();
    if (std::find(names.begin(), names.end(), module) == names.end()) {
        throw Error::input("unknown module '" + module + "'");
    }
    std::vector<CheckResult> out;
    for (const auto& entry : registry()) {
        if (entry.module == module) out.push_back(entry.fn(seed));
    }
    return out;
}

std::vector<CheckResult> run_criterion(int criterion, std::uint64_t seed) {
    if (criterion < 1 || criterion > 10) {
        throw Error::input("criteria are numbered 1..10");
    }
    std::vector<CheckResult> out;
    for (const auto& entry : registry()) {
        if (entry.criterion == criterion) out.push_back(entry.fn(seed));
    }
    return out;
}

} // namespace tolspace::suites
