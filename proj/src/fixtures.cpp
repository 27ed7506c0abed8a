#include "tolspace/fixtures.hpp"

#include "tolspace/metric.hpp"
#include "tolspace/real.hpp"

namespace tolspace::fixtures {

ContinuumPtr threshold_continuum(const std::vector<Rational>& values,
                                 const std::vector<Rational>& thresholds,
                                 std::optional<Partition> limit) {
    CarrierPtr carrier = make_numeric_carrier(values);
    std::vector<Relation> levels;
    levels.push_back(Relation::full(carrier->size()));
    for (const Rational& t : thresholds) {
        levels.push_back(Relation::from_predicate(carrier->size(), [&](Index i, Index j) {
            return (carrier->value(i) - carrier->value(j)).abs() <= t;
        }));
    }
    return std::make_shared<Continuum>(std::move(carrier), std::move(levels), std::move(limit));
}

namespace {

std::vector<Rational> ints(std::initializer_list<long long> xs) {
    std::vector<Rational> out;
    for (long long x : xs) out.emplace_back(x);
    return out;
}

} // namespace

ContinuumPtr e1() {
    return threshold_continuum(ints({0, 1, 2, 3, 4}), {Rational(2), Rational(1)});
}

ContinuumPtr e1_partitioned() {
    Partition p = Partition::from_blocks(5, {{0, 1}, {2}, {3, 4}});
    return threshold_continuum(ints({0, 1, 2, 3, 4}), {Rational(2), Rational(1)}, p);
}

ContinuumPtr e2() {
    return threshold_continuum(ints({0, 1, 10, 11}), {Rational(5), Rational(1)});
}

ContinuumPtr e2_partitioned() {
    Partition p = Partition::from_blocks(4, {{0, 1}, {2, 3}});
    return threshold_continuum(ints({0, 1, 10, 11}), {Rational(5), Rational(1)}, p);
}

ContinuumPtr e3() {
    return threshold_continuum(ints({0, 1, 2, 3, 4, 5, 6, 7, 8, 9}),
                               {Rational(4), Rational(2), Rational(1)});
}

ContinuumPtr e4() {
    return threshold_continuum(ints({0, 1, 2, 3, 10, 11, 12, 13}),
                               {Rational(3), Rational(1)});
}

ContinuumPtr nested_partition_space() {
    std::vector<std::string> ids = {"a", "b", "c", "d", "e", "f"};
    CarrierPtr carrier = make_carrier(ids);
    auto block_relation = [&](const std::vector<std::vector<Index>>& blocks) {
        Relation r(carrier->size());
        for (const auto& block : blocks) {
            for (Index i : block) {
                for (Index j : block) r.set(i, j);
            }
        }
        return r;
    };
    std::vector<Relation> levels;
    levels.push_back(Relation::full(carrier->size()));
    levels.push_back(block_relation({{0, 1, 2}, {3, 4, 5}}));
    levels.push_back(block_relation({{0, 1}, {2}, {3, 4}, {5}}));
    Partition limit = Partition::from_blocks(6, {{0, 1}, {2}, {3, 4}, {5}});
    return std::make_shared<Continuum>(std::move(carrier), std::move(levels), std::move(limit));
}

std::vector<std::pair<std::string, ContinuumPtr>> shipped_continua() {
    std::vector<std::pair<std::string, ContinuumPtr>> out;
    out.emplace_back("e1", e1());
    out.emplace_back("e1p", e1_partitioned());
    out.emplace_back("e2", e2());
    out.emplace_back("e2p", e2_partitioned());
    out.emplace_back("e3", e3());
    out.emplace_back("e4", e4());
    out.emplace_back("nested", nested_partition_space());
    out.emplace_back("grid",
                     std::make_shared<Continuum>(real_continuum(RealGrid{4, 2, 3})));
    {
        RealGrid g{4, 1, 4};
        MetricTable m = MetricTable::absdiff(grid_carrier(g));
        out.emplace_back("metric_grid",
                         std::make_shared<Continuum>(continuum_from_metric(m, 4)));
    }
    return out;
}

} // namespace tolspace::fixtures
