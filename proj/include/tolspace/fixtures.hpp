#pragma once

#include "tolspace/continuum.hpp"
#include "tolspace/rational.hpp"

#include <vector>

namespace tolspace::fixtures {

/// R_0 full plus R_n = {|value(x) - value(y)| <= t_n} over a numeric carrier.
/// Halving thresholds keep the composition law when the values are real
/// numbers under absolute difference.
ContinuumPtr threshold_continuum(const std::vector<Rational>& values,
                                 const std::vector<Rational>& thresholds,
                                 std::optional<Partition> limit = std::nullopt);

/// {0..4}, R_1 = |d| <= 2, R_2 = |d| <= 1.
ContinuumPtr e1();
/// e1 with limit partition {0,1} {2} {3,4}.
ContinuumPtr e1_partitioned();
/// {0,1,10,11}, R_1 = |d| <= 5, R_2 = |d| <= 1; totally disconnected.
ContinuumPtr e2();
/// e2 with limit partition {0,1} {10,11}.
ContinuumPtr e2_partitioned();
/// {0..9}, thresholds 4, 2, 1 (L = 3); the exhaustive-law workhorse.
ContinuumPtr e3();
/// {0..3, 10..13}, thresholds 3, 1; two components at every positive level.
ContinuumPtr e4();
/// Six positions under nested partitions (every level an equivalence),
/// with the level-2 blocks as the limit partition.
ContinuumPtr nested_partition_space();

/// Continua the built-in suites treat as "shipped": the fixtures above plus
/// a small real grid (G=4, M=2, L=3) and a metric-derived grid continuum.
std::vector<std::pair<std::string, ContinuumPtr>> shipped_continua();

} // namespace tolspace::fixtures
