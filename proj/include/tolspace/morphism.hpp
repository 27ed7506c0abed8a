#pragma once

#include "tolspace/connectivity.hpp"
#include "tolspace/continuum.hpp"
#include "tolspace/metric.hpp"
#include "tolspace/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tolspace {

/// Total function between carriers, stored extensionally. Affine rules over
/// numeric carriers are materialized to the same representation.
struct MorphismTable {
    ContinuumPtr source;
    ContinuumPtr target;
    std::vector<Index> map; // size = source carrier

    Index apply(Index x) const { return map[x]; }
};

MorphismTable make_morphism(ContinuumPtr source, ContinuumPtr target, std::vector<Index> map);
MorphismTable make_identity(ContinuumPtr c);
/// x -> a*x + b; every image must land on the target carrier.
MorphismTable make_affine(ContinuumPtr source, ContinuumPtr target, const Rational& a,
                          const Rational& b);
/// The discontinuous step: value 1 on the finest-level zero cluster
/// {|x| < 2^-L}, value 0 elsewhere. Source and target are the same grid
/// continuum, which must carry 0 and 1.
MorphismTable step_morphism(ContinuumPtr grid);

/// Every R_{1,j} pair maps into R_{2,k}.
bool preserves_at(const MorphismTable& f, int j, int k);

/// Per target level k: the least source level j with preserves_at(f, j, k).
struct ModulusTable {
    std::vector<std::optional<int>> least_source_level; // indexed by k = 0..L2
};

ModulusTable modulus(const MorphismTable& f);
bool is_uniformly_continuous(const MorphismTable& f);
/// Least j such that every R_{1,j} neighbor of x maps into R_{2,k} around f(x).
std::optional<int> pointwise_modulus(const MorphismTable& f, Index x, int k);

struct ConnectednessCheck {
    bool ok = true;
    std::optional<std::pair<Index, Index>> witness_edge; // source pair, canonical order
};

/// Edgewise form of connectedness preservation: every R_{1,n1} edge (x,y)
/// has f(x) = f(y) or (f(x), f(y)) in R_{2,n2}. Equivalent to the
/// quantification over all connected sets (walks map to walks); the tests
/// check that equivalence against exhaustive enumeration.
ConnectednessCheck preserves_connected(const MorphismTable& f, int n1, int n2);

struct PushResult {
    bool ok = false;
    Motion image;                          // valid target motion when ok
    std::optional<std::size_t> failed_step; // first violating step index otherwise
};

/// Image of a source motion, validated at target level n2. The input must be
/// a motion in the source (Error::precondition otherwise).
PushResult push_motion(const MorphismTable& f, const Motion& m, int n2);

struct PreimageCheck {
    bool ok = true;
    std::optional<Class> witness; // a target class whose preimage misbehaves
};

/// Level-n closed classes are the classes of the form closure(u, n) (the
/// figures of sets), i.e. the fixed points of closure-after-interior; open
/// classes are their complements, the interior images, i.e. the fixed points
/// of interior-after-closure.
bool is_interior_image(const Continuum& c, const Class& members, int n);
bool is_closure_image(const Continuum& c, const Class& members, int n);

/// For every level-n2 open class X of the target (interior image),
/// f^-1(X) is a level-n1 open class of the source. Exhaustive over target
/// subsets; carriers capped at 20.
PreimageCheck preimage_open_check(const MorphismTable& f, int n1, int n2);
/// Dual over closed figures (closure images), connected to the open check by
/// f^-1(C2 \ X) = C1 \ f^-1(X).
PreimageCheck preimage_closed_check(const MorphismTable& f, int n1, int n2);

/// Level-k indiscernibility of functions on a numeric target:
/// |f(x) - g(x)| <= 2^-k for every x.
bool functions_equal_at(const MorphismTable& f, const MorphismTable& g, int k);

struct EpsilonDeltaResult {
    bool ok = true;
    std::vector<std::pair<Rational, std::optional<Rational>>> per_sample;
};

/// epsilon-delta continuity over metric continua. Delta candidates are the
/// level thresholds 2^-i (i <= source L), scanned from coarse to fine: on a
/// finite grid an unrestricted delta below the spacing would make every
/// function pass vacuously.
EpsilonDeltaResult epsilon_delta_check(const MorphismTable& f, const MetricTable& source_metric,
                                       const MetricTable& target_metric,
                                       std::span<const Rational> epsilons);

} // namespace tolspace
