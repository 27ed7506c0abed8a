#pragma once

#include "tolspace/continuum.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tolspace {

/// A finite walk whose consecutive steps are R_level-related.
struct Motion {
    std::vector<Index> steps;
    int level = 0;
};

struct Net {
    Class members;
    int level = 0;
    bool maximal = false; // verified post hoc against the class it was built from
};

/// The first m terms of a sequence of positions.
using SequencePrefix = std::vector<Index>;

struct ClusterPosition {
    Index member = 0;     // net member whose image holds the most terms
    std::size_t count = 0;
    Class net;            // the maximal net used
};

bool is_motion(const Continuum& c, const std::vector<Index>& steps, int n);
Class trace(const Continuum& c, const Motion& m);

/// Graph connectivity of R_n restricted to u; the empty class counts as
/// connected by convention.
bool is_connected_set(const Continuum& c, const Class& u, int n);
/// Maximal connected pieces of X, ordered by least member.
std::vector<Class> components(const Continuum& c, const Class& members, int n);

/// A motion at level n whose trace is exactly u, length <= 2|u| (depth-first
/// walk with backtracking). Throws Error::precondition naming a violating
/// bipartition when u is not connected.
Motion motion_through(const Continuum& c, const Class& u, int n);

/// Greedy R_n-net of X in canonical carrier order; independence and coverage
/// of X are verified after construction rather than assumed.
Net maximal_net(const Continuum& c, const Class& members, int n);

/// Pigeonhole analog of sequence compactness: the maximal-net member of the
/// carrier whose level-n image contains the most terms of seq (ties go to
/// the earliest member); count >= ceil(m / |net|).
ClusterPosition cluster_position(const Continuum& c, const SequencePrefix& seq, int n);

/// x is an accumulation position of A iff every level n <= budget has
/// image(x,n) meeting A outside x's monad.
Class accumulation_points(const Continuum& c, const Class& members, int budget);
/// Members of A's figure that are not accumulation positions.
Class isolation_points(const Continuum& c, const Class& members, int budget);

/// Largest k <= L such that for every n <= k some nonempty tail of seq lies
/// inside image(x, n). Level 0 is always certifiable on a full R_0.
int converges_to(const Continuum& c, const SequencePrefix& seq, Index x);

/// True iff for every n <= budget some tail of seq lies inside image(x, n),
/// the canonical-neighborhood-basis form of the tail property.
bool tails_in_neighborhoods(const Continuum& c, const SequencePrefix& seq, Index x, int budget);

} // namespace tolspace
