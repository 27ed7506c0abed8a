#pragma once

#include "tolspace/continuum.hpp"

#include <optional>
#include <vector>

namespace tolspace {

struct SeparabilityAnswer {
    bool separable = false;
    std::optional<int> level; // least witnessing level when separable
};

/// Saturation under the limit partition: union of the monads of X's members.
Class figure_of(const Continuum& c, const Class& members);
bool is_figure(const Continuum& c, const Class& members);

/// Least n <= L with disjoint level-n figures of X and Y, if any. The
/// canonical separator is the level image, per the point-separation proof.
SeparabilityAnswer separable(const Continuum& c, const Class& x, const Class& y);

/// Level-indexed closure: the level-n figure. Not idempotent at a fixed
/// level; iterating drops one level instead (closure(closure(X,n),n) lies in
/// closure(X,n-1) whenever the composition law holds).
Class closure(const Continuum& c, const Class& members, int n);
/// Complement dual of closure.
Class interior(const Continuum& c, const Class& members, int n);

bool is_closed(const Continuum& c, const Class& members, int n);
bool is_open(const Continuum& c, const Class& members, int n);
bool is_clopen(const Continuum& c, const Class& members, int n);

/// Least level-n closed superset: iterate the level figure to a fixed point.
Class closed_hull(const Continuum& c, const Class& members, int n);

/// x lies in the level-n interior of X.
bool is_neighborhood(const Continuum& c, const Class& members, Index x, int n);

/// All level-n open classes, in canonical (lexicographic bitset) order.
/// These are exactly the unions of R_n-components, so the family contains
/// the empty class and the carrier and is closed under union, intersection
/// and complement. Cut off above 20 positions; use is_open for larger
/// carriers. Note that interior(X, n) itself need not be open at level n
/// when R_n is not transitive, which is the graded-truncation tradeoff.
std::vector<Class> open_family(const Continuum& c, int n);

} // namespace tolspace
