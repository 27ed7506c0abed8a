#pragma once

#include "tolspace/continuum.hpp"
#include "tolspace/rational.hpp"

#include <span>
#include <utility>
#include <vector>

namespace tolspace {

/// Dyadic grid {k/2^G : |k| <= M*2^G}, the desk-scale stand-in for the
/// bounded rationals. Granularity must exceed the finest level threshold
/// (G >= L+1) so that level images stay nondegenerate.
struct RealGrid {
    int granularity = 0; // G, spacing 2^-G
    long long bound = 1; // M
    int levels = 1;      // L
};

CarrierPtr grid_carrier(const RealGrid& grid);

/// The real continuum with the sign-split far branch: R_0 full, and for
/// n >= 1, (a,b) related iff |a-b| < 2^-n, or both > 2^n, or both < -2^n.
/// The sign split keeps the composition law and still yields one monad
/// at each end of the grid (the +inf / -inf analogs).
Continuum real_continuum(const RealGrid& grid);
Continuum real_continuum_on(CarrierPtr carrier, int levels);

/// The uncorrected far branch, |a-b| < 2^-n or |a-b| > 2^n, constructible
/// for demonstration; `validate` rejects it with a composition witness.
Continuum literal_real_continuum_on(CarrierPtr carrier, int levels);

/// Level-indexed equality of monad representatives: the corrected-family
/// relation evaluated on exact rationals (no gridding required). Level 0
/// relates everything.
bool real_eq(const Rational& a, const Rational& b, int n);

/// Arithmetic on monads is arithmetic on representatives, exactly.
inline Rational real_add(const Rational& a, const Rational& b) { return a + b; }
inline Rational real_mul(const Rational& a, const Rational& b) { return a * b; }
inline Rational real_neg(const Rational& a) { return -a; }
inline bool real_le(const Rational& a, const Rational& b) { return a <= b; }

/// Least natural n with q < n.
BigInt archimedean_witness(const Rational& q);

/// T-step bisection toward the least upper bound of a finite set:
/// c_0 = b, c_{i+1} = c_i + (a-b)/2^{i+1} when that stays an upper bound.
/// Requires b an upper bound and a not one (violations throw
/// Error::precondition with a witness). The result is an upper bound within
/// (b-a)/2^T of max(members).
Rational lub(std::span<const Rational> members, const Rational& a, const Rational& b,
             int iterations);

enum class IntervalKind { open, closed, half_open_left, half_open_right };

/// The four interval constructions over a grid continuum, from the raw class
/// {q : a < q < b} via level-n closure/interior; the endpoint monads are the
/// level-n images. half_open_left is (a,b], half_open_right is [a,b).
Class interval(const Continuum& grid, const Rational& a, const Rational& b,
               IntervalKind kind, int n);

/// For the half-open kinds the defining identity gives two routes
/// (closure-minus-monad and interior-plus-monad); both are returned so the
/// identity can be checked. For open/closed both entries coincide.
std::pair<Class, Class> interval_constructions(const Continuum& grid, const Rational& a,
                                               const Rational& b, IntervalKind kind, int n);

} // namespace tolspace
