#pragma once

#include "tolspace/continuum.hpp"
#include "tolspace/rational.hpp"

#include <vector>

namespace tolspace {

/// Total symmetric distance table over a carrier. Construction materializes
/// entries as given; the four metric axioms are what `validate_metric`
/// reports on, so defective tables remain constructible.
class MetricTable {
  public:
    MetricTable(CarrierPtr carrier, std::vector<Rational> dense);

    /// Absolute difference of position values on a numeric carrier.
    static MetricTable absdiff(CarrierPtr carrier);

    const Carrier& carrier() const { return *carrier_; }
    const CarrierPtr& carrier_ptr() const { return carrier_; }
    const Rational& distance(Index a, Index b) const {
        return dense_[a * carrier_->size() + b];
    }

    friend bool operator==(const MetricTable& a, const MetricTable& b);

  private:
    CarrierPtr carrier_;
    std::vector<Rational> dense_; // row-major, size n*n
};

/// Checks nonnegativity, the identity axiom, symmetry, and the triangle
/// inequality exhaustively; one witnessed violation per axiom.
ValidationReport validate_metric(const MetricTable& m);

/// Finite form of the ball: the union over i <= depth of {x : d(a,x) < e - 2^-i}.
/// At depth >= the least i with 2^-i below every positive margin this equals
/// {x : d(a,x) < e} exactly.
Class ball(const MetricTable& m, Index center, const Rational& radius, int depth);

/// Metric-derived continuum with the standard family R_n = {d < 2^-n} for
/// n >= 1 and R_0 full; the triangle inequality makes the composition law
/// hold, and dyadic-radius balls come out open at levels at or above the
/// grid granularity.
Continuum continuum_from_metric(const MetricTable& m, int levels);

/// The uncorrected family {d < e - 2^-n or d > 2^n} at every level,
/// constructible for demonstration; `validate` rejects it (it is not even
/// reflexive when e < 1).
Continuum literal_metric_continuum(const MetricTable& m, const Rational& e, int levels);

} // namespace tolspace
