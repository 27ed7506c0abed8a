#pragma once

#include "tolspace/carrier.hpp"
#include "tolspace/continuum.hpp"

#include <optional>
#include <vector>

namespace tolspace {

enum class GradedKind { pi, sigma };

struct PairShape {
    std::size_t left = 0;
    std::size_t right = 0;
    friend bool operator==(const PairShape&, const PairShape&) = default;
};

/// Finite graded class: a monotone family A_0..A_L over an index universe.
/// pi families descend, sigma families ascend; the limit is the last level.
/// Families over a product universe carry a PairShape (index = i*right + j).
class GradedClass {
  public:
    static GradedClass pi(std::vector<Class> family,
                          std::optional<PairShape> shape = std::nullopt);
    static GradedClass sigma(std::vector<Class> family,
                             std::optional<PairShape> shape = std::nullopt);

    GradedKind kind() const { return kind_; }
    std::size_t universe() const { return universe_; }
    const std::optional<PairShape>& pair_shape() const { return shape_; }
    int max_level() const { return static_cast<int>(family_.size()) - 1; }

    const Class& eval(int n) const; // throws on level out of range
    const Class& limit() const { return family_.back(); }

    GradedClass union_with(const GradedClass& other) const;     // same kind
    GradedClass intersect_with(const GradedClass& other) const; // same kind
    GradedClass complement() const;                             // flips kind
    GradedClass product_with(const GradedClass& other) const;   // same kind
    GradedClass domain() const; // requires a pair universe

    friend bool operator==(const GradedClass& a, const GradedClass& b) {
        return a.kind_ == b.kind_ && a.shape_ == b.shape_ && a.family_ == b.family_;
    }

  private:
    GradedClass(GradedKind kind, std::vector<Class> family, std::optional<PairShape> shape);
    void require_compatible(const GradedClass& other) const;

    GradedKind kind_;
    std::size_t universe_;
    std::optional<PairShape> shape_;
    std::vector<Class> family_;
};

/// The closure tower of X as a graded class: descending, hence pi.
GradedClass closure_family(const Continuum& c, const Class& members);
/// The image tower of a single position (Z_n(x))_n.
GradedClass image_family(const Continuum& c, Index x);

} // namespace tolspace
