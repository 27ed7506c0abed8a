#include "tolspace/graded.hpp"

#include "tolspace/error.hpp"

namespace tolspace {

GradedClass::GradedClass(GradedKind kind, std::vector<Class> family,
                         std::optional<PairShape> shape)
    : kind_(kind), shape_(shape), family_(std::move(family)) {
    if (family_.empty()) throw Error::input("graded class needs at least one level");
    universe_ = family_.front().size();
    for (const auto& level : family_) {
        if (level.size() != universe_) {
            throw Error::input("graded class levels over different universes");
        }
    }
    if (shape_ && shape_->left * shape_->right != universe_) {
        throw Error::input("pair shape does not match universe size");
    }
    for (std::size_t i = 0; i + 1 < family_.size(); ++i) {
        bool ok = kind_ == GradedKind::pi ? family_[i + 1].is_subset_of(family_[i])
                                          : family_[i].is_subset_of(family_[i + 1]);
        if (!ok) {
            throw Error::input(kind_ == GradedKind::pi
                                   ? "pi family must descend level by level"
                                   : "sigma family must ascend level by level");
        }
    }
}

GradedClass GradedClass::pi(std::vector<Class> family, std::optional<PairShape> shape) {
    return GradedClass(GradedKind::pi, std::move(family), shape);
}

GradedClass GradedClass::sigma(std::vector<Class> family, std::optional<PairShape> shape) {
    return GradedClass(GradedKind::sigma, std::move(family), shape);
}

const Class& GradedClass::eval(int n) const {
    if (n < 0 || n > max_level()) {
        throw Error::input("graded level " + std::to_string(n) + " out of range");
    }
    return family_[static_cast<std::size_t>(n)];
}

void GradedClass::require_compatible(const GradedClass& other) const {
    if (kind_ != other.kind_) throw Error::input("graded kinds differ (pi vs sigma)");
    if (universe_ != other.universe_ || family_.size() != other.family_.size() ||
        shape_ != other.shape_) {
        throw Error::input("graded classes live over different universes or depths");
    }
}

GradedClass GradedClass::union_with(const GradedClass& other) const {
    require_compatible(other);
    std::vector<Class> out;
    out.reserve(family_.size());
    for (std::size_t i = 0; i < family_.size(); ++i) out.push_back(family_[i] | other.family_[i]);
    return GradedClass(kind_, std::move(out), shape_);
}

GradedClass GradedClass::intersect_with(const GradedClass& other) const {
    require_compatible(other);
    std::vector<Class> out;
    out.reserve(family_.size());
    for (std::size_t i = 0; i < family_.size(); ++i) out.push_back(family_[i] & other.family_[i]);
    return GradedClass(kind_, std::move(out), shape_);
}

GradedClass GradedClass::complement() const {
    std::vector<Class> out;
    out.reserve(family_.size());
    for (const auto& level : family_) out.push_back(~level);
    return GradedClass(kind_ == GradedKind::pi ? GradedKind::sigma : GradedKind::pi,
                       std::move(out), shape_);
}

GradedClass GradedClass::product_with(const GradedClass& other) const {
    if (kind_ != other.kind_) throw Error::input("graded kinds differ (pi vs sigma)");
    if (family_.size() != other.family_.size()) {
        throw Error::input("graded classes have different depths");
    }
    std::vector<Class> out;
    out.reserve(family_.size());
    for (std::size_t lvl = 0; lvl < family_.size(); ++lvl) {
        Class level(universe_ * other.universe_);
        for (auto i = family_[lvl].find_first(); i != Class::npos; i = family_[lvl].find_next(i)) {
            for (auto j = other.family_[lvl].find_first(); j != Class::npos;
                 j = other.family_[lvl].find_next(j)) {
                level.set(i * other.universe_ + j);
            }
        }
        out.push_back(std::move(level));
    }
    return GradedClass(kind_, std::move(out), PairShape{universe_, other.universe_});
}

GradedClass GradedClass::domain() const {
    if (!shape_) throw Error::input("domain needs a graded class over a pair universe");
    std::vector<Class> out;
    out.reserve(family_.size());
    for (const auto& level : family_) {
        Class dom(shape_->left);
        for (auto idx = level.find_first(); idx != Class::npos; idx = level.find_next(idx)) {
            dom.set(idx / shape_->right);
        }
        out.push_back(std::move(dom));
    }
    return GradedClass(kind_, std::move(out), std::nullopt);
}

GradedClass closure_family(const Continuum& c, const Class& members) {
    std::vector<Class> family;
    family.reserve(static_cast<std::size_t>(c.max_level()) + 1);
    for (int n = 0; n <= c.max_level(); ++n) family.push_back(c.level_figure(members, n));
    return GradedClass::pi(std::move(family));
}

GradedClass image_family(const Continuum& c, Index x) {
    std::vector<Class> family;
    family.reserve(static_cast<std::size_t>(c.max_level()) + 1);
    for (int n = 0; n <= c.max_level(); ++n) family.push_back(c.image(x, n));
    return GradedClass::pi(std::move(family));
}

} // namespace tolspace
