#include "tolspace/figures.hpp"

#include "tolspace/error.hpp"

#include <set>

namespace tolspace {

Class figure_of(const Continuum& c, const Class& members) {
    c.require_subclass(members);
    Class out(c.carrier_size());
    for (auto i = members.find_first(); i != Class::npos; i = members.find_next(i)) {
        out |= c.monad(static_cast<Index>(i));
    }
    return out;
}

bool is_figure(const Continuum& c, const Class& members) {
    return figure_of(c, members) == members;
}

SeparabilityAnswer separable(const Continuum& c, const Class& x, const Class& y) {
    for (int n = 0; n <= c.max_level(); ++n) {
        if (!c.level_figure(x, n).intersects(c.level_figure(y, n))) {
            return {true, n};
        }
    }
    return {false, std::nullopt};
}

Class closure(const Continuum& c, const Class& members, int n) {
    return c.level_figure(members, n);
}

Class interior(const Continuum& c, const Class& members, int n) {
    Class complement = ~c.require_subclass(members);
    return ~closure(c, complement, n);
}

bool is_closed(const Continuum& c, const Class& members, int n) {
    return closure(c, members, n) == members;
}

bool is_open(const Continuum& c, const Class& members, int n) {
    return is_closed(c, ~c.require_subclass(members), n);
}

bool is_clopen(const Continuum& c, const Class& members, int n) {
    return is_closed(c, members, n) && is_open(c, members, n);
}

Class closed_hull(const Continuum& c, const Class& members, int n) {
    Class current = c.require_subclass(members);
    for (;;) {
        Class next = c.level_figure(current, n);
        if (next == current) return current;
        current = std::move(next);
    }
}

bool is_neighborhood(const Continuum& c, const Class& members, Index x, int n) {
    if (x >= c.carrier_size()) throw Error::input("position index out of range");
    return interior(c, members, n).test(x);
}

std::vector<Class> open_family(const Continuum& c, int n) {
    c.require_level(n);
    if (c.carrier_size() > 20) {
        throw Error::limit("open_family is exhaustive and capped at 20 positions (carrier has " +
                           std::to_string(c.carrier_size()) +
                           "); query single classes with is_open instead");
    }

    // R_n-components; every open class is a union of them.
    std::vector<Class> components;
    Class seen(c.carrier_size());
    for (Index start = 0; start < c.carrier_size(); ++start) {
        if (seen.test(start)) continue;
        Class comp(c.carrier_size());
        std::vector<Index> stack{start};
        comp.set(start);
        while (!stack.empty()) {
            Index x = stack.back();
            stack.pop_back();
            const Class& row = c.relation(n).row(x);
            for (auto y = row.find_first(); y != Class::npos; y = row.find_next(y)) {
                if (!comp.test(y)) {
                    comp.set(y);
                    stack.push_back(static_cast<Index>(y));
                }
            }
        }
        seen |= comp;
        components.push_back(std::move(comp));
    }

    std::set<Class> family;
    const std::size_t k = components.size();
    if (k > 20) {
        throw Error::limit("open family would have 2^" + std::to_string(k) + " members");
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
        Class u(c.carrier_size());
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (std::uint64_t{1} << i)) u |= components[i];
        }
        family.insert(std::move(u));
    }
    return {family.begin(), family.end()};
}

} // namespace tolspace
