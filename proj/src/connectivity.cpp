#include "tolspace/connectivity.hpp"

#include "tolspace/error.hpp"
#include "tolspace/figures.hpp"

#include <algorithm>

namespace tolspace {

namespace {

void require_positions(const Continuum& c, const std::vector<Index>& steps) {
    for (Index s : steps) {
        if (s >= c.carrier_size()) throw Error::input("position index out of range");
    }
}

Class component_of(const Continuum& c, const Class& within, Index start, int n) {
    Class comp(c.carrier_size());
    comp.set(start);
    std::vector<Index> stack{start};
    while (!stack.empty()) {
        Index x = stack.back();
        stack.pop_back();
        Class next = c.relation(n).row(x) & within;
        next -= comp;
        for (auto y = next.find_first(); y != Class::npos; y = next.find_next(y)) {
            comp.set(y);
            stack.push_back(static_cast<Index>(y));
        }
    }
    return comp;
}

} // namespace

bool is_motion(const Continuum& c, const std::vector<Index>& steps, int n) {
    require_positions(c, steps);
    c.require_level(n);
    if (steps.empty()) return false;
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        if (!c.relation(n).contains(steps[i], steps[i + 1])) return false;
    }
    return true;
}

Class trace(const Continuum& c, const Motion& m) {
    require_positions(c, m.steps);
    Class out(c.carrier_size());
    for (Index s : m.steps) out.set(s);
    return out;
}

bool is_connected_set(const Continuum& c, const Class& u, int n) {
    c.require_subclass(u);
    c.require_level(n);
    if (u.none()) return true; // empty class: connected by convention
    Index start = static_cast<Index>(u.find_first());
    return component_of(c, u, start, n) == u;
}

std::vector<Class> components(const Continuum& c, const Class& members, int n) {
    c.require_subclass(members);
    c.require_level(n);
    std::vector<Class> out;
    Class remaining = members;
    while (remaining.any()) {
        Index start = static_cast<Index>(remaining.find_first());
        Class comp = component_of(c, remaining, start, n);
        remaining -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

Motion motion_through(const Continuum& c, const Class& u, int n) {
    c.require_subclass(u);
    c.require_level(n);
    if (u.none()) throw Error::precondition("cannot walk through the empty class");
    Index start = static_cast<Index>(u.find_first());
    Class comp = component_of(c, u, start, n);
    if (comp != u) {
        Class rest = u - comp;
        throw Error::precondition("class is not connected at level " + std::to_string(n) +
                                  ": no R_" + std::to_string(n) + " pair joins " +
                                  format_class(c.carrier(), comp) + " to " +
                                  format_class(c.carrier(), rest));
    }

    // Depth-first walk emitting every vertex on entry and again on return,
    // giving trace exactly u with at most 2|u|-1 steps.
    Motion m;
    m.level = n;
    Class visited(c.carrier_size());
    std::vector<std::pair<Index, Class>> stack;
    visited.set(start);
    stack.push_back({start, c.relation(n).row(start) & u});
    m.steps.push_back(start);
    while (!stack.empty()) {
        auto& [x, pending] = stack.back();
        Class fresh = pending - visited;
        if (fresh.none()) {
            stack.pop_back();
            if (!stack.empty()) m.steps.push_back(stack.back().first);
            continue;
        }
        Index y = static_cast<Index>(fresh.find_first());
        visited.set(y);
        m.steps.push_back(y);
        stack.push_back({y, c.relation(n).row(y) & u});
    }
    return m;
}

Net maximal_net(const Continuum& c, const Class& members, int n) {
    c.require_subclass(members);
    c.require_level(n);
    Net net{Class(c.carrier_size()), n, false};
    for (auto i = members.find_first(); i != Class::npos; i = members.find_next(i)) {
        if (!c.relation(n).row(static_cast<Index>(i)).intersects(net.members)) {
            net.members.set(i);
        }
    }
    // verify: members pairwise unrelated, every element of X related to one
    bool independent = true;
    for (auto i = net.members.find_first(); i != Class::npos && independent;
         i = net.members.find_next(i)) {
        Class others = net.members;
        others.reset(i);
        independent = !c.relation(n).row(static_cast<Index>(i)).intersects(others);
    }
    bool covering = true;
    for (auto i = members.find_first(); i != Class::npos && covering;
         i = members.find_next(i)) {
        covering = c.relation(n).row(static_cast<Index>(i)).intersects(net.members);
    }
    net.maximal = independent && covering;
    return net;
}

ClusterPosition cluster_position(const Continuum& c, const SequencePrefix& seq, int n) {
    if (seq.empty()) throw Error::precondition("cluster position needs a nonempty prefix");
    require_positions(c, seq);
    Net net = maximal_net(c, c.carrier().full_class(), n);

    ClusterPosition best;
    best.net = net.members;
    bool have = false;
    for (auto i = net.members.find_first(); i != Class::npos; i = net.members.find_next(i)) {
        const Class& zone = c.relation(n).row(static_cast<Index>(i));
        std::size_t count = static_cast<std::size_t>(
            std::count_if(seq.begin(), seq.end(), [&](Index t) { return zone.test(t); }));
        if (!have || count > best.count) {
            best.member = static_cast<Index>(i);
            best.count = count;
            have = true;
        }
    }
    return best;
}

Class accumulation_points(const Continuum& c, const Class& members, int budget) {
    c.require_subclass(members);
    c.require_level(budget);
    Class out(c.carrier_size());
    for (Index x = 0; x < c.carrier_size(); ++x) {
        Class others = members - c.monad(x);
        bool acc = true;
        for (int n = 0; n <= budget && acc; ++n) {
            acc = c.image(x, n).intersects(others);
        }
        if (acc) out.set(x);
    }
    return out;
}

Class isolation_points(const Continuum& c, const Class& members, int budget) {
    return figure_of(c, members) - accumulation_points(c, members, budget);
}

int converges_to(const Continuum& c, const SequencePrefix& seq, Index x) {
    if (seq.empty()) throw Error::precondition("convergence needs a nonempty prefix");
    require_positions(c, seq);
    if (x >= c.carrier_size()) throw Error::input("position index out of range");

    auto certified_at = [&](int n) {
        const Class& zone = c.image(x, n);
        // some nonempty tail fully inside the image
        std::size_t i = seq.size();
        while (i > 0 && zone.test(seq[i - 1])) --i;
        return i < seq.size();
    };

    int depth = -1;
    for (int n = 0; n <= c.max_level(); ++n) {
        if (!certified_at(n)) break;
        depth = n;
    }
    return std::max(depth, 0);
}

bool tails_in_neighborhoods(const Continuum& c, const SequencePrefix& seq, Index x, int budget) {
    if (seq.empty()) throw Error::precondition("tail check needs a nonempty prefix");
    require_positions(c, seq);
    c.require_level(budget);
    if (x >= c.carrier_size()) throw Error::input("position index out of range");
    for (int n = 0; n <= budget; ++n) {
        const Class& zone = c.image(x, n);
        std::size_t i = seq.size();
        while (i > 0 && zone.test(seq[i - 1])) --i;
        if (i == seq.size()) return false;
    }
    return true;
}

} // namespace tolspace
