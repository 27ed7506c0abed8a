#pragma once

// Naive reference evaluations used as oracles. Everything here recomputes
// results from first principles (double loops over explicit predicates),
// independent of the bitset machinery under test.

#include "tolspace/continuum.hpp"
#include "tolspace/rational.hpp"

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using tolspace::Class;
using tolspace::Continuum;
using tolspace::Index;
using tolspace::Rational;

using IdSet = std::set<std::string>;

inline IdSet ids(const Continuum& c, const Class& members) {
    IdSet out;
    for (auto i = members.find_first(); i != Class::npos; i = members.find_next(i)) {
        out.insert(c.carrier().at(static_cast<Index>(i)).id);
    }
    return out;
}

inline Class from_ids(const Continuum& c, const IdSet& names) {
    Class out(c.carrier_size());
    for (const auto& name : names) out.set(c.carrier().require(name));
    return out;
}

// Z_n(x) by scanning every pair through the relation predicate.
inline IdSet image(const Continuum& c, const std::string& x, int n) {
    IdSet out;
    Index xi = c.carrier().require(x);
    for (Index j = 0; j < c.carrier_size(); ++j) {
        if (c.relation(n).contains(xi, j)) out.insert(c.carrier().at(j).id);
    }
    return out;
}

inline IdSet level_figure(const Continuum& c, const IdSet& members, int n) {
    IdSet out;
    for (const auto& m : members) {
        IdSet part = image(c, m, n);
        out.insert(part.begin(), part.end());
    }
    return out;
}

inline IdSet complement(const Continuum& c, const IdSet& members) {
    IdSet out;
    for (Index i = 0; i < c.carrier_size(); ++i) {
        const std::string& id = c.carrier().at(i).id;
        if (!members.count(id)) out.insert(id);
    }
    return out;
}

inline IdSet interior(const Continuum& c, const IdSet& members, int n) {
    return complement(c, level_figure(c, complement(c, members), n));
}

// connected components by breadth-first search over adjacency queries
inline std::vector<IdSet> components(const Continuum& c, const IdSet& members, int n) {
    std::vector<IdSet> out;
    IdSet remaining = members;
    while (!remaining.empty()) {
        IdSet comp;
        std::vector<std::string> frontier{*remaining.begin()};
        comp.insert(frontier.front());
        remaining.erase(frontier.front());
        while (!frontier.empty()) {
            std::string here = frontier.back();
            frontier.pop_back();
            Index hi = c.carrier().require(here);
            for (auto it = remaining.begin(); it != remaining.end();) {
                Index ji = c.carrier().require(*it);
                if (c.relation(n).contains(hi, ji)) {
                    comp.insert(*it);
                    frontier.push_back(*it);
                    it = remaining.erase(it);
                } else {
                    ++it;
                }
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

inline bool connected(const Continuum& c, const IdSet& members, int n) {
    return members.empty() || components(c, members, n).size() == 1;
}

// greedy net simulation in carrier order
inline IdSet greedy_net(const Continuum& c, const IdSet& members, int n) {
    IdSet net;
    for (Index i = 0; i < c.carrier_size(); ++i) {
        const std::string& id = c.carrier().at(i).id;
        if (!members.count(id)) continue;
        bool related = false;
        for (const auto& m : net) {
            if (c.relation(n).contains(i, c.carrier().require(m))) related = true;
        }
        if (!related) net.insert(id);
    }
    return net;
}

inline IdSet set_of(std::initializer_list<const char*> names) {
    IdSet out;
    for (const char* n : names) out.insert(n);
    return out;
}

} // namespace oracle
