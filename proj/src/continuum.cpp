#include "tolspace/continuum.hpp"

#include "tolspace/error.hpp"

#include <algorithm>

namespace tolspace {

Relation Relation::full(std::size_t n) {
    Relation r(n);
    for (auto& row : r.adj_) row.set();
    return r;
}

Relation Relation::identity(std::size_t n) {
    Relation r(n);
    for (Index i = 0; i < n; ++i) r.adj_[i].set(i);
    return r;
}

Relation Relation::from_predicate(std::size_t n,
                                  const std::function<bool(Index, Index)>& related) {
    Relation r(n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i; j < n; ++j) {
            if (related(i, j)) r.set_symmetric(i, j);
        }
    }
    return r;
}

bool Relation::is_reflexive(Index* witness) const {
    for (Index i = 0; i < adj_.size(); ++i) {
        if (!adj_[i].test(i)) {
            if (witness) *witness = i;
            return false;
        }
    }
    return true;
}

bool Relation::is_symmetric(std::pair<Index, Index>* witness) const {
    for (Index i = 0; i < adj_.size(); ++i) {
        for (auto j = adj_[i].find_first(); j != Class::npos; j = adj_[i].find_next(j)) {
            if (!adj_[j].test(i)) {
                if (witness) *witness = {i, static_cast<Index>(j)};
                return false;
            }
        }
    }
    return true;
}

bool Relation::is_full(std::pair<Index, Index>* witness) const {
    for (Index i = 0; i < adj_.size(); ++i) {
        if (!adj_[i].all()) {
            if (witness) {
                Class missing = ~adj_[i];
                *witness = {i, static_cast<Index>(missing.find_first())};
            }
            return false;
        }
    }
    return true;
}

bool Relation::is_transitive() const {
    for (Index i = 0; i < adj_.size(); ++i) {
        for (auto j = adj_[i].find_first(); j != Class::npos; j = adj_[i].find_next(j)) {
            if (!adj_[j].is_subset_of(adj_[i])) return false;
        }
    }
    return true;
}

bool Relation::is_subset_of(const Relation& other) const {
    for (Index i = 0; i < adj_.size(); ++i) {
        if (!adj_[i].is_subset_of(other.adj_[i])) return false;
    }
    return true;
}

std::size_t Relation::pair_count() const {
    std::size_t n = 0;
    for (const auto& row : adj_) n += row.count();
    return n;
}

Partition Partition::identity(std::size_t n) {
    Partition p;
    p.block_of.resize(n);
    p.blocks.reserve(n);
    for (Index i = 0; i < n; ++i) {
        p.block_of[i] = i;
        Class b(n);
        b.set(i);
        p.blocks.push_back(std::move(b));
    }
    return p;
}

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<Index>>& blocks) {
    Partition p;
    p.block_of.assign(n, static_cast<Index>(n));
    for (const auto& members : blocks) {
        Class b(n);
        Index block_id = static_cast<Index>(p.blocks.size());
        for (Index i : members) {
            if (i >= n) throw Error::input("partition block references position out of range");
            if (p.block_of[i] != n) throw Error::input("partition blocks overlap");
            p.block_of[i] = block_id;
            b.set(i);
        }
        if (b.none()) throw Error::input("empty partition block");
        p.blocks.push_back(std::move(b));
    }
    // unlisted positions become singleton blocks, in canonical order
    for (Index i = 0; i < n; ++i) {
        if (p.block_of[i] == n) {
            Class b(n);
            b.set(i);
            p.block_of[i] = static_cast<Index>(p.blocks.size());
            p.blocks.push_back(std::move(b));
        }
    }
    return p;
}

bool Partition::is_identity() const {
    return std::all_of(blocks.begin(), blocks.end(),
                       [](const Class& b) { return b.count() == 1; });
}

Continuum::Continuum(CarrierPtr carrier, std::vector<Relation> levels,
                     std::optional<Partition> limit)
    : carrier_(std::move(carrier)), levels_(std::move(levels)) {
    if (!carrier_) throw Error::input("continuum requires a carrier");
    const std::size_t n = carrier_->size();
    if (levels_.size() < 2) {
        throw Error::input("generating sequence needs levels 0..L with L >= 1");
    }
    for (const auto& r : levels_) {
        if (r.size() != n) {
            throw Error::input("relation size does not match carrier");
        }
    }
    limit_ = limit ? std::move(*limit) : Partition::identity(n);
    if (limit_.block_of.size() != n) {
        throw Error::input("limit partition does not match carrier");
    }
    // Every pair inside a block must lie in every level.
    for (const auto& block : limit_.blocks) {
        for (auto i = block.find_first(); i != Class::npos; i = block.find_next(i)) {
            for (auto j = block.find_next(i); j != Class::npos; j = block.find_next(j)) {
                for (int lvl = 0; lvl <= max_level(); ++lvl) {
                    if (!levels_[lvl].contains(static_cast<Index>(i), static_cast<Index>(j)) ||
                        !levels_[lvl].contains(static_cast<Index>(j), static_cast<Index>(i))) {
                        throw Error::input(
                            "limit partition block {" + carrier_->at(static_cast<Index>(i)).id +
                            ", " + carrier_->at(static_cast<Index>(j)).id +
                            "} is not related at level " + std::to_string(lvl));
                    }
                }
            }
        }
    }
}

int Continuum::require_level(int n) const {
    if (n < 0 || n > max_level()) {
        throw Error::input("level " + std::to_string(n) + " out of range 0.." +
                           std::to_string(max_level()));
    }
    return n;
}

const Relation& Continuum::relation(int n) const {
    return levels_[static_cast<std::size_t>(require_level(n))];
}

Class Continuum::image(Index x, int n) const {
    if (x >= carrier_size()) throw Error::input("position index out of range");
    return relation(n).row(x);
}

Class Continuum::level_figure(const Class& members, int n) const {
    require_subclass(members);
    const Relation& r = relation(n);
    Class out(carrier_size());
    for (auto i = members.find_first(); i != Class::npos; i = members.find_next(i)) {
        out |= r.row(static_cast<Index>(i));
    }
    return out;
}

Class Continuum::monad(Index x) const {
    if (x >= carrier_size()) throw Error::input("position index out of range");
    return limit_.blocks[limit_.block_of[x]];
}

bool Continuum::is_totally_disconnected() const {
    return std::all_of(levels_.begin(), levels_.end(),
                       [](const Relation& r) { return r.is_transitive(); });
}

Class Continuum::require_subclass(const Class& members) const {
    if (members.size() != carrier_size()) {
        throw Error::input("class does not match carrier size");
    }
    return members;
}

bool operator==(const Continuum& a, const Continuum& b) {
    if (a.carrier_size() != b.carrier_size()) return false;
    for (Index i = 0; i < a.carrier_size(); ++i) {
        const auto& pa = a.carrier().at(i);
        const auto& pb = b.carrier().at(i);
        if (pa.id != pb.id || pa.value != pb.value) return false;
    }
    return a.levels_ == b.levels_ && a.limit_ == b.limit_;
}

namespace {

void add_violation(ValidationReport& report, std::string condition, int level,
                   std::vector<std::string> witness, std::string detail) {
    report.ok = false;
    report.violations.push_back(
        {std::move(condition), level, std::move(witness), std::move(detail)});
}

} // namespace

ValidationReport validate(const Carrier& carrier, const std::vector<Relation>& levels) {
    if (levels.empty()) throw Error::input("generating sequence has no levels");
    for (const auto& r : levels) {
        if (r.size() != carrier.size()) {
            throw Error::input("relation size does not match carrier");
        }
    }

    ValidationReport report;
    const int L = static_cast<int>(levels.size()) - 1;

    for (int n = 0; n <= L; ++n) {
        Index rw;
        if (!levels[n].is_reflexive(&rw)) {
            add_violation(report, "reflexivity", n, {carrier.at(rw).id},
                          "(" + carrier.at(rw).id + ", " + carrier.at(rw).id +
                              ") missing from R_" + std::to_string(n));
        }
        std::pair<Index, Index> sw;
        if (!levels[n].is_symmetric(&sw)) {
            add_violation(report, "symmetry", n,
                          {carrier.at(sw.first).id, carrier.at(sw.second).id},
                          "(" + carrier.at(sw.first).id + ", " + carrier.at(sw.second).id +
                              ") in R_" + std::to_string(n) + " without its converse");
        }
    }

    std::pair<Index, Index> fw;
    if (!levels[0].is_full(&fw)) {
        add_violation(report, "r0-full", 0,
                      {carrier.at(fw.first).id, carrier.at(fw.second).id},
                      "R_0 must relate every pair; (" + carrier.at(fw.first).id + ", " +
                          carrier.at(fw.second).id + ") missing");
    }

    // Composition law: (x,y) in R_{n+1} and (y,z) in R_{n+1} imply (x,z) in R_n.
    for (int n = 0; n < L; ++n) {
        const Relation& fine = levels[n + 1];
        const Relation& coarse = levels[n];
        bool found = false;
        for (Index x = 0; x < carrier.size() && !found; ++x) {
            const Class& xrow = fine.row(x);
            for (auto y = xrow.find_first(); y != Class::npos && !found; y = xrow.find_next(y)) {
                Class bad = fine.row(static_cast<Index>(y)) - coarse.row(x);
                if (bad.any()) {
                    auto z = bad.find_first();
                    add_violation(
                        report, "composition", n,
                        {carrier.at(x).id, carrier.at(static_cast<Index>(y)).id,
                         carrier.at(static_cast<Index>(z)).id},
                        "(" + carrier.at(x).id + ", " + carrier.at(static_cast<Index>(y)).id +
                            ") and (" + carrier.at(static_cast<Index>(y)).id + ", " +
                            carrier.at(static_cast<Index>(z)).id + ") lie in R_" +
                            std::to_string(n + 1) + " but (" + carrier.at(x).id + ", " +
                            carrier.at(static_cast<Index>(z)).id + ") is outside R_" +
                            std::to_string(n));
                    found = true;
                }
            }
        }
    }

    return report;
}

ValidationReport validate(const Continuum& c) { return validate(c.carrier(), c.levels()); }

std::optional<std::pair<Index, Index>> monad_discernibility_failure(const Continuum& c) {
    const auto& blocks = c.limit().blocks;
    for (std::size_t a = 0; a < blocks.size(); ++a) {
        for (std::size_t b = a + 1; b < blocks.size(); ++b) {
            bool discerned = false;
            for (int n = 0; n <= c.max_level() && !discerned; ++n) {
                bool crossing = false;
                for (auto i = blocks[a].find_first(); i != Class::npos && !crossing;
                     i = blocks[a].find_next(i)) {
                    crossing = c.relation(n).row(static_cast<Index>(i)).intersects(blocks[b]);
                }
                discerned = !crossing;
            }
            if (!discerned) {
                return std::pair<Index, Index>{static_cast<Index>(blocks[a].find_first()),
                                               static_cast<Index>(blocks[b].find_first())};
            }
        }
    }
    return std::nullopt;
}

Partition cluster_partition(const Continuum& c, int n) {
    c.require_level(n);
    const std::size_t size = c.carrier_size();
    std::vector<bool> seen(size, false);
    std::vector<std::vector<Index>> blocks;
    for (Index start = 0; start < size; ++start) {
        if (seen[start]) continue;
        std::vector<Index> block;
        std::vector<Index> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            Index x = stack.back();
            stack.pop_back();
            block.push_back(x);
            const Class& row = c.relation(n).row(x);
            for (auto y = row.find_first(); y != Class::npos; y = row.find_next(y)) {
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(static_cast<Index>(y));
                }
            }
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
    }
    return Partition::from_blocks(size, blocks);
}

} // namespace tolspace
