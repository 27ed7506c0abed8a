#pragma once

#include "tolspace/carrier.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tolspace {

/// One level of a generating sequence: a relation on the carrier stored as
/// per-position adjacency rows. Nothing is enforced here; reflexivity,
/// symmetry and the composition law are what `validate` reports on.
class Relation {
  public:
    Relation() = default;
    explicit Relation(std::size_t n) : adj_(n, Class(n)) {}

    static Relation full(std::size_t n);
    static Relation identity(std::size_t n);
    /// Materializes a predicate over position indices (evaluated for i <= j,
    /// applied symmetrically).
    static Relation from_predicate(std::size_t n,
                                   const std::function<bool(Index, Index)>& related);

    std::size_t size() const { return adj_.size(); }
    bool contains(Index a, Index b) const { return adj_[a].test(b); }
    const Class& row(Index a) const { return adj_[a]; }

    void set(Index a, Index b) { adj_[a].set(b); }
    void set_symmetric(Index a, Index b) { adj_[a].set(b); adj_[b].set(a); }
    Class& mutable_row(Index a) { return adj_[a]; }

    bool is_reflexive(Index* witness = nullptr) const;
    bool is_symmetric(std::pair<Index, Index>* witness = nullptr) const;
    bool is_full(std::pair<Index, Index>* witness = nullptr) const;
    bool is_transitive() const;
    bool is_subset_of(const Relation& other) const;

    std::size_t pair_count() const;

    friend bool operator==(const Relation& a, const Relation& b) { return a.adj_ == b.adj_; }

  private:
    std::vector<Class> adj_;
};

/// Limit partition: the finite stand-in for the limit equivalence. Blocks are
/// the monads. Default is the identity partition (singleton monads).
struct Partition {
    std::vector<Index> block_of; // position -> block
    std::vector<Class> blocks;   // disjoint, covering

    static Partition identity(std::size_t n);
    static Partition from_blocks(std::size_t n, const std::vector<std::vector<Index>>& blocks);

    bool is_identity() const;
    friend bool operator==(const Partition& a, const Partition& b) {
        return a.block_of == b.block_of;
    }
};

struct Violation {
    std::string condition; // reflexivity | symmetry | r0-full | composition
    int level = 0;
    std::vector<std::string> witness; // position ids
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

/// A continuum at desk scale: finite carrier, relations R_0..R_L, and an
/// optional limit partition whose blocks must be pairwise related at every
/// level (that much is a structural invariant; the generating-sequence laws
/// themselves are checked by `validate`, so that defective families remain
/// constructible for demonstration).
class Continuum {
  public:
    Continuum(CarrierPtr carrier, std::vector<Relation> levels,
              std::optional<Partition> limit = std::nullopt);

    const Carrier& carrier() const { return *carrier_; }
    const CarrierPtr& carrier_ptr() const { return carrier_; }
    std::size_t carrier_size() const { return carrier_->size(); }

    /// L: levels are indexed 0..max_level().
    int max_level() const { return static_cast<int>(levels_.size()) - 1; }
    const Relation& relation(int n) const; // throws Error::input out of range
    const std::vector<Relation>& levels() const { return levels_; }

    const Partition& limit() const { return limit_; }

    /// Z_n(x): every position R_n-related to x.
    Class image(Index x, int n) const;
    /// Union of images over X; monotone in X and contains X when R_n is reflexive.
    Class level_figure(const Class& members, int n) const;
    /// The limit-partition block of x.
    Class monad(Index x) const;

    /// True iff every R_n is transitive (each level an equivalence).
    bool is_totally_disconnected() const;

    int require_level(int n) const; // validates 0 <= n <= L
    Index require_position(std::string_view id) const { return carrier_->require(id); }
    Class require_subclass(const Class& members) const;

    friend bool operator==(const Continuum& a, const Continuum& b);

  private:
    CarrierPtr carrier_;
    std::vector<Relation> levels_;
    Partition limit_;
};

using ContinuumPtr = std::shared_ptr<const Continuum>;

/// Checks the generating-sequence laws: every level reflexive and symmetric,
/// R_0 full, and the composition law R_{n+1} o R_{n+1} subseteq R_n. Reports
/// one witnessed violation per (condition, level). Structurally malformed
/// input (no levels, mismatched sizes) throws Error::input instead.
ValidationReport validate(const Carrier& carrier, const std::vector<Relation>& levels);
ValidationReport validate(const Continuum& c);

/// Side condition for the point-separation theorem: every two distinct blocks
/// of the limit partition have some level with no cross pair. Returns the
/// first offending block pair as (position-in-block-1, position-in-block-2).
std::optional<std::pair<Index, Index>> monad_discernibility_failure(const Continuum& c);

/// Blocks = connected components of R_n; intended for carriers whose clusters
/// are genuine cliques (the Continuum constructor enforces that invariant).
Partition cluster_partition(const Continuum& c, int n);

} // namespace tolspace
