#pragma once

#include "tolspace/rational.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tolspace {

using Index = std::uint32_t;

/// A carrier subset, one bit per position in canonical carrier order.
using Class = boost::dynamic_bitset<>;

struct Position {
    std::string id;
    std::optional<Rational> value; // set on numeric carriers
};

/// Finite support of a continuum. Construction order is the canonical order
/// used everywhere determinism matters (greedy nets, witnesses, printing).
class Carrier {
  public:
    explicit Carrier(std::vector<Position> positions);

    std::size_t size() const { return positions_.size(); }
    const Position& at(Index i) const { return positions_[i]; }

    std::optional<Index> find(std::string_view id) const;
    Index require(std::string_view id) const; // throws Error::input when unknown

    /// True when every position carries a rational value.
    bool numeric() const { return numeric_; }
    const Rational& value(Index i) const;

    Class empty_class() const { return Class(positions_.size()); }
    Class full_class() const { return ~Class(positions_.size()); }
    Class make_class(std::span<const std::string> ids) const;

    std::vector<std::string> ids_of(const Class& members) const;

  private:
    std::vector<Position> positions_;
    std::unordered_map<std::string, Index> index_;
    bool numeric_ = false;
};

using CarrierPtr = std::shared_ptr<const Carrier>;

/// Carrier from bare ids; ids that all parse as rationals make the carrier numeric.
CarrierPtr make_carrier(std::span<const std::string> ids);
/// Numeric carrier from exact values (ids are the canonical rational strings).
CarrierPtr make_numeric_carrier(std::span<const Rational> values);

std::string format_class(const Carrier& carrier, const Class& members);

} // namespace tolspace
