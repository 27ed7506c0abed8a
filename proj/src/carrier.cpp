#include "tolspace/carrier.hpp"

#include "tolspace/error.hpp"

namespace tolspace {

Carrier::Carrier(std::vector<Position> positions) : positions_(std::move(positions)) {
    index_.reserve(positions_.size());
    numeric_ = !positions_.empty();
    for (Index i = 0; i < positions_.size(); ++i) {
        const auto& p = positions_[i];
        if (p.id.empty()) {
            throw Error::input("carrier position with empty id");
        }
        if (!index_.emplace(p.id, i).second) {
            throw Error::input("duplicate carrier id '" + p.id + "'");
        }
        if (!p.value) numeric_ = false;
    }
}

std::optional<Index> Carrier::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    return it == index_.end() ? std::nullopt : std::optional<Index>(it->second);
}

Index Carrier::require(std::string_view id) const {
    auto i = find(id);
    if (!i) {
        throw Error::input("unknown position '" + std::string(id) + "'");
    }
    return *i;
}

const Rational& Carrier::value(Index i) const {
    if (!positions_[i].value) {
        throw Error::input("position '" + positions_[i].id + "' has no numeric value");
    }
    return *positions_[i].value;
}

Class Carrier::make_class(std::span<const std::string> ids) const {
    Class c(positions_.size());
    for (const auto& id : ids) {
        c.set(require(id));
    }
    return c;
}

std::vector<std::string> Carrier::ids_of(const Class& members) const {
    std::vector<std::string> out;
    for (auto i = members.find_first(); i != Class::npos; i = members.find_next(i)) {
        out.push_back(positions_[i].id);
    }
    return out;
}

CarrierPtr make_carrier(std::span<const std::string> ids) {
    std::vector<Position> positions;
    positions.reserve(ids.size());
    for (const auto& id : ids) {
        positions.push_back({id, Rational::try_parse(id)});
    }
    return std::make_shared<Carrier>(std::move(positions));
}

CarrierPtr make_numeric_carrier(std::span<const Rational> values) {
    std::vector<Position> positions;
    positions.reserve(values.size());
    for (const auto& v : values) {
        positions.push_back({v.str(), v});
    }
    return std::make_shared<Carrier>(std::move(positions));
}

std::string format_class(const Carrier& carrier, const Class& members) {
    std::string out = "{";
    bool first = true;
    for (auto i = members.find_first(); i != Class::npos; i = members.find_next(i)) {
        if (!first) out += ", ";
        out += carrier.at(i).id;
        first = false;
    }
    out += "}";
    return out;
}

} // namespace tolspace
