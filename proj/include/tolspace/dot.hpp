#pragma once

#include "tolspace/continuum.hpp"

#include <string>

namespace tolspace {

/// Undirected DOT graph of R_n without self-loops: nodes in canonical
/// carrier order (isolated nodes included), edges with i < j ascending.
std::string export_dot(const Continuum& c, int n, const std::string& graph_name);

/// One graph block per level, 0..L.
std::string export_dot_all_levels(const Continuum& c, const std::string& base_name);

} // namespace tolspace
