#pragma once

#include "tolspace/continuum.hpp"
#include "tolspace/metric.hpp"
#include "tolspace/morphism.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tolspace {

/// One named continuum from a spec file together with its named classes.
struct SpaceEntry {
    std::string name;
    ContinuumPtr continuum;
    std::vector<std::pair<std::string, Class>> classes;
};

/// Everything a spec file declares. Parsing materializes all rules and
/// selectors to the same representation the programmatic constructors build,
/// so there is one validator and one query path.
class Workspace {
  public:
    std::vector<SpaceEntry> spaces;
    std::vector<std::pair<std::string, MorphismTable>> functions;
    std::vector<std::pair<std::string, MetricTable>> metrics;

    const SpaceEntry& space(const std::string& name) const;
    /// Sole space when name is empty and the file declares exactly one.
    const SpaceEntry& space_or_default(const std::string& name) const;
    const MorphismTable& function(const std::string& name) const;
    const MetricTable& metric(const std::string& name) const;

    /// A declared class name, or an inline literal "{id,id,...}".
    Class resolve_class(const SpaceEntry& entry, const std::string& spec) const;
};

/// Parses spec text. Structural problems (syntax, unknown references,
/// asymmetric literal pair lists, non-total functions, incomplete metric
/// tables) throw Error::input with a line number; semantic law violations do
/// not; those are `validate` findings.
Workspace parse_workspace(const std::string& text);
Workspace load_workspace(const std::string& path);

/// Canonical serialization: materialized carriers, edges/pairs level lists,
/// non-singleton partition blocks, classes, function tables, metric tables.
/// parse(print(ws)) is semantically equal to ws, and print is a fixed point.
std::string print_workspace(const Workspace& ws);

bool semantically_equal(const Workspace& a, const Workspace& b);

} // namespace tolspace
