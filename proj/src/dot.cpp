#include "tolspace/dot.hpp"

#include <sstream>

namespace tolspace {

namespace {

std::string sanitize(const std::string& name) {
    std::string out;
    for (char ch : name) {
        out += (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') ? ch : '_';
    }
    return out.empty() ? std::string("g") : out;
}

} // namespace

std::string export_dot(const Continuum& c, int n, const std::string& graph_name) {
    c.require_level(n);
    std::ostringstream out;
    out << "graph " << sanitize(graph_name) << "_level_" << n << " {\n";
    for (Index i = 0; i < c.carrier_size(); ++i) {
        out << "  \"" << c.carrier().at(i).id << "\";\n";
    }
    for (Index i = 0; i < c.carrier_size(); ++i) {
        const Class& row = c.relation(n).row(i);
        for (auto j = row.find_next(i); j != Class::npos; j = row.find_next(j)) {
            out << "  \"" << c.carrier().at(i).id << "\" -- \""
                << c.carrier().at(static_cast<Index>(j)).id << "\";\n";
        }
    }
    out << "}\n";
    return out.str();
}

std::string export_dot_all_levels(const Continuum& c, const std::string& base_name) {
    std::string out;
    for (int n = 0; n <= c.max_level(); ++n) {
        out += export_dot(c, n, base_name);
    }
    return out;
}

} // namespace tolspace
