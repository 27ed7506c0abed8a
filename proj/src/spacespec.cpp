#include "tolspace/spacespec.hpp"

#include "tolspace/error.hpp"
#include "tolspace/real.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tolspace {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tokens;
};

[[noreturn]] void fail(int line, const std::string& message) {
    if (message.rfind("line ", 0) == 0) {
        throw Error::input(message); // already anchored to a line
    }
    throw Error::input("line " + std::to_string(line) + ": " + message);
}

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
    }
    return lines;
}

// "(a,b)" or "(a,b,c)" -> parts
std::vector<std::string> parse_group(const std::string& tok, int line) {
    if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')') {
        fail(line, "expected a parenthesized group, got '" + tok + "'");
    }
    std::vector<std::string> parts;
    std::string inner = tok.substr(1, tok.size() - 2);
    std::string part;
    std::istringstream ps(inner);
    while (std::getline(ps, part, ',')) {
        if (part.empty()) fail(line, "empty entry in group '" + tok + "'");
        parts.push_back(part);
    }
    if (parts.empty()) fail(line, "empty group '" + tok + "'");
    return parts;
}

long long parse_small_int(const std::string& tok, int line, const char* what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        fail(line, std::string("expected ") + what + ", got '" + tok + "'");
    }
}

Rational parse_rational(const std::string& tok, int line) {
    auto r = Rational::try_parse(tok);
    if (!r) fail(line, "expected a rational, got '" + tok + "'");
    return *r;
}

struct LevelDirective {
    int number = 0;    // level index
    int line = 0;
    std::string kind;  // full | absdiff | edges | pairs
    bool strict = false;           // absdiff: < vs <=
    Rational threshold;            // absdiff
    std::vector<std::pair<std::string, std::string>> pairs; // edges | pairs
};

struct ContinuumBuilder {
    std::string name;
    int line = 0;
    std::vector<std::string> carrier_ids;
    std::optional<RealGrid> grid;
    std::vector<LevelDirective> level_directives;
    std::string selector; // real-continuum | paper-literal-real | metric-family | paper-literal-metric
    int selector_levels = -1;
    Rational selector_e;
    bool selector_has_e = false;
    int selector_line = 0;
    std::vector<std::vector<std::string>> partition_blocks;
    bool partition_clusters = false;
    int partition_line = 0;
    std::vector<std::pair<std::string, std::vector<std::string>>> class_decls;
    std::vector<int> class_lines;
};

Relation materialize_edges(const Carrier& carrier, const LevelDirective& d) {
    Relation r = Relation::identity(carrier.size());
    for (const auto& [a, b] : d.pairs) {
        auto ia = carrier.find(a);
        auto ib = carrier.find(b);
        if (!ia) fail(d.line, "edge references unknown position '" + a + "'");
        if (!ib) fail(d.line, "edge references unknown position '" + b + "'");
        r.set_symmetric(*ia, *ib);
    }
    return r;
}

Relation materialize_pairs(const Carrier& carrier, const LevelDirective& d) {
    Relation r(carrier.size());
    for (const auto& [a, b] : d.pairs) {
        auto ia = carrier.find(a);
        auto ib = carrier.find(b);
        if (!ia) fail(d.line, "pair references unknown position '" + a + "'");
        if (!ib) fail(d.line, "pair references unknown position '" + b + "'");
        r.set(*ia, *ib);
    }
    std::pair<Index, Index> w;
    if (!r.is_symmetric(&w)) {
        fail(d.line, "asymmetric pair list: (" + carrier.at(w.first).id + ", " +
                         carrier.at(w.second).id + ") listed without its converse");
    }
    return r;
}

Relation materialize_absdiff(const Carrier& carrier, const LevelDirective& d) {
    if (!carrier.numeric()) {
        fail(d.line, "absdiff rule needs a numeric carrier");
    }
    return Relation::from_predicate(carrier.size(), [&](Index i, Index j) {
        Rational diff = (carrier.value(i) - carrier.value(j)).abs();
        return d.strict ? diff < d.threshold : diff <= d.threshold;
    });
}

SpaceEntry build_continuum(const ContinuumBuilder& b) {
    CarrierPtr carrier;
    if (b.grid) {
        if (!b.carrier_ids.empty()) fail(b.line, "continuum has both carrier and grid");
        carrier = grid_carrier(*b.grid);
    } else {
        if (b.carrier_ids.empty()) fail(b.line, "continuum '" + b.name + "' has no carrier");
        try {
            carrier = make_carrier(b.carrier_ids);
        } catch (const Error& e) {
            fail(b.line, e.what());
        }
    }

    std::string selector = b.selector;
    int selector_line = b.selector_line == 0 ? b.line : b.selector_line;
    if (selector.empty() && b.level_directives.empty() && b.grid) {
        selector = "real-continuum"; // grids default to the real-continuum family
    }

    std::vector<Relation> levels;
    if (!selector.empty()) {
        if (!b.level_directives.empty()) {
            fail(selector_line, "continuum mixes a levels selector with level directives");
        }
        int L = b.selector_levels;
        if (L < 0 && b.grid) L = b.grid->levels;
        if (L < 1) fail(selector_line, "levels selector needs L >= 1");
        try {
            if (selector == "real-continuum") {
                if (b.grid && b.grid->granularity < L + 1) {
                    fail(selector_line, "grid granularity must exceed the finest level");
                }
                levels = real_continuum_on(carrier, L).levels();
            } else if (selector == "paper-literal-real") {
                levels = literal_real_continuum_on(carrier, L).levels();
            } else if (selector == "metric-family") {
                levels = continuum_from_metric(MetricTable::absdiff(carrier), L).levels();
            } else if (selector == "paper-literal-metric") {
                if (!b.selector_has_e) fail(selector_line, "paper-literal-metric needs e=Q");
                levels =
                    literal_metric_continuum(MetricTable::absdiff(carrier), b.selector_e, L)
                        .levels();
            } else {
                fail(b.selector_line, "unknown levels selector '" + b.selector + "'");
            }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::bad_input) fail(selector_line, e.what());
            throw;
        }
    } else {
        if (b.level_directives.empty()) {
            fail(b.line, "continuum '" + b.name + "' declares no levels");
        }
        int max_level = 0;
        for (const auto& d : b.level_directives) max_level = std::max(max_level, d.number);
        if (max_level < 1) fail(b.line, "levels 1..L are required (L >= 1)");
        std::vector<std::optional<Relation>> slots(static_cast<std::size_t>(max_level) + 1);
        for (const auto& d : b.level_directives) {
            auto& slot = slots[static_cast<std::size_t>(d.number)];
            if (slot) fail(d.line, "level " + std::to_string(d.number) + " declared twice");
            if (d.kind == "full") {
                slot = Relation::full(carrier->size());
            } else if (d.kind == "absdiff") {
                slot = materialize_absdiff(*carrier, d);
            } else if (d.kind == "edges") {
                slot = materialize_edges(*carrier, d);
            } else {
                slot = materialize_pairs(*carrier, d);
            }
        }
        if (!slots[0]) slots[0] = Relation::full(carrier->size());
        for (int n = 0; n <= max_level; ++n) {
            if (!slots[static_cast<std::size_t>(n)]) {
                fail(b.line, "level " + std::to_string(n) + " missing (levels must be contiguous)");
            }
            levels.push_back(std::move(*slots[static_cast<std::size_t>(n)]));
        }
    }

    std::optional<Partition> partition;
    if (b.partition_clusters) {
        Continuum plain(carrier, levels);
        partition = cluster_partition(plain, plain.max_level());
    } else if (!b.partition_blocks.empty()) {
        std::vector<std::vector<Index>> blocks;
        for (const auto& ids : b.partition_blocks) {
            std::vector<Index> block;
            for (const auto& id : ids) {
                auto idx = carrier->find(id);
                if (!idx) fail(b.partition_line, "partition references unknown position '" + id + "'");
                block.push_back(*idx);
            }
            blocks.push_back(std::move(block));
        }
        try {
            partition = Partition::from_blocks(carrier->size(), blocks);
        } catch (const Error& e) {
            fail(b.partition_line, e.what());
        }
    }

    SpaceEntry entry;
    entry.name = b.name;
    try {
        entry.continuum =
            std::make_shared<Continuum>(carrier, std::move(levels), std::move(partition));
    } catch (const Error& e) {
        fail(b.line, e.what());
    }

    for (std::size_t i = 0; i < b.class_decls.size(); ++i) {
        const auto& [cname, ids] = b.class_decls[i];
        Class members(carrier->size());
        for (const auto& id : ids) {
            auto idx = carrier->find(id);
            if (!idx) fail(b.class_lines[i], "class '" + cname + "' references unknown position '" + id + "'");
            members.set(*idx);
        }
        for (const auto& existing : entry.classes) {
            if (existing.first == cname) fail(b.class_lines[i], "class '" + cname + "' declared twice");
        }
        entry.classes.emplace_back(cname, std::move(members));
    }
    return entry;
}

} // namespace

Workspace parse_workspace(const std::string& text) {
    Workspace ws;
    std::vector<Line> lines = tokenize(text);

    std::size_t i = 0;
    auto has_space = [&](const std::string& name) {
        return std::any_of(ws.spaces.begin(), ws.spaces.end(),
                           [&](const SpaceEntry& s) { return s.name == name; });
    };

    while (i < lines.size()) {
        const Line& line = lines[i];
        const std::string& head = line.tokens[0];

        if (head == "continuum") {
            if (line.tokens.size() != 2) fail(line.number, "usage: continuum NAME");
            ContinuumBuilder b;
            b.name = line.tokens[1];
            b.line = line.number;
            if (has_space(b.name)) fail(line.number, "continuum '" + b.name + "' declared twice");
            ++i;
            bool closed = false;
            while (i < lines.size() && !closed) {
                const Line& body = lines[i];
                const std::string& key = body.tokens[0];
                if (key == "end") {
                    closed = true;
                } else if (key == "carrier") {
                    if (body.tokens.size() < 2) fail(body.number, "carrier needs ids");
                    b.carrier_ids.insert(b.carrier_ids.end(), body.tokens.begin() + 1,
                                         body.tokens.end());
                } else if (key == "grid") {
                    if (body.tokens.size() != 4) fail(body.number, "usage: grid G M L");
                    b.grid = RealGrid{
                        static_cast<int>(parse_small_int(body.tokens[1], body.number, "G")),
                        parse_small_int(body.tokens[2], body.number, "M"),
                        static_cast<int>(parse_small_int(body.tokens[3], body.number, "L"))};
                } else if (key == "level") {
                    if (body.tokens.size() < 3) fail(body.number, "usage: level N KIND ...");
                    LevelDirective d;
                    d.number =
                        static_cast<int>(parse_small_int(body.tokens[1], body.number, "level"));
                    if (d.number < 0) fail(body.number, "level numbers are nonnegative");
                    d.line = body.number;
                    const std::string& kind = body.tokens[2];
                    if (kind == "full") {
                        d.kind = "full";
                    } else if (kind.rfind("absdiff", 0) == 0) {
                        d.kind = "absdiff";
                        std::string rest = kind.substr(7);
                        if (rest.rfind("<=", 0) == 0) {
                            d.strict = false;
                            d.threshold = parse_rational(rest.substr(2), body.number);
                        } else if (rest.rfind("<", 0) == 0) {
                            d.strict = true;
                            d.threshold = parse_rational(rest.substr(1), body.number);
                        } else {
                            fail(body.number, "usage: absdiff<Q or absdiff<=Q");
                        }
                    } else if (kind == "edges" || kind == "pairs") {
                        d.kind = kind;
                        for (std::size_t t = 3; t < body.tokens.size(); ++t) {
                            auto parts = parse_group(body.tokens[t], body.number);
                            if (parts.size() != 2) fail(body.number, "edge groups are pairs");
                            d.pairs.emplace_back(parts[0], parts[1]);
                        }
                    } else {
                        fail(body.number, "unknown level kind '" + kind + "'");
                    }
                    b.level_directives.push_back(std::move(d));
                } else if (key == "levels") {
                    if (body.tokens.size() < 2) fail(body.number, "usage: levels SELECTOR ...");
                    b.selector = body.tokens[1];
                    b.selector_line = body.number;
                    for (std::size_t t = 2; t < body.tokens.size(); ++t) {
                        const std::string& tok = body.tokens[t];
                        if (tok.rfind("e=", 0) == 0) {
                            b.selector_e = parse_rational(tok.substr(2), body.number);
                            b.selector_has_e = true;
                        } else {
                            b.selector_levels =
                                static_cast<int>(parse_small_int(tok, body.number, "L"));
                        }
                    }
                } else if (key == "partition") {
                    b.partition_line = body.number;
                    if (body.tokens.size() == 2 && body.tokens[1] == "clusters") {
                        b.partition_clusters = true;
                    } else {
                        for (std::size_t t = 1; t < body.tokens.size(); ++t) {
                            b.partition_blocks.push_back(
                                parse_group(body.tokens[t], body.number));
                        }
                        if (b.partition_blocks.empty()) {
                            fail(body.number, "partition needs blocks or 'clusters'");
                        }
                    }
                } else if (key == "class") {
                    if (body.tokens.size() < 3 || body.tokens[2] != "=") {
                        fail(body.number, "usage: class NAME = id id ...");
                    }
                    std::vector<std::string> ids(body.tokens.begin() + 3, body.tokens.end());
                    b.class_decls.emplace_back(body.tokens[1], std::move(ids));
                    b.class_lines.push_back(body.number);
                } else {
                    fail(body.number, "unknown continuum directive '" + key + "'");
                }
                ++i;
            }
            if (!closed) fail(line.number, "continuum '" + b.name + "' missing 'end'");
            ws.spaces.push_back(build_continuum(b));
        } else if (head == "function") {
            // function NAME from S to T affine A B | table a->x ... ; function NAME on S step|identity
            if (line.tokens.size() < 4) fail(line.number, "malformed function declaration");
            const std::string& fname = line.tokens[1];
            for (const auto& [existing, _] : ws.functions) {
                if (existing == fname) fail(line.number, "function '" + fname + "' declared twice");
            }
            std::string src_name, dst_name, form;
            std::size_t form_at = 0;
            if (line.tokens[2] == "from") {
                if (line.tokens.size() < 7 || line.tokens[4] != "to") {
                    fail(line.number, "usage: function NAME from S to T FORM ...");
                }
                src_name = line.tokens[3];
                dst_name = line.tokens[5];
                form = line.tokens[6];
                form_at = 6;
            } else if (line.tokens[2] == "on") {
                if (line.tokens.size() < 5) fail(line.number, "usage: function NAME on S FORM");
                src_name = dst_name = line.tokens[3];
                form = line.tokens[4];
                form_at = 4;
            } else {
                fail(line.number, "expected 'from' or 'on' in function declaration");
            }
            if (!has_space(src_name)) fail(line.number, "unknown continuum '" + src_name + "'");
            if (!has_space(dst_name)) fail(line.number, "unknown continuum '" + dst_name + "'");
            ContinuumPtr src = ws.space(src_name).continuum;
            ContinuumPtr dst = ws.space(dst_name).continuum;
            try {
                if (form == "affine") {
                    if (line.tokens.size() != form_at + 3) {
                        fail(line.number, "usage: ... affine A B");
                    }
                    Rational a = parse_rational(line.tokens[form_at + 1], line.number);
                    Rational bq = parse_rational(line.tokens[form_at + 2], line.number);
                    ws.functions.emplace_back(fname, make_affine(src, dst, a, bq));
                } else if (form == "table") {
                    std::vector<Index> map(src->carrier_size(), 0);
                    std::vector<bool> seen(src->carrier_size(), false);
                    for (std::size_t t = form_at + 1; t < line.tokens.size(); ++t) {
                        const std::string& entry = line.tokens[t];
                        auto arrow = entry.find("->");
                        if (arrow == std::string::npos) {
                            fail(line.number, "table entries look like src->dst");
                        }
                        auto is_idx = src->carrier().find(entry.substr(0, arrow));
                        auto id_idx = dst->carrier().find(entry.substr(arrow + 2));
                        if (!is_idx) fail(line.number, "unknown source position in '" + entry + "'");
                        if (!id_idx) fail(line.number, "unknown target position in '" + entry + "'");
                        if (seen[*is_idx]) fail(line.number, "duplicate table entry for '" + entry.substr(0, arrow) + "'");
                        seen[*is_idx] = true;
                        map[*is_idx] = *id_idx;
                    }
                    for (Index x = 0; x < src->carrier_size(); ++x) {
                        if (!seen[x]) {
                            fail(line.number, "function '" + fname + "' is not total: no image for '" +
                                                  src->carrier().at(x).id + "'");
                        }
                    }
                    ws.functions.emplace_back(fname, make_morphism(src, dst, std::move(map)));
                } else if (form == "step") {
                    ws.functions.emplace_back(fname, step_morphism(src));
                } else if (form == "identity") {
                    ws.functions.emplace_back(fname, make_identity(src));
                } else {
                    fail(line.number, "unknown function form '" + form + "'");
                }
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::bad_input) fail(line.number, e.what());
                throw;
            }
            ++i;
        } else if (head == "metric") {
            if (line.tokens.size() < 5 || line.tokens[2] != "on") {
                fail(line.number, "usage: metric NAME on SPACE absdiff|table ...");
            }
            const std::string& mname = line.tokens[1];
            for (const auto& [existing, _] : ws.metrics) {
                if (existing == mname) fail(line.number, "metric '" + mname + "' declared twice");
            }
            if (!has_space(line.tokens[3])) {
                fail(line.number, "unknown continuum '" + line.tokens[3] + "'");
            }
            CarrierPtr carrier = ws.space(line.tokens[3]).continuum->carrier_ptr();
            const std::string& form = line.tokens[4];
            if (form == "absdiff") {
                try {
                    ws.metrics.emplace_back(mname, MetricTable::absdiff(carrier));
                } catch (const Error& e) {
                    fail(line.number, e.what());
                }
            } else if (form == "table") {
                const std::size_t n = carrier->size();
                std::vector<Rational> dense(n * n);
                std::vector<bool> given(n * n, false);
                for (std::size_t t = 5; t < line.tokens.size(); ++t) {
                    const std::string& entry = line.tokens[t];
                    auto eq = entry.rfind('=');
                    if (eq == std::string::npos) fail(line.number, "metric entries look like (a,b)=Q");
                    auto parts = parse_group(entry.substr(0, eq), line.number);
                    if (parts.size() != 2) fail(line.number, "metric entries are pairs");
                    Rational v = parse_rational(entry.substr(eq + 1), line.number);
                    auto ia = carrier->find(parts[0]);
                    auto ib = carrier->find(parts[1]);
                    if (!ia || !ib) fail(line.number, "metric entry references unknown position in '" + entry + "'");
                    if (given[*ia * n + *ib]) {
                        fail(line.number, "duplicate metric entry for (" + parts[0] + "," +
                                              parts[1] + ")");
                    }
                    dense[*ia * n + *ib] = v;
                    dense[*ib * n + *ia] = v;
                    given[*ia * n + *ib] = true;
                    given[*ib * n + *ia] = true;
                }
                for (Index a = 0; a < n; ++a) {
                    given[a * n + a] = true; // defaults to 0 unless overridden
                    for (Index c = 0; c < n; ++c) {
                        if (!given[a * n + c]) {
                            fail(line.number, "metric table incomplete: no entry for (" +
                                                  carrier->at(a).id + "," + carrier->at(c).id + ")");
                        }
                    }
                }
                ws.metrics.emplace_back(mname, MetricTable(carrier, std::move(dense)));
            } else {
                fail(line.number, "unknown metric form '" + form + "'");
            }
            ++i;
        } else {
            fail(line.number, "unknown directive '" + head + "'");
        }
    }
    return ws;
}

Workspace load_workspace(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error::input("cannot open spec file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_workspace(buf.str());
}

const SpaceEntry& Workspace::space(const std::string& name) const {
    for (const auto& s : spaces) {
        if (s.name == name) return s;
    }
    throw Error::input("unknown continuum '" + name + "'");
}

const SpaceEntry& Workspace::space_or_default(const std::string& name) const {
    if (!name.empty()) return space(name);
    if (spaces.size() == 1) return spaces.front();
    if (spaces.empty()) throw Error::input("spec declares no continua");
    throw Error::input("spec declares several continua; pick one with --space");
}

const MorphismTable& Workspace::function(const std::string& name) const {
    for (const auto& [fname, table] : functions) {
        if (fname == name) return table;
    }
    throw Error::input("unknown function '" + name + "'");
}

const MetricTable& Workspace::metric(const std::string& name) const {
    for (const auto& [mname, table] : metrics) {
        if (mname == name) return table;
    }
    throw Error::input("unknown metric '" + name + "'");
}

Class Workspace::resolve_class(const SpaceEntry& entry, const std::string& spec) const {
    for (const auto& [cname, members] : entry.classes) {
        if (cname == spec) return members;
    }
    if (spec.size() >= 2 && spec.front() == '{' && spec.back() == '}') {
        Class members(entry.continuum->carrier_size());
        std::string inner = spec.substr(1, spec.size() - 2);
        if (!inner.empty()) {
            std::istringstream ps(inner);
            std::string part;
            while (std::getline(ps, part, ',')) {
                members.set(entry.continuum->carrier().require(part));
            }
        }
        return members;
    }
    throw Error::input("unknown class '" + spec + "' (declare it or pass {id,id,...})");
}

namespace {

std::string group(std::initializer_list<std::string> parts) {
    std::string out = "(";
    bool first = true;
    for (const auto& p : parts) {
        if (!first) out += ',';
        out += p;
        first = false;
    }
    return out + ")";
}

std::string space_name_of(const Workspace& ws, const Continuum& c) {
    for (const auto& s : ws.spaces) {
        if (s.continuum.get() == &c || *s.continuum == c) return s.name;
    }
    throw Error::input("workspace print: continuum is not registered");
}

} // namespace

std::string print_workspace(const Workspace& ws) {
    std::ostringstream out;
    for (const auto& entry : ws.spaces) {
        const Continuum& c = *entry.continuum;
        const Carrier& carrier = c.carrier();
        out << "continuum " << entry.name << "\n";
        out << "  carrier";
        for (Index i = 0; i < carrier.size(); ++i) out << ' ' << carrier.at(i).id;
        out << "\n";
        for (int n = 1; n <= c.max_level(); ++n) {
            const Relation& r = c.relation(n);
            if (r.is_reflexive() && r.is_symmetric()) {
                out << "  level " << n << " edges";
                for (Index i = 0; i < carrier.size(); ++i) {
                    const Class& row = r.row(i);
                    for (auto j = row.find_next(i); j != Class::npos; j = row.find_next(j)) {
                        out << ' '
                            << group({carrier.at(i).id, carrier.at(static_cast<Index>(j)).id});
                    }
                }
                out << "\n";
            } else {
                out << "  level " << n << " pairs";
                for (Index i = 0; i < carrier.size(); ++i) {
                    const Class& row = r.row(i);
                    for (auto j = row.find_first(); j != Class::npos; j = row.find_next(j)) {
                        out << ' '
                            << group({carrier.at(i).id, carrier.at(static_cast<Index>(j)).id});
                    }
                }
                out << "\n";
            }
        }
        if (!c.relation(0).is_full()) {
            out << "  level 0 pairs";
            const Relation& r = c.relation(0);
            for (Index i = 0; i < carrier.size(); ++i) {
                const Class& row = r.row(i);
                for (auto j = row.find_first(); j != Class::npos; j = row.find_next(j)) {
                    out << ' ' << group({carrier.at(i).id, carrier.at(static_cast<Index>(j)).id});
                }
            }
            out << "\n";
        }
        if (!c.limit().is_identity()) {
            out << "  partition";
            for (const Class& block : c.limit().blocks) {
                if (block.count() < 2) continue;
                out << " (";
                bool first = true;
                for (auto i = block.find_first(); i != Class::npos; i = block.find_next(i)) {
                    if (!first) out << ',';
                    out << carrier.at(static_cast<Index>(i)).id;
                    first = false;
                }
                out << ")";
            }
            out << "\n";
        }
        for (const auto& [cname, members] : entry.classes) {
            out << "  class " << cname << " =";
            for (auto i = members.find_first(); i != Class::npos; i = members.find_next(i)) {
                out << ' ' << carrier.at(static_cast<Index>(i)).id;
            }
            out << "\n";
        }
        out << "end\n";
    }
    for (const auto& [fname, table] : ws.functions) {
        out << "function " << fname << " from " << space_name_of(ws, *table.source) << " to "
            << space_name_of(ws, *table.target) << " table";
        for (Index x = 0; x < table.source->carrier_size(); ++x) {
            out << ' ' << table.source->carrier().at(x).id << "->"
                << table.target->carrier().at(table.map[x]).id;
        }
        out << "\n";
    }
    for (const auto& [mname, table] : ws.metrics) {
        std::string sname;
        for (const auto& s : ws.spaces) {
            bool same = s.continuum->carrier_ptr() == table.carrier_ptr();
            if (!same && s.continuum->carrier_size() == table.carrier().size()) {
                same = true;
                for (Index i = 0; i < table.carrier().size() && same; ++i) {
                    same = s.continuum->carrier().at(i).id == table.carrier().at(i).id;
                }
            }
            if (same) {
                sname = s.name;
                break;
            }
        }
        if (sname.empty()) throw Error::input("workspace print: metric carrier not registered");
        out << "metric " << mname << " on " << sname << " table";
        const std::size_t n = table.carrier().size();
        for (Index a = 0; a < n; ++a) {
            if (!table.distance(a, a).is_zero()) {
                out << ' ' << group({table.carrier().at(a).id, table.carrier().at(a).id}) << '='
                    << table.distance(a, a).str();
            }
            for (Index b = a + 1; b < n; ++b) {
                out << ' ' << group({table.carrier().at(a).id, table.carrier().at(b).id}) << '='
                    << table.distance(a, b).str();
            }
        }
        out << "\n";
    }
    return out.str();
}

bool semantically_equal(const Workspace& a, const Workspace& b) {
    if (a.spaces.size() != b.spaces.size() || a.functions.size() != b.functions.size() ||
        a.metrics.size() != b.metrics.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.spaces.size(); ++i) {
        const auto& sa = a.spaces[i];
        const auto& sb = b.spaces[i];
        if (sa.name != sb.name || !(*sa.continuum == *sb.continuum) ||
            sa.classes != sb.classes) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.functions.size(); ++i) {
        const auto& [na, fa] = a.functions[i];
        const auto& [nb, fb] = b.functions[i];
        if (na != nb || fa.map != fb.map || !(*fa.source == *fb.source) ||
            !(*fa.target == *fb.target)) {
            return false;
        }
    }
    for (std::size_t i = 0; i < a.metrics.size(); ++i) {
        if (a.metrics[i].first != b.metrics[i].first ||
            !(a.metrics[i].second == b.metrics[i].second)) {
            return false;
        }
    }
    return true;
}

} // namespace tolspace
