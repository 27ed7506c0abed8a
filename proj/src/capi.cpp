#include "tolspace.h"

#include "tolspace/connectivity.hpp"
#include "tolspace/dot.hpp"
#include "tolspace/error.hpp"
#include "tolspace/figures.hpp"
#include "tolspace/metric.hpp"
#include "tolspace/morphism.hpp"
#include "tolspace/real.hpp"
#include "tolspace/spacespec.hpp"
#include "tolspace/suites.hpp"

#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

using namespace tolspace;

struct tolspace_workspace_t {
    Workspace ws;
};

struct tolspace_strings_t {
    std::vector<std::string> items;
};

struct tolspace_rows_t {
    std::vector<std::vector<std::string>> rows;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_err(char** err, const std::string& message) {
    if (err) *err = dup_string(message);
}

int status_of(const Error& e) {
    return e.kind() == ErrorKind::precondition ? TOLSPACE_FAILED : TOLSPACE_BAD_INPUT;
}

template <typename Fn> int guarded(char** err, Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        set_err(err, e.what());
        return status_of(e);
    } catch (const std::exception& e) {
        set_err(err, e.what());
        return TOLSPACE_BAD_INPUT;
    }
}

tolspace_strings_t* strings_of(std::vector<std::string> items) {
    return new tolspace_strings_t{std::move(items)};
}

tolspace_strings_t* class_strings(const Continuum& c, const Class& members) {
    return strings_of(c.carrier().ids_of(members));
}

tolspace_rows_t* rows_of(std::vector<std::vector<std::string>> rows) {
    return new tolspace_rows_t{std::move(rows)};
}

const SpaceEntry& entry_of(const tolspace_workspace_t* ws, const char* space) {
    if (!ws) throw Error::input("null workspace");
    return ws->ws.space_or_default(space ? space : "");
}

Class class_of(const tolspace_workspace_t* ws, const SpaceEntry& entry, const char* cls) {
    if (!cls) throw Error::input("null class");
    return ws->ws.resolve_class(entry, cls);
}

SequencePrefix seq_of(const Continuum& c, const char* const* ids, size_t n) {
    if (!ids && n > 0) throw Error::input("null sequence");
    SequencePrefix out;
    for (size_t i = 0; i < n; ++i) out.push_back(c.require_position(ids[i]));
    return out;
}

tolspace_rows_t* violation_rows(const ValidationReport& report) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : report.violations) {
        std::vector<std::string> row = {v.condition, std::to_string(v.level)};
        for (const auto& w : v.witness) row.push_back(w);
        row.push_back(v.detail);
        rows.push_back(std::move(row));
    }
    return rows_of(std::move(rows));
}

const MorphismTable& function_of(const tolspace_workspace_t* ws, const char* name) {
    if (!ws || !name) throw Error::input("null workspace or function name");
    return ws->ws.function(name);
}

} // namespace

extern "C" {

const char* tolspace_version(void) { return "0.1.0"; }

void tolspace_string_free(char* s) { std::free(s); }

size_t tolspace_strings_count(const tolspace_strings_t* s) { return s ? s->items.size() : 0; }

const char* tolspace_strings_get(const tolspace_strings_t* s, size_t i) {
    if (!s || i >= s->items.size()) return nullptr;
    return s->items[i].c_str();
}

void tolspace_strings_free(tolspace_strings_t* s) { delete s; }

size_t tolspace_rows_count(const tolspace_rows_t* r) { return r ? r->rows.size() : 0; }

size_t tolspace_rows_width(const tolspace_rows_t* r, size_t row) {
    if (!r || row >= r->rows.size()) return 0;
    return r->rows[row].size();
}

const char* tolspace_rows_get(const tolspace_rows_t* r, size_t row, size_t col) {
    if (!r || row >= r->rows.size() || col >= r->rows[row].size()) return nullptr;
    return r->rows[row][col].c_str();
}

void tolspace_rows_free(tolspace_rows_t* r) { delete r; }

int tolspace_workspace_load(const char* path, tolspace_workspace_t** out, char** err) {
    return guarded(err, [&] {
        if (!path || !out) throw Error::input("null path or out parameter");
        *out = new tolspace_workspace_t{load_workspace(path)};
        return TOLSPACE_OK;
    });
}

int tolspace_workspace_parse(const char* text, tolspace_workspace_t** out, char** err) {
    return guarded(err, [&] {
        if (!text || !out) throw Error::input("null text or out parameter");
        *out = new tolspace_workspace_t{parse_workspace(text)};
        return TOLSPACE_OK;
    });
}

void tolspace_workspace_free(tolspace_workspace_t* ws) { delete ws; }

int tolspace_workspace_print(const tolspace_workspace_t* ws, char** out, char** err) {
    return guarded(err, [&] {
        if (!ws || !out) throw Error::input("null workspace or out parameter");
        *out = dup_string(print_workspace(ws->ws));
        return TOLSPACE_OK;
    });
}

int tolspace_space_count(const tolspace_workspace_t* ws, size_t* out, char** err) {
    return guarded(err, [&] {
        if (!ws || !out) throw Error::input("null workspace or out parameter");
        *out = ws->ws.spaces.size();
        return TOLSPACE_OK;
    });
}

int tolspace_space_name(const tolspace_workspace_t* ws, size_t index, char** out, char** err) {
    return guarded(err, [&] {
        if (!ws || !out) throw Error::input("null workspace or out parameter");
        if (index >= ws->ws.spaces.size()) throw Error::input("space index out of range");
        *out = dup_string(ws->ws.spaces[index].name);
        return TOLSPACE_OK;
    });
}

int tolspace_space_levels(const tolspace_workspace_t* ws, const char* space, int* out_max_level,
                          char** err) {
    return guarded(err, [&] {
        *out_max_level = entry_of(ws, space).continuum->max_level();
        return TOLSPACE_OK;
    });
}

int tolspace_space_carrier(const tolspace_workspace_t* ws, const char* space,
                           tolspace_strings_t** out, char** err) {
    return guarded(err, [&] {
        const auto& entry = entry_of(ws, space);
        *out = class_strings(*entry.continuum, entry.continuum->carrier().full_class());
        return TOLSPACE_OK;
    });
}

int tolspace_validate(const tolspace_workspace_t* ws, const char* space, int* ok,
                      tolspace_rows_t** violations, char** err) {
    return guarded(err, [&] {
        const auto& entry = entry_of(ws, space);
        ValidationReport report = validate(*entry.continuum);
        if (ok) *ok = report.ok ? 1 : 0;
        if (violations) *violations = violation_rows(report);
        return report.ok ? TOLSPACE_OK : TOLSPACE_FAILED;
    });
}

int tolspace_monad_discernibility(const tolspace_workspace_t* ws, const char* space, int* ok,
                                  tolspace_strings_t** witness, char** err) {
    return guarded(err, [&] {
        const auto& entry = entry_of(ws, space);
        auto failure = monad_discernibility_failure(*entry.continuum);
        if (ok) *ok = failure ? 0 : 1;
        if (witness) {
            std::vector<std::string> ids;
            if (failure) {
                ids.push_back(entry.continuum->carrier().at(failure->first).id);
                ids.push_back(entry.continuum->carrier().at(failure->second).id);
            }
            *witness = strings_of(std::move(ids));
        }
        return failure ? TOLSPACE_FAILED : TOLSPACE_OK;
    });
}

int tolspace_is_totally_disconnected(const tolspace_workspace_t* ws, const char* space, int* out,
                                     char** err) {
    return guarded(err, [&] {
        *out = entry_of(ws, space).continuum->is_totally_disconnected() ? 1 : 0;
        return TOLSPACE_OK;
    });
}

int tolspace_image(const tolspace_workspace_t* ws, const char* space, const char* position,
                   int level, tolspace_strings_t** out, char** err) {
    return guarded(err, [&] {
        const auto& c = *entry_of(ws, space).continuum;
        *out = class_strings(c, c.image(c.require_position(position), level));
        return TOLSPACE_OK;
    });
}

int tolspace_monad(const tolspace_workspace_t* ws, const char* space, const char* position,
                   tolspace_strings_t** out, char** err) {
    return guarded(err, [&] {
        const auto& c = *entry_of(ws, space).continuum;
        *out = class_strings(c, c.monad(c.require_position(position)));
        return TOLSPACE_OK;
    });
}

int tolspace_closure(const tolspace_workspace_t* ws, const char* space, const char* cls,
                     int level, tolspace_strings_t** out, char** err) {
    return guarded(err, [&] {
        const auto& entry = entry_of(ws, space);
        *out = class_strings(*entry.continuum,
                             closure(*entry.continuum, class_of(ws, entry, cls), level));
        return TOLSPACE_OK;
    });
}

int tolspace_interior(const tolspace_workspace_t* ws, const char* space, const char* cls,
                      int level, tolspace_strings_t** out, char** err) {
    return guarded(err, [&] {
        const auto& entry = entry_of(ws, space);
        *out = class_strings(*entry.continuum,
                             interior(*entry.continuum, class_of(ws, entry, cls), level));
        return TOLSPACE_OK;
    });
}

int tolspace_figure_of(const tolspace_workspace_t* ws, const char* space, const char* cls,
                       tolspace_strings_t** out, char** err) {
    return guarded(err, [&] {
        const auto& entry = entry_of(ws, space);
        *out = class_strings(*entry.continuum,
                             figure_of(*entry.continuum, class_of(ws, entry, cls)));
        return TOLSPACE_OK;
    });
}

int tolspace_closed_hull(const tolspace_workspace_t* ws, const char* space, const char* cls,
                         int level, tolspace_strings_t** out, char** err) {
    return guarded(err, [&] {
        const auto& entry = entry_of(ws, space);
        *out = class_strings(*entry.continuum,
                             closed_hull(*entry.continuum, class_of(ws, entry, cls), level));
        return TOLSPACE_OK;
    });
}

int tolspace_is_figure(const tolspace_workspace_t* ws, const char* space, const char* cls,
                       int* out, char** err) {
    return guarded(err, [&] {
        const auto& entry = entry_of(ws, space);
        *out = is_figure(*entry.continuum, class_of(ws, entry, cls)) ? 1 : 0;
        return *out ? TOLSPACE_OK : TOLSPACE_FAILED;
    });
}

int tolspace_is_open(const tolspace_workspace_t* ws, const char* space, const char* cls,
                     int level, int* out, char** err) {
    return guarded(err, [&] {
        const auto& entry = entry_of(ws, space);
        *out = is_open(*entry.continuum, class_of(ws, entry, cls), level) ? 1 : 0;
        return *out ? TOLSPACE_OK : TOLSPACE_FAILED;
    });
}

int tolspace_is_closed(const tolspace_workspace_t* ws, const char* space, const char* cls,
                       int level, int* out, char** err) {
    return guarded(err, [&] {
        const auto& entry = entry_of(ws, space);
        *out = is_closed(*entry.continuum, class_of(ws, entry, cls), level) ? 1 : 0;
        return *out ? TOLSPACE_OK : TOLSPACE_FAILED;
    });
}

int tolspace_is_clopen(const tolspace_workspace_t* ws, const char* space, const char* cls,
                       int level, int* out, char** err) {
    return guarded(err, [&] {
        const auto& entry = entry_of(ws, space);
        *out = is_clopen(*entry.continuum, class_of(ws, entry, cls), level) ? 1 : 0;
        return *out ? TOLSPACE_OK : TOLSPACE_FAILED;
    });
}

int tolspace_is_neighborhood(const tolspace_workspace_t* ws, const char* space, const char* cls,
                             const char* position, int level, int* out, char** err) {
    return guarded(err, [&] {
        const auto& entry = entry_of(ws, space);
        const auto& c = *entry.continuum;
        *out = is_neighborhood(c, class_of(ws, entry, cls), c.require_position(position), level)
                   ? 1
                   : 0;
        return *out ? TOLSPACE_OK : TOLSPACE_FAILED;
    });
}

int tolspace_separable(const tolspace_workspace_t* ws, const char* space, const char* cls_x,
                       const char* cls_y, int* separable_out, int* level, char** err) {
    return guarded(err, [&] {
        const auto& entry = entry_of(ws, space);
        SeparabilityAnswer ans = separable(*entry.continuum, class_of(ws, entry, cls_x),
                                           class_of(ws, entry, cls_y));
        if (separable_out) *separable_out = ans.separable ? 1 : 0;
        if (ans.level && level) *level = *ans.level;
        return ans.separable ? TOLSPACE_OK : TOLSPACE_FAILED;
    });
}

int tolspace_open_family(const tolspace_workspace_t* ws, const char* space, int level,
                         tolspace_rows_t** out, char** err) {
    return guarded(err, [&] {
        const auto& entry = entry_of(ws, space);
        std::vector<std::vector<std::string>> rows;
        for (const Class& open_class : open_family(*entry.continuum, level)) {
            rows.push_back(entry.continuum->carrier().ids_of(open_class));
        }
        *out = rows_of(std::move(rows));
        return TOLSPACE_OK;
    });
}

int tolspace_components(const tolspace_workspace_t* ws, const char* space, const char* cls,
                        int level, tolspace_rows_t** out, char** err) {
    return guarded(err, [&] {
        const auto& entry = entry_of(ws, space);
        Class members = cls && *cls ? class_of(ws, entry, cls)
                                    : entry.continuum->carrier().full_class();
        std::vector<std::vector<std::string>> rows;
        for (const Class& piece : components(*entry.continuum, members, level)) {
            rows.push_back(entry.continuum->carrier().ids_of(piece));
        }
        *out = rows_of(std::move(rows));
        return TOLSPACE_OK;
    });
}

int tolspace_is_connected(const tolspace_workspace_t* ws, const char* space, const char* cls,
                          int level, int* out, tolspace_strings_t** witness, char** err) {
    return guarded(err, [&] {
        const auto& entry = entry_of(ws, space);
        Class members = class_of(ws, entry, cls);
        bool connected = is_connected_set(*entry.continuum, members, level);
        if (out) *out = connected ? 1 : 0;
        if (witness) {
            std::vector<std::string> side;
            if (!connected) {
                auto pieces = components(*entry.continuum, members, level);
                side = entry.continuum->carrier().ids_of(pieces.front());
            }
            *witness = strings_of(std::move(side));
        }
        return connected ? TOLSPACE_OK : TOLSPACE_FAILED;
    });
}

int tolspace_motion_through(const tolspace_workspace_t* ws, const char* space, const char* cls,
                            int level, tolspace_strings_t** motion, char** err) {
    return guarded(err, [&] {
        const auto& entry = entry_of(ws, space);
        Motion m = motion_through(*entry.continuum, class_of(ws, entry, cls), level);
        std::vector<std::string> ids;
        for (Index s : m.steps) ids.push_back(entry.continuum->carrier().at(s).id);
        *motion = strings_of(std::move(ids));
        return TOLSPACE_OK;
    });
}

int tolspace_is_motion(const tolspace_workspace_t* ws, const char* space,
                       const char* const* steps, size_t n_steps, int level, int* out,
                       char** err) {
    return guarded(err, [&] {
        const auto& c = *entry_of(ws, space).continuum;
        SequencePrefix seq = seq_of(c, steps, n_steps);
        *out = is_motion(c, seq, level) ? 1 : 0;
        return *out ? TOLSPACE_OK : TOLSPACE_FAILED;
    });
}

int tolspace_maximal_net(const tolspace_workspace_t* ws, const char* space, const char* cls,
                         int level, tolspace_strings_t** members, int* maximal, char** err) {
    return guarded(err, [&] {
        const auto& entry = entry_of(ws, space);
        Class base = cls && *cls ? class_of(ws, entry, cls)
                                 : entry.continuum->carrier().full_class();
        Net net = maximal_net(*entry.continuum, base, level);
        if (members) *members = class_strings(*entry.continuum, net.members);
        if (maximal) *maximal = net.maximal ? 1 : 0;
        return TOLSPACE_OK;
    });
}

int tolspace_cluster_position(const tolspace_workspace_t* ws, const char* space,
                              const char* const* seq, size_t n_seq, int level, char** member,
                              size_t* count, char** err) {
    return guarded(err, [&] {
        const auto& c = *entry_of(ws, space).continuum;
        ClusterPosition cp = cluster_position(c, seq_of(c, seq, n_seq), level);
        if (member) *member = dup_string(c.carrier().at(cp.member).id);
        if (count) *count = cp.count;
        return TOLSPACE_OK;
    });
}

int tolspace_accumulation_points(const tolspace_workspace_t* ws, const char* space,
                                 const char* cls, int budget, tolspace_strings_t** accumulation,
                                 tolspace_strings_t** isolation, char** err) {
    return guarded(err, [&] {
        const auto& entry = entry_of(ws, space);
        Class members = class_of(ws, entry, cls);
        if (accumulation) {
            *accumulation =
                class_strings(*entry.continuum,
                              accumulation_points(*entry.continuum, members, budget));
        }
        if (isolation) {
            *isolation = class_strings(*entry.continuum,
                                       isolation_points(*entry.continuum, members, budget));
        }
        return TOLSPACE_OK;
    });
}

int tolspace_converges_to(const tolspace_workspace_t* ws, const char* space,
                          const char* const* seq, size_t n_seq, const char* target, int* depth,
                          char** err) {
    return guarded(err, [&] {
        const auto& c = *entry_of(ws, space).continuum;
        *depth = converges_to(c, seq_of(c, seq, n_seq), c.require_position(target));
        return TOLSPACE_OK;
    });
}

int tolspace_real_arith(const char* op, const char* p, const char* q, int level, char** out,
                        char** err) {
    return guarded(err, [&] {
        if (!op || !p || !out) throw Error::input("null argument");
        std::string name(op);
        Rational a = Rational::parse(p);
        if (name == "neg") {
            *out = dup_string((-a).str());
            return TOLSPACE_OK;
        }
        if (!q) throw Error::input("operation '" + name + "' needs a second operand");
        Rational b = Rational::parse(q);
        if (name == "add") {
            *out = dup_string(real_add(a, b).str());
        } else if (name == "mul") {
            *out = dup_string(real_mul(a, b).str());
        } else if (name == "le") {
            bool le = real_le(a, b);
            *out = dup_string(le ? "true" : "false");
            return le ? TOLSPACE_OK : TOLSPACE_FAILED;
        } else if (name == "eq") {
            bool eq = real_eq(a, b, level);
            *out = dup_string(eq ? "true" : "false");
            return eq ? TOLSPACE_OK : TOLSPACE_FAILED;
        } else {
            throw Error::input("unknown arithmetic op '" + name + "'");
        }
        return TOLSPACE_OK;
    });
}

int tolspace_archimedean_witness(const char* q, char** out, char** err) {
    return guarded(err, [&] {
        if (!q || !out) throw Error::input("null argument");
        *out = dup_string(archimedean_witness(Rational::parse(q)).str());
        return TOLSPACE_OK;
    });
}

int tolspace_lub(const char* const* members, size_t n_members, const char* a, const char* b,
                 int iterations, char** out, char** err) {
    return guarded(err, [&] {
        if (!members || !a || !b || !out) throw Error::input("null argument");
        std::vector<Rational> ms;
        for (size_t i = 0; i < n_members; ++i) ms.push_back(Rational::parse(members[i]));
        *out = dup_string(lub(ms, Rational::parse(a), Rational::parse(b), iterations).str());
        return TOLSPACE_OK;
    });
}

int tolspace_interval(const tolspace_workspace_t* ws, const char* space, const char* a,
                      const char* b, const char* kind, int level, tolspace_strings_t** out,
                      char** err) {
    return guarded(err, [&] {
        const auto& entry = entry_of(ws, space);
        if (!kind) throw Error::input("null interval kind");
        std::string k(kind);
        IntervalKind ik;
        if (k == "open") ik = IntervalKind::open;
        else if (k == "closed") ik = IntervalKind::closed;
        else if (k == "half-open-left") ik = IntervalKind::half_open_left;
        else if (k == "half-open-right") ik = IntervalKind::half_open_right;
        else throw Error::input("unknown interval kind '" + k + "'");
        Class result = interval(*entry.continuum, Rational::parse(a), Rational::parse(b), ik,
                                level);
        *out = class_strings(*entry.continuum, result);
        return TOLSPACE_OK;
    });
}

int tolspace_metric_count(const tolspace_workspace_t* ws, size_t* out, char** err) {
    return guarded(err, [&] {
        if (!ws || !out) throw Error::input("null workspace or out parameter");
        *out = ws->ws.metrics.size();
        return TOLSPACE_OK;
    });
}

int tolspace_metric_name(const tolspace_workspace_t* ws, size_t index, char** out, char** err) {
    return guarded(err, [&] {
        if (!ws || !out) throw Error::input("null workspace or out parameter");
        if (index >= ws->ws.metrics.size()) throw Error::input("metric index out of range");
        *out = dup_string(ws->ws.metrics[index].first);
        return TOLSPACE_OK;
    });
}

int tolspace_metric_validate(const tolspace_workspace_t* ws, const char* metric, int* ok,
                             tolspace_rows_t** violations, char** err) {
    return guarded(err, [&] {
        if (!ws || !metric) throw Error::input("null workspace or metric");
        ValidationReport report = validate_metric(ws->ws.metric(metric));
        if (ok) *ok = report.ok ? 1 : 0;
        if (violations) *violations = violation_rows(report);
        return report.ok ? TOLSPACE_OK : TOLSPACE_FAILED;
    });
}

int tolspace_ball(const tolspace_workspace_t* ws, const char* metric, const char* center,
                  const char* radius, int depth, tolspace_strings_t** out, char** err) {
    return guarded(err, [&] {
        if (!ws || !metric || !center || !radius) throw Error::input("null argument");
        const MetricTable& m = ws->ws.metric(metric);
        Index c = m.carrier().require(center);
        Class b = ball(m, c, Rational::parse(radius), depth);
        *out = strings_of(m.carrier().ids_of(b));
        return TOLSPACE_OK;
    });
}

int tolspace_preserves_at(const tolspace_workspace_t* ws, const char* function, int source_level,
                          int target_level, int* out, char** err) {
    return guarded(err, [&] {
        *out = preserves_at(function_of(ws, function), source_level, target_level) ? 1 : 0;
        return *out ? TOLSPACE_OK : TOLSPACE_FAILED;
    });
}

int tolspace_modulus(const tolspace_workspace_t* ws, const char* function, tolspace_rows_t** out,
                     int* uniform, char** err) {
    return guarded(err, [&] {
        const MorphismTable& f = function_of(ws, function);
        ModulusTable table = modulus(f);
        std::vector<std::vector<std::string>> rows;
        bool all = true;
        for (std::size_t k = 0; k < table.least_source_level.size(); ++k) {
            const auto& j = table.least_source_level[k];
            if (!j) all = false;
            rows.push_back({std::to_string(k), j ? std::to_string(*j) : "none"});
        }
        if (out) *out = rows_of(std::move(rows));
        if (uniform) *uniform = all ? 1 : 0;
        return TOLSPACE_OK;
    });
}

int tolspace_preserves_connected(const tolspace_workspace_t* ws, const char* function,
                                 int source_level, int target_level, int* out,
                                 tolspace_strings_t** witness_edge, char** err) {
    return guarded(err, [&] {
        const MorphismTable& f = function_of(ws, function);
        ConnectednessCheck check = preserves_connected(f, source_level, target_level);
        if (out) *out = check.ok ? 1 : 0;
        if (witness_edge) {
            std::vector<std::string> ids;
            if (check.witness_edge) {
                ids.push_back(f.source->carrier().at(check.witness_edge->first).id);
                ids.push_back(f.source->carrier().at(check.witness_edge->second).id);
            }
            *witness_edge = strings_of(std::move(ids));
        }
        return check.ok ? TOLSPACE_OK : TOLSPACE_FAILED;
    });
}

int tolspace_push_motion(const tolspace_workspace_t* ws, const char* function,
                         const char* const* steps, size_t n_steps, int source_level,
                         int target_level, int* ok, tolspace_strings_t** image, char** err) {
    return guarded(err, [&] {
        const MorphismTable& f = function_of(ws, function);
        SequencePrefix seq = seq_of(*f.source, steps, n_steps);
        PushResult result = push_motion(f, Motion{seq, source_level}, target_level);
        if (ok) *ok = result.ok ? 1 : 0;
        if (image) {
            std::vector<std::string> ids;
            for (Index s : result.image.steps) ids.push_back(f.target->carrier().at(s).id);
            *image = strings_of(std::move(ids));
        }
        if (!result.ok) {
            set_err(err, "image pair at step " + std::to_string(*result.failed_step) +
                             " is not related at target level " + std::to_string(target_level));
            return TOLSPACE_FAILED;
        }
        return TOLSPACE_OK;
    });
}

int tolspace_preimage_open_check(const tolspace_workspace_t* ws, const char* function,
                                 int source_level, int target_level, int* out,
                                 tolspace_strings_t** witness, char** err) {
    return guarded(err, [&] {
        const MorphismTable& f = function_of(ws, function);
        PreimageCheck check = preimage_open_check(f, source_level, target_level);
        if (out) *out = check.ok ? 1 : 0;
        if (witness) {
            std::vector<std::string> ids;
            if (check.witness) ids = f.target->carrier().ids_of(*check.witness);
            *witness = strings_of(std::move(ids));
        }
        return check.ok ? TOLSPACE_OK : TOLSPACE_FAILED;
    });
}

int tolspace_preimage_closed_check(const tolspace_workspace_t* ws, const char* function,
                                   int source_level, int target_level, int* out,
                                   tolspace_strings_t** witness, char** err) {
    return guarded(err, [&] {
        const MorphismTable& f = function_of(ws, function);
        PreimageCheck check = preimage_closed_check(f, source_level, target_level);
        if (out) *out = check.ok ? 1 : 0;
        if (witness) {
            std::vector<std::string> ids;
            if (check.witness) ids = f.target->carrier().ids_of(*check.witness);
            *witness = strings_of(std::move(ids));
        }
        return check.ok ? TOLSPACE_OK : TOLSPACE_FAILED;
    });
}

int tolspace_functions_equal_at(const tolspace_workspace_t* ws, const char* function_f,
                                const char* function_g, int level, int* out, char** err) {
    return guarded(err, [&] {
        *out = functions_equal_at(function_of(ws, function_f), function_of(ws, function_g),
                                  level)
                   ? 1
                   : 0;
        return *out ? TOLSPACE_OK : TOLSPACE_FAILED;
    });
}

int tolspace_epsilon_delta(const tolspace_workspace_t* ws, const char* function,
                           const char* source_metric, const char* target_metric,
                           const char* const* epsilons, size_t n_epsilons, int* ok,
                           tolspace_rows_t** out, char** err) {
    return guarded(err, [&] {
        const MorphismTable& f = function_of(ws, function);
        auto pick = [&](const char* name, const ContinuumPtr& c) {
            if (name && *name) return ws->ws.metric(name);
            return MetricTable::absdiff(c->carrier_ptr());
        };
        MetricTable dm1 = pick(source_metric, f.source);
        MetricTable dm2 = pick(target_metric, f.target);
        std::vector<Rational> eps;
        for (size_t i = 0; i < n_epsilons; ++i) eps.push_back(Rational::parse(epsilons[i]));
        EpsilonDeltaResult result = epsilon_delta_check(f, dm1, dm2, eps);
        if (ok) *ok = result.ok ? 1 : 0;
        if (out) {
            std::vector<std::vector<std::string>> rows;
            for (const auto& [e, d] : result.per_sample) {
                rows.push_back({e.str(), d ? d->str() : "none"});
            }
            *out = rows_of(std::move(rows));
        }
        return result.ok ? TOLSPACE_OK : TOLSPACE_FAILED;
    });
}

int tolspace_export_dot(const tolspace_workspace_t* ws, const char* space, int level, char** out,
                        char** err) {
    return guarded(err, [&] {
        const auto& entry = entry_of(ws, space);
        std::string text = level < 0 ? export_dot_all_levels(*entry.continuum, entry.name)
                                     : export_dot(*entry.continuum, level, entry.name);
        *out = dup_string(text);
        return TOLSPACE_OK;
    });
}

int tolspace_suite_run(const char* module, uint64_t seed, tolspace_rows_t** results,
                       int* failures, char** err) {
    return guarded(err, [&] {
        if (!module) throw Error::input("null module name");
        auto checks = suites::run_module(module, seed);
        int failed = 0;
        std::vector<std::vector<std::string>> rows;
        for (const auto& check : checks) {
            if (!check.pass) ++failed;
            rows.push_back({check.id, check.module, std::to_string(check.criterion),
                            check.pass ? "PASS" : "FAIL", check.detail});
        }
        if (results) *results = rows_of(std::move(rows));
        if (failures) *failures = failed;
        return failed == 0 ? TOLSPACE_OK : TOLSPACE_FAILED;
    });
}

} // extern "C"
