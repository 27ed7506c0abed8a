// tolspace CLI: batch queries over space-spec files, exact-rational real-line
// operations, morphism continuity checks, DOT export, and the built-in
// verification suites. Talks to the library through the C API only.

#include "tolspace.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct StringsDeleter {
    void operator()(tolspace_strings_t* p) const { tolspace_strings_free(p); }
};
struct RowsDeleter {
    void operator()(tolspace_rows_t* p) const { tolspace_rows_free(p); }
};
struct WorkspaceDeleter {
    void operator()(tolspace_workspace_t* p) const { tolspace_workspace_free(p); }
};

using StringsPtr = std::unique_ptr<tolspace_strings_t, StringsDeleter>;
using RowsPtr = std::unique_ptr<tolspace_rows_t, RowsDeleter>;
using WorkspacePtr = std::unique_ptr<tolspace_workspace_t, WorkspaceDeleter>;

std::string take_string(char* s) {
    std::string out = s ? s : "";
    tolspace_string_free(s);
    return out;
}

std::vector<std::string> to_vector(const tolspace_strings_t* s) {
    std::vector<std::string> out;
    for (size_t i = 0; i < tolspace_strings_count(s); ++i) {
        out.push_back(tolspace_strings_get(s, i));
    }
    return out;
}

json rows_to_json(const tolspace_rows_t* rows) {
    json out = json::array();
    for (size_t r = 0; r < tolspace_rows_count(rows); ++r) {
        json row = json::array();
        for (size_t c = 0; c < tolspace_rows_width(rows, r); ++c) {
            row.push_back(tolspace_rows_get(rows, r, c));
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
    std::string out;
    for (size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (!part.empty()) out.push_back(part);
    }
    return out;
}

std::vector<const char*> c_view(const std::vector<std::string>& items) {
    std::vector<const char*> out;
    for (const auto& s : items) out.push_back(s.c_str());
    return out;
}

// One report per invocation: the text and JSON renderings share the content.
struct Report {
    std::string command;
    json params = json::object();
    json result = json::object();
    json witnesses = json::array();
    int exit_code = 0;
    std::string error;

    void fail_from(int status, std::string message) {
        exit_code = status;
        error = std::move(message);
    }

    int emit(bool as_json, const std::string& out_path) const {
        std::ostringstream body;
        if (as_json) {
            json doc = {{"command", command},
                        {"params", params},
                        {"result", result},
                        {"witnesses", witnesses},
                        {"status", exit_code == 0 ? "ok" : (exit_code == 1 ? "failed" : "error")},
                        {"exit_code", exit_code}};
            if (!error.empty()) doc["error"] = error;
            body << doc.dump(2) << "\n";
        } else {
            body << "command: " << command << "\n";
            for (auto it = params.begin(); it != params.end(); ++it) {
                body << "  " << it.key() << ": "
                     << (it.value().is_string() ? it.value().get<std::string>()
                                                : it.value().dump())
                     << "\n";
            }
            for (auto it = result.begin(); it != result.end(); ++it) {
                body << it.key() << ": "
                     << (it.value().is_string() ? it.value().get<std::string>()
                                                : it.value().dump())
                     << "\n";
            }
            for (const auto& w : witnesses) {
                body << "witness: " << (w.is_string() ? w.get<std::string>() : w.dump()) << "\n";
            }
            if (!error.empty()) body << "error: " << error << "\n";
            body << "status: " << (exit_code == 0 ? "ok" : (exit_code == 1 ? "failed" : "error"))
                 << "\n";
        }
        if (out_path.empty()) {
            std::cout << body.str();
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "cannot write to '" << out_path << "'\n";
                return 2;
            }
            out << body.str();
        }
        return exit_code;
    }
};

struct Common {
    std::string spec;
    std::string space;
    bool as_json = false;
    std::string out_path;
};

WorkspacePtr open_workspace(const Common& common, Report& report) {
    tolspace_workspace_t* ws = nullptr;
    char* err = nullptr;
    int status = tolspace_workspace_load(common.spec.c_str(), &ws, &err);
    if (status != TOLSPACE_OK) {
        report.fail_from(status, take_string(err));
        return nullptr;
    }
    return WorkspacePtr(ws);
}

void attach_class_result(Report& report, const char* key, const tolspace_strings_t* members) {
    auto ids = to_vector(members);
    report.result[key] = ids;
    report.result[std::string(key) + "_pretty"] = "{" + join(ids) + "}";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tolspace: level-indexed topology of finite tolerance continua"};
    app.require_subcommand(1);

    Common common;
    Report report;

    auto add_common = [&](CLI::App* cmd, bool needs_spec) {
        if (needs_spec) {
            cmd->add_option("--spec", common.spec, "space-spec file")->required();
            cmd->add_option("--space", common.space,
                            "continuum name (defaults to the file's only one)");
        }
        cmd->add_flag("--json", common.as_json, "machine-readable report");
        cmd->add_option("--out", common.out_path, "write the report to a file");
    };

    std::string cls, cls_y, position, seq_text, target, kind, op, p_str, q_str;
    std::string fn_name, fn_g, metric_name, metric_src, metric_dst, center, radius;
    std::string members_text, a_str, b_str, module_name = "all", check_what = "all", eps_text;
    int level = 0, budget = 0, depth = 0, iterations = 8;
    int src_level = 0, dst_level = 0;
    std::uint64_t seed = 0;

    // ---- validate ----
    auto* validate_cmd = app.add_subcommand("validate", "check the generating-sequence laws");
    add_common(validate_cmd, true);
    validate_cmd->callback([&] {
        report.command = "validate";
        auto ws = open_workspace(common, report);
        if (!ws) return;
        size_t count = 0;
        tolspace_space_count(ws.get(), &count, nullptr);
        json spaces = json::array();
        bool any_failed = false;
        for (size_t i = 0; i < count; ++i) {
            char* name_c = nullptr;
            tolspace_space_name(ws.get(), i, &name_c, nullptr);
            std::string name = take_string(name_c);
            if (!common.space.empty() && name != common.space) continue;
            int ok = 0;
            tolspace_rows_t* rows = nullptr;
            char* err = nullptr;
            int status = tolspace_validate(ws.get(), name.c_str(), &ok, &rows, &err);
            RowsPtr rows_guard(rows);
            if (status == TOLSPACE_BAD_INPUT) {
                report.fail_from(status, take_string(err));
                return;
            }
            tolspace_string_free(err);
            json entry = {{"space", name}, {"ok", ok == 1}};
            entry["violations"] = rows_to_json(rows);
            int side_ok = 0;
            tolspace_strings_t* witness = nullptr;
            tolspace_monad_discernibility(ws.get(), name.c_str(), &side_ok, &witness, nullptr);
            StringsPtr witness_guard(witness);
            entry["monad_discernibility"] = side_ok == 1;
            if (side_ok != 1) entry["monad_discernibility_witness"] = to_vector(witness);
            if (ok != 1) any_failed = true;
            spaces.push_back(std::move(entry));
        }
        report.result["spaces"] = spaces;
        // declared metrics are checked against the four axioms too
        size_t metric_count = 0;
        tolspace_metric_count(ws.get(), &metric_count, nullptr);
        json metrics = json::array();
        for (size_t i = 0; i < metric_count; ++i) {
            char* name_c = nullptr;
            tolspace_metric_name(ws.get(), i, &name_c, nullptr);
            std::string name = take_string(name_c);
            int ok = 0;
            tolspace_rows_t* rows = nullptr;
            tolspace_metric_validate(ws.get(), name.c_str(), &ok, &rows, nullptr);
            RowsPtr rows_guard(rows);
            json entry = {{"metric", name}, {"ok", ok == 1}};
            entry["violations"] = rows_to_json(rows);
            if (ok != 1) any_failed = true;
            metrics.push_back(std::move(entry));
        }
        if (!metrics.empty()) report.result["metrics"] = metrics;
        report.result["ok"] = !any_failed;
        if (any_failed) report.exit_code = 1;
    });

    // ---- closure / interior ----
    struct ClassLevelCmd {
        const char* name;
        const char* help;
        int (*fn)(const tolspace_workspace_t*, const char*, const char*, int,
                  tolspace_strings_t**, char**);
    };
    static const ClassLevelCmd class_level_cmds[] = {
        {"closure", "level-n closure (the level figure) of a class", tolspace_closure},
        {"interior", "level-n interior of a class", tolspace_interior},
    };
    for (const auto& cmd_spec : class_level_cmds) {
        auto* cmd = app.add_subcommand(cmd_spec.name, cmd_spec.help);
        add_common(cmd, true);
        cmd->add_option("--class", cls, "class name or {id,id,...}")->required();
        cmd->add_option("--level", level, "level n")->required();
        cmd->callback([&, cmd_spec] {
            report.command = cmd_spec.name;
            report.params = {{"class", cls}, {"level", level}};
            auto ws = open_workspace(common, report);
            if (!ws) return;
            tolspace_strings_t* out = nullptr;
            char* err = nullptr;
            int status =
                cmd_spec.fn(ws.get(), common.space.c_str(), cls.c_str(), level, &out, &err);
            StringsPtr guard(out);
            if (status != TOLSPACE_OK) {
                report.fail_from(status, take_string(err));
                return;
            }
            attach_class_result(report, "members", out);
        });
    }

    // ---- figure ----
    auto* figure_cmd = app.add_subcommand("figure", "saturation of a class under monads");
    add_common(figure_cmd, true);
    figure_cmd->add_option("--class", cls, "class name or {id,id,...}")->required();
    figure_cmd->callback([&] {
        report.command = "figure";
        report.params = {{"class", cls}};
        auto ws = open_workspace(common, report);
        if (!ws) return;
        tolspace_strings_t* out = nullptr;
        char* err = nullptr;
        int status = tolspace_figure_of(ws.get(), common.space.c_str(), cls.c_str(), &out, &err);
        StringsPtr guard(out);
        if (status != TOLSPACE_OK) {
            report.fail_from(status, take_string(err));
            return;
        }
        attach_class_result(report, "members", out);
        int is_fig = 0;
        tolspace_is_figure(ws.get(), common.space.c_str(), cls.c_str(), &is_fig, nullptr);
        report.result["input_is_figure"] = is_fig == 1;
    });

    // ---- monad ----
    auto* monad_cmd = app.add_subcommand("monad", "limit-partition block of a position");
    add_common(monad_cmd, true);
    monad_cmd->add_option("--pos", position, "position id")->required();
    monad_cmd->callback([&] {
        report.command = "monad";
        report.params = {{"pos", position}};
        auto ws = open_workspace(common, report);
        if (!ws) return;
        tolspace_strings_t* out = nullptr;
        char* err = nullptr;
        int status = tolspace_monad(ws.get(), common.space.c_str(), position.c_str(), &out, &err);
        StringsPtr guard(out);
        if (status != TOLSPACE_OK) {
            report.fail_from(status, take_string(err));
            return;
        }
        attach_class_result(report, "members", out);
    });

    // ---- sep ----
    auto* sep_cmd = app.add_subcommand("sep", "least level separating two classes");
    add_common(sep_cmd, true);
    sep_cmd->add_option("--x", cls, "first class")->required();
    sep_cmd->add_option("--y", cls_y, "second class")->required();
    sep_cmd->callback([&] {
        report.command = "sep";
        report.params = {{"x", cls}, {"y", cls_y}};
        auto ws = open_workspace(common, report);
        if (!ws) return;
        int separable = 0, lvl = -1;
        char* err = nullptr;
        int status = tolspace_separable(ws.get(), common.space.c_str(), cls.c_str(),
                                        cls_y.c_str(), &separable, &lvl, &err);
        if (status == TOLSPACE_BAD_INPUT) {
            report.fail_from(status, take_string(err));
            return;
        }
        tolspace_string_free(err);
        report.result["separable"] = separable == 1;
        if (separable == 1) report.result["level"] = lvl;
        report.exit_code = separable == 1 ? 0 : 1;
    });

    // ---- open / closed / clopen ----
    struct PredicateCmd {
        const char* name;
        const char* help;
        int (*fn)(const tolspace_workspace_t*, const char*, const char*, int, int*, char**);
    };
    static const PredicateCmd predicate_cmds[] = {
        {"open", "is the class open at a level", tolspace_is_open},
        {"closed", "is the class closed at a level", tolspace_is_closed},
        {"clopen", "is the class clopen at a level", tolspace_is_clopen},
    };
    for (const auto& cmd_spec : predicate_cmds) {
        auto* cmd = app.add_subcommand(cmd_spec.name, cmd_spec.help);
        add_common(cmd, true);
        cmd->add_option("--class", cls, "class name or {id,id,...}")->required();
        cmd->add_option("--level", level, "level n")->required();
        cmd->callback([&, cmd_spec] {
            report.command = cmd_spec.name;
            report.params = {{"class", cls}, {"level", level}};
            auto ws = open_workspace(common, report);
            if (!ws) return;
            int answer = 0;
            char* err = nullptr;
            int status =
                cmd_spec.fn(ws.get(), common.space.c_str(), cls.c_str(), level, &answer, &err);
            if (status == TOLSPACE_BAD_INPUT) {
                report.fail_from(status, take_string(err));
                return;
            }
            tolspace_string_free(err);
            report.result["answer"] = answer == 1;
            report.exit_code = answer == 1 ? 0 : 1;
        });
    }

    // ---- components ----
    auto* comp_cmd = app.add_subcommand("components", "connected components at a level");
    add_common(comp_cmd, true);
    comp_cmd->add_option("--class", cls, "class (defaults to the carrier)");
    comp_cmd->add_option("--level", level, "level n")->required();
    comp_cmd->callback([&] {
        report.command = "components";
        report.params = {{"class", cls.empty() ? "(carrier)" : cls}, {"level", level}};
        auto ws = open_workspace(common, report);
        if (!ws) return;
        tolspace_rows_t* rows = nullptr;
        char* err = nullptr;
        int status = tolspace_components(ws.get(), common.space.c_str(), cls.c_str(), level,
                                         &rows, &err);
        RowsPtr guard(rows);
        if (status != TOLSPACE_OK) {
            report.fail_from(status, take_string(err));
            return;
        }
        report.result["components"] = rows_to_json(rows);
        report.result["count"] = tolspace_rows_count(rows);
    });

    // ---- connected ----
    auto* conn_cmd = app.add_subcommand("connected", "is the class connected at a level");
    add_common(conn_cmd, true);
    conn_cmd->add_option("--class", cls, "class name or {id,id,...}")->required();
    conn_cmd->add_option("--level", level, "level n")->required();
    conn_cmd->callback([&] {
        report.command = "connected";
        report.params = {{"class", cls}, {"level", level}};
        auto ws = open_workspace(common, report);
        if (!ws) return;
        int answer = 0;
        tolspace_strings_t* witness = nullptr;
        char* err = nullptr;
        int status = tolspace_is_connected(ws.get(), common.space.c_str(), cls.c_str(), level,
                                           &answer, &witness, &err);
        StringsPtr guard(witness);
        if (status == TOLSPACE_BAD_INPUT) {
            report.fail_from(status, take_string(err));
            return;
        }
        tolspace_string_free(err);
        report.result["answer"] = answer == 1;
        if (answer != 1) {
            report.witnesses.push_back({{"split_component", to_vector(witness)}});
        }
        report.exit_code = answer == 1 ? 0 : 1;
    });

    // ---- motion ----
    auto* motion_cmd = app.add_subcommand("motion", "a motion whose trace is exactly the class");
    add_common(motion_cmd, true);
    motion_cmd->add_option("--class", cls, "connected class")->required();
    motion_cmd->add_option("--level", level, "level n")->required();
    motion_cmd->callback([&] {
        report.command = "motion";
        report.params = {{"class", cls}, {"level", level}};
        auto ws = open_workspace(common, report);
        if (!ws) return;
        tolspace_strings_t* out = nullptr;
        char* err = nullptr;
        int status = tolspace_motion_through(ws.get(), common.space.c_str(), cls.c_str(), level,
                                             &out, &err);
        StringsPtr guard(out);
        if (status != TOLSPACE_OK) {
            report.fail_from(status, take_string(err));
            return;
        }
        report.result["steps"] = to_vector(out);
    });

    // ---- net ----
    auto* net_cmd = app.add_subcommand("net", "greedy maximal net at a level");
    add_common(net_cmd, true);
    net_cmd->add_option("--class", cls, "class (defaults to the carrier)");
    net_cmd->add_option("--level", level, "level n")->required();
    net_cmd->callback([&] {
        report.command = "net";
        report.params = {{"class", cls.empty() ? "(carrier)" : cls}, {"level", level}};
        auto ws = open_workspace(common, report);
        if (!ws) return;
        tolspace_strings_t* out = nullptr;
        int maximal = 0;
        char* err = nullptr;
        int status = tolspace_maximal_net(ws.get(), common.space.c_str(), cls.c_str(), level,
                                          &out, &maximal, &err);
        StringsPtr guard(out);
        if (status != TOLSPACE_OK) {
            report.fail_from(status, take_string(err));
            return;
        }
        attach_class_result(report, "members", out);
        report.result["maximal"] = maximal == 1;
    });

    // ---- cluster ----
    auto* cluster_cmd =
        app.add_subcommand("cluster", "net member whose image holds most prefix terms");
    add_common(cluster_cmd, true);
    cluster_cmd->add_option("--seq", seq_text, "comma-separated position ids")->required();
    cluster_cmd->add_option("--level", level, "level n")->required();
    cluster_cmd->callback([&] {
        report.command = "cluster";
        report.params = {{"seq", seq_text}, {"level", level}};
        auto ws = open_workspace(common, report);
        if (!ws) return;
        auto terms = split_commas(seq_text);
        auto view = c_view(terms);
        char* member = nullptr;
        size_t count = 0;
        char* err = nullptr;
        int status = tolspace_cluster_position(ws.get(), common.space.c_str(), view.data(),
                                               view.size(), level, &member, &count, &err);
        if (status != TOLSPACE_OK) {
            report.fail_from(status, take_string(err));
            return;
        }
        report.result["member"] = take_string(member);
        report.result["count"] = count;
    });

    // ---- converge ----
    auto* conv_cmd = app.add_subcommand("converge", "certified convergence depth of a prefix");
    add_common(conv_cmd, true);
    conv_cmd->add_option("--seq", seq_text, "comma-separated position ids")->required();
    conv_cmd->add_option("--to", target, "target position")->required();
    conv_cmd->callback([&] {
        report.command = "converge";
        report.params = {{"seq", seq_text}, {"to", target}};
        auto ws = open_workspace(common, report);
        if (!ws) return;
        auto terms = split_commas(seq_text);
        auto view = c_view(terms);
        int certified = 0;
        char* err = nullptr;
        int status = tolspace_converges_to(ws.get(), common.space.c_str(), view.data(),
                                           view.size(), target.c_str(), &certified, &err);
        if (status != TOLSPACE_OK) {
            report.fail_from(status, take_string(err));
            return;
        }
        report.result["depth"] = certified;
    });

    // ---- accpoints ----
    auto* acc_cmd = app.add_subcommand("accpoints", "accumulation and isolation positions");
    add_common(acc_cmd, true);
    acc_cmd->add_option("--class", cls, "class name or {id,id,...}")->required();
    acc_cmd->add_option("--budget", budget, "level budget")->required();
    acc_cmd->callback([&] {
        report.command = "accpoints";
        report.params = {{"class", cls}, {"budget", budget}};
        auto ws = open_workspace(common, report);
        if (!ws) return;
        tolspace_strings_t* acc = nullptr;
        tolspace_strings_t* iso = nullptr;
        char* err = nullptr;
        int status = tolspace_accumulation_points(ws.get(), common.space.c_str(), cls.c_str(),
                                                  budget, &acc, &iso, &err);
        StringsPtr acc_guard(acc), iso_guard(iso);
        if (status != TOLSPACE_OK) {
            report.fail_from(status, take_string(err));
            return;
        }
        attach_class_result(report, "accumulation", acc);
        attach_class_result(report, "isolation", iso);
    });

    // ---- topology ----
    auto* topo_cmd = app.add_subcommand("topology", "all open classes at a level");
    add_common(topo_cmd, true);
    topo_cmd->add_option("--level", level, "level n")->required();
    topo_cmd->callback([&] {
        report.command = "topology";
        report.params = {{"level", level}};
        auto ws = open_workspace(common, report);
        if (!ws) return;
        tolspace_rows_t* rows = nullptr;
        char* err = nullptr;
        int status = tolspace_open_family(ws.get(), common.space.c_str(), level, &rows, &err);
        RowsPtr guard(rows);
        if (status != TOLSPACE_OK) {
            report.fail_from(status, take_string(err));
            return;
        }
        report.result["open_classes"] = rows_to_json(rows);
        report.result["count"] = tolspace_rows_count(rows);
    });

    // ---- real-lub ----
    auto* lub_cmd = app.add_subcommand("real-lub", "bisection least-upper-bound procedure");
    lub_cmd->add_option("--members", members_text, "comma-separated rationals")->required();
    lub_cmd->add_option("--a", a_str, "rational that is not an upper bound")->required();
    lub_cmd->add_option("--b", b_str, "rational upper bound")->required();
    lub_cmd->add_option("--iters", iterations, "bisection steps (default 8)");
    add_common(lub_cmd, false);
    lub_cmd->callback([&] {
        report.command = "real-lub";
        report.params = {{"members", members_text},
                         {"a", a_str},
                         {"b", b_str},
                         {"iters", iterations}};
        auto members = split_commas(members_text);
        auto view = c_view(members);
        char* out = nullptr;
        char* err = nullptr;
        int status = tolspace_lub(view.data(), view.size(), a_str.c_str(), b_str.c_str(),
                                  iterations, &out, &err);
        if (status != TOLSPACE_OK) {
            report.fail_from(status, take_string(err));
            return;
        }
        report.result["value"] = take_string(out);
    });

    // ---- real-interval ----
    auto* interval_cmd =
        app.add_subcommand("real-interval", "interval class on a grid continuum");
    add_common(interval_cmd, true);
    interval_cmd->add_option("--a", a_str, "left endpoint (on the grid)")->required();
    interval_cmd->add_option("--b", b_str, "right endpoint (on the grid)")->required();
    interval_cmd
        ->add_option("--kind", kind, "open | closed | half-open-left | half-open-right")
        ->required();
    interval_cmd->add_option("--level", level, "level n")->required();
    interval_cmd->callback([&] {
        report.command = "real-interval";
        report.params = {{"a", a_str}, {"b", b_str}, {"kind", kind}, {"level", level}};
        auto ws = open_workspace(common, report);
        if (!ws) return;
        tolspace_strings_t* out = nullptr;
        char* err = nullptr;
        int status = tolspace_interval(ws.get(), common.space.c_str(), a_str.c_str(),
                                       b_str.c_str(), kind.c_str(), level, &out, &err);
        StringsPtr guard(out);
        if (status != TOLSPACE_OK) {
            report.fail_from(status, take_string(err));
            return;
        }
        attach_class_result(report, "members", out);
    });

    // ---- real-arith ----
    auto* arith_cmd = app.add_subcommand("real-arith", "exact monad arithmetic and order");
    arith_cmd->add_option("--op", op, "add | mul | neg | le | eq")->required();
    arith_cmd->add_option("--p", p_str, "first rational")->required();
    arith_cmd->add_option("--q", q_str, "second rational (unused for neg)");
    arith_cmd->add_option("--level", level, "level for eq");
    add_common(arith_cmd, false);
    arith_cmd->callback([&] {
        report.command = "real-arith";
        report.params = {{"op", op}, {"p", p_str}};
        if (!q_str.empty()) report.params["q"] = q_str;
        if (op == "eq") report.params["level"] = level;
        char* out = nullptr;
        char* err = nullptr;
        int status = tolspace_real_arith(op.c_str(), p_str.c_str(),
                                         q_str.empty() ? nullptr : q_str.c_str(), level, &out,
                                         &err);
        if (status == TOLSPACE_BAD_INPUT) {
            report.fail_from(status, take_string(err));
            return;
        }
        tolspace_string_free(err);
        report.result["value"] = take_string(out);
        report.exit_code = status;
    });

    // ---- ball ----
    auto* ball_cmd = app.add_subcommand("ball", "metric ball evaluated to a depth");
    add_common(ball_cmd, true);
    ball_cmd->add_option("--metric", metric_name, "declared metric name")->required();
    ball_cmd->add_option("--center", center, "center position id")->required();
    ball_cmd->add_option("--radius", radius, "positive rational radius")->required();
    ball_cmd->add_option("--depth", depth, "union depth")->required();
    ball_cmd->callback([&] {
        report.command = "ball";
        report.params = {{"metric", metric_name},
                         {"center", center},
                         {"radius", radius},
                         {"depth", depth}};
        auto ws = open_workspace(common, report);
        if (!ws) return;
        tolspace_strings_t* out = nullptr;
        char* err = nullptr;
        int status = tolspace_ball(ws.get(), metric_name.c_str(), center.c_str(), radius.c_str(),
                                   depth, &out, &err);
        StringsPtr guard(out);
        if (status != TOLSPACE_OK) {
            report.fail_from(status, take_string(err));
            return;
        }
        attach_class_result(report, "members", out);
    });

    // ---- morphism-modulus ----
    auto* mod_cmd =
        app.add_subcommand("morphism-modulus", "moduli of continuity per target level");
    add_common(mod_cmd, true);
    mod_cmd->add_option("--fn", fn_name, "declared function name")->required();
    mod_cmd->callback([&] {
        report.command = "morphism-modulus";
        report.params = {{"fn", fn_name}};
        auto ws = open_workspace(common, report);
        if (!ws) return;
        tolspace_rows_t* rows = nullptr;
        int uniform = 0;
        char* err = nullptr;
        int status = tolspace_modulus(ws.get(), fn_name.c_str(), &rows, &uniform, &err);
        RowsPtr guard(rows);
        if (status != TOLSPACE_OK) {
            report.fail_from(status, take_string(err));
            return;
        }
        report.result["modulus"] = rows_to_json(rows);
        report.result["uniformly_continuous"] = uniform == 1;
    });

    // ---- morphism-check ----
    auto* check_cmd = app.add_subcommand("morphism-check", "continuity checks for a function");
    add_common(check_cmd, true);
    check_cmd->add_option("--fn", fn_name, "declared function name")->required();
    check_cmd->add_option("--src-level", src_level, "source level n1")->required();
    check_cmd->add_option("--dst-level", dst_level, "target level n2")->required();
    check_cmd->add_option(
        "--check", check_what,
        "all | preserves | connected | open | closed | uniform | epsdelta | equal");
    check_cmd->add_option("--with", fn_g, "second function for --check equal");
    check_cmd->add_option("--eps", eps_text, "comma-separated epsilons for epsdelta");
    check_cmd->add_option("--metric-src", metric_src, "source metric (default absdiff)");
    check_cmd->add_option("--metric-dst", metric_dst, "target metric (default absdiff)");
    check_cmd->callback([&] {
        report.command = "morphism-check";
        report.params = {{"fn", fn_name},
                         {"src_level", src_level},
                         {"dst_level", dst_level},
                         {"check", check_what}};
        auto ws = open_workspace(common, report);
        if (!ws) return;
        bool all = check_what == "all";
        bool failed = false;
        auto note = [&](const std::string& key, int status, json payload) {
            report.result[key] = std::move(payload);
            if (status == TOLSPACE_FAILED) failed = true;
        };
        char* err = nullptr;
        if (all || check_what == "preserves") {
            int ok = 0;
            int status = tolspace_preserves_at(ws.get(), fn_name.c_str(), src_level, dst_level,
                                               &ok, &err);
            if (status == TOLSPACE_BAD_INPUT) {
                report.fail_from(status, take_string(err));
                return;
            }
            tolspace_string_free(err);
            err = nullptr;
            note("preserves_at", status, ok == 1);
        }
        if (all || check_what == "connected") {
            int ok = 0;
            tolspace_strings_t* witness = nullptr;
            int status = tolspace_preserves_connected(ws.get(), fn_name.c_str(), src_level,
                                                      dst_level, &ok, &witness, &err);
            StringsPtr guard(witness);
            if (status == TOLSPACE_BAD_INPUT) {
                report.fail_from(status, take_string(err));
                return;
            }
            tolspace_string_free(err);
            err = nullptr;
            note("preserves_connected", status, ok == 1);
            if (ok != 1) report.witnesses.push_back({{"edge", to_vector(witness)}});
        }
        if (all || check_what == "open") {
            int ok = 0;
            tolspace_strings_t* witness = nullptr;
            int status = tolspace_preimage_open_check(ws.get(), fn_name.c_str(), src_level,
                                                      dst_level, &ok, &witness, &err);
            StringsPtr guard(witness);
            if (status == TOLSPACE_BAD_INPUT) {
                report.fail_from(status, take_string(err));
                return;
            }
            tolspace_string_free(err);
            err = nullptr;
            note("preimage_open", status, ok == 1);
            if (ok != 1) report.witnesses.push_back({{"open_class", to_vector(witness)}});
        }
        if (all || check_what == "closed") {
            int ok = 0;
            tolspace_strings_t* witness = nullptr;
            int status = tolspace_preimage_closed_check(ws.get(), fn_name.c_str(), src_level,
                                                        dst_level, &ok, &witness, &err);
            StringsPtr guard(witness);
            if (status == TOLSPACE_BAD_INPUT) {
                report.fail_from(status, take_string(err));
                return;
            }
            tolspace_string_free(err);
            err = nullptr;
            note("preimage_closed", status, ok == 1);
            if (ok != 1) report.witnesses.push_back({{"closed_figure", to_vector(witness)}});
        }
        if (all || check_what == "uniform") {
            tolspace_rows_t* rows = nullptr;
            int uniform = 0;
            int status = tolspace_modulus(ws.get(), fn_name.c_str(), &rows, &uniform, &err);
            RowsPtr guard(rows);
            if (status != TOLSPACE_OK) {
                report.fail_from(status, take_string(err));
                return;
            }
            note("uniformly_continuous", uniform == 1 ? TOLSPACE_OK : TOLSPACE_FAILED,
                 uniform == 1);
        }
        if ((all && !eps_text.empty()) || check_what == "epsdelta") {
            if (eps_text.empty()) eps_text = "1/2";
            auto eps = split_commas(eps_text);
            auto view = c_view(eps);
            int ok = 0;
            tolspace_rows_t* rows = nullptr;
            int status = tolspace_epsilon_delta(ws.get(), fn_name.c_str(), metric_src.c_str(),
                                                metric_dst.c_str(), view.data(), view.size(),
                                                &ok, &rows, &err);
            RowsPtr guard(rows);
            if (status == TOLSPACE_BAD_INPUT) {
                report.fail_from(status, take_string(err));
                return;
            }
            tolspace_string_free(err);
            err = nullptr;
            note("epsilon_delta", status, rows_to_json(rows));
            report.result["epsilon_delta_ok"] = ok == 1;
        }
        if (check_what == "equal") {
            int ok = 0;
            int status = tolspace_functions_equal_at(ws.get(), fn_name.c_str(), fn_g.c_str(),
                                                     dst_level, &ok, &err);
            if (status == TOLSPACE_BAD_INPUT) {
                report.fail_from(status, take_string(err));
                return;
            }
            tolspace_string_free(err);
            err = nullptr;
            note("functions_equal_at", status, ok == 1);
        }
        if (failed) report.exit_code = 1;
    });

    // ---- morphism-push ----
    auto* push_cmd = app.add_subcommand("morphism-push", "push a motion through a function");
    add_common(push_cmd, true);
    push_cmd->add_option("--fn", fn_name, "declared function name")->required();
    push_cmd->add_option("--seq", seq_text, "comma-separated source positions")->required();
    push_cmd->add_option("--src-level", src_level, "source motion level")->required();
    push_cmd->add_option("--dst-level", dst_level, "target level to validate at")->required();
    push_cmd->callback([&] {
        report.command = "morphism-push";
        report.params = {{"fn", fn_name},
                         {"seq", seq_text},
                         {"src_level", src_level},
                         {"dst_level", dst_level}};
        auto ws = open_workspace(common, report);
        if (!ws) return;
        auto steps = split_commas(seq_text);
        auto view = c_view(steps);
        int ok = 0;
        tolspace_strings_t* image = nullptr;
        char* err = nullptr;
        int status = tolspace_push_motion(ws.get(), fn_name.c_str(), view.data(), view.size(),
                                          src_level, dst_level, &ok, &image, &err);
        StringsPtr guard(image);
        if (status == TOLSPACE_BAD_INPUT) {
            report.fail_from(status, take_string(err));
            return;
        }
        report.result["ok"] = ok == 1;
        report.result["image"] = to_vector(image);
        if (status == TOLSPACE_FAILED) {
            report.error = take_string(err);
            report.exit_code = 1;
        } else {
            tolspace_string_free(err);
        }
    });

    // ---- export-dot ----
    auto* dot_cmd = app.add_subcommand("export-dot", "emit the level graphs as DOT text");
    add_common(dot_cmd, true);
    int dot_level = -1;
    dot_cmd->add_option("--level", dot_level, "one level (default: every level)");
    dot_cmd->callback([&] {
        report.command = "export-dot";
        auto ws = open_workspace(common, report);
        if (!ws) return;
        char* out = nullptr;
        char* err = nullptr;
        int status = tolspace_export_dot(ws.get(), common.space.c_str(), dot_level, &out, &err);
        if (status != TOLSPACE_OK) {
            report.fail_from(status, take_string(err));
            return;
        }
        std::string text = take_string(out);
        if (common.as_json) {
            report.result["dot"] = text;
        } else {
            // raw DOT so the output pipes straight into graphviz
            if (common.out_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream file(common.out_path);
                file << text;
            }
            report.command.clear(); // suppress the report frame
        }
    });

    // ---- suite ----
    auto* suite_cmd = app.add_subcommand("suite", "run the built-in verification suites");
    suite_cmd->add_option("--module", module_name,
                          "core|figures|graded|connectivity|real|metric|morphism|cli|all");
    suite_cmd->add_option("--seed", seed, "seed for randomized checks (default fixed)");
    add_common(suite_cmd, false);
    suite_cmd->callback([&] {
        report.command = "suite";
        report.params = {{"module", module_name}};
        tolspace_rows_t* rows = nullptr;
        int failures = 0;
        char* err = nullptr;
        std::uint64_t use_seed = suite_cmd->count("--seed") ? seed : 20240811ULL;
        report.params["seed"] = use_seed;
        int status = tolspace_suite_run(module_name.c_str(), use_seed, &rows, &failures, &err);
        RowsPtr guard(rows);
        if (status == TOLSPACE_BAD_INPUT) {
            report.fail_from(status, take_string(err));
            return;
        }
        tolspace_string_free(err);
        report.result["checks"] = rows_to_json(rows);
        report.result["failures"] = failures;
        if (!common.as_json) {
            for (size_t r = 0; r < tolspace_rows_count(rows); ++r) {
                std::printf("[%s] %s (%s, criterion %s): %s\n", tolspace_rows_get(rows, r, 3),
                            tolspace_rows_get(rows, r, 0), tolspace_rows_get(rows, r, 1),
                            tolspace_rows_get(rows, r, 2), tolspace_rows_get(rows, r, 4));
            }
            std::printf("%d check(s) failed\n", failures);
            report.command.clear(); // the per-check lines are the report
        }
        report.exit_code = failures == 0 ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // malformed command line
    }

    if (report.command.empty()) return report.exit_code; // raw-output commands
    return report.emit(common.as_json, common.out_path);
}
