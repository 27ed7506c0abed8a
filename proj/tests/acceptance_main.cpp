// Acceptance gate: one line per numbered criterion. Criteria 1..9 run the
// library's built-in verification suites; criterion 10 drives the installed
// CLI binary and round-trips the shipped fixture files.

#include "tolspace/spacespec.hpp"
#include "tolspace/suites.hpp"

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifndef TOLSPACE_CLI_PATH
#define TOLSPACE_CLI_PATH "tolspace"
#endif
#ifndef TOLSPACE_FIXTURE_DIR
#define TOLSPACE_FIXTURE_DIR "fixtures"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(TOLSPACE_CLI_PATH) + " " + args + " 2>&1";
    RunResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buffer{};
    size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), got);
    }
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string fixture(const std::string& name) {
    return std::string(TOLSPACE_FIXTURE_DIR) + "/" + name;
}

struct Clause {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CriterionReport {
    int number = 0;
    std::vector<Clause> clauses;
    bool pass() const {
        for (const auto& c : clauses) {
            if (!c.pass) return false;
        }
        return true;
    }
};

void print_report(const CriterionReport& report) {
    std::printf("criterion %2d: %s\n", report.number, report.pass() ? "PASS" : "FAIL");
    for (const auto& clause : report.clauses) {
        std::printf("    [%s] %s%s%s\n", clause.pass ? "pass" : "FAIL", clause.name.c_str(),
                    clause.detail.empty() ? "" : " -- ", clause.detail.c_str());
    }
}

CriterionReport from_suite(int number, std::uint64_t seed) {
    CriterionReport report;
    report.number = number;
    for (const auto& check : tolspace::suites::run_criterion(number, seed)) {
        report.clauses.push_back({check.id, check.pass, check.detail});
    }
    return report;
}

CriterionReport criterion10() {
    using nlohmann::json;
    CriterionReport report;
    report.number = 10;
    auto clause = [&](const std::string& name, bool pass, const std::string& detail = "") {
        report.clauses.push_back({name, pass, detail});
    };

    // file round trips over every shipped (well-formed) fixture
    {
        const char* files[] = {"e1.space",        "e2.space",       "realgrid.space",
                               "paper_literal_real.space", "metric_grid.space",
                               "morphisms.space", "clusters.space"};
        bool all_ok = true;
        std::string failing;
        for (const char* file : files) {
            try {
                tolspace::Workspace ws = tolspace::load_workspace(fixture(file));
                std::string printed = tolspace::print_workspace(ws);
                tolspace::Workspace again = tolspace::parse_workspace(printed);
                if (!tolspace::semantically_equal(ws, again) ||
                    tolspace::print_workspace(again) != printed) {
                    all_ok = false;
                    failing = file;
                }
            } catch (const std::exception& e) {
                all_ok = false;
                failing = std::string(file) + ": " + e.what();
            }
        }
        clause("fixture round trips (load -> print -> load)", all_ok, failing);
    }

    // exit-code contract
    {
        RunResult ok = run_cli("validate --spec " + fixture("e1.space"));
        clause("validate e1.space exits 0", ok.exit_code == 0);

        RunResult closure = run_cli("closure --spec " + fixture("e1.space") +
                                    " --class X0 --level 2 --json");
        bool closure_ok = closure.exit_code == 0;
        std::string closure_detail;
        if (closure_ok) {
            auto doc = json::parse(closure.output, nullptr, false);
            closure_ok = !doc.is_discarded() &&
                         doc["result"]["members"] == json::array({"0", "1"});
            if (!closure_ok) closure_detail = closure.output;
        }
        clause("closure X0 at level 2 is {0,1}", closure_ok, closure_detail);

        RunResult literal = run_cli("validate --spec " + fixture("paper_literal_real.space"));
        clause("paper-literal family loads but validate exits 1",
               literal.exit_code == 1 &&
                   literal.output.find("composition") != std::string::npos &&
                   literal.output.find("48") != std::string::npos);

        RunResult malformed = run_cli("validate --spec " + fixture("asymmetric_pairs.space"));
        clause("asymmetric pair list exits 2 with a symmetry witness",
               malformed.exit_code == 2 &&
                   malformed.output.find("converse") != std::string::npos);

        RunResult missing = run_cli("validate --spec " + fixture("no_such_file.space"));
        clause("missing spec file exits 2", missing.exit_code == 2);

        RunResult lub = run_cli("real-lub --members 1/3 --a 0 --b 1 --iters 8");
        clause("real-lub prints 43/128 and exits 0",
               lub.exit_code == 0 && lub.output.find("43/128") != std::string::npos);

        RunResult sep = run_cli("sep --spec " + fixture("e1.space") + " --x X0 --y X2");
        clause("inseparable classes exit 1", sep.exit_code == 1);

        RunResult dot = run_cli("export-dot --spec " + fixture("e1.space") + " --level 2");
        clause("export-dot emits the level-2 path graph",
               dot.exit_code == 0 && dot.output.find("\"0\" -- \"1\"") != std::string::npos &&
                   dot.output.find("\"3\" -- \"4\"") != std::string::npos);

        RunResult usage = run_cli("closure --spec " + fixture("e1.space"));
        clause("missing required flags exit 2", usage.exit_code == 2);

        RunResult monad = run_cli("monad --spec " + fixture("clusters.space") + " --pos 1 --json");
        bool monad_ok = monad.exit_code == 0;
        if (monad_ok) {
            auto doc = json::parse(monad.output, nullptr, false);
            monad_ok = !doc.is_discarded() &&
                       doc["result"]["members"] == json::array({"63/64", "1", "65/64"});
        }
        clause("monad of 1 on the cluster fixture is its finest component", monad_ok);

        RunResult push = run_cli("morphism-push --spec " + fixture("morphisms.space") +
                                 " --fn step_small --seq 0,1/8,1/4,3/8 --src-level 1"
                                 " --dst-level 1");
        clause("pushing a motion across the step cutoff exits 1", push.exit_code == 1);

        RunResult converge = run_cli("converge --spec " + fixture("e1.space") +
                                     " --seq 0,4,0,4 --to 0 --json");
        bool conv_ok = converge.exit_code == 0;
        if (conv_ok) {
            auto doc = json::parse(converge.output, nullptr, false);
            conv_ok = !doc.is_discarded() && doc["result"]["depth"] == 0;
        }
        clause("alternating prefixes certify only depth 0", conv_ok);

        RunResult suite_bad = run_cli("suite --module bogus");
        clause("unknown suite module exits 2", suite_bad.exit_code == 2);
    }

    // suite all: runs criteria 1..9 through the CLI and must exit 0
    {
        RunResult suite = run_cli("suite --module all");
        std::string detail;
        if (suite.exit_code != 0) {
            std::istringstream lines(suite.output);
            std::string line;
            while (std::getline(lines, line)) {
                if (line.rfind("[FAIL]", 0) == 0) detail += line + " ";
            }
        }
        clause("`suite --module all` exits 0", suite.exit_code == 0, detail);
    }
    return report;
}

} // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = tolspace::suites::default_seed;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);

    int failures = 0;
    for (int criterion = 1; criterion <= 9; ++criterion) {
        CriterionReport report = from_suite(criterion, seed);
        print_report(report);
        if (!report.pass()) ++failures;
    }
    CriterionReport cli_report = criterion10();
    print_report(cli_report);
    if (!cli_report.pass()) ++failures;

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
