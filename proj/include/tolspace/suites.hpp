#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tolspace::suites {

struct CheckResult {
    std::string id;
    std::string module;  // core | figures | graded | connectivity | real | metric | morphism | cli
    int criterion = 0;   // acceptance criterion number, 0 for module extras
    bool pass = false;
    std::string detail;
};

inline constexpr std::uint64_t default_seed = 20240811;

std::vector<std::string> module_names();

/// Runs one module's property suite ("all" runs every module).
std::vector<CheckResult> run_module(const std::string& module, std::uint64_t seed);
std::vector<CheckResult> run_all(std::uint64_t seed);
/// The checks backing one numbered acceptance criterion (1..9).
std::vector<CheckResult> run_criterion(int criterion, std::uint64_t seed);

} // namespace tolspace::suites
