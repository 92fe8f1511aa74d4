#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "screening/config.hpp"

namespace screening {

// Process exit codes shared by the CLI and the tests.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigInvalid = 2;
inline constexpr int kExitRegimeUnsupported = 3;
inline constexpr int kExitNumeric = 4;
inline constexpr int kExitAuditFailed = 5;

struct CmdOptions {
    std::string config_path;
    std::optional<std::string> out_path;
    std::optional<std::string> menu_path;  // verify: audit this menu file instead of solving
    std::optional<std::int64_t> n_paths;
    std::optional<int> n_steps;
    std::optional<std::uint64_t> seed;
    std::optional<char> sim_type;      // simulate: 'H' or 'L'
    std::optional<char> sim_contract;  // simulate: 'H' or 'L'
    std::optional<double> sim_effort;  // simulate: defaults to the best response
    bool quiet = false;                // suppress stdout tables (tests)
};

int cmd_solve(const CmdOptions& opts);
int cmd_sweep(const CmdOptions& opts);
int cmd_verify(const CmdOptions& opts);
int cmd_simulate(const CmdOptions& opts);

}  // namespace screening
