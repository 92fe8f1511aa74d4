#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "screening/cost_model.hpp"
#include "screening/params.hpp"
#include "screening/solver.hpp"
#include "screening/verifier.hpp"

namespace screening {

struct SweepSpec {
    std::string parameter;  // one of: alpha, w_H, w_L, theta_H, sigma, rho
    double from = 0.0;
    double to = 0.0;
    int steps = 0;
};

struct RunConfig {
    ModelParams params;
    CostModel cost;
    SolverSettings solver;
    McSettings verify_mc;
    DpSettings verify_dp;
    std::optional<SweepSpec> sweep;
};

// Carries every validation problem found in a config, not just the first.
struct ConfigError : std::runtime_error {
    explicit ConfigError(std::vector<std::string> problems);
    std::vector<std::string> issues;
};

// Parses a JSON config and validates every field. Unknown fields are
// rejected; all problems are collected before throwing ConfigError.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

}  // namespace screening
