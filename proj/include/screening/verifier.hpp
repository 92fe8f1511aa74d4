#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "screening/solver.hpp"

namespace screening {

struct McSettings {
    std::int64_t n_paths = 100000;
    int n_steps = 50;
    std::uint64_t seed = 12345;
};

struct DpSettings {
    int n_steps = 50;
    double effort_grid_step = 1e-3;
};

// One simulated output path on [0, 1]: z[i] accumulates
// mu theta dt + sigma dW per step.
struct SimPath {
    std::uint64_t seed = 0;
    std::uint64_t path_index = 0;
    double dt = 0.0;
    std::vector<double> dW;  // Gaussian increments, variance dt
    std::vector<double> z;   // realized output, z[0] = 0, size n_steps + 1
};

SimPath simulate_path(const ModelParams& params, AgentType k, double mu, int n_steps,
                      std::uint64_t seed, std::uint64_t path_index);

struct CeEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

// Monte Carlo certainty equivalent of a type-k agent holding constant effort
// mu under the contract: CE = -ln(mean e^{-rho X})/rho over simulated
// terminal payoffs X, with a delta-method standard error. Deterministic in
// (seed, n_paths, n_steps) regardless of worker count.
CeEstimate simulate_ce(const CostModel& cost, const ModelParams& params,
                       const LinearContract& contract, AgentType k, double mu,
                       const McSettings& mc);

// Effort plan on the discrete time grid. For affine contracts the per-step
// problem is state-independent, so one effort per step suffices.
struct EffortPolicy {
    std::vector<double> effort_by_step;
    double grid_step = 0.0;
};

struct DpResult {
    EffortPolicy policy;
    double value_ce = 0.0;
};

// Discrete-time backward induction of the agent's best response over an
// effort grid on [0, mu_max]. CARA utility makes the per-step certainty
// equivalent additive for affine contracts, so no state grid is needed and
// the optimal plan comes out constant.
DpResult dp_best_response(const CostModel& cost, const ModelParams& params,
                          const LinearContract& contract, AgentType k, const DpSettings& dp);

struct AuditCheck {
    std::string name;
    bool pass = false;
    double value = 0.0;
    double tolerance = 0.0;
};

// One (agent type, contract) pairing evaluated three ways.
struct AuditRow {
    AgentType agent = AgentType::H;
    AgentType contract = AgentType::H;
    double br_effort = 0.0;  // closed-form best response
    double ce_closed = 0.0;
    double ce_mc = 0.0;
    double ce_mc_se = 0.0;
    double ce_dp = 0.0;
    double dp_effort = 0.0;
};

struct AuditReport {
    std::vector<AuditRow> rows;
    double pc_L_slack = 0.0;
    double pc_H_slack = 0.0;
    double icc_H_slack = 0.0;
    double icc_L_slack = 0.0;
    double rent_ordering = 0.0;  // CE(H on L contract) - CE(L on L contract)
    std::vector<AuditCheck> checks;
    bool all_pass = false;
};

// Recomputes every constraint from the menu's contracts (stored slacks are
// not trusted), cross-checks closed-form certainty equivalents against the
// Monte Carlo and DP oracles, and flags any binding slack off by more than
// the binding tolerance. Failures are report entries, not exceptions.
AuditReport audit_menu(const CostModel& cost, const ModelParams& params, const ContractMenu& menu,
                       const McSettings& mc, const DpSettings& dp,
                       const SolverSettings& settings = {});

}  // namespace screening
