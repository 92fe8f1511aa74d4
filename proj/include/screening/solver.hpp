#pragma once

#include <optional>
#include <string>
#include <vector>

#include "screening/agent.hpp"

namespace screening {

// Which constraints pin the menu. PchSlack: the H-type participation
// constraint is strictly satisfied and the L effort solves the rent-distorted
// FOC. PchBinding: the H-type participation constraint holds with equality
// and the L effort solves rent(mu) = w_H - w_L. LTypeExcluded: no admissible
// L contract; the menu carries only the H contract at its second best.
enum class Regime { PchSlack, PchBinding, LTypeExcluded };

const char* label(Regime r);

struct SolverSettings {
    double root_tol = 1e-12;     // absolute tolerance on effort roots
    double residual_tol = 1e-9;  // max acceptable |FOC residual| at a solution
    double binding_tol = 1e-8;   // slack magnitude classified as binding
};

// Solved menu. Slacks are own-contract certainty equivalents minus the
// relevant bound (reservation value for PC, cross-contract value for ICC);
// nonnegative means satisfied, zero means binding. In every two-contract
// menu pc_L_slack and icc_H_slack are zero to tolerance.
struct ContractMenu {
    LinearContract contract_H;
    LinearContract contract_L;
    double mu_H_star = 0.0;
    double mu_L_star = 0.0;
    double mu_HL_star = 0.0;  // H-type's effort when imitating the L contract
    double ce_H_offered = 0.0;
    double ce_L_offered = 0.0;
    Regime regime = Regime::PchSlack;
    double icc_H_slack = 0.0;
    double icc_L_slack = 0.0;
    double pc_H_slack = 0.0;
    double pc_L_slack = 0.0;
};

struct SolveReport {
    ContractMenu menu;
    double principal_profit = 0.0;
    double rent = 0.0;  // ce_H_offered - w_H
    double mu_H_second_best = 0.0;
    double mu_L_second_best = 0.0;
    double foc_residual_H = 0.0;
    double foc_residual_L = 0.0;
    std::vector<std::string> notes;
};

// Root of c'(mu) (1 + (rho sigma^2 / theta_k^2) c''(mu)) = theta_k on
// [0, mu_max]: the profit-maximizing constant effort for type k absent
// adverse selection.
double second_best_effort(const CostModel& cost, const ModelParams& params, AgentType k,
                          const SolverSettings& settings = {});

// L-type effort when the H-type participation constraint is slack: the root
// of the rent-distorted FOC
//   c'(mu) (1 + (rho sigma^2/theta_L^2) c''(mu)) - theta_L
//     + (alpha/(1-alpha)) (theta_H/theta_L) c''(mu) (mu^{H,L}(mu) - (theta_L/theta_H) mu) = 0,
// where the distortion term uses the chain-rule identity
// c''(mu^{H,L}) mu^{H,L} d(mu^{H,L})/d(mu) = (theta_H/theta_L) c''(mu) mu^{H,L}.
// Returns nullopt when no admissible interior solution exists (the implied
// net marginal product is nonpositive), in which case the L-type is excluded.
std::optional<double> effort_L_pch_slack(const CostModel& cost, const ModelParams& params,
                                         const SolverSettings& settings = {});

// L-type effort when the H-type participation constraint binds: the unique
// root of rent(mu) = w_H - w_L. Requires w_H >= w_L; returns 0 at equality.
double effort_L_pch_binding(const CostModel& cost, const ModelParams& params,
                            const SolverSettings& settings = {});

// Solves the full menu problem in the H-imitation regime. Throws
// RegimeUnsupportedError when the solved menu would leave the L-type
// preferring the H contract, BracketError when an effort bound binds.
SolveReport solve(const CostModel& cost, const ModelParams& params,
                  const SolverSettings& settings = {});

// Expected profit of a feasible menu implementing (mu_H, mu_L) with the
// L-type held at w_L and the H-type at ce_H:
//   alpha (mu_H theta_H - ce_H - c(mu_H) - risk_H)
//     + (1-alpha) (mu_L theta_L - w_L - c(mu_L) - risk_L).
double menu_profit(const CostModel& cost, const ModelParams& params, double mu_H, double mu_L,
                   double ce_H);

}  // namespace screening
