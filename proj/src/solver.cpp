#include "screening/solver.hpp"

#include <cmath>
#include <stdexcept>

#include "screening/errors.hpp"
#include "screening/root_finding.hpp"

namespace screening {

namespace {

double second_best_residual(const CostModel& cost, const ModelParams& params, AgentType k,
                            double mu) {
    const double theta = params.theta(k);
    const double noise = params.rho * params.sigma * params.sigma / (theta * theta);
    return cost.marginal_cost(mu) * (1.0 + noise * cost.second_derivative(mu)) - theta;
}

// Rent-distortion part of the PCH-slack FOC; grows from 0 with mu.
double distortion_term(const CostModel& cost, const ModelParams& params, double mu) {
    const double ratio = params.theta_H / params.theta_L;
    const double weight = params.alpha / (1.0 - params.alpha);
    const double mu_HL =
        detail::imitation_effort_unbounded(cost, params, mu, AgentType::H, AgentType::L);
    return weight * ratio * cost.second_derivative(mu) * (mu_HL - mu / ratio);
}

double pch_slack_residual(const CostModel& cost, const ModelParams& params, double mu) {
    return second_best_residual(cost, params, AgentType::L, mu) + distortion_term(cost, params, mu);
}

double risk_premium(const CostModel& cost, const ModelParams& params, double mu, AgentType k) {
    const double slope = cost.marginal_cost(mu) / params.theta(k);
    return 0.5 * params.rho * slope * slope * params.sigma * params.sigma;
}

}  // namespace

const char* label(Regime r) {
    switch (r) {
        case Regime::PchSlack: return "pch_slack";
        case Regime::PchBinding: return "pch_binding";
        case Regime::LTypeExcluded: return "l_type_excluded";
    }
    return "?";
}

double second_best_effort(const CostModel& cost, const ModelParams& params, AgentType k,
                          const SolverSettings& settings) {
    auto resid = [&](double mu) { return second_best_residual(cost, params, k, mu); };
    // resid(0) = -theta_k < 0
    if (resid(params.mu_max) < 0.0)
        throw BracketError("second-best FOC for type " + std::string(label(k)) +
                           " has no root in [0, mu_max]; raise mu_max");
    const RootResult r = find_root(resid, 0.0, params.mu_max, settings.root_tol, settings.residual_tol);
    if (std::abs(r.residual) > settings.residual_tol)
        throw NumericError("second-best FOC residual " + std::to_string(r.residual) +
                           " above tolerance");
    return r.root;
}

std::optional<double> effort_L_pch_slack(const CostModel& cost, const ModelParams& params,
                                         const SolverSettings& settings) {
    auto resid = [&](double mu) { return pch_slack_residual(cost, params, mu); };
    // resid(0) = -theta_L < 0
    if (resid(params.mu_max) < 0.0)
        throw BracketError("distorted L-type FOC has no root in [0, mu_max]; raise mu_max");
    const RootResult r = find_root(resid, 0.0, params.mu_max, settings.root_tol, settings.residual_tol);
    if (std::abs(r.residual) > settings.residual_tol)
        throw NumericError("distorted L-type FOC residual " + std::to_string(r.residual) +
                           " above tolerance");
    // Exclusion proviso: the net marginal product implied by the FOC must be
    // positive at the solution, otherwise no interior L contract exists. For
    // the shipped cost families this cannot trigger (the residual at 0 is
    // -theta_L, so any root has a positive numerator); kept as a guard.
    const double numerator = params.theta_L - distortion_term(cost, params, r.root);
    if (numerator <= 0.0) return std::nullopt;
    return r.root;
}

double effort_L_pch_binding(const CostModel& cost, const ModelParams& params,
                            const SolverSettings& settings) {
    const double gap = params.w_H - params.w_L;
    if (gap < 0.0)
        throw std::domain_error("effort_L_pch_binding requires w_H >= w_L");
    if (gap == 0.0) return 0.0;
    auto resid = [&](double mu) {
        return detail::rent_integrand_unbounded(cost, params, mu) - gap;
    };
    if (resid(params.mu_max) < 0.0)
        throw BracketError("reservation gap w_H - w_L = " + std::to_string(gap) +
                           " exceeds the rent attainable within [0, mu_max]");
    const RootResult r = find_root(resid, 0.0, params.mu_max, settings.root_tol, settings.residual_tol);
    if (std::abs(r.residual) > settings.residual_tol)
        throw NumericError("rent-matching residual " + std::to_string(r.residual) +
                           " above tolerance");
    return r.root;
}

double menu_profit(const CostModel& cost, const ModelParams& params, double mu_H, double mu_L,
                   double ce_H) {
    const double profit_H =
        mu_H * params.theta_H - ce_H - cost.cost(mu_H) - risk_premium(cost, params, mu_H, AgentType::H);
    const double profit_L = mu_L * params.theta_L - params.w_L - cost.cost(mu_L) -
                            risk_premium(cost, params, mu_L, AgentType::L);
    return params.alpha * profit_H + (1.0 - params.alpha) * profit_L;
}

SolveReport solve(const CostModel& cost, const ModelParams& params,
                  const SolverSettings& settings) {
    SolveReport report;
    const double mu_H = second_best_effort(cost, params, AgentType::H, settings);
    report.mu_H_second_best = mu_H;
    report.mu_L_second_best = second_best_effort(cost, params, AgentType::L, settings);
    report.foc_residual_H = std::abs(second_best_residual(cost, params, AgentType::H, mu_H));

    ContractMenu menu;
    menu.mu_H_star = mu_H;

    const std::optional<double> candidate = effort_L_pch_slack(cost, params, settings);
    if (!candidate) {
        menu.regime = Regime::LTypeExcluded;
        menu.ce_H_offered = params.w_H;
        menu.contract_H = build_contract(cost, params, mu_H, params.w_H, AgentType::H);
        menu.pc_H_slack = 0.0;
        report.menu = menu;
        report.rent = 0.0;
        report.foc_residual_L = 0.0;
        report.principal_profit =
            params.alpha * (mu_H * params.theta_H - params.w_H - cost.cost(mu_H) -
                            risk_premium(cost, params, mu_H, AgentType::H));
        report.notes.push_back(
            "L-type excluded: the distorted FOC admits no interior solution; "
            "the menu carries only the H contract at its second-best effort.");
        return report;
    }

    double mu_L = *candidate;
    if (params.w_L + detail::rent_integrand_unbounded(cost, params, mu_L) >= params.w_H) {
        menu.regime = Regime::PchSlack;
        menu.ce_H_offered = params.w_L + detail::rent_integrand_unbounded(cost, params, mu_L);
        report.foc_residual_L = std::abs(pch_slack_residual(cost, params, mu_L));
    } else {
        menu.regime = Regime::PchBinding;
        mu_L = effort_L_pch_binding(cost, params, settings);
        menu.ce_H_offered = params.w_H;
        report.foc_residual_L =
            std::abs(detail::rent_integrand_unbounded(cost, params, mu_L) - (params.w_H - params.w_L));
    }

    const double mu_HL =
        detail::imitation_effort_unbounded(cost, params, mu_L, AgentType::H, AgentType::L);
    if (mu_HL > params.mu_max)
        throw BracketError("the H-type's imitation effort " + std::to_string(mu_HL) +
                           " exceeds mu_max; raise mu_max");

    menu.mu_L_star = mu_L;
    menu.mu_HL_star = mu_HL;
    menu.ce_L_offered = params.w_L;
    menu.contract_L = build_contract(cost, params, mu_L, params.w_L, AgentType::L);
    menu.contract_H = build_contract(cost, params, mu_H, menu.ce_H_offered, AgentType::H);

    const double ce_L_on_L = certainty_equivalent(cost, params, menu.contract_L, AgentType::L).value;
    const double ce_H_on_H = certainty_equivalent(cost, params, menu.contract_H, AgentType::H).value;
    const double ce_H_on_L = certainty_equivalent(cost, params, menu.contract_L, AgentType::H).value;
    const double ce_L_on_H = certainty_equivalent(cost, params, menu.contract_H, AgentType::L).value;
    menu.pc_L_slack = ce_L_on_L - params.w_L;
    menu.pc_H_slack = ce_H_on_H - params.w_H;
    menu.icc_H_slack = ce_H_on_H - ce_H_on_L;
    menu.icc_L_slack = ce_L_on_L - ce_L_on_H;

    if (menu.icc_L_slack < -settings.binding_tol)
        throw RegimeUnsupportedError(
            "the L-type prefers the H contract (icc_L_slack = " + std::to_string(menu.icc_L_slack) +
            "); the reservation gap puts the menu in the reversed imitation regime");

    report.menu = menu;
    report.rent = menu.ce_H_offered - params.w_H;
    report.principal_profit = menu_profit(cost, params, mu_H, mu_L, menu.ce_H_offered);
    if (mu_L > report.mu_L_second_best + settings.binding_tol)
        report.notes.push_back(
            "binding H-type participation pushes the L effort above its second best");
    return report;
}

}  // namespace screening
