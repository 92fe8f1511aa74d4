#include "screening/agent.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "screening/errors.hpp"

namespace screening {

namespace detail {

double effort_gain(const CostModel& cost, double mu) {
    return cost.marginal_cost(mu) * mu - cost.cost(mu);
}

double imitation_effort_unbounded(const CostModel& cost, const ModelParams& params, double mu_m,
                                  AgentType k, AgentType m) {
    if (!(mu_m >= 0.0))
        throw std::domain_error("imitation effort requires mu_m >= 0, got " + std::to_string(mu_m));
    if (k == m) return mu_m;
    const double ratio = params.theta(k) / params.theta(m);
    return cost.marginal_cost_inverse(ratio * cost.marginal_cost(mu_m));
}

double rent_integrand_unbounded(const CostModel& cost, const ModelParams& params, double mu_L) {
    const double mu_HL = imitation_effort_unbounded(cost, params, mu_L, AgentType::H, AgentType::L);
    return effort_gain(cost, mu_HL) - effort_gain(cost, mu_L);
}

}  // namespace detail

double best_response_effort(const CostModel& cost, const ModelParams& params,
                            const LinearContract& contract, AgentType k) {
    if (!(contract.slope >= 0.0))
        throw std::domain_error("best response requires a nonnegative slope, got " +
                                std::to_string(contract.slope));
    const double y = contract.slope * params.theta(k);
    if (y > cost.marginal_cost(params.mu_max))
        throw BracketError("best-response effort exceeds mu_max = " + std::to_string(params.mu_max) +
                           "; the effort bound binds and the interior FOC is invalid");
    return cost.marginal_cost_inverse(y);
}

double imitation_effort(const CostModel& cost, const ModelParams& params, double mu_m,
                        AgentType k, AgentType m) {
    const double mu = detail::imitation_effort_unbounded(cost, params, mu_m, k, m);
    if (mu > params.mu_max)
        throw BracketError("imitation effort " + std::to_string(mu) + " exceeds mu_max = " +
                           std::to_string(params.mu_max));
    return mu;
}

double rent_integrand(const CostModel& cost, const ModelParams& params, double mu_L) {
    const double mu_HL = imitation_effort(cost, params, mu_L, AgentType::H, AgentType::L);
    return detail::effort_gain(cost, mu_HL) - detail::effort_gain(cost, mu_L);
}

LinearContract build_contract(const CostModel& cost, const ModelParams& params, double mu,
                              double w, AgentType k) {
    if (!(mu >= 0.0 && mu <= params.mu_max))
        throw std::domain_error("contract effort must lie in [0, mu_max], got " + std::to_string(mu));
    const double theta = params.theta(k);
    const double slope = cost.marginal_cost(mu) / theta;
    const double risk_premium = 0.5 * params.rho * slope * slope * params.sigma * params.sigma;
    const double intercept = w + cost.cost(mu) - cost.marginal_cost(mu) * mu + risk_premium;
    return LinearContract{slope, intercept, k};
}

CertaintyEquivalent certainty_equivalent(const CostModel& cost, const ModelParams& params,
                                         const LinearContract& contract, AgentType k) {
    const double mu = best_response_effort(cost, params, contract, k);
    const double risk_premium =
        0.5 * params.rho * contract.slope * contract.slope * params.sigma * params.sigma;
    const double value =
        contract.intercept + contract.slope * params.theta(k) * mu - cost.cost(mu) - risk_premium;
    return CertaintyEquivalent{value, k, contract.designed_for};
}

}  // namespace screening
