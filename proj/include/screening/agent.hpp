#pragma once

#include "screening/contract.hpp"
#include "screening/cost_model.hpp"
#include "screening/params.hpp"

namespace screening {

// Constant effort maximizing slope*theta_k*mu - c(mu), i.e.
// mu* = (c')^{-1}(slope * theta_k). Throws BracketError when the maximizer
// exceeds params.mu_max (the effort bound would bind and the interior FOC is
// invalid) and std::domain_error on a negative slope.
double best_response_effort(const CostModel& cost, const ModelParams& params,
                            const LinearContract& contract, AgentType k);

// Effort a type-k agent exerts on the contract that implements constant mu_m
// for type m: c'(mu^{k,m}) = (theta_k / theta_m) c'(mu_m). Returns mu_m
// exactly when k == m; throws BracketError when the result exceeds mu_max.
double imitation_effort(const CostModel& cost, const ModelParams& params, double mu_m,
                        AgentType k, AgentType m);

// The H-type's certainty-equivalent surplus over w_L when taking an
// L-contract that implements constant mu_L:
//   phi(mu_L) = [c'(m)m - c(m)]_{m = mu^{H,L}} - [c'(mu_L)mu_L - c(mu_L)].
// Nonnegative, zero only at mu_L = 0, strictly increasing.
double rent_integrand(const CostModel& cost, const ModelParams& params, double mu_L);

// Contract implementing constant effort mu with certainty equivalent w for a
// type-k agent:
//   slope     = c'(mu) / theta_k
//   intercept = w + c(mu) - c'(mu) mu + (rho/2) slope^2 sigma^2
LinearContract build_contract(const CostModel& cost, const ModelParams& params, double mu,
                              double w, AgentType k);

// Exact CARA certainty equivalent of type k under the contract, evaluated at
// the agent's best response:
//   CE = intercept + slope theta_k mu* - c(mu*) - (rho/2) slope^2 sigma^2.
CertaintyEquivalent certainty_equivalent(const CostModel& cost, const ModelParams& params,
                                         const LinearContract& contract, AgentType k);

namespace detail {

// c'(mu) mu - c(mu); strictly positive and increasing on mu > 0.
double effort_gain(const CostModel& cost, double mu);

// Imitation map and rent kernel without the mu_max feasibility check. Solver
// residuals evaluate these at trial efforts whose imitation image may
// transiently exceed the bracket; feasibility is enforced on final solutions.
double imitation_effort_unbounded(const CostModel& cost, const ModelParams& params, double mu_m,
                                  AgentType k, AgentType m);
double rent_integrand_unbounded(const CostModel& cost, const ModelParams& params, double mu_L);

}  // namespace detail

}  // namespace screening
