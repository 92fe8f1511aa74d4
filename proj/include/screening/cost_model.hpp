#pragma once

namespace screening {

enum class CostFamily { Quadratic, Power };

// Effort-cost family c(mu) with analytic derivatives and the inverse marginal
// cost. Both families satisfy c(0) = 0, c' > 0 and c'' > 0 on mu > 0, and
// c''' >= 0 everywhere. The power exponent is restricted to {2} U [3, inf) so
// that c''' stays finite at mu = 0.
//
//   Quadratic(kappa):  c(mu) = kappa mu^2 / 2
//   Power(kappa, p):   c(mu) = kappa mu^p / p
struct CostModel {
    CostFamily family = CostFamily::Quadratic;
    double kappa = 1.0;  // scale, utility units per effort^p
    double p = 2.0;      // exponent; fixed at 2 for Quadratic

    static CostModel quadratic(double kappa);
    static CostModel power(double kappa, double p);

    double cost(double mu) const;                  // c(mu)
    double marginal_cost(double mu) const;         // c'(mu)
    double marginal_cost_inverse(double y) const;  // mu with c'(mu) = y
    double second_derivative(double mu) const;     // c''(mu)
    double third_derivative(double mu) const;      // c'''(mu)
};

}  // namespace screening
