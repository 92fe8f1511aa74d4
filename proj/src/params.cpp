#include "screening/params.hpp"

#include <cmath>

namespace screening {

std::vector<std::string> validate(const ModelParams& p) {
    std::vector<std::string> issues;
    if (!(p.theta_L > 0.0)) issues.push_back("theta_L must be positive");
    if (!(p.theta_H > p.theta_L))
        issues.push_back("theta_H must exceed theta_L (got theta_H = " + std::to_string(p.theta_H) +
                         ", theta_L = " + std::to_string(p.theta_L) + ")");
    if (!(p.rho > 0.0)) issues.push_back("rho must be positive");
    if (!(p.sigma > 0.0)) issues.push_back("sigma must be positive");
    if (!(p.alpha > 0.0 && p.alpha < 1.0)) issues.push_back("alpha must lie strictly in (0, 1)");
    if (!(p.mu_max > 0.0)) issues.push_back("mu_max must be positive");
    if (!std::isfinite(p.w_L) || !std::isfinite(p.w_H))
        issues.push_back("reservation certainty equivalents must be finite");
    return issues;
}

}  // namespace screening
