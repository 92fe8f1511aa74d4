#include "screening/cost_model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace screening {

namespace {

void require_nonnegative(double v, const char* what) {
    if (!(v >= 0.0))
        throw std::domain_error(std::string(what) + " must be nonnegative, got " + std::to_string(v));
}

}  // namespace

CostModel CostModel::quadratic(double kappa) {
    if (!(kappa > 0.0))
        throw std::invalid_argument("cost scale kappa must be positive, got " + std::to_string(kappa));
    return CostModel{CostFamily::Quadratic, kappa, 2.0};
}

CostModel CostModel::power(double kappa, double p) {
    if (!(kappa > 0.0))
        throw std::invalid_argument("cost scale kappa must be positive, got " + std::to_string(kappa));
    // p in (2, 3) has an unbounded third derivative at zero effort.
    if (!(p == 2.0 || p >= 3.0))
        throw std::invalid_argument("power exponent must lie in {2} U [3, inf), got " + std::to_string(p));
    return CostModel{CostFamily::Power, kappa, p};
}

double CostModel::cost(double mu) const {
    require_nonnegative(mu, "effort");
    if (family == CostFamily::Quadratic) return 0.5 * kappa * mu * mu;
    return kappa * std::pow(mu, p) / p;
}

double CostModel::marginal_cost(double mu) const {
    require_nonnegative(mu, "effort");
    if (family == CostFamily::Quadratic) return kappa * mu;
    return kappa * std::pow(mu, p - 1.0);
}

double CostModel::marginal_cost_inverse(double y) const {
    require_nonnegative(y, "marginal cost");
    if (family == CostFamily::Quadratic) return y / kappa;
    return std::pow(y / kappa, 1.0 / (p - 1.0));
}

double CostModel::second_derivative(double mu) const {
    require_nonnegative(mu, "effort");
    if (family == CostFamily::Quadratic) return kappa;
    return kappa * (p - 1.0) * std::pow(mu, p - 2.0);
}

double CostModel::third_derivative(double mu) const {
    require_nonnegative(mu, "effort");
    if (family == CostFamily::Quadratic) return 0.0;
    if (p == 2.0) return 0.0;
    if (mu == 0.0 && p < 3.0)
        throw std::domain_error("third derivative unbounded at zero effort for p < 3");
    return kappa * (p - 1.0) * (p - 2.0) * std::pow(mu, p - 3.0);
}

}  // namespace screening
