#pragma once

#include <string>
#include <vector>

namespace screening {

enum class AgentType { H, L };

inline const char* label(AgentType t) { return t == AgentType::H ? "H" : "L"; }
inline AgentType other(AgentType t) { return t == AgentType::H ? AgentType::L : AgentType::H; }

// Economy parameters. theta_k is output drift per unit effort, rho the CARA
// coefficient, sigma the output volatility, alpha the probability of meeting
// an H-type, w_k the type-k reservation certainty equivalent. mu_max bounds
// every effort bracket used in root-finding.
struct ModelParams {
    double theta_L = 1.0;
    double theta_H = 1.2;
    double rho = 1.0;
    double sigma = 1.0;
    double alpha = 0.5;
    double w_L = 0.0;
    double w_H = 0.0;
    double mu_max = 10.0;

    double theta(AgentType t) const { return t == AgentType::H ? theta_H : theta_L; }
};

// Returns one message per violated constraint, empty when the parameters are
// admissible. Enforced at config-parse time; library operations themselves
// tolerate the degenerate theta_H == theta_L limit.
std::vector<std::string> validate(const ModelParams& p);

}  // namespace screening
