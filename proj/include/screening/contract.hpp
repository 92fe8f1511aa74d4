#pragma once

#include "screening/params.hpp"

namespace screening {

// Affine terminal-output sharing rule: the agent is paid
// intercept + slope * Z_1 at time 1.
struct LinearContract {
    double slope = 0.0;      // payment per unit terminal output
    double intercept = 0.0;  // fixed payment, utility units
    AgentType designed_for = AgentType::L;
};

// Money-metric value of a (type, contract) pairing under the agent's optimal
// response.
struct CertaintyEquivalent {
    double value = 0.0;
    AgentType agent = AgentType::L;
    AgentType contract = AgentType::L;  // designed_for tag of the evaluated contract
};

}  // namespace screening
