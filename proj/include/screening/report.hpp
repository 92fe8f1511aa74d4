#pragma once

#include <string>

#include "screening/config.hpp"
#include "screening/verifier.hpp"

namespace screening {

// Machine-readable serialization. Doubles are emitted with shortest
// round-trip precision, so re-reading a report reproduces the exact values.
std::string menu_to_json(const ContractMenu& menu);

// Accepts either a bare menu object or a full solve report (the "menu" key).
ContractMenu menu_from_json(const std::string& text);

std::string solve_report_to_json(const SolveReport& report, const RunConfig& cfg);
std::string audit_report_to_json(const AuditReport& report, const McSettings& mc,
                                 const DpSettings& dp);

// Human-readable tables, 6 significant digits. The machine output is
// authoritative.
std::string format_solve_table(const SolveReport& report);
std::string format_audit_table(const AuditReport& report);
std::string format_ce_estimate(AgentType agent, AgentType contract, double effort,
                               const CeEstimate& est, const McSettings& mc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace screening
