#include "screening/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace screening {

namespace {

using nlohmann::json;

json contract_to_json(const LinearContract& c) {
    return json{{"slope", c.slope}, {"intercept", c.intercept}, {"designed_for", label(c.designed_for)}};
}

LinearContract contract_from_json(const json& j) {
    LinearContract c;
    c.slope = j.at("slope").get<double>();
    c.intercept = j.at("intercept").get<double>();
    const std::string tag = j.at("designed_for").get<std::string>();
    if (tag != "H" && tag != "L") throw std::runtime_error("bad designed_for tag: " + tag);
    c.designed_for = tag == "H" ? AgentType::H : AgentType::L;
    return c;
}

Regime regime_from_string(const std::string& s) {
    if (s == "pch_slack") return Regime::PchSlack;
    if (s == "pch_binding") return Regime::PchBinding;
    if (s == "l_type_excluded") return Regime::LTypeExcluded;
    throw std::runtime_error("bad regime tag: " + s);
}

json menu_to_json_obj(const ContractMenu& m) {
    return json{{"regime", label(m.regime)},
                {"contract_H", contract_to_json(m.contract_H)},
                {"contract_L", contract_to_json(m.contract_L)},
                {"mu_H_star", m.mu_H_star},
                {"mu_L_star", m.mu_L_star},
                {"mu_HL_star", m.mu_HL_star},
                {"ce_H_offered", m.ce_H_offered},
                {"ce_L_offered", m.ce_L_offered},
                {"slacks",
                 json{{"pc_L", m.pc_L_slack},
                      {"pc_H", m.pc_H_slack},
                      {"icc_H", m.icc_H_slack},
                      {"icc_L", m.icc_L_slack}}}};
}

ContractMenu menu_from_json_obj(const json& j) {
    ContractMenu m;
    m.regime = regime_from_string(j.at("regime").get<std::string>());
    m.contract_H = contract_from_json(j.at("contract_H"));
    m.contract_L = contract_from_json(j.at("contract_L"));
    m.mu_H_star = j.at("mu_H_star").get<double>();
    m.mu_L_star = j.at("mu_L_star").get<double>();
    m.mu_HL_star = j.at("mu_HL_star").get<double>();
    m.ce_H_offered = j.at("ce_H_offered").get<double>();
    m.ce_L_offered = j.at("ce_L_offered").get<double>();
    const json& s = j.at("slacks");
    m.pc_L_slack = s.at("pc_L").get<double>();
    m.pc_H_slack = s.at("pc_H").get<double>();
    m.icc_H_slack = s.at("icc_H").get<double>();
    m.icc_L_slack = s.at("icc_L").get<double>();
    return m;
}

const char* family_name(CostFamily f) {
    return f == CostFamily::Quadratic ? "quadratic" : "power";
}

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

std::string menu_to_json(const ContractMenu& menu) { return menu_to_json_obj(menu).dump(2) + "\n"; }

ContractMenu menu_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (j.contains("menu")) return menu_from_json_obj(j.at("menu"));
    return menu_from_json_obj(j);
}

std::string solve_report_to_json(const SolveReport& report, const RunConfig& cfg) {
    json j;
    j["cost"] = json{{"family", family_name(cfg.cost.family)}, {"kappa", cfg.cost.kappa},
                     {"p", cfg.cost.p}};
    j["params"] = json{{"theta_L", cfg.params.theta_L}, {"theta_H", cfg.params.theta_H},
                       {"rho", cfg.params.rho},         {"sigma", cfg.params.sigma},
                       {"alpha", cfg.params.alpha},     {"w_L", cfg.params.w_L},
                       {"w_H", cfg.params.w_H},         {"mu_max", cfg.params.mu_max}};
    j["menu"] = menu_to_json_obj(report.menu);
    j["rent"] = report.rent;
    j["principal_profit"] = report.principal_profit;
    j["second_best_efforts"] = json{{"H", report.mu_H_second_best}, {"L", report.mu_L_second_best}};
    j["foc_residuals"] = json{{"H", report.foc_residual_H}, {"L", report.foc_residual_L}};
    j["notes"] = report.notes;
    return j.dump(2) + "\n";
}

std::string audit_report_to_json(const AuditReport& report, const McSettings& mc,
                                 const DpSettings& dp) {
    json j;
    j["settings"] = json{{"n_paths", mc.n_paths},
                         {"n_steps", mc.n_steps},
                         {"seed", mc.seed},
                         {"dp_steps", dp.n_steps},
                         {"effort_grid", dp.effort_grid_step}};
    json rows = json::array();
    for (const AuditRow& r : report.rows)
        rows.push_back(json{{"agent", label(r.agent)},
                            {"contract", label(r.contract)},
                            {"br_effort", r.br_effort},
                            {"ce_closed", r.ce_closed},
                            {"ce_mc", r.ce_mc},
                            {"ce_mc_se", r.ce_mc_se},
                            {"ce_dp", r.ce_dp},
                            {"dp_effort", r.dp_effort}});
    j["rows"] = rows;
    j["slacks"] = json{{"pc_L", report.pc_L_slack},
                       {"pc_H", report.pc_H_slack},
                       {"icc_H", report.icc_H_slack},
                       {"icc_L", report.icc_L_slack}};
    j["rent_ordering"] = report.rent_ordering;
    json checks = json::array();
    for (const AuditCheck& c : report.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"value", c.value},
                              {"tolerance", c.tolerance}});
    j["checks"] = checks;
    j["all_pass"] = report.all_pass;
    return j.dump(2) + "\n";
}

std::string format_solve_table(const SolveReport& report) {
    const ContractMenu& m = report.menu;
    std::ostringstream out;
    out << "regime: " << label(m.regime) << "\n";
    char line[160];
    std::snprintf(line, sizeof(line), "%-10s %10s %10s %12s %12s\n", "contract", "effort", "slope",
                  "intercept", "CE offered");
    out << line;
    std::snprintf(line, sizeof(line), "%-10s %10s %10s %12s %12s\n", "H",
                  fmt6(m.mu_H_star).c_str(), fmt6(m.contract_H.slope).c_str(),
                  fmt6(m.contract_H.intercept).c_str(), fmt6(m.ce_H_offered).c_str());
    out << line;
    if (m.regime != Regime::LTypeExcluded) {
        std::snprintf(line, sizeof(line), "%-10s %10s %10s %12s %12s\n", "L",
                      fmt6(m.mu_L_star).c_str(), fmt6(m.contract_L.slope).c_str(),
                      fmt6(m.contract_L.intercept).c_str(), fmt6(m.ce_L_offered).c_str());
        out << line;
        out << "slacks: pc_L=" << fmt6(m.pc_L_slack) << " pc_H=" << fmt6(m.pc_H_slack)
            << " icc_H=" << fmt6(m.icc_H_slack) << " icc_L=" << fmt6(m.icc_L_slack) << "\n";
    }
    out << "rent: " << fmt6(report.rent) << "  profit: " << fmt6(report.principal_profit)
        << "  second best (H, L): (" << fmt6(report.mu_H_second_best) << ", "
        << fmt6(report.mu_L_second_best) << ")\n";
    for (const std::string& note : report.notes) out << "note: " << note << "\n";
    return out.str();
}

std::string format_audit_table(const AuditReport& report) {
    std::ostringstream out;
    char line[200];
    std::snprintf(line, sizeof(line), "%-8s %-8s %12s %12s %12s %12s %10s\n", "agent", "contract",
                  "ce_closed", "ce_mc", "ce_mc_se", "ce_dp", "dp_effort");
    out << line;
    for (const AuditRow& r : report.rows) {
        std::snprintf(line, sizeof(line), "%-8s %-8s %12s %12s %12s %12s %10s\n", label(r.agent),
                      label(r.contract), fmt6(r.ce_closed).c_str(), fmt6(r.ce_mc).c_str(),
                      fmt6(r.ce_mc_se).c_str(), fmt6(r.ce_dp).c_str(), fmt6(r.dp_effort).c_str());
        out << line;
    }
    out << "checks:\n";
    for (const AuditCheck& c : report.checks) {
        std::snprintf(line, sizeof(line), "  %-32s %s  (value %s, tol %s)\n", c.name.c_str(),
                      c.pass ? "PASS" : "FAIL", fmt6(c.value).c_str(), fmt6(c.tolerance).c_str());
        out << line;
    }
    out << (report.all_pass ? "audit: all checks passed\n" : "audit: FAILURES present\n");
    return out.str();
}

std::string format_ce_estimate(AgentType agent, AgentType contract, double effort,
                               const CeEstimate& est, const McSettings& mc) {
    std::ostringstream out;
    out << "CE[" << label(agent) << " on " << label(contract) << "-contract, effort "
        << fmt6(effort) << "] = " << fmt6(est.value) << " +/- " << fmt6(est.std_error)
        << "  (paths " << mc.n_paths << ", steps " << mc.n_steps << ", seed " << mc.seed << ")\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << contents;
}

}  // namespace screening
