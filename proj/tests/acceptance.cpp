// Acceptance suite: every release gate in one binary, one line per
// criterion. Frozen expected values were recomputed independently with a
// scalar calculator before being asserted here.

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "screening/commands.hpp"
#include "screening/report.hpp"
#include "screening/rng.hpp"
#include "screening/solver.hpp"
#include "screening/verifier.hpp"

using namespace screening;
namespace fs = std::filesystem;

namespace {

const CostModel kQuad = CostModel::quadratic(1.0);

// Independently derived closed forms for the quadratic benchmark
// (theta_L = 1, theta_H = 1.2, rho = sigma = 1, alpha = 0.5, w_L = w_H = 0).
constexpr double kMuH = 0.70819672131147541;   // theta_H / (1 + rho sigma^2 / theta_H^2)
constexpr double kMuL = 0.40983606557377049;   // theta_L / (1 + rho sigma^2 + (a/(1-a)) 0.44)
constexpr double kRent = 0.036952432141897339; // 0.22 * kMuL^2

ModelParams benchmark_params() {
    ModelParams p;
    p.theta_L = 1.0;
    p.theta_H = 1.2;
    p.rho = 1.0;
    p.sigma = 1.0;
    p.alpha = 0.5;
    p.w_L = 0.0;
    p.w_H = 0.0;
    p.mu_max = 10.0;
    return p;
}

// Admissible parameter draw. Reservation values are filled separately where
// a criterion needs them inside the H-imitation regime.
ModelParams draw_params(SplitMix64& gen) {
    ModelParams p;
    p.theta_L = 0.5 + 1.5 * gen.uniform01();
    p.theta_H = p.theta_L * (1.02 + 0.98 * gen.uniform01());
    p.rho = 0.1 + 1.9 * gen.uniform01();
    p.sigma = 0.25 + 1.75 * gen.uniform01();
    p.alpha = 0.005 + 0.945 * gen.uniform01();
    p.mu_max = 50.0;
    return p;
}

CostModel draw_cost(SplitMix64& gen, int index) {
    if (index % 2 == 0) return CostModel::quadratic(0.5 + 1.5 * gen.uniform01());
    return CostModel::power(0.5 + 1.5 * gen.uniform01(), (index % 4 == 1) ? 3.0 : 4.0);
}

struct Criterion {
    std::string description;
    std::function<bool(std::string&)> run;
};

bool expect(bool ok, std::string& detail, const std::string& on_fail) {
    if (!ok && detail.empty()) detail = on_fail;
    return ok;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

// Menus solved anywhere in this run; criterion 4 audits them all.
std::vector<ContractMenu> g_solved_menus;

SolveReport solve_tracked(const CostModel& cost, const ModelParams& params) {
    SolveReport rep = solve(cost, params);
    g_solved_menus.push_back(rep.menu);
    return rep;
}

bool criterion_closed_form(std::string& detail) {
    const SolveReport rep = solve_tracked(kQuad, benchmark_params());
    bool ok = true;
    ok &= expect(std::abs(rep.menu.mu_H_star - kMuH) <= 1e-8, detail,
                 "mu_H = " + fmt(rep.menu.mu_H_star) + " expected " + fmt(kMuH));
    ok &= expect(std::abs(rep.menu.mu_L_star - kMuL) <= 1e-8, detail,
                 "mu_L = " + fmt(rep.menu.mu_L_star) + " expected " + fmt(kMuL));
    ok &= expect(std::abs(rep.rent - kRent) <= 1e-8, detail,
                 "rent = " + fmt(rep.rent) + " expected " + fmt(kRent));
    if (ok)
        detail = "mu_H " + fmt(rep.menu.mu_H_star) + ", mu_L " + fmt(rep.menu.mu_L_star) +
                 ", rent " + fmt(rep.rent);
    return ok;
}

bool criterion_distortion(std::string& detail) {
    SplitMix64 gen(20240601);
    int strict_checked = 0;
    for (int i = 0; i < 50; ++i) {
        const ModelParams p = draw_params(gen);
        const CostModel cost = draw_cost(gen, i);
        const auto mu = effort_L_pch_slack(cost, p);
        if (!expect(mu.has_value(), detail, "draw " + std::to_string(i) + ": no interior solution"))
            return false;
        const double sb = second_best_effort(cost, p, AgentType::L);
        if (!expect(*mu <= sb + 1e-10, detail,
                    "draw " + std::to_string(i) + ": mu_L " + fmt(*mu) + " above second best " +
                        fmt(sb)))
            return false;
        if (p.alpha >= 0.01) {
            ++strict_checked;
            if (!expect(*mu < sb, detail,
                        "draw " + std::to_string(i) + ": distortion not strict at alpha " +
                            fmt(p.alpha)))
                return false;
        }
    }
    detail = "50 draws, " + std::to_string(strict_checked) + " strict";
    return true;
}

bool criterion_orderings(std::string& detail) {
    SplitMix64 gen(20240602);
    for (int i = 0; i < 100; ++i) {
        const ModelParams p = draw_params(gen);
        const CostModel cost = draw_cost(gen, i);
        const double mu = 1e-6 + 2.0 * gen.uniform01();
        const double mu_HL = imitation_effort(cost, p, mu, AgentType::H, AgentType::L);
        const double mu_LH = imitation_effort(cost, p, mu, AgentType::L, AgentType::H);
        const double rent = rent_integrand(cost, p, mu);
        if (!expect(mu_HL > mu, detail, "draw " + std::to_string(i) + ": mu_HL <= mu_L")) return false;
        if (!expect(mu_LH < mu, detail, "draw " + std::to_string(i) + ": mu_LH >= mu_H")) return false;
        if (!expect(rent > 0.0, detail, "draw " + std::to_string(i) + ": rent not positive"))
            return false;
    }
    detail = "100 draws";
    return true;
}

bool criterion_binding_audit(std::string& detail) {
    for (size_t i = 0; i < g_solved_menus.size(); ++i) {
        const ContractMenu& m = g_solved_menus[i];
        if (m.regime == Regime::LTypeExcluded) continue;
        bool ok = true;
        ok &= std::abs(m.pc_L_slack) <= 1e-8;
        ok &= std::abs(m.icc_H_slack) <= 1e-8;
        ok &= m.icc_L_slack >= -1e-8;
        ok &= m.pc_H_slack >= -1e-8;
        if (!expect(ok, detail,
                    "menu " + std::to_string(i) + ": slacks pc_L " + fmt(m.pc_L_slack) +
                        ", icc_H " + fmt(m.icc_H_slack) + ", icc_L " + fmt(m.icc_L_slack) +
                        ", pc_H " + fmt(m.pc_H_slack)))
            return false;
    }
    detail = std::to_string(g_solved_menus.size()) + " solved menus audited";
    return true;
}

bool criterion_roundtrip(std::string& detail) {
    const ModelParams p = benchmark_params();
    for (const CostModel& cost : {CostModel::quadratic(1.0), CostModel::power(1.0, 3.0)}) {
        for (AgentType k : {AgentType::H, AgentType::L}) {
            for (int i = 0; i < 10; ++i) {
                for (int j = 0; j < 10; ++j) {
                    const double mu = 0.05 + 0.1 * i;
                    const double w = -0.5 + 0.1 * j;
                    const LinearContract c = build_contract(cost, p, mu, w, k);
                    const double mu_back = best_response_effort(cost, p, c, k);
                    const double w_back = certainty_equivalent(cost, p, c, k).value;
                    if (!expect(std::abs(mu_back - mu) <= 1e-10 && std::abs(w_back - w) <= 1e-10,
                                detail,
                                "grid point mu " + fmt(mu) + ", w " + fmt(w) + " recovered (" +
                                    fmt(mu_back) + ", " + fmt(w_back) + ")"))
                        return false;
                }
            }
        }
    }
    detail = "two families x two types x 10x10 grid";
    return true;
}

bool criterion_dp(std::string& detail) {
    const ModelParams p = benchmark_params();
    const SolveReport rep = solve_tracked(kQuad, p);
    const DpSettings dp{50, 1e-3};
    const LinearContract* contracts[2] = {&rep.menu.contract_H, &rep.menu.contract_L};
    double worst_value_gap = 0.0;
    for (const LinearContract* c : contracts) {
        for (AgentType k : {AgentType::H, AgentType::L}) {
            const DpResult r = dp_best_response(kQuad, p, *c, k, dp);
            const double br = best_response_effort(kQuad, p, *c, k);
            const double closed = certainty_equivalent(kQuad, p, *c, k).value;
            const auto [lo, hi] =
                std::minmax_element(r.policy.effort_by_step.begin(), r.policy.effort_by_step.end());
            worst_value_gap = std::max(worst_value_gap, std::abs(r.value_ce - closed));
            if (!expect(std::abs(r.policy.effort_by_step.front() - br) <= dp.effort_grid_step,
                        detail, "DP effort off by more than one grid cell"))
                return false;
            if (!expect(std::abs(r.value_ce - closed) <= 2e-3, detail,
                        "DP value gap " + fmt(std::abs(r.value_ce - closed))))
                return false;
            if (!expect(*hi - *lo <= dp.effort_grid_step, detail, "DP policy not constant"))
                return false;
        }
    }
    detail = "4 pairings, worst value gap " + fmt(worst_value_gap);
    return true;
}

bool criterion_monte_carlo(std::string& detail) {
    const ModelParams p = benchmark_params();
    const SolveReport rep = solve_tracked(kQuad, p);
    const McSettings mc{1000000, 50, 9042024};
    const LinearContract* contracts[2] = {&rep.menu.contract_H, &rep.menu.contract_L};
    double worst_z = 0.0, worst_se = 0.0;
    for (const LinearContract* c : contracts) {
        for (AgentType k : {AgentType::H, AgentType::L}) {
            const double br = best_response_effort(kQuad, p, *c, k);
            const double closed = certainty_equivalent(kQuad, p, *c, k).value;
            const CeEstimate est = simulate_ce(kQuad, p, *c, k, br, mc);
            const double diff = std::abs(est.value - closed);
            worst_z = std::max(worst_z, diff / est.std_error);
            worst_se = std::max(worst_se, est.std_error);
            if (!expect(diff <= 3.0 * est.std_error, detail,
                        std::string(label(k)) + " on " + label(c->designed_for) + ": |mc-closed| " +
                            fmt(diff) + " > 3 se " + fmt(3.0 * est.std_error)))
                return false;
            if (!expect(est.std_error < 2e-3, detail, "std error " + fmt(est.std_error)))
                return false;
        }
    }
    detail = "1e6 paths, worst |z| " + fmt(worst_z) + ", worst se " + fmt(worst_se);
    return true;
}

bool criterion_regime_boundary(std::string& detail) {
    ModelParams p = benchmark_params();
    const double boundary = p.w_L + kRent;
    // sweep w_H across the boundary at 1e-4 spacing
    int flips = 0;
    Regime prev = Regime::PchSlack;
    bool first = true;
    for (int i = -30; i <= 30; ++i) {
        p.w_H = boundary + i * 1e-4;
        const SolveReport rep = solve_tracked(kQuad, p);
        if (!first && rep.menu.regime != prev) ++flips;
        prev = rep.menu.regime;
        first = false;
    }
    if (!expect(flips == 1, detail, "regime flipped " + std::to_string(flips) + " times")) return false;

    // left and right limits at the boundary: the slack-branch FOC root and
    // the binding-branch rent inversion agree
    p.w_H = boundary;
    const auto left = effort_L_pch_slack(kQuad, p);
    const double right = effort_L_pch_binding(kQuad, p);
    if (!expect(left.has_value(), detail, "no slack-branch solution at the boundary")) return false;
    const double gap = std::abs(*left - right);
    if (!expect(gap <= 1e-7, detail, "branch disagreement " + fmt(gap) + " at the boundary"))
        return false;
    detail = "one flip, branch gap " + fmt(gap);
    return true;
}

bool criterion_local_optimality(std::string& detail) {
    SplitMix64 gen(20240609);
    for (int i = 0; i < 20; ++i) {
        ModelParams p = draw_params(gen);
        const CostModel cost = draw_cost(gen, i);
        // reservations inside the H-imitation regime: gap below the rent at
        // the L-type's second best
        const double cap = rent_integrand(cost, p, second_best_effort(cost, p, AgentType::L));
        p.w_L = -0.2 + 0.4 * gen.uniform01();
        p.w_H = p.w_L + 0.95 * cap * gen.uniform01();

        const SolveReport rep = solve_tracked(cost, p);
        for (double sign : {-1.0, 1.0}) {
            const double mu = rep.menu.mu_L_star + sign * 1e-2;
            if (mu < 0.0) continue;
            const double ce_H = std::max(p.w_H, p.w_L + rent_integrand(cost, p, mu));
            const double perturbed = menu_profit(cost, p, rep.menu.mu_H_star, mu, ce_H);
            if (!expect(rep.principal_profit >= perturbed - 1e-3, detail,
                        "draw " + std::to_string(i) + ": profit " + fmt(rep.principal_profit) +
                            " below perturbed " + fmt(perturbed)))
                return false;
        }
    }
    detail = "20 draws, +/- 1e-2 perturbations";
    return true;
}

bool criterion_determinism(std::string& detail) {
    const fs::path dir =
        fs::temp_directory_path() / ("menusolve_accept_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::string config = R"({
      "params": {"theta_L": 1.0, "theta_H": 1.2, "rho": 1.0, "sigma": 1.0,
                 "alpha": 0.5, "w_L": 0.0, "w_H": 0.0},
      "cost": {"family": "quadratic", "kappa": 1.0},
      "solver": {"mu_max": 10.0},
      "verify": {"n_paths": 50000, "n_steps": 50, "effort_grid": 0.001, "seed": 20240901}
    })";
    write_file((dir / "config.json").string(), config);

    CmdOptions opts;
    opts.config_path = (dir / "config.json").string();
    opts.quiet = true;
    opts.out_path = (dir / "run1.json").string();
    const int rc1 = cmd_verify(opts);
    opts.out_path = (dir / "run2.json").string();
    const int rc2 = cmd_verify(opts);
    const bool same =
        read_file((dir / "run1.json").string()) == read_file((dir / "run2.json").string());
    std::error_code ec;
    fs::remove_all(dir, ec);
    if (!expect(rc1 == kExitOk && rc2 == kExitOk, detail,
                "verify exit codes " + std::to_string(rc1) + ", " + std::to_string(rc2)))
        return false;
    if (!expect(same, detail, "report files differ between runs")) return false;
    detail = "two verify runs, byte-identical reports";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"quadratic closed-form equivalence on the benchmark (1e-8)", criterion_closed_form},
        {"L effort weakly below second best on 50 random draws", criterion_distortion},
        {"imitation-effort and rent orderings on 100 random draws", criterion_orderings},
        {"binding-constraint audit of every solved menu", criterion_binding_audit},
        {"implementation round-trip on a 10x10 (effort, value) grid", criterion_roundtrip},
        {"DP oracle agreement on every benchmark contract", criterion_dp},
        {"Monte Carlo agreement within 3 standard errors at 1e6 paths", criterion_monte_carlo},
        {"regime boundary: single flip, continuous effort", criterion_regime_boundary},
        {"solved menus are local profit maxima under rebuilt perturbations", criterion_local_optimality},
        {"verify runs are byte-identical for a fixed seed", criterion_determinism},
    };

    // Criterion 4 audits every menu solved by the other criteria, so it
    // executes last; results still print in numbered order.
    std::vector<size_t> order;
    for (size_t i = 0; i < criteria.size(); ++i)
        if (i != 3) order.push_back(i);
    order.push_back(3);

    std::vector<bool> passed(criteria.size(), false);
    std::vector<std::string> details(criteria.size());
    for (size_t i : order) {
        try {
            passed[i] = criteria[i].run(details[i]);
        } catch (const std::exception& e) {
            details[i] = std::string("exception: ") + e.what();
        }
    }

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        std::printf("criterion %2zu %s  %s%s%s\n", i + 1, passed[i] ? "PASS" : "FAIL",
                    criteria[i].description.c_str(), details[i].empty() ? "" : " -- ",
                    details[i].c_str());
        if (!passed[i]) ++failures;
    }
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}
