#include "screening/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "screening/errors.hpp"
#include "screening/parallel.hpp"
#include "screening/report.hpp"

namespace screening {

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

// Maps solver exceptions onto process exit codes; prints the reason.
template <class Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return kExitConfigInvalid;
    } catch (const RegimeUnsupportedError& e) {
        std::cerr << "regime unsupported: " << e.what() << "\n";
        return kExitRegimeUnsupported;
    } catch (const BracketError& e) {
        std::cerr << "bracket error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
}

void apply_verify_overrides(RunConfig& cfg, const CmdOptions& opts) {
    if (opts.n_paths) cfg.verify_mc.n_paths = *opts.n_paths;
    if (opts.n_steps) {
        cfg.verify_mc.n_steps = *opts.n_steps;
        cfg.verify_dp.n_steps = *opts.n_steps;
    }
    if (opts.seed) cfg.verify_mc.seed = *opts.seed;
}

struct SweepRow {
    double value = 0.0;
    std::string regime;  // regime label or failure tag
    SolveReport report;
    bool ok = false;
};

void set_swept_parameter(ModelParams& params, const std::string& name, double value) {
    if (name == "alpha") params.alpha = value;
    else if (name == "w_H") params.w_H = value;
    else if (name == "w_L") params.w_L = value;
    else if (name == "theta_H") params.theta_H = value;
    else if (name == "sigma") params.sigma = value;
    else if (name == "rho") params.rho = value;
    else throw std::logic_error("unsweepable parameter: " + name);
}

}  // namespace

int cmd_solve(const CmdOptions& opts) {
    return guarded([&] {
        const RunConfig cfg = load_config(opts.config_path);
        const SolveReport report = solve(cfg.cost, cfg.params, cfg.solver);
        if (!opts.quiet) std::cout << format_solve_table(report);
        const std::string out = opts.out_path.value_or("solve_report.json");
        write_file(out, solve_report_to_json(report, cfg));
        if (!opts.quiet) std::cout << "report written to " << out << "\n";
        return kExitOk;
    });
}

int cmd_sweep(const CmdOptions& opts) {
    return guarded([&] {
        const RunConfig cfg = load_config(opts.config_path);
        if (!cfg.sweep) throw ConfigError({"sweep object is required for the sweep command"});
        if (!opts.out_path) throw ConfigError({"sweep requires an output file (--out)"});
        const SweepSpec& spec = *cfg.sweep;

        std::vector<SweepRow> rows(spec.steps);
        std::atomic<int> next{0};
        auto run_point = [&](int i) {
            const double value = spec.from + (spec.to - spec.from) * i / (spec.steps - 1);
            SweepRow& row = rows[i];
            row.value = value;
            ModelParams params = cfg.params;
            set_swept_parameter(params, spec.parameter, value);
            if (!validate(params).empty()) {
                row.regime = "invalid_params";
                return;
            }
            try {
                row.report = solve(cfg.cost, params, cfg.solver);
                row.regime = label(row.report.menu.regime);
                row.ok = true;
            } catch (const RegimeUnsupportedError&) {
                row.regime = "regime_unsupported";
            } catch (const BracketError&) {
                row.regime = "bracket_error";
            } catch (const NumericError&) {
                row.regime = "numeric_error";
            }
        };

        const int workers = std::max(1, std::min(worker_count(), spec.steps));
        if (workers <= 1) {
            for (int i = 0; i < spec.steps; ++i) run_point(i);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (int t = 0; t < workers; ++t)
                pool.emplace_back([&] {
                    for (int i = next.fetch_add(1); i < spec.steps; i = next.fetch_add(1))
                        run_point(i);
                });
            for (auto& th : pool) th.join();
        }

        // Rows are emitted in grid order regardless of completion order.
        std::ostringstream csv;
        csv << "parameter,value,mu_L,mu_H,regime,rent,profit,pc_L_slack,pc_H_slack,icc_H_slack,"
               "icc_L_slack\n";
        for (const SweepRow& row : rows) {
            csv << spec.parameter << ',' << fmt17(row.value) << ',';
            if (row.ok) {
                const ContractMenu& m = row.report.menu;
                csv << fmt17(m.mu_L_star) << ',' << fmt17(m.mu_H_star) << ',' << row.regime << ','
                    << fmt17(row.report.rent) << ',' << fmt17(row.report.principal_profit) << ','
                    << fmt17(m.pc_L_slack) << ',' << fmt17(m.pc_H_slack) << ','
                    << fmt17(m.icc_H_slack) << ',' << fmt17(m.icc_L_slack) << '\n';
            } else {
                csv << ",," << row.regime << ",,,,,,\n";
            }
        }
        write_file(*opts.out_path, csv.str());
        if (!opts.quiet)
            std::cout << "sweep of " << spec.parameter << " over " << spec.steps
                      << " points written to " << *opts.out_path << "\n";
        return kExitOk;
    });
}

int cmd_verify(const CmdOptions& opts) {
    return guarded([&] {
        RunConfig cfg = load_config(opts.config_path);
        apply_verify_overrides(cfg, opts);
        ContractMenu menu;
        if (opts.menu_path) {
            menu = menu_from_json(read_file(*opts.menu_path));
        } else {
            menu = solve(cfg.cost, cfg.params, cfg.solver).menu;
        }
        const AuditReport audit =
            audit_menu(cfg.cost, cfg.params, menu, cfg.verify_mc, cfg.verify_dp, cfg.solver);
        if (!opts.quiet) std::cout << format_audit_table(audit);
        const std::string out = opts.out_path.value_or("verify_report.json");
        write_file(out, audit_report_to_json(audit, cfg.verify_mc, cfg.verify_dp));
        if (!opts.quiet) std::cout << "report written to " << out << "\n";
        return audit.all_pass ? kExitOk : kExitAuditFailed;
    });
}

int cmd_simulate(const CmdOptions& opts) {
    return guarded([&] {
        RunConfig cfg = load_config(opts.config_path);
        apply_verify_overrides(cfg, opts);
        if (!opts.sim_type || !opts.sim_contract)
            throw ConfigError({"simulate requires --type and --contract"});
        const AgentType agent = *opts.sim_type == 'H' ? AgentType::H : AgentType::L;
        const AgentType which = *opts.sim_contract == 'H' ? AgentType::H : AgentType::L;

        const SolveReport report = solve(cfg.cost, cfg.params, cfg.solver);
        const LinearContract& contract =
            which == AgentType::H ? report.menu.contract_H : report.menu.contract_L;
        const double effort = opts.sim_effort
                                  ? *opts.sim_effort
                                  : best_response_effort(cfg.cost, cfg.params, contract, agent);
        const CeEstimate est =
            simulate_ce(cfg.cost, cfg.params, contract, agent, effort, cfg.verify_mc);
        std::cout << format_ce_estimate(agent, which, effort, est, cfg.verify_mc);
        return kExitOk;
    });
}

}  // namespace screening
