// menusolve: optimal menus of linear contracts under moral hazard and
// two-type screening with type-dependent outside options. Subcommands solve
// the menu, sweep a parameter, audit a menu against Monte Carlo / dynamic
// programming oracles, and estimate a single certainty equivalent.

#include <string>

#include <CLI11.hpp>

#include "screening/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"optimal menus of linear contracts with verification oracles"};
    app.require_subcommand(1);

    screening::CmdOptions opts;
    std::string out_path, menu_path, sim_type, sim_contract;
    long long n_paths = -1;
    int n_steps = -1;
    long long seed = -1;
    double effort = -1.0;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--config", opts.config_path, "JSON config file")->required();
    };

    CLI::App* solve = app.add_subcommand("solve", "solve the optimal menu");
    add_common(solve);
    solve->add_option("--out", out_path, "machine-readable report path (default solve_report.json)");

    CLI::App* sweep = app.add_subcommand("sweep", "solve along a parameter grid, emit CSV");
    add_common(sweep);
    sweep->add_option("--out", out_path, "CSV output path")->required();

    CLI::App* verify = app.add_subcommand("verify", "solve then audit against MC and DP oracles");
    add_common(verify);
    verify->add_option("--out", out_path, "audit report path (default verify_report.json)");
    verify->add_option("--menu", menu_path, "audit this menu file instead of solving");
    verify->add_option("--paths", n_paths, "Monte Carlo path count override");
    verify->add_option("--steps", n_steps, "time step override");
    verify->add_option("--seed", seed, "RNG seed override");

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo CE of one (type, contract)");
    add_common(simulate);
    simulate->add_option("--type", sim_type, "agent type, H or L")
        ->required()
        ->check(CLI::IsMember({"H", "L"}));
    simulate->add_option("--contract", sim_contract, "contract tag, H or L")
        ->required()
        ->check(CLI::IsMember({"H", "L"}));
    simulate->add_option("--effort", effort, "constant effort (default: best response)");
    simulate->add_option("--paths", n_paths, "Monte Carlo path count override");
    simulate->add_option("--steps", n_steps, "time step override");
    simulate->add_option("--seed", seed, "RNG seed override");

    CLI11_PARSE(app, argc, argv);

    if (!out_path.empty()) opts.out_path = out_path;
    if (!menu_path.empty()) opts.menu_path = menu_path;
    if (n_paths >= 0) opts.n_paths = n_paths;
    if (n_steps >= 0) opts.n_steps = n_steps;
    if (seed >= 0) opts.seed = static_cast<std::uint64_t>(seed);
    if (!sim_type.empty()) opts.sim_type = sim_type[0];
    if (!sim_contract.empty()) opts.sim_contract = sim_contract[0];
    if (effort >= 0.0) opts.sim_effort = effort;

    if (solve->parsed()) return screening::cmd_solve(opts);
    if (sweep->parsed()) return screening::cmd_sweep(opts);
    if (verify->parsed()) return screening::cmd_verify(opts);
    return screening::cmd_simulate(opts);
}
