#include "screening/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace screening {

namespace {

using nlohmann::json;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

struct Checker {
    std::vector<std::string> issues;

    void reject_unknown(const json& obj, const std::string& scope,
                        const std::set<std::string>& allowed) {
        for (const auto& [key, _] : obj.items())
            if (!allowed.count(key)) issues.push_back(scope + ": unknown field '" + key + "'");
    }

    // Fetches a finite number, recording an issue when missing or malformed.
    std::optional<double> number(const json& obj, const std::string& scope, const std::string& key,
                                 bool required = true) {
        if (!obj.contains(key)) {
            if (required) issues.push_back(scope + "." + key + " is required");
            return std::nullopt;
        }
        if (!obj.at(key).is_number()) {
            issues.push_back(scope + "." + key + " must be a number");
            return std::nullopt;
        }
        const double v = obj.at(key).get<double>();
        if (!std::isfinite(v)) {
            issues.push_back(scope + "." + key + " must be finite");
            return std::nullopt;
        }
        return v;
    }

    void require(bool ok, const std::string& message) {
        if (!ok) issues.push_back(message);
    }
};

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error("invalid config:\n  " + join(problems, "\n  ")), issues(std::move(problems)) {}

RunConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError({std::string("malformed JSON: ") + e.what()});
    }
    if (!root.is_object()) throw ConfigError({"top level must be a JSON object"});

    Checker ck;
    RunConfig cfg;
    ck.reject_unknown(root, "config", {"params", "cost", "solver", "verify", "sweep"});

    // --- params ---
    if (!root.contains("params") || !root.at("params").is_object()) {
        ck.issues.push_back("params object is required");
    } else {
        const json& p = root.at("params");
        ck.reject_unknown(p, "params",
                          {"theta_L", "theta_H", "rho", "sigma", "alpha", "w_L", "w_H"});
        if (auto v = ck.number(p, "params", "theta_L")) cfg.params.theta_L = *v;
        if (auto v = ck.number(p, "params", "theta_H")) cfg.params.theta_H = *v;
        if (auto v = ck.number(p, "params", "rho")) cfg.params.rho = *v;
        if (auto v = ck.number(p, "params", "sigma")) cfg.params.sigma = *v;
        if (auto v = ck.number(p, "params", "alpha")) cfg.params.alpha = *v;
        if (auto v = ck.number(p, "params", "w_L")) cfg.params.w_L = *v;
        if (auto v = ck.number(p, "params", "w_H")) cfg.params.w_H = *v;
    }

    // --- cost ---
    if (!root.contains("cost") || !root.at("cost").is_object()) {
        ck.issues.push_back("cost object is required");
    } else {
        const json& c = root.at("cost");
        ck.reject_unknown(c, "cost", {"family", "kappa", "p"});
        std::string family;
        if (!c.contains("family") || !c.at("family").is_string())
            ck.issues.push_back("cost.family must be \"quadratic\" or \"power\"");
        else
            family = c.at("family").get<std::string>();
        const auto kappa = ck.number(c, "cost", "kappa");
        if (kappa) ck.require(*kappa > 0.0, "cost.kappa must be positive");
        if (family == "quadratic") {
            ck.require(!c.contains("p"), "cost.p is only valid for the power family");
            cfg.cost = CostModel{CostFamily::Quadratic, kappa.value_or(1.0), 2.0};
        } else if (family == "power") {
            const auto p = ck.number(c, "cost", "p");
            if (p)
                ck.require(*p == 2.0 || *p >= 3.0,
                           "cost.p must lie in {2} U [3, inf) so the third derivative stays finite");
            cfg.cost = CostModel{CostFamily::Power, kappa.value_or(1.0), p.value_or(3.0)};
        } else if (!family.empty()) {
            ck.issues.push_back("cost.family must be \"quadratic\" or \"power\", got \"" + family +
                                "\"");
        }
    }

    // --- solver (optional) ---
    if (root.contains("solver")) {
        const json& s = root.at("solver");
        if (!s.is_object()) {
            ck.issues.push_back("solver must be an object");
        } else {
            ck.reject_unknown(s, "solver", {"mu_max", "root_tol", "residual_tol", "binding_tol"});
            if (auto v = ck.number(s, "solver", "mu_max", false)) {
                ck.require(*v > 0.0, "solver.mu_max must be positive");
                cfg.params.mu_max = *v;
            }
            if (auto v = ck.number(s, "solver", "root_tol", false)) {
                ck.require(*v > 0.0, "solver.root_tol must be positive");
                cfg.solver.root_tol = *v;
            }
            if (auto v = ck.number(s, "solver", "residual_tol", false)) {
                ck.require(*v > 0.0, "solver.residual_tol must be positive");
                cfg.solver.residual_tol = *v;
            }
            if (auto v = ck.number(s, "solver", "binding_tol", false)) {
                ck.require(*v > 0.0, "solver.binding_tol must be positive");
                cfg.solver.binding_tol = *v;
            }
        }
    }

    // --- verify (optional) ---
    if (root.contains("verify")) {
        const json& v = root.at("verify");
        if (!v.is_object()) {
            ck.issues.push_back("verify must be an object");
        } else {
            ck.reject_unknown(v, "verify", {"n_paths", "n_steps", "effort_grid", "seed"});
            if (auto x = ck.number(v, "verify", "n_paths", false)) {
                ck.require(*x >= 1.0, "verify.n_paths must be at least 1");
                cfg.verify_mc.n_paths = static_cast<std::int64_t>(*x);
            }
            if (auto x = ck.number(v, "verify", "n_steps", false)) {
                ck.require(*x >= 1.0, "verify.n_steps must be at least 1");
                cfg.verify_mc.n_steps = static_cast<int>(*x);
                cfg.verify_dp.n_steps = static_cast<int>(*x);
            }
            if (auto x = ck.number(v, "verify", "effort_grid", false)) {
                ck.require(*x > 0.0, "verify.effort_grid must be positive");
                cfg.verify_dp.effort_grid_step = *x;
            }
            if (auto x = ck.number(v, "verify", "seed", false)) {
                ck.require(*x >= 0.0, "verify.seed must be nonnegative");
                cfg.verify_mc.seed = static_cast<std::uint64_t>(*x);
            }
        }
    }

    // --- sweep (optional) ---
    if (root.contains("sweep")) {
        const json& s = root.at("sweep");
        if (!s.is_object()) {
            ck.issues.push_back("sweep must be an object");
        } else {
            ck.reject_unknown(s, "sweep", {"parameter", "from", "to", "steps"});
            SweepSpec spec;
            if (!s.contains("parameter") || !s.at("parameter").is_string()) {
                ck.issues.push_back("sweep.parameter must be a string");
            } else {
                spec.parameter = s.at("parameter").get<std::string>();
                static const std::set<std::string> kSweepable = {"alpha", "w_H", "w_L",
                                                                 "theta_H", "sigma", "rho"};
                ck.require(kSweepable.count(spec.parameter) > 0,
                           "sweep.parameter must be one of alpha, w_H, w_L, theta_H, sigma, rho");
            }
            if (auto v = ck.number(s, "sweep", "from")) spec.from = *v;
            if (auto v = ck.number(s, "sweep", "to")) spec.to = *v;
            if (auto v = ck.number(s, "sweep", "steps")) {
                ck.require(*v >= 2.0 && *v == std::floor(*v), "sweep.steps must be an integer >= 2");
                spec.steps = static_cast<int>(*v);
            }
            ck.require(spec.from != spec.to, "sweep bounds must differ");
            cfg.sweep = spec;
        }
    }

    // Cross-field parameter constraints.
    for (const std::string& msg : validate(cfg.params)) ck.issues.push_back("params: " + msg);

    if (!ck.issues.empty()) throw ConfigError(std::move(ck.issues));
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError({"cannot open config file: " + path});
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace screening
