#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "screening/cost_model.hpp"

using screening::CostModel;

namespace {

// Central finite differences, the test-only oracle for the analytic
// derivatives.
template <class F>
double fd(F&& f, double x, double h = 1e-6) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

std::vector<double> effort_grid(double lo, double hi, int n) {
    std::vector<double> g;
    for (int i = 0; i < n; ++i) g.push_back(lo + (hi - lo) * i / (n - 1));
    return g;
}

const std::vector<CostModel> kFamilies = {
    CostModel::quadratic(1.0),
    CostModel::quadratic(2.5),
    CostModel::power(1.0, 3.0),
    CostModel::power(2.0, 3.0),
    CostModel::power(0.7, 4.0),
    CostModel::power(1.3, 3.5),
};

}  // namespace

TEST_CASE("construction rejects bad scales and exponents") {
    CHECK_THROWS_AS(CostModel::quadratic(0.0), std::invalid_argument);
    CHECK_THROWS_AS(CostModel::quadratic(-1.0), std::invalid_argument);
    CHECK_THROWS_AS(CostModel::power(1.0, 1.5), std::invalid_argument);
    // p in (2, 3) leaves c''' unbounded at zero effort
    CHECK_THROWS_AS(CostModel::power(1.0, 2.5), std::invalid_argument);
    CHECK_NOTHROW(CostModel::power(1.0, 2.0));
    CHECK_NOTHROW(CostModel::power(1.0, 3.0));
}

TEST_CASE("closed-form spot values") {
    const CostModel q1 = CostModel::quadratic(1.0);
    CHECK(q1.cost(0.0) == 0.0);
    CHECK(q1.cost(0.5) == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(q1.marginal_cost(0.5) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(q1.marginal_cost(0.0) == 0.0);
    CHECK(q1.marginal_cost_inverse(0.5) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(q1.second_derivative(0.25) == 1.0);
    CHECK(q1.third_derivative(0.25) == 0.0);

    const CostModel p23 = CostModel::power(2.0, 3.0);
    CHECK(p23.cost(1.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(p23.marginal_cost(1.0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(p23.marginal_cost_inverse(2.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p23.marginal_cost_inverse(0.0) == 0.0);

    const CostModel p13 = CostModel::power(1.0, 3.0);
    CHECK(p13.second_derivative(0.5) == doctest::Approx(1.0).epsilon(1e-14));
    const CostModel p14 = CostModel::power(1.0, 4.0);
    CHECK(p14.third_derivative(1.0) == doctest::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("negative arguments are domain errors") {
    const CostModel q = CostModel::quadratic(1.0);
    CHECK_THROWS_AS(q.cost(-0.1), std::domain_error);
    CHECK_THROWS_AS(q.marginal_cost(-0.1), std::domain_error);
    CHECK_THROWS_AS(q.marginal_cost_inverse(-0.1), std::domain_error);
    CHECK_THROWS_AS(q.second_derivative(-0.1), std::domain_error);
    CHECK_THROWS_AS(q.third_derivative(-0.1), std::domain_error);
}

TEST_CASE("finite differences confirm every analytic derivative") {
    const double h = 1e-6, tol = 1e-6;
    for (const CostModel& m : kFamilies) {
        for (double mu : effort_grid(0.05, 3.0, 40)) {
            const double d1 = fd([&](double x) { return m.cost(x); }, mu, h);
            CHECK(std::abs(d1 - m.marginal_cost(mu)) <=
                  tol * std::max(1.0, std::abs(m.marginal_cost(mu))));
            const double d2 = fd([&](double x) { return m.marginal_cost(x); }, mu, h);
            CHECK(std::abs(d2 - m.second_derivative(mu)) <=
                  tol * std::max(1.0, std::abs(m.second_derivative(mu))));
            const double d3 = fd([&](double x) { return m.second_derivative(x); }, mu, h);
            CHECK(std::abs(d3 - m.third_derivative(mu)) <=
                  tol * std::max(1.0, std::abs(m.third_derivative(mu))));
        }
    }
}

TEST_CASE("family invariants on a dense grid") {
    for (const CostModel& m : kFamilies) {
        CHECK(m.cost(0.0) == 0.0);
        double prev_marginal = 0.0;
        for (double mu : effort_grid(0.01, 4.0, 200)) {
            CHECK(m.marginal_cost(mu) > prev_marginal);  // strictly increasing
            prev_marginal = m.marginal_cost(mu);
            CHECK(m.second_derivative(mu) > 0.0);
            CHECK(m.third_derivative(mu) >= 0.0);
            // mean-value property: c'(x) x > c(x), with derivative c''(x) x > 0
            CHECK(m.marginal_cost(mu) * mu - m.cost(mu) > 0.0);
            CHECK(m.second_derivative(mu) * mu > 0.0);
        }
    }
}

TEST_CASE("inverse marginal cost round-trips to 1e-12 relative") {
    for (const CostModel& m : kFamilies) {
        for (double mu : effort_grid(1e-4, 4.0, 100)) {
            const double back = m.marginal_cost_inverse(m.marginal_cost(mu));
            CHECK(std::abs(back - mu) <= 1e-12 * std::max(1.0, mu));
        }
    }
}
