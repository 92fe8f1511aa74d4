#pragma once

#include <cmath>
#include <string>

#include "screening/errors.hpp"

namespace screening {

struct RootResult {
    double root = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

// Bracketed bisection/secant hybrid. Requires f(lo) and f(hi) of opposite
// sign. Converges the bracket to width <= x_tol (absolute) and, when f_tol is
// positive, keeps shrinking until the best residual is within f_tol as well
// (steep residuals can need brackets far narrower than x_tol). Secant steps
// are attempted on alternate iterations and accepted only when they land
// strictly inside the bracket, so the interval halves at least every other
// step.
template <class F>
RootResult find_root(F&& f, double lo, double hi, double x_tol = 1e-12, double f_tol = 0.0,
                     int max_iter = 512) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return {lo, 0.0, 0};
    if (fhi == 0.0) return {hi, 0.0, 0};
    if (std::signbit(flo) == std::signbit(fhi))
        throw BracketError("find_root: no sign change on [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");

    int it = 0;
    auto done = [&] {
        if (hi - lo > x_tol) return false;
        if (f_tol > 0.0 && std::min(std::abs(flo), std::abs(fhi)) > f_tol) return false;
        return true;
    };
    while (!done() && it < max_iter) {
        ++it;
        double cand = 0.5 * (lo + hi);
        if (it % 2 == 1 && fhi != flo) {
            const double s = hi - fhi * (hi - lo) / (fhi - flo);
            if (s > lo && s < hi) cand = s;
        }
        if (cand <= lo || cand >= hi) break;  // bracket exhausted at double resolution
        const double fc = f(cand);
        if (fc == 0.0) return {cand, 0.0, it};
        if (std::signbit(fc) == std::signbit(flo)) {
            lo = cand;
            flo = fc;
        } else {
            hi = cand;
            fhi = fc;
        }
    }
    if (std::abs(flo) <= std::abs(fhi)) return {lo, flo, it};
    return {hi, fhi, it};
}

}  // namespace screening
