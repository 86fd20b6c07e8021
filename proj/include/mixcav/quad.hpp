// Adaptive Gauss-Kronrod quadrature (15-point Kronrod / 7-point Gauss) with
// interval splitting at caller-supplied breakpoints and helpers for
// semi-infinite integrals with exp(-2 sqrt(z))-type tails.

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "mixcav/common.hpp"

namespace mixcav {

namespace gk {

// Nodes/weights for 15-point Kronrod with embedded 7-point Gauss on [-1, 1].
inline constexpr double xk[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769, -0.741531185599394,
    -0.586087235467691, -0.405845151377397, -0.207784955007898, 0.0,
    0.207784955007898,  0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
inline constexpr double wk[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
inline constexpr double wg[4] = {0.129484966168870, 0.279705391489277,
                                 0.381830050505119, 0.417959183673469};

struct Estimate {
    double integral = 0.0;
    double error = 0.0;
};

template <typename F>
Estimate rule(F&& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double rk = 0.0, rg = 0.0;
    double fv[15];
    for (int i = 0; i < 15; ++i) {
        fv[i] = f(c + h * xk[i]);
        rk += wk[i] * fv[i];
    }
    // Gauss nodes are the odd Kronrod nodes (1,3,...,13)
    rg = wg[3] * fv[7];
    for (int i = 0; i < 3; ++i) rg += wg[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    rk *= h;
    rg *= h;
    const double diff = std::abs(rk - rg);
    // standard QUADPACK-style sharpened error estimate
    double err = diff;
    if (diff > 0.0) {
        const double scale = std::pow(200.0 * diff / (std::abs(rk) + 1e-300), 1.5);
        if (scale < 1.0) err = diff * scale;
    }
    return {rk, err};
}

}  // namespace gk

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int evaluations = 0;
};

/// Adaptive integration on [a, b]. Accepts when the local error estimate is
/// below abstol + reltol*|whole|; recursion depth is bounded.
template <typename F>
QuadResult integrate(F&& f, double a, double b, double abstol = 1e-10,
                     double reltol = 1e-10, int max_depth = 48) {
    QuadResult res;
    if (a == b) return res;
    struct Seg {
        double a, b, integral, error;
        int depth;
    };
    auto first = gk::rule(f, a, b);
    res.evaluations += 15;
    std::vector<Seg> stack{{a, b, first.integral, first.error, 0}};
    double total = first.integral;
    double total_err = first.error;
    std::vector<Seg> done;
    while (!stack.empty()) {
        const double tol = abstol + reltol * std::abs(total);
        // worst segment first
        std::size_t worst = 0;
        for (std::size_t i = 1; i < stack.size(); ++i)
            if (stack[i].error > stack[worst].error) worst = i;
        if (total_err <= tol) break;
        Seg s = stack[worst];
        stack.erase(stack.begin() + long(worst));
        if (s.depth >= max_depth || s.b - s.a < 1e-15 * (std::abs(s.a) + std::abs(s.b) + 1.0)) {
            done.push_back(s);
            total_err -= s.error;  // give up refining; keep its estimate
            continue;
        }
        const double mid = 0.5 * (s.a + s.b);
        auto l = gk::rule(f, s.a, mid);
        auto r = gk::rule(f, mid, s.b);
        res.evaluations += 30;
        total += l.integral + r.integral - s.integral;
        total_err += l.error + r.error - s.error;
        stack.push_back({s.a, mid, l.integral, l.error, s.depth + 1});
        stack.push_back({mid, s.b, r.integral, r.error, s.depth + 1});
    }
    res.value = total;
    res.error = total_err;
    for (const auto& s : done) res.error += s.error;
    return res;
}

/// Integrate with mandatory splits at interior breakpoints (band limits,
/// resonance, mode curves); points outside (a, b) are ignored.
template <typename F>
QuadResult integrate_split(F&& f, double a, double b, std::vector<double> splits,
                           double abstol = 1e-10, double reltol = 1e-10) {
    splits.push_back(a);
    splits.push_back(b);
    std::sort(splits.begin(), splits.end());
    QuadResult res;
    for (std::size_t i = 0; i + 1 < splits.size(); ++i) {
        const double lo = std::max(a, splits[i]);
        const double hi = std::min(b, splits[i + 1]);
        if (hi - lo <= 0.0) continue;
        auto r = integrate(f, lo, hi, abstol / double(splits.size()), reltol);
        res.value += r.value;
        res.error += r.error;
        res.evaluations += r.evaluations;
    }
    return res;
}

/// Integral over [z0, infinity) of an integrand decaying like exp(-2 sqrt(z)):
/// substitutes z = z0 + t^2 and truncates where exp(-2 sqrt(z)) < 1e-22.
template <typename F>
QuadResult integrate_sqrt_tail(F&& f, double z0, double abstol = 1e-10,
                               double reltol = 1e-9, double t_max = 26.0) {
    auto g = [&](double t) { return f(z0 + t * t) * 2.0 * t; };
    return integrate(g, 0.0, t_max, abstol, reltol);
}

}  // namespace mixcav
