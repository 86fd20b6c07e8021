// Bracketed scalar root finding: bisection, Brent, and bracket scanning.

#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "mixcav/common.hpp"

namespace mixcav {

/// Plain bisection; requires a sign change on [a, b]. Tolerance is absolute in x.
template <typename F>
double bisect(F&& f, double a, double b, double xtol = 1e-12, int max_iter = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw no_root_error("bisect: no sign change on bracket");
    for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
        const double c = 0.5 * (a + b);
        const double fc = f(c);
        if (fc == 0.0) return c;
        if (fa * fc < 0.0) {
            b = c;
            fb = fc;
        } else {
            a = c;
            fa = fc;
        }
    }
    return 0.5 * (a + b);
}

/// Brent's method (inverse quadratic + secant + bisection safeguards).
template <typename F>
double brent(F&& f, double a, double b, double xtol = 1e-14, int max_iter = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw no_root_error("brent: no sign change on bracket");
    double c = a, fc = fa, d = b - a, e = d;
    for (int i = 0; i < max_iter; ++i) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * 2.22e-16 * std::abs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                const double qq = fa / fc, rr = fb / fc;
                p = s * (2.0 * xm * qq * (qq - rr) - (b - a) * (rr - 1.0));
                q = (qq - 1.0) * (rr - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            e = d = b - a;
        }
    }
    return b;
}

/// Scan [a, b] on n subintervals and return every sign-change bracket.
template <typename F>
std::vector<std::pair<double, double>> scan_brackets(F&& f, double a, double b, int n) {
    std::vector<std::pair<double, double>> out;
    double x0 = a, f0 = f(a);
    for (int i = 1; i <= n; ++i) {
        const double x1 = a + (b - a) * double(i) / n;
        const double f1 = f(x1);
        if (f0 == 0.0)
            out.emplace_back(x0, x0);
        else if (f0 * f1 < 0.0)
            out.emplace_back(x0, x1);
        x0 = x1;
        f0 = f1;
    }
    return out;
}

/// Newton with a fallback bracket; derivative by central difference.
template <typename F>
double newton_polish(F&& f, double x0, double h_rel = 1e-7, int iters = 3) {
    double x = x0;
    for (int i = 0; i < iters; ++i) {
        const double h = h_rel * (std::abs(x) + 1.0);
        const double fp = (f(x + h) - f(x - h)) / (2.0 * h);
        if (fp == 0.0) break;
        const double step = f(x) / fp;
        x -= step;
        if (std::abs(step) < 1e-15 * (std::abs(x) + 1.0)) break;
    }
    return x;
}

}  // namespace mixcav
