// Real-coefficient polynomial roots by simultaneous (Durand-Kerner) iteration
// with a Newton polish, used for the fourth-order TM dispersion equation.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "mixcav/common.hpp"

namespace mixcav {

/// Evaluate p(x) = c[0] + c[1] x + ... + c[n] x^n by Horner.
inline cdouble poly_eval(const std::vector<double>& c, cdouble x) {
    cdouble v{0.0, 0.0};
    for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
    return v;
}

inline cdouble poly_deriv_eval(const std::vector<double>& c, cdouble x) {
    cdouble v{0.0, 0.0};
    for (std::size_t i = c.size(); i-- > 1;) v = v * x + double(i) * c[i];
    return v;
}

/// All complex roots of a polynomial with real coefficients (ascending order,
/// leading coefficient nonzero). Roots polished to residual ~1e-13 relative.
inline std::vector<cdouble> poly_roots(std::vector<double> c) {
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
    const std::size_t n = c.size() - 1;
    std::vector<cdouble> r;
    if (n == 0) return r;
    // scale to monic
    for (auto& ci : c) ci /= c.back();
    c.back() = 1.0;
    // Cauchy bound on root magnitude
    double bound = 0.0;
    for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[i]));
    bound += 1.0;
    // Durand-Kerner from a non-symmetric spiral of starting points
    r.resize(n);
    const cdouble seed(0.4, 0.9);
    cdouble p = seed;
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = p * bound * 0.7;
        p *= seed;
    }
    for (int iter = 0; iter < 300; ++iter) {
        double maxstep = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            cdouble num = poly_eval(c, r[i]);
            cdouble den{1.0, 0.0};
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) den *= (r[i] - r[j]);
            if (std::abs(den) == 0.0) den = {1e-30, 0.0};
            const cdouble step = num / den;
            r[i] -= step;
            maxstep = std::max(maxstep, std::abs(step));
        }
        if (maxstep < 1e-15 * bound) break;
    }
    // Newton polish and real-axis snapping
    for (auto& root : r) {
        for (int it = 0; it < 4; ++it) {
            const cdouble d = poly_deriv_eval(c, root);
            if (std::abs(d) == 0.0) break;
            root -= poly_eval(c, root) / d;
        }
        if (std::abs(root.imag()) < 1e-9 * (std::abs(root.real()) + 1.0)) {
            double x = root.real();
            for (int it = 0; it < 2; ++it) {
                const cdouble d = poly_deriv_eval(c, {x, 0.0});
                if (std::abs(d) == 0.0) break;
                x -= (poly_eval(c, {x, 0.0}) / d).real();
            }
            root = {x, root.imag()};
        }
    }
    return r;
}

/// Real roots only (|Im| below tol relative to magnitude).
inline std::vector<double> poly_real_roots(const std::vector<double>& c,
                                           double imag_tol = 1e-8) {
    std::vector<double> out;
    for (const auto& r : poly_roots(c))
        if (std::abs(r.imag()) <= imag_tol * (std::abs(r.real()) + 1.0))
            out.push_back(r.real());
    return out;
}

}  // namespace mixcav
