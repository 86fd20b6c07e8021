// Surface impedances, Fresnel reflection coefficients, and the spectral
// density of states D_sigma(Omega, K) = (1/pi) Im ln[1 - r_L r_R exp(-2 kappa_0)].
//
// Real-frequency evaluations of D use the retarded prescription
// Omega -> Omega (1 + i*theta) with theta = 1e-8; the principal square root of
// the complex kappa^2 then reproduces every lossless branch rule.

#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "mixcav/common.hpp"
#include "mixcav/model.hpp"
#include "mixcav/spectrum.hpp"

namespace mixcav {

enum class Side { Left, Right };

/// Default infinitesimal loss used by the density of states.
inline constexpr double loss_theta = 1e-8;

/// Surface impedance from an arbitrary local response at a real point:
/// Z^s = mu sqrt(z)/kappa, Z^p = eps sqrt(z)/kappa.
inline cdouble surface_impedance_from_response(double eps, double mu, double omega,
                                               double k_par, Pol pol) {
    const double z = k_par * k_par - omega * omega;
    const cdouble kap = kappa_from_response(eps, mu, omega, k_par);
    const double coef = (pol == Pol::S) ? mu : eps;
    return coef * sqrt_z(z) / kap;
}

inline cdouble surface_impedance(const CavityModel& m, double omega, double k_par,
                                 Pol pol, Side side) {
    const ResponsePair r = (side == Side::Left) ? eval_metal(m, omega)
                                                : eval_magnetodielectric(m, omega);
    return surface_impedance_from_response(r.eps, r.mu, omega, k_par, pol);
}

/// r = (1 - Z)/(1 + Z). An isolated-polariton pole (|1 + Z| ~ 0) is returned
/// as an IEEE overflow value, not an exception; test with is_reflection_pole.
inline cdouble reflection_from_impedance(cdouble Z) {
    return (1.0 - Z) / (1.0 + Z);
}

inline bool is_reflection_pole(cdouble Z) { return std::abs(1.0 + Z) < 1e-14; }

inline cdouble reflection(const CavityModel& m, double omega, double k_par, Pol pol,
                          Side side) {
    return reflection_from_impedance(surface_impedance(m, omega, k_par, pol, side));
}

// ---------------------------------------------------------------------------
// Complex-frequency path.

inline cdouble surface_impedance_c(cdouble eps, cdouble mu, cdouble omega,
                                   double k_par, Pol pol) {
    const cdouble z = k_par * k_par - omega * omega;
    const cdouble kap = kappa_complex(eps, mu, omega, k_par);
    const cdouble coef = (pol == Pol::S) ? mu : eps;
    return coef * std::sqrt(z) / kap;
}

inline cdouble reflection_c(const CavityModel& m, cdouble omega, double k_par, Pol pol,
                            Side side) {
    const ResponsePairC r = (side == Side::Left)
                                ? eval_metal(m, omega)
                                : eval_magnetodielectric(m, omega);
    return reflection_from_impedance(surface_impedance_c(r.eps, r.mu, omega, k_par, pol));
}

/// Round-trip factor r_L r_R exp(-2 kappa_0) at complex frequency. With
/// perfect_mirrors the product r_L r_R is forced to +1 for both polarizations
/// (r_s = -1, r_p = +1 on each mirror).
inline cdouble round_trip(const CavityModel& m, cdouble omega, double k_par, Pol pol,
                          bool perfect_mirrors = false) {
    const cdouble z = k_par * k_par - omega * omega;
    const cdouble ex = std::exp(-2.0 * std::sqrt(z));
    if (perfect_mirrors) return ex;
    return reflection_c(m, omega, k_par, pol, Side::Left) *
           reflection_c(m, omega, k_par, pol, Side::Right) * ex;
}

/// Principal-branch density of states; value lies in (-1, 1].
inline double spectral_density(const CavityModel& m, double omega, double k_par, Pol pol,
                               double theta = loss_theta, bool perfect_mirrors = false) {
    const cdouble w = round_trip(m, cdouble(omega, omega * theta), k_par, pol,
                                 perfect_mirrors);
    return std::arg(1.0 - w) / pi;
}

/// Density of states on a magneto-dielectric band limit, where kappa_R -> 0
/// forces r_R -> -1 exactly; evaluated as that limit.
inline double spectral_density_on_band(const CavityModel& m, double omega, double k_par,
                                       Pol pol, double theta = loss_theta) {
    const cdouble wc(omega, omega * theta);
    const cdouble z = k_par * k_par - wc * wc;
    const cdouble rl = reflection_c(m, wc, k_par, pol, Side::Left);
    const cdouble w = rl * (-1.0) * std::exp(-2.0 * std::sqrt(z));
    return std::arg(1.0 - w) / pi;
}

// ---------------------------------------------------------------------------
// Unwrapped sweeps along Omega at fixed K.

struct DensitySample {
    double omega = 0.0;
    double principal = 0.0;    ///< principal-branch D
    double accumulated = 0.0;  ///< phase-continuous D, unit jumps at discrete modes
};

/// Accumulate D along Omega at fixed K with adaptive stepping: a step is
/// rejected and halved whenever the principal value moves by more than 0.4,
/// so unit jumps at discrete modes are never aliased.
inline std::vector<DensitySample> density_sweep(const CavityModel& m, double k_par,
                                                Pol pol, double omega_lo, double omega_hi,
                                                std::size_t n_samples,
                                                double theta = loss_theta) {
    std::vector<DensitySample> out;
    out.reserve(n_samples);
    const double h0 = (omega_hi - omega_lo) / double(n_samples - 1);
    double omega = omega_lo;
    double prev = spectral_density(m, omega, k_par, pol, theta);
    double acc = prev;
    out.push_back({omega, prev, acc});
    while (omega < omega_hi - 0.5 * h0) {
        double h = std::min(h0, omega_hi - omega);
        double next = 0.0;
        for (int halving = 0; halving < 40; ++halving) {
            next = spectral_density(m, omega + h, k_par, pol, theta);
            double d = next - prev;
            // candidate unwrap: jumps of +-2 come from the principal branch seam
            if (d > 1.0) d -= 2.0;
            if (d < -1.0) d += 2.0;
            if (std::abs(d) <= 0.4 || h < 1e-13 * (omega + 1.0)) break;
            h *= 0.5;
        }
        double d = next - prev;
        if (d > 1.0) d -= 2.0;
        if (d < -1.0) d += 2.0;
        acc += d;
        omega += h;
        prev = next;
        if (out.empty() || omega - out.back().omega >= 0.999 * h0 ||
            omega >= omega_hi - 0.5 * h0)
            out.push_back({omega, next, acc});
    }
    return out;
}

}  // namespace mixcav
