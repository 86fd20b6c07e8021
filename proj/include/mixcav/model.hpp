// Mirror material models and the epsilon <-> Omega parametrization.
//
// Left mirror: lossless plasma metal,    eps_L = 1 - Omega_r^2/Omega^2, mu_L = 1.
// Right mirror: Lorentz-Drude magneto-dielectric with a common resonance,
//   eps_R = 1 + chi_eps*Omega_r^2/(Omega_r^2 - Omega^2),
//   mu_R  = 1 + chi_mu *Omega_r^2/(Omega_r^2 - Omega^2).
//
// Dispersion curves are parametrized by eps_L; Omega(eps) = Omega_r/sqrt(1-eps).

#pragma once

#include <cmath>
#include <complex>

#include "mixcav/common.hpp"

namespace mixcav {

/// Relative half-width of the guard band around the resonance pole.
inline constexpr double pole_guard_rel = 1e-12;

struct CavityModel {
    double chi_eps = 0.25;   ///< static electric susceptibility of the right mirror (> 0)
    double chi_mu = 0.64;    ///< static magnetic susceptibility (sign: para/diamagnetic)
    double omega_r = 1.0;    ///< common resonance / plasma frequency, Omega_r = omega_r * a
    double omega_p = 0.0;    ///< reserved: independent metal plasma frequency (0 = tied to omega_r)

    // Derived constants, always recomputed:
    //   Delta = Omega_r^2 (chi_mu chi_eps + chi_mu + chi_eps), delta = Omega_r^2 chi_mu chi_eps.
    double eps_tilde() const { return 1.0 + chi_eps; }
    double mu_tilde() const { return 1.0 + chi_mu; }
    double delta() const { return omega_r * omega_r * chi_mu * chi_eps; }
    double Delta() const { return omega_r * omega_r * (chi_mu * chi_eps + chi_mu + chi_eps); }

    void validate() const {
        if (!(chi_eps > 0.0)) throw domain_error("CavityModel: chi_eps must be > 0");
        if (!(omega_r > 0.0)) throw domain_error("CavityModel: omega_r must be > 0");
        if (omega_p != 0.0 && omega_p != omega_r)
            throw domain_error(
                "CavityModel: independent omega_p != omega_r is a reserved extension "
                "and is not implemented");
    }
};

/// Model with the susceptibilities used for all reference datasets.
inline CavityModel default_model(double omega_r = 1.0) {
    CavityModel m;
    m.chi_eps = 0.25;
    m.chi_mu = 0.64;
    m.omega_r = omega_r;
    return m;
}

struct ResponsePair {
    double eps = 1.0;
    double mu = 1.0;
};

struct ResponsePairC {
    cdouble eps{1.0, 0.0};
    cdouble mu{1.0, 0.0};
};

/// Plasma metal response; requires omega > 0.
inline ResponsePair eval_metal(const CavityModel& m, double omega) {
    if (!(omega > 0.0)) throw domain_error("eval_metal: omega must be > 0");
    const double r = m.omega_r / omega;
    return {1.0 - r * r, 1.0};
}

inline ResponsePairC eval_metal(const CavityModel& m, cdouble omega) {
    const cdouble r2 = (m.omega_r * m.omega_r) / (omega * omega);
    return {1.0 - r2, cdouble(1.0, 0.0)};
}

/// Lorentz-Drude response of the right mirror. The lossless model has a genuine
/// pole at Omega_r; inside the guard band we refuse to return a huge float.
inline ResponsePair eval_magnetodielectric(const CavityModel& m, double omega) {
    if (!(omega >= 0.0)) throw domain_error("eval_magnetodielectric: omega must be >= 0");
    if (std::abs(omega - m.omega_r) <= pole_guard_rel * m.omega_r)
        throw pole_error("eval_magnetodielectric: evaluation at the resonance pole");
    const double f = m.omega_r * m.omega_r / (m.omega_r * m.omega_r - omega * omega);
    return {1.0 + m.chi_eps * f, 1.0 + m.chi_mu * f};
}

inline ResponsePairC eval_magnetodielectric(const CavityModel& m, cdouble omega) {
    const double wr2 = m.omega_r * m.omega_r;
    const cdouble f = wr2 / (wr2 - omega * omega);
    return {1.0 + m.chi_eps * f, 1.0 + m.chi_mu * f};
}

/// Response of both mirrors at imaginary frequency Omega = i*Xi (Xi > 0); both
/// are real and positive there.
inline ResponsePair eval_metal_imag(const CavityModel& m, double xi) {
    if (!(xi > 0.0)) throw domain_error("eval_metal_imag: xi must be > 0");
    const double r = m.omega_r / xi;
    return {1.0 + r * r, 1.0};
}

inline ResponsePair eval_magnetodielectric_imag(const CavityModel& m, double xi) {
    if (!(xi >= 0.0)) throw domain_error("eval_magnetodielectric_imag: xi must be >= 0");
    const double f = m.omega_r * m.omega_r / (m.omega_r * m.omega_r + xi * xi);
    return {1.0 + m.chi_eps * f, 1.0 + m.chi_mu * f};
}

/// Effective refractive index n_R = sqrt(eps_R mu_R) of the magneto-dielectric,
/// with the sign fixed by the band structure: Re n < 0 in the lefthanded band,
/// Re n > 0 in the righthanded bands, purely imaginary (Im n > 0) in the
/// evanescent bands. Satisfies i*kappa_R(K=0) = n_R * Omega.
inline cdouble refractive_index(const CavityModel& m, double omega) {
    const ResponsePair r = eval_magnetodielectric(m, omega);
    const double p = r.eps * r.mu;
    if (p >= 0.0) {
        const double sign = (r.eps < 0.0 && r.mu < 0.0) ? -1.0 : 1.0;
        return {sign * std::sqrt(p), 0.0};
    }
    return {0.0, std::sqrt(-p)};
}

/// Invert eps_L(Omega): Omega = Omega_r / sqrt(1 - eps); monotone increasing
/// on eps < 1.
inline double omega_from_epsilon(const CavityModel& m, double eps) {
    if (!(eps < 1.0)) throw domain_error("omega_from_epsilon: requires eps < 1");
    return m.omega_r / std::sqrt(1.0 - eps);
}

}  // namespace mixcav
