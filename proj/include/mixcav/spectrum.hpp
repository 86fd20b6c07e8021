// Propagation constants with fixed branch conventions, band limits of both
// mirrors, and the zone classification of the Omega-K quadrant.
//
// kappa_i^2 = z - Omega^2 (eps_i mu_i - 1), kappa_0^2 = z.
//
// The magneto-dielectric band limits are the roots of
//   eps_L^2 z + Delta eps_L - delta = 0
// written in the numerically stable form
//   eps_{+-}(z) = delta / (Delta/2 +- sqrt((Delta/2)^2 + z delta)).
// The +- root label does not map one-to-one onto the geometric branches for
// z < 0; the named branches below are anchored by their K = 0 endpoints:
//   Plus:             upper edge of the totally reflecting band for z < 0,
//                     Omega(K=0) = Omega_r sqrt(1+chi_mu); continued for z >= 0
//                     by the eps_+ root, which decays onto Omega_r as K -> inf.
//   MinusPropagating: lower edge of the totally reflecting band,
//                     z in [-Omega_r^2(1+chi_eps), 0], Omega(K=0) = Omega_r sqrt(1+chi_eps).
//   MinusEvanescent:  low branch for z > 0, rising from the origin (along the
//                     medium light cone) onto Omega_r.
//   Metal:            Omega_m(K) = sqrt(K^2 + Omega_r^2), i.e. z = -Omega_r^2.

#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "mixcav/common.hpp"
#include "mixcav/model.hpp"

namespace mixcav {

enum class Medium { Left, Right, Vacuum };
enum class Pol { S, P };

enum class Zone { I, II, III, IIIa, IV, IVa, V };
enum class MetalRegion { Bulk, Evanescent };
enum class LightCone { Propagating, Evanescent };

inline const char* to_string(Zone t) {
    switch (t) {
        case Zone::I: return "I";
        case Zone::II: return "II";
        case Zone::III: return "III";
        case Zone::IIIa: return "IIIa";
        case Zone::IV: return "IV";
        case Zone::IVa: return "IVa";
        case Zone::V: return "V";
    }
    return "?";
}

inline const char* to_string(Pol p) { return p == Pol::S ? "s" : "p"; }

/// Absolute tolerance for boundary detection in zone classification.
inline constexpr double zone_boundary_tol = 1e-10;

/// sqrt(z) on the real axis: Re >= 0 for z >= 0, Im < 0 for z < 0.
inline cdouble sqrt_z(double z) {
    if (z >= 0.0) return {std::sqrt(z), 0.0};
    return {0.0, -std::sqrt(-z)};
}

/// kappa from an arbitrary local response at a real point, applying the branch
/// rules stated in the header. The lefthanded case is recognized from the
/// response itself (eps < 0 and mu < 0).
inline cdouble kappa_from_response(double eps, double mu, double omega, double k_par) {
    const double z = k_par * k_par - omega * omega;
    const double k2 = z - omega * omega * (eps * mu - 1.0);
    if (k2 >= 0.0) return {std::sqrt(k2), 0.0};
    const double mag = std::sqrt(-k2);
    const bool lefthanded = (eps < 0.0 && mu < 0.0);
    return {0.0, lefthanded ? mag : -mag};
}

/// Propagation constant in one medium at a real (Omega, K) point.
inline cdouble kappa(const CavityModel& m, double omega, double k_par, Medium med) {
    if (!(omega > 0.0) && !(omega == 0.0 && k_par > 0.0))
        throw domain_error("kappa: requires omega > 0 (or omega = 0 with k_par > 0)");
    switch (med) {
        case Medium::Vacuum:
            return sqrt_z(k_par * k_par - omega * omega);
        case Medium::Left: {
            // kappa_L^2 = z + Omega_r^2, independent of Omega for the plasma model.
            const double k2 = k_par * k_par - omega * omega + m.omega_r * m.omega_r;
            if (k2 >= 0.0) return {std::sqrt(k2), 0.0};
            return {0.0, -std::sqrt(-k2)};
        }
        case Medium::Right: {
            const ResponsePair r = eval_magnetodielectric(m, omega);
            return kappa_from_response(r.eps, r.mu, omega, k_par);
        }
    }
    throw domain_error("kappa: bad medium");
}

/// Complex-frequency propagation constant (retarded prescription): the
/// principal square root keeps Re kappa >= 0 and reproduces every lossless
/// sign rule in the limit of vanishing loss.
inline cdouble kappa_complex(cdouble eps, cdouble mu, cdouble omega, double k_par) {
    const cdouble z = k_par * k_par - omega * omega;
    return std::sqrt(z - omega * omega * (eps * mu - 1.0));
}

// ---------------------------------------------------------------------------
// Magneto-dielectric band limits.

/// Both roots of eps^2 z + Delta eps - delta = 0 as (eps_plus, eps_minus).
/// Requires (Delta/2)^2 + z delta >= 0.
inline std::pair<double, double> band_limit_epsilons(const CavityModel& m, double z) {
    const double hD = 0.5 * m.Delta();
    const double d = m.delta();
    const double disc = hD * hD + z * d;
    if (disc < 0.0)
        throw domain_error("band_limit_epsilons: negative discriminant (z below band support)");
    const double s = std::sqrt(disc);
    return {d / (hD + s), d / (hD - s)};
}

inline double eps_band_plus(const CavityModel& m, double z) {
    return band_limit_epsilons(m, z).first;
}
inline double eps_band_minus(const CavityModel& m, double z) {
    return band_limit_epsilons(m, z).second;
}

/// Lower edge of the totally reflecting band: eps_+ root, z >= -Omega_r^2*(1+chi_eps);
/// decreases from Omega_r sqrt(1+chi_eps) at K=0 onto Omega_r as K -> infinity.
/// For z > 0 it is the upper boundary of the bulk continuum.
inline double omega_band_lower_edge(const CavityModel& m, double z) {
    const double zmin = -m.omega_r * m.omega_r * m.eps_tilde();
    if (z < zmin) throw domain_error("omega_band_lower_edge: z below branch support");
    return omega_from_epsilon(m, eps_band_plus(m, z));
}

/// Upper edge of the totally reflecting band: eps_- root on
/// z in [-Omega_r^2(1+chi_mu), delta - Delta); rises from Omega_r sqrt(1+chi_mu)
/// at K=0 and hugs the vacuum light cone at large K.
inline double omega_band_upper_edge(const CavityModel& m, double z) {
    const double zmin = -m.omega_r * m.omega_r * m.mu_tilde();
    const double zmax = m.delta() - m.Delta();
    if (z < zmin || z >= zmax)
        throw domain_error("omega_band_upper_edge: z outside branch support");
    return omega_from_epsilon(m, eps_band_minus(m, z));
}

/// Low branch for z > 0: eps_- root (negative), rising from the origin along
/// the medium light cone onto Omega_r.
inline double omega_band_low_branch(const CavityModel& m, double z) {
    if (!(z > 0.0)) throw domain_error("omega_band_low_branch: requires z > 0");
    return omega_from_epsilon(m, eps_band_minus(m, z));
}

inline double omega_metal_band(const CavityModel& m, double k_par) {
    return std::sqrt(k_par * k_par + m.omega_r * m.omega_r);
}

enum class BandBranch { Plus, MinusEvanescent, MinusPropagating, Metal };

inline const char* to_string(BandBranch b) {
    switch (b) {
        case BandBranch::Plus: return "plus";
        case BandBranch::MinusEvanescent: return "minus_evanescent";
        case BandBranch::MinusPropagating: return "minus_propagating";
        case BandBranch::Metal: return "metal";
    }
    return "?";
}

/// Omega on a named branch at parameter z (Metal accepts any z >= -Omega_r^2
/// through K^2 = z + Omega^2 with z fixed at -Omega_r^2; use omega_metal_band
/// for the K parametrization).
inline double band_omega(const CavityModel& m, BandBranch b, double z) {
    const double wr2 = m.omega_r * m.omega_r;
    switch (b) {
        case BandBranch::Plus:
            // Two arcs: the upper band edge for z < 0 and the eps_+ root for z >= 0.
            if (z >= 0.0) return omega_from_epsilon(m, eps_band_plus(m, z));
            return omega_band_upper_edge(m, z);
        case BandBranch::MinusPropagating:
            if (z > 0.0 || z < -wr2 * m.eps_tilde())
                throw domain_error("band_omega: MinusPropagating requires z in [-Omega_r^2(1+chi_eps), 0]");
            return omega_band_lower_edge(m, z);
        case BandBranch::MinusEvanescent:
            return omega_band_low_branch(m, z);
        case BandBranch::Metal:
            throw domain_error("band_omega: Metal branch is K-parametrized; use omega_metal_band");
    }
    throw domain_error("band_omega: bad branch");
}

// ---------------------------------------------------------------------------
// Sampled curves.

/// A tracked dispersion branch, stored as {z_j -> Omega_j} with K recovered
/// on demand from K = sqrt(z + Omega^2).
struct ModeCurve {
    std::string label;
    std::vector<double> z;
    std::vector<double> omega;
    double z_end = 0.0;       ///< lower endpoint of the parameter range
    double omega_inf = 0.0;   ///< asymptote Omega(z -> infinity)

    double k_at(std::size_t j) const {
        const double k2 = z[j] + omega[j] * omega[j];
        return k2 > 0.0 ? std::sqrt(k2) : 0.0;
    }
};

/// Geometric grid in |z| between band-structure anchors, suitable for curve
/// sampling (resolves both the large-z plateau and the tangent-point region).
inline std::vector<double> geometric_grid(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    if (n == 1) {
        g[0] = lo;
        return g;
    }
    // geometric in (x - lo + eps) to concentrate points near lo
    const double eps = 1e-9 * (std::abs(lo) + std::abs(hi) + 1.0);
    const double a = std::log(eps), b = std::log(hi - lo + eps);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = a + (b - a) * double(i) / double(n - 1);
        g[i] = lo + std::exp(t) - eps;
    }
    g.front() = lo;
    g.back() = hi;
    return g;
}

inline ModeCurve band_limit_curve(const CavityModel& m, BandBranch b,
                                  const std::vector<double>& grid) {
    ModeCurve c;
    c.label = to_string(b);
    c.z.reserve(grid.size());
    c.omega.reserve(grid.size());
    for (double g : grid) {
        double w;
        if (b == BandBranch::Metal) {
            w = omega_metal_band(m, g);  // grid holds K values
            c.z.push_back(-m.omega_r * m.omega_r);
        } else {
            w = band_omega(m, b, g);
            c.z.push_back(g);
        }
        c.omega.push_back(w);
    }
    switch (b) {
        case BandBranch::Plus:
            c.z_end = -m.omega_r * m.omega_r * m.mu_tilde();
            c.omega_inf = m.omega_r;
            break;
        case BandBranch::MinusPropagating:
            c.z_end = -m.omega_r * m.omega_r * m.eps_tilde();
            c.omega_inf = omega_band_lower_edge(m, 0.0);
            break;
        case BandBranch::MinusEvanescent:
            c.z_end = 0.0;
            c.omega_inf = m.omega_r;
            break;
        case BandBranch::Metal:
            c.z_end = -m.omega_r * m.omega_r;
            c.omega_inf = 0.0;  // unbounded in K
            break;
    }
    return c;
}

// ---------------------------------------------------------------------------
// Zone classification.

/// Classify a point of the Omega-K quadrant. Throws boundary_error within
/// zone_boundary_tol of a limiting curve.
inline Zone classify_zone(const CavityModel& m, double omega, double k_par) {
    if (!(omega >= 0.0) || !(k_par >= 0.0))
        throw domain_error("classify_zone: requires omega >= 0 and k_par >= 0");
    if (std::abs(omega - m.omega_r) <= zone_boundary_tol)
        throw boundary_error("classify_zone: point on the resonance line");

    const ResponsePair r = eval_magnetodielectric(m, omega);
    const double z = k_par * k_par - omega * omega;
    const double kR2 = z - omega * omega * (r.eps * r.mu - 1.0);
    const double kL2 = z + m.omega_r * m.omega_r;
    if (std::abs(kR2) <= zone_boundary_tol)
        throw boundary_error("classify_zone: point on a magneto-dielectric band limit");

    const bool metal_bulk = kL2 < 0.0;  // equivalently Omega > Omega_m(K)
    if (kR2 > 0.0) {
        if (omega < m.omega_r) return Zone::I;
        return metal_bulk ? Zone::IVa : Zone::IV;
    }
    if (omega < m.omega_r) return Zone::II;
    if (r.eps < 0.0 && r.mu < 0.0) return metal_bulk ? Zone::IIIa : Zone::III;
    return Zone::V;
}

inline MetalRegion metal_region(const CavityModel& m, double omega, double k_par) {
    const double kL2 = k_par * k_par - omega * omega + m.omega_r * m.omega_r;
    if (std::abs(kL2) <= zone_boundary_tol)
        throw boundary_error("metal_region: point on the metal band limit");
    return kL2 < 0.0 ? MetalRegion::Bulk : MetalRegion::Evanescent;
}

inline LightCone light_cone_side(double omega, double k_par) {
    const double z = k_par * k_par - omega * omega;
    if (std::abs(z) <= zone_boundary_tol)
        throw boundary_error("light_cone_side: point on the light cone");
    return z < 0.0 ? LightCone::Propagating : LightCone::Evanescent;
}

/// A spectral sample with all propagation constants and the zone tag.
struct SpectralPoint {
    double omega = 0.0;
    double k_par = 0.0;
    double z = 0.0;
    cdouble kappa_L, kappa_R, kappa_0;
    Zone zone = Zone::I;
};

inline SpectralPoint make_spectral_point(const CavityModel& m, double omega, double k_par) {
    SpectralPoint p;
    p.omega = omega;
    p.k_par = k_par;
    p.z = k_par * k_par - omega * omega;
    p.kappa_L = kappa(m, omega, k_par, Medium::Left);
    p.kappa_R = kappa(m, omega, k_par, Medium::Right);
    p.kappa_0 = kappa(m, omega, k_par, Medium::Vacuum);
    p.zone = classify_zone(m, omega, k_par);
    return p;
}

}  // namespace mixcav
