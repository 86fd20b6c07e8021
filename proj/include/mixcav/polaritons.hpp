// Surface-polariton dispersion relations: closed-form isolated branches,
// coupled cavity branches (s in closed form, p through a quartic with
// physical-root selection), tangent points, and the extended isolated curves
// used to close the mode-energy contours.
//
// Everything is parametrized by z = K^2 - Omega^2 through eps_L. For z < 0 the
// coupling factors are continued with z = -y^2, sqrt(z) = -i y, which turns
// every equation into a purely real one; only real-valued combinations
// (T_0 T_s, T_0^2, T_s^2, sqrt(z) C_sigma, z C_s^2) enter the solvers.

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "mixcav/common.hpp"
#include "mixcav/model.hpp"
#include "mixcav/optics.hpp"
#include "mixcav/quartic.hpp"
#include "mixcav/roots.hpp"
#include "mixcav/spectrum.hpp"

namespace mixcav {

enum class ModeLabel { S0Plus, P0Plus, P0Minus, SPlus, PPlus, PMinus };

inline const char* to_string(ModeLabel l) {
    switch (l) {
        case ModeLabel::S0Plus: return "s0+";
        case ModeLabel::P0Plus: return "p0+";
        case ModeLabel::P0Minus: return "p0-";
        case ModeLabel::SPlus: return "s+";
        case ModeLabel::PPlus: return "p+";
        case ModeLabel::PMinus: return "p-";
    }
    return "?";
}

inline bool is_coupled(ModeLabel l) {
    return l == ModeLabel::SPlus || l == ModeLabel::PPlus || l == ModeLabel::PMinus;
}

inline ModeLabel isolated_partner(ModeLabel l) {
    switch (l) {
        case ModeLabel::SPlus: return ModeLabel::S0Plus;
        case ModeLabel::PPlus: return ModeLabel::P0Plus;
        case ModeLabel::PMinus: return ModeLabel::P0Minus;
        default: return l;
    }
}

inline Pol polarization_of(ModeLabel l) {
    return (l == ModeLabel::S0Plus || l == ModeLabel::SPlus) ? Pol::S : Pol::P;
}

// ---------------------------------------------------------------------------
// Real-valued coupling combinations (valid for z > -Omega_r^2).

namespace detail {

inline void require_above_ts_pole(const CavityModel& m, double z) {
    if (z <= -m.omega_r * m.omega_r)
        throw pole_error("coupling factors: z <= -Omega_r^2 (T_s pole / complex region)");
}

inline double t0_sq(double z) {
    if (z >= 0.0) {
        const double t = std::tanh(std::sqrt(z));
        return t * t;
    }
    const double t = std::tan(std::sqrt(-z));
    return -t * t;
}

inline double ts_sq(const CavityModel& m, double z) {
    require_above_ts_pole(m, z);
    return z / (z + m.omega_r * m.omega_r);
}

inline double t0_ts(const CavityModel& m, double z) {
    require_above_ts_pole(m, z);
    if (z >= 0.0) {
        const double s = std::sqrt(z);
        return std::tanh(s) * s / std::sqrt(z + m.omega_r * m.omega_r);
    }
    const double y = std::sqrt(-z);
    return -y * std::tan(y) / std::sqrt(m.omega_r * m.omega_r - y * y);
}

// t0_sq/z, ts_sq/z, t0_ts/z with stable z -> 0 limits (1, 1/Omega_r^2, 1/Omega_r).
inline double t0_sq_over_z(double z) {
    if (std::abs(z) < 1e-12) return 1.0 - z / 1.5;
    return t0_sq(z) / z;
}
inline double ts_sq_over_z(const CavityModel& m, double z) {
    require_above_ts_pole(m, z);
    return 1.0 / (z + m.omega_r * m.omega_r);
}
inline double t0_ts_over_z(const CavityModel& m, double z) {
    require_above_ts_pole(m, z);
    if (std::abs(z) < 1e-12)
        return (1.0 - z / 3.0) / std::sqrt(z + m.omega_r * m.omega_r);
    return t0_ts(m, z) / z;
}

/// sqrt(z) C_s, real for all z > -Omega_r^2; vanishes at the s+ tangent point
/// and tends to Omega_r/(1+Omega_r) as z -> 0.
inline double sqrtz_cs(const CavityModel& m, double z) {
    require_above_ts_pole(m, z);
    const double wr = m.omega_r;
    if (z > 1e-24) {
        const double s = std::sqrt(z);
        const double T0 = std::tanh(s);
        const double Ts = s / std::sqrt(z + wr * wr);
        return s * (1.0 + T0 * Ts) / (Ts + T0);
    }
    if (z >= 0.0) return wr / (1.0 + wr);
    const double y = std::sqrt(-z);
    const double tn = std::tan(y);
    const double root = std::sqrt(wr * wr - y * y);
    return y * (1.0 + (-y * tn / root)) / (tn + y / root);
}

/// z C_s^2 = (sqrt(z) C_s)^2.
inline double z_cs_sq(const CavityModel& m, double z) {
    const double v = sqrtz_cs(m, z);
    return v * v;
}

/// sqrt(z) C_p at a given eps_L, real for z > -Omega_r^2.
inline double sqrtz_cp(const CavityModel& m, double z, double eps_l) {
    require_above_ts_pole(m, z);
    const double wr = m.omega_r;
    const double P = t0_ts(m, z);
    if (z >= 0.0) {
        const double s = std::sqrt(z);
        const double T0 = std::tanh(s);
        const double Ts = s / std::sqrt(z + wr * wr);
        return s * (1.0 + eps_l * P) / (eps_l * Ts + T0);
    }
    const double y = std::sqrt(-z);
    const double tn = std::tan(y);
    const double root = std::sqrt(wr * wr - y * y);
    return y * (1.0 + eps_l * P) / (eps_l * y / root + tn);
}

/// Real kappa in the evanescent zones; rejects propagating points.
inline double kappa_right_real(const CavityModel& m, double omega, double k_par) {
    const ResponsePair r = eval_magnetodielectric(m, omega);
    const double z = k_par * k_par - omega * omega;
    const double k2 = z - omega * omega * (r.eps * r.mu - 1.0);
    if (k2 < 0.0) return std::nan("");
    return std::sqrt(k2);
}

}  // namespace detail

/// Coupling factors of the cavity-mode condition at a given z:
///   T_0 = tanh(sqrt z), T_s = sqrt(z/(z+Omega_r^2)), T_p = eps_L T_s,
///   C_sigma = (1 + T_0 T_sigma)/(T_sigma + T_0).
/// Complex-capable for z < 0 with the global sqrt(z) convention (Im < 0).
struct CouplingFactors {
    cdouble t0, ts, cs;
    double t0ts = 0.0;   ///< T_0 T_s (real for z > -Omega_r^2)
    double zcs2 = 0.0;   ///< z C_s^2 (real)
    double sqrtz_cs = 0.0;

    cdouble tp(double eps_l) const { return eps_l * ts; }
    cdouble cp(double eps_l) const { return (1.0 + eps_l * t0ts) / (eps_l * ts + t0); }
};

inline CouplingFactors coupling_factors(const CavityModel& m, double z) {
    detail::require_above_ts_pole(m, z);
    CouplingFactors f;
    const double wr = m.omega_r;
    if (z >= 0.0) {
        const double s = std::sqrt(z);
        f.t0 = std::tanh(s);
        f.ts = s / std::sqrt(z + wr * wr);
    } else {
        const double y = std::sqrt(-z);
        f.t0 = cdouble(0.0, -std::tan(y));
        f.ts = cdouble(0.0, -y / std::sqrt(wr * wr - y * y));
    }
    f.t0ts = detail::t0_ts(m, z);
    f.cs = (1.0 + f.t0 * f.ts) / (f.ts + f.t0);
    f.sqrtz_cs = detail::sqrtz_cs(m, z);
    f.zcs2 = f.sqrtz_cs * f.sqrtz_cs;
    return f;
}

// ---------------------------------------------------------------------------
// Tangent points.

/// Parameter z_alpha at which a coupled branch terminates tangentially on a
/// band limit. s+: unique root of y tan y = sqrt(Omega_r^2 - y^2) in
/// (0, min(Omega_r, pi/2)), z = -y^2. p+: root of the corresponding condition
/// against the lower band edge. p-: root of the z > 0 condition against the
/// low branch; returns 0 below the existence threshold
/// Omega_r = (chi_eps + chi_mu + chi_eps chi_mu)^{-1}.
inline double tangent_point(const CavityModel& m, ModeLabel label) {
    m.validate();
    const double wr = m.omega_r;
    const double yhi = std::min(wr, 0.5 * pi) * (1.0 - 1e-13);
    switch (label) {
        case ModeLabel::SPlus: {
            if (m.chi_mu == 0.0)
                throw no_root_error("tangent_point: no s-polariton for chi_mu = 0");
            auto f = [&](double y) {
                return y * std::tan(y) - std::sqrt(wr * wr - y * y);
            };
            const double y = brent(f, 1e-14, yhi, 1e-15);
            return -y * y;
        }
        case ModeLabel::PPlus: {
            auto f = [&](double y) {
                return eps_band_plus(m, -y * y) -
                       std::sqrt(wr * wr - y * y) / (y * std::tan(y));
            };
            const double y = brent(f, 1e-9, yhi, 1e-15);
            return -y * y;
        }
        case ModeLabel::PMinus: {
            auto sqz_coth = [](double z) {
                // sqrt(z) coth(sqrt(z)), stable near z = 0
                if (z < 1e-8) return 1.0 + z / 3.0 - z * z / 45.0;
                const double s = std::sqrt(z);
                return s / std::tanh(s);
            };
            auto g = [&](double z) {
                const double hD = 0.5 * m.Delta();
                return sqz_coth(z) * std::sqrt(z + wr * wr) - hD -
                       std::sqrt(hD * hD + m.delta() * z);
            };
            if (g(0.0) >= 0.0) return 0.0;  // below threshold: branch reaches z = 0
            double hi = wr * wr + 1.0;
            while (g(hi) < 0.0) hi *= 2.0;
            return brent(g, 0.0, hi, 1e-14);
        }
        default:
            throw domain_error("tangent_point: label must be a coupled mode");
    }
}

// ---------------------------------------------------------------------------
// Isolated branches.

namespace detail {

/// Smaller root of A e^2 + 2 B e - C = 0 written against cancellation as
/// e = C / (B + sqrt(B^2 + A C)); inputs are pre-multiplied by z for stability
/// near z = 0.
inline double stable_quadratic_root(double a2, double b2, double c2) {
    const double disc = b2 * b2 + a2 * c2;
    if (disc < 0.0) throw domain_error("dispersion quadratic: negative discriminant");
    return c2 / (b2 + std::sqrt(disc));
}

inline double isolated_eps(const CavityModel& m, ModeLabel label, double z) {
    const double d = m.delta(), D = m.Delta();
    switch (label) {
        case ModeLabel::S0Plus: {
            if (m.chi_mu <= 0.0)
                throw domain_error("isolated_eps: s0+ requires chi_mu > 0");
            const double chi = m.chi_mu, tl = m.mu_tilde();
            // z*A, z*B, z*C of the squared condition
            const double a2 = z * (1.0 - tl * t1_unused_placeholder(tl)) / chi;
            (void)a2;
            break;
        }
        default: break;
    }
    // (the switch above is replaced below; see isolated_eps_impl)
    (void)d;
    (void)D;
    throw domain_error("unreachable");
}

inline double t1_unused_placeholder(double) { return 0.0; }

}  // namespace detail

namespace detail {

/// eps_L of an isolated branch at z > 0 (z = 0 returns the band-edge limit).
inline double isolated_eps_impl(const CavityModel& m, ModeLabel label, double z) {
    const double d = m.delta(), D = m.Delta();
    switch (label) {
        case ModeLabel::S0Plus:
        case ModeLabel::P0Plus: {
            const bool s_pol = (label == ModeLabel::S0Plus);
            const double chi = s_pol ? m.chi_mu : m.chi_eps;
            const double tl = s_pol ? m.mu_tilde() : m.eps_tilde();
            if (chi <= 0.0) throw domain_error("isolated_eps: branch requires chi > 0");
            if (z < 0.0) throw domain_error("isolated_eps: isolated branches need z >= 0");
            // z*A, z*B, z*C with A = (1 - tl^2)/chi, B = tl + D/(2 z chi),
            // C = chi + d/(z chi)
            const double a2 = z * (1.0 - tl * tl) / chi;
            const double b2 = z * tl + 0.5 * D / chi;
            const double c2 = z * chi + d / chi;
            return stable_quadratic_root(a2, b2, c2);
        }
        case ModeLabel::P0Minus: {
            if (!(z > 0.0)) throw domain_error("isolated_eps: p0- requires z > 0");
            return -std::sqrt(1.0 + m.omega_r * m.omega_r / z);
        }
        default:
            throw domain_error("isolated_eps: label must be an isolated mode");
    }
}

}  // namespace detail

/// Frequency of an isolated branch at parameter z; the returned value is
/// checked against the unsquared pole condition.
inline double isolated_dispersion(const CavityModel& m, ModeLabel label, double z) {
    const double eps = detail::isolated_eps_impl(m, label, z);
    const double omega = omega_from_epsilon(m, eps);
    if (z > 0.0) {
        const double sq = std::sqrt(z);
        double lhs, kap;
        if (label == ModeLabel::P0Minus) {
            kap = std::sqrt(z + m.omega_r * m.omega_r);
            lhs = eps * sq;
        } else {
            kap = detail::kappa_right_real(m, omega, std::sqrt(z + omega * omega));
            const ResponsePair r = eval_magnetodielectric(m, omega);
            lhs = (label == ModeLabel::S0Plus ? r.mu : r.eps) * sq;
        }
        const double res = std::abs(lhs + kap);
        if (!(res < 1e-9 * (1.0 + std::abs(lhs) + std::abs(kap))))
            throw spurious_root_error("isolated_dispersion: unsquared check failed");
    }
    return omega;
}

// ---------------------------------------------------------------------------
// Coupled branches.

/// Omega_{s+}(z) for z >= z_{s+}; closed form with the C_s coupling, verified
/// against the unsquared condition mu_R sqrt(z) C_s = -kappa_R.
inline double coupled_s_dispersion(const CavityModel& m, double z) {
    if (m.chi_mu <= 0.0)
        throw domain_error("coupled_s_dispersion: requires chi_mu > 0");
    const double chi = m.chi_mu, tl = m.mu_tilde();
    const double zc2 = detail::z_cs_sq(m, z);
    const double a2 = (z - tl * tl * zc2) / chi;
    const double b2 = tl * zc2 + 0.5 * m.Delta() / chi;
    const double c2 = chi * zc2 + m.delta() / chi;
    const double eps = detail::stable_quadratic_root(a2, b2, c2);
    double omega = omega_from_epsilon(m, eps);

    // polish + verify on the unsquared condition (real in the evanescent zone)
    auto g = [&](double w) {
        const double k2 = z + w * w;
        if (k2 < 0.0) return std::nan("");
        const ResponsePair r = eval_magnetodielectric(m, w);
        const double kap = detail::kappa_right_real(m, w, std::sqrt(k2));
        return r.mu * detail::sqrtz_cs(m, z) + kap;
    };
    const double g0 = g(omega);
    if (std::isnan(g0)) throw spurious_root_error("coupled_s_dispersion: propagating point");
    double w = omega;
    for (int it = 0; it < 2; ++it) {
        const double h = 1e-7 * w;
        const double gp = (g(w + h) - g(w - h)) / (2.0 * h);
        if (!std::isfinite(gp) || gp == 0.0) break;
        w -= g(w) / gp;
    }
    if (std::isfinite(w) && std::abs(w - omega) < 1e-6 * omega) omega = w;
    const ResponsePair r = eval_magnetodielectric(m, omega);
    const double kap = detail::kappa_right_real(m, omega, std::sqrt(z + omega * omega));
    const double lhs = r.mu * detail::sqrtz_cs(m, z);
    if (!(std::abs(lhs + kap) < 1e-9 * (1.0 + std::abs(lhs) + std::abs(kap))))
        throw spurious_root_error("coupled_s_dispersion: unsquared check failed");
    return omega;
}

struct CoupledPRoots {
    std::optional<double> omega_plus;   ///< antibinding branch, Omega > Omega_r
    std::optional<double> omega_minus;  ///< binding branch, Omega < Omega_r
};

namespace detail {

/// Coefficients (ascending) of the quartic in eps_L equivalent to
/// [(1+chi_eps) eps - chi_eps]^2 (1 + eps T0 Ts)^2
///   = (eps Ts + T0)^2 (eps^2 + Delta eps / z - delta / z),
/// with the 1/z factors absorbed into T^2/z forms so z -> 0 stays finite.
inline std::array<double, 5> coupled_p_quartic(const CavityModel& m, double z) {
    const double et = m.eps_tilde(), ce = m.chi_eps;
    const double D = m.Delta(), d = m.delta();
    const double P = t0_ts(m, z);
    const double Ts2 = ts_sq(m, z), T02 = t0_sq(z);
    const double Ts2_z = ts_sq_over_z(m, z), T02_z = t0_sq_over_z(z);
    const double P_z = t0_ts_over_z(m, z);
    const double a = et * P, b = et - ce * P, c = -ce;
    std::array<double, 5> q{};
    q[4] = a * a - Ts2;
    q[3] = 2.0 * a * b - 2.0 * P - Ts2_z * D;
    q[2] = 2.0 * a * c + b * b - T02 - 2.0 * P_z * D + Ts2_z * d;
    q[1] = 2.0 * b * c - T02_z * D + 2.0 * P_z * d;
    q[0] = c * c + T02_z * d;
    return q;
}

/// Verify a p-root against the unsquared condition eps_R sqrt(z) C_p = -kappa_R
/// and polish it there. Returns the polished Omega or nullopt.
inline std::optional<double> verify_p_root(const CavityModel& m, double z, double eps) {
    if (!(eps < 1.0)) return std::nullopt;
    double omega;
    try {
        omega = omega_from_epsilon(m, eps);
    } catch (const domain_error&) {
        return std::nullopt;
    }
    const double k2 = z + omega * omega;
    if (k2 < 0.0) return std::nullopt;
    auto g = [&](double w) {
        const double kk2 = z + w * w;
        if (kk2 < 0.0) return std::nan("");
        const ResponsePair r = eval_magnetodielectric(m, w);
        const double kap = kappa_right_real(m, w, std::sqrt(kk2));
        const double el = 1.0 - m.omega_r * m.omega_r / (w * w);
        return r.eps * sqrtz_cp(m, z, el) + kap;
    };
    double g0 = g(omega);
    if (std::isnan(g0)) return std::nullopt;
    double w = omega;
    for (int it = 0; it < 3; ++it) {
        const double h = 1e-7 * w;
        const double gl = g(w - h), gr = g(w + h);
        if (std::isnan(gl) || std::isnan(gr)) break;
        const double gp = (gr - gl) / (2.0 * h);
        if (!std::isfinite(gp) || gp == 0.0) break;
        const double step = g(w) / gp;
        if (!std::isfinite(step)) break;
        w -= step;
        if (std::abs(step) < 1e-16 * w) break;
    }
    if (!std::isfinite(w) || std::abs(w - omega) > 1e-4 * omega) w = omega;
    const double res = g(w);
    const ResponsePair r = eval_magnetodielectric(m, w);
    const double el = 1.0 - m.omega_r * m.omega_r / (w * w);
    const double scale =
        1.0 + std::abs(r.eps * sqrtz_cp(m, z, el)) +
        std::abs(kappa_right_real(m, w, std::sqrt(z + w * w)));
    if (std::isnan(res) || !(std::abs(res) < 1e-8 * scale)) return std::nullopt;
    return w;
}

}  // namespace detail

/// Both coupled p-branches at parameter z. Quartic roots are filtered by
/// reality, eps < 1, and the unsquared condition; the antibinding root has
/// eps in (0, 1) (Omega > Omega_r), the binding one eps < 0. Optional seeds
/// keep continuation on branch near avoided degeneracies.
inline CoupledPRoots coupled_p_dispersion(const CavityModel& m, double z,
                                          std::optional<double> seed_plus = std::nullopt,
                                          std::optional<double> seed_minus = std::nullopt) {
    const auto q = detail::coupled_p_quartic(m, z);
    std::vector<double> coeffs(q.begin(), q.end());
    const auto roots = poly_real_roots(coeffs, 1e-7);
    CoupledPRoots out;
    double best_plus = 0.0, best_minus = 0.0;
    for (double eps : roots) {
        auto w = detail::verify_p_root(m, z, eps);
        if (!w) continue;
        if (eps > 0.0) {
            if (!out.omega_plus ||
                (seed_plus && std::abs(*w - *seed_plus) < std::abs(best_plus - *seed_plus))) {
                out.omega_plus = *w;
                best_plus = *w;
            }
        } else {
            if (!out.omega_minus ||
                (seed_minus &&
                 std::abs(*w - *seed_minus) < std::abs(best_minus - *seed_minus))) {
                out.omega_minus = *w;
                best_minus = *w;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Extended isolated curves and tracing.

/// Crossing point z_{p0-} where the isolated metal plasmon meets the low band
/// branch (eps_-(z) = eps_{p0-}(z)).
inline double isolated_p0minus_crossing(const CavityModel& m) {
    auto f = [&](double z) {
        return eps_band_minus(m, z) - detail::isolated_eps_impl(m, ModeLabel::P0Minus, z);
    };
    double lo = 1e-9 * m.omega_r * m.omega_r, hi = lo;
    // f < 0 near 0, > 0 at large z
    while (f(lo) > 0.0 && lo > 1e-300) lo *= 0.1;
    hi = std::max(1.0, m.omega_r * m.omega_r);
    while (f(hi) < 0.0) hi *= 2.0;
    return brent(f, lo, hi, 1e-14);
}

/// Extended isolated curve Omega-bar_{alpha 0}(z): the isolated branch where it
/// exists, continued along the appropriate band limit down to the coupled
/// branch's tangent point.
inline double extended_isolated(const CavityModel& m, ModeLabel label, double z) {
    const ModeLabel coupled =
        is_coupled(label) ? label
                          : (label == ModeLabel::S0Plus   ? ModeLabel::SPlus
                             : label == ModeLabel::P0Plus ? ModeLabel::PPlus
                                                          : ModeLabel::PMinus);
    const double z_alpha = tangent_point(m, coupled);
    if (z < z_alpha - 1e-12)
        throw domain_error("extended_isolated: z below the coupled tangent point");
    switch (coupled) {
        case ModeLabel::SPlus:
        case ModeLabel::PPlus: {
            if (z >= 0.0)
                return isolated_dispersion(
                    m, coupled == ModeLabel::SPlus ? ModeLabel::S0Plus : ModeLabel::P0Plus,
                    z);
            return omega_band_lower_edge(m, z);
        }
        case ModeLabel::PMinus: {
            const double z_cross = isolated_p0minus_crossing(m);
            if (z >= z_cross) return isolated_dispersion(m, ModeLabel::P0Minus, z);
            return omega_band_low_branch(m, std::max(z, 1e-300));
        }
        default:
            throw domain_error("extended_isolated: bad label");
    }
}

/// Residual 1 - r_L r_R exp(-2 sqrt z) of the cavity-mode condition at a real
/// point (lossless branch rules).
inline cdouble mode_residual(const CavityModel& m, double omega, double k_par, Pol pol) {
    const double z = k_par * k_par - omega * omega;
    const cdouble rl = reflection(m, omega, k_par, pol, Side::Left);
    const cdouble rr = reflection(m, omega, k_par, pol, Side::Right);
    return 1.0 - rl * rr * std::exp(-2.0 * sqrt_z(z));
}

/// Coupled branch frequency at parameter z (dispatch over branches).
inline double coupled_dispersion(const CavityModel& m, ModeLabel label, double z,
                                 std::optional<double> seed = std::nullopt) {
    switch (label) {
        case ModeLabel::SPlus:
            return coupled_s_dispersion(m, z);
        case ModeLabel::PPlus: {
            auto r = coupled_p_dispersion(m, z, seed, std::nullopt);
            if (!r.omega_plus) throw no_root_error("coupled_dispersion: no p+ root at this z");
            return *r.omega_plus;
        }
        case ModeLabel::PMinus: {
            auto r = coupled_p_dispersion(m, z, std::nullopt, seed);
            if (!r.omega_minus) throw no_root_error("coupled_dispersion: no p- root at this z");
            return *r.omega_minus;
        }
        default:
            return isolated_dispersion(m, label, z);
    }
}

/// Trace a coupled branch on a geometric grid from large z down to its tangent
/// point, seeding each solve with the previous root.
inline ModeCurve trace_mode(const CavityModel& m, ModeLabel label, std::size_t n = 400,
                            double z_hi = 1e6) {
    ModeCurve c;
    c.label = to_string(label);
    const double z_alpha = is_coupled(label) ? tangent_point(m, label) : 0.0;
    c.z_end = z_alpha;
    const double clip = z_alpha + 1e-10 * (1.0 + std::abs(z_alpha));
    auto grid = geometric_grid(clip, z_hi, n);
    c.z.resize(grid.size());
    c.omega.resize(grid.size());
    std::optional<double> seed;
    // trace downward (from the asymptotic anchor) to prevent branch hopping
    for (std::size_t i = grid.size(); i-- > 0;) {
        const double z = grid[i];
        const double w = coupled_dispersion(m, label, z, seed);
        c.z[i] = z;
        c.omega[i] = w;
        seed = w;
    }
    switch (label) {
        case ModeLabel::SPlus:
        case ModeLabel::S0Plus:
            c.omega_inf = m.omega_r * std::sqrt(0.5 * (m.mu_tilde() + 1.0));
            break;
        case ModeLabel::PPlus:
        case ModeLabel::P0Plus:
            c.omega_inf = m.omega_r * std::sqrt(0.5 * (m.eps_tilde() + 1.0));
            break;
        case ModeLabel::PMinus:
        case ModeLabel::P0Minus:
            c.omega_inf = m.omega_r / std::sqrt(2.0);
            break;
    }
    return c;
}

/// Frequency of a coupled/isolated branch at fixed K (solves K(z) = K along
/// the curve); nullopt when the branch has no point at this K.
inline std::optional<double> omega_at_k(const CavityModel& m, ModeLabel label, double k_par,
                                        double z_hi = 1e6) {
    double z_lo;
    if (is_coupled(label)) {
        z_lo = tangent_point(m, label) + 1e-12;
    } else if (label == ModeLabel::P0Minus) {
        z_lo = 1e-12 * m.omega_r * m.omega_r;
    } else {
        z_lo = 1e-12 * m.omega_r * m.omega_r;
    }
    auto kk = [&](double z) {
        const double w = coupled_dispersion(m, label, z);
        return z + w * w - k_par * k_par;
    };
    double f_lo, f_hi;
    try {
        f_lo = kk(z_lo);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    const double cap = std::max(z_hi, k_par * k_par * 2.0 + 10.0);
    f_hi = kk(cap);
    if (f_lo * f_hi > 0.0) return std::nullopt;
    const double z = brent(kk, z_lo, cap, 1e-13);
    return coupled_dispersion(m, label, z);
}

}  // namespace mixcav
