// Shared constants, error types, and numeric conventions.
//
// All quantities are dimensionless (hbar = c = 1, lengths measured in units
// of the gap width a): Omega = omega*a, K = |k_par|*a, z = K^2 - Omega^2.
//
// Square-root conventions used throughout (see spectrum.hpp):
//   sqrt(z): Re >= 0 for z > 0, Im < 0 for z < 0.
//   kappa:   Re >= 0 when kappa^2 > 0 (evanescent decay),
//            Im <= 0 when kappa^2 < 0 (righthanded propagation),
//            Im >= 0 inside the lefthanded band of the magneto-dielectric.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace mixcav {

using cdouble = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;

/// Normalization constant N = 180/pi^3; eta = E / |N * E_C| with E_C the
/// perfect-mirror energy, so forced perfect mirrors give eta = -pi^3/180.
inline constexpr double norm_constant = 180.0 / (pi * pi * pi);

/// eta of an ideal cavity, -pi^3/180.
inline double eta_perfect_mirror() { return -(pi * pi * pi) / 180.0; }

struct domain_error : std::domain_error {
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

/// Evaluation requested at (or too close to) the material resonance pole.
struct pole_error : domain_error {
    explicit pole_error(const std::string& msg) : domain_error(msg) {}
};

/// Point lies within tolerance of a zone-limiting curve.
struct boundary_error : domain_error {
    explicit boundary_error(const std::string& msg) : domain_error(msg) {}
};

struct convergence_error : std::runtime_error {
    explicit convergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A root of a squared dispersion equation failed the unsquared check.
struct spurious_root_error : std::runtime_error {
    explicit spurious_root_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct no_root_error : std::runtime_error {
    explicit no_root_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mixcav
