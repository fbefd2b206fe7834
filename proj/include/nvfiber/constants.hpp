#pragma once

#include <cmath>

namespace nvfiber {

// SI constants (CODATA 2018).
inline constexpr double c_light    = 299792458.0;        // m/s
inline constexpr double eps0       = 8.8541878128e-12;   // F/m
inline constexpr double mu0        = 1.25663706212e-6;   // H/m
inline constexpr double pi         = 3.141592653589793;

/// Refractive index of fused silica, three-term Sellmeier form
/// (Malitson 1965 coefficients). Wavelength in metres, valid
/// roughly over 0.21-3.7 um. Evaluates to ~1.4561 at 666 nm.
inline double silica_index(double wavelength_m) {
    const double l2 = wavelength_m * wavelength_m * 1e12;  // um^2
    const double n2 = 1.0
        + 0.6961663 * l2 / (l2 - 0.0684043 * 0.0684043)
        + 0.4079426 * l2 / (l2 - 0.1162414 * 0.1162414)
        + 0.8974794 * l2 / (l2 - 9.896161 * 9.896161);
    return std::sqrt(n2);
}

/// Radiative atomic cross section sigma_A = 3 lambda^2 / (2 pi).
inline double radiative_cross_section(double wavelength_m) {
    return 3.0 * wavelength_m * wavelength_m / (2.0 * pi);
}

}  // namespace nvfiber
