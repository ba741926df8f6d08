#pragma once

#include <cmath>
#include <functional>

// Test-side oracles, kept independent of the library quadrature: composite
// Simpson instead of Gauss-Legendre, explicit integrand code instead of the
// symbol families.
namespace test_support {

inline double simpson01(const std::function<double(double)>& f, int panels) {
    const double h = 1.0 / panels;
    double acc = f(0.0) + f(1.0);
    for (int i = 1; i < panels; ++i) acc += f(i * h) * ((i % 2) ? 4.0 : 2.0);
    return acc * h / 3.0;
}

/// int_0^inf g(r) dr through r = u/(1-u); g must decay at infinity.
inline double semi_inf(const std::function<double(double)>& g, int panels = 20000) {
    return simpson01(
        [&](double u) {
            if (u >= 1.0) return 0.0;
            const double om = 1.0 - u;
            return g(u / om) / (om * om);
        },
        panels);
}

/// <z^a, z^a>_m on C: (m+1)!/m! * 2 * int r^{2a+1} (1+r^2)^{-(m+2)} dr.
inline double norm_sq_oracle_n1(int a, int m) {
    return (m + 1) * 2.0 *
           semi_inf([&](double r) { return std::pow(r, 2 * a + 1) * std::pow(1.0 + r * r, -(m + 2)); });
}

/// <z^alpha, z^alpha>_m on C^2 via per-variable polar reduction.
inline double norm_sq_oracle_n2(int a1, int a2, int m) {
    const double pref = (m + 1.0) * (m + 2.0) * 4.0;
    return pref * semi_inf(
                      [&](double r1) {
                          return semi_inf(
                              [&](double r2) {
                                  return std::pow(r1, 2 * a1 + 1) * std::pow(r2, 2 * a2 + 1) *
                                         std::pow(1.0 + r1 * r1 + r2 * r2, -(m + 3));
                              },
                              2000);
                      },
                      2000);
}

/// Dirichlet moment on R_+^2 by brute quadrature.
inline double dirichlet_moment_oracle_2d(double d1, double d2, double D) {
    return semi_inf(
        [&](double s1) {
            return semi_inf(
                [&](double s2) {
                    return std::pow(s1, d1 - 1.0) * std::pow(s2, d2 - 1.0) *
                           std::pow(1.0 + s1 + s2, -D);
                },
                2000);
        },
        2000);
}

} // namespace test_support
