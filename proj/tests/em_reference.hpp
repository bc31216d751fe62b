#pragma once

// Test-only re-transcription of the susceptibility modulation functions,
// written independently of src/em_model.cpp (naive pow-based forms, separate
// author pass).  Any single-sided transcription slip or coefficient
// perturbation in the library shows up as a mismatch against these.

#include <cmath>

namespace em_reference {

struct FH {
    double f = 0.0;
    double h = 0.0;
};

inline double norm_factor(double a, double d) {
    return std::sqrt(1.0 + 0.25 * std::pow(a * d, 2));
}

// Boundary tensor, atoms perpendicular to the mirror; d is the image distance.
inline FH perp_boundary(int i, int j, double a, double d, double w) {
    const double N = norm_factor(a, d);
    const double q2 = std::pow(a * d, 2);
    const double q4 = std::pow(a * d, 4);
    FH r;
    if (i == 0 && j == 0) {
        r.f = w * (1.0 + q2) / (std::pow(N, 4) * d * d);
        r.h = -(1.0 + q2 / 2.0 + q4 / 4.0) / (std::pow(N, 5) * std::pow(d, 3)) +
              w * w / (std::pow(N, 3) * d);
    } else if (i == 1 && j == 1) {
        r.f = w * (1.0 + q2 / 2.0) / (std::pow(N, 2) * d * d);
        r.h = -1.0 / (std::pow(N, 3) * std::pow(d, 3)) + w * w / (N * d);
    } else if (i == 2 && j == 2) {
        r.f = w * (2.0 + q2 / 4.0 + q4 / 8.0) / (std::pow(N, 4) * d * d);
        r.h = -2.0 * (1.0 + 5.0 * q2 / 8.0) / (std::pow(N, 5) * std::pow(d, 3)) +
              a * a * d * w * w / (4.0 * std::pow(N, 3));
    } else if ((i == 0 && j == 2) || (i == 2 && j == 0)) {
        r.f = -a * w * (1.0 - q2 / 2.0) / (2.0 * std::pow(N, 4) * d);
        r.h = a * (1.0 + q2) / (2.0 * std::pow(N, 5) * d * d) + a * w * w / (2.0 * std::pow(N, 3));
    }
    return r;
}

// Free-space tensor, atoms perpendicular to the mirror; d is the separation.
inline FH perp_free(int i, int j, double a, double d, double w) {
    const double N = norm_factor(a, d);
    const double q2 = std::pow(a * d, 2);
    const double q4 = std::pow(a * d, 4);
    FH r;
    if (i == 0 && j == 0) {
        r.f = w * (1.0 + q2) / (std::pow(N, 4) * d * d);
        r.h = -(1.0 + q2 / 2.0 + q4 / 4.0) / (std::pow(N, 5) * std::pow(d, 3)) +
              w * w / (std::pow(N, 3) * d);
    } else if (i == 1 && j == 1) {
        r.f = w * (1.0 + q2 / 2.0) / (std::pow(N, 2) * d * d);
        r.h = -1.0 / (std::pow(N, 3) * std::pow(d, 3)) + w * w / (N * d);
    } else if (i == 2 && j == 2) {
        r.f = -w * (2.0 + q2 / 4.0 + q4 / 8.0) / (std::pow(N, 4) * d * d);
        r.h = 2.0 * (1.0 + 5.0 * q2 / 8.0) / (std::pow(N, 5) * std::pow(d, 3)) -
              a * a * d * w * w / (4.0 * std::pow(N, 3));
    } else if (i == 0 && j == 2) {
        r.f = a * w * (1.0 - q2 / 2.0) / (2.0 * std::pow(N, 4) * d);
        r.h = -a * (1.0 + q2) / (2.0 * std::pow(N, 5) * d * d) - a * w * w / (2.0 * std::pow(N, 3));
    } else if (i == 2 && j == 0) {
        FH upper = perp_free(0, 2, a, d, w);
        r.f = -upper.f;
        r.h = -upper.h;
    }
    return r;
}

// Boundary tensor, atoms parallel to the mirror at height z, separation d.
inline FH par_boundary(int i, int j, double a, double d, double z, double w) {
    const double R = std::sqrt(d * d + 4.0 * z * z);
    const double N = norm_factor(a, R);
    const double q2 = std::pow(a * R, 2);
    const double q4 = std::pow(a * R, 4);
    const double rt2 = d * d - 4.0 * z * z;
    FH r;
    if (i == 0 && j == 0) {
        r.f = w * (1.0 + q2) / (std::pow(N, 4) * R * R);
        r.h = -(1.0 + q2 / 2.0 + q4 / 4.0) / (std::pow(N, 5) * std::pow(R, 3)) +
              w * w / (std::pow(N, 3) * R);
    } else if (i == 1 && j == 1) {
        r.f = w *
              (4.0 * z * z - 2.0 * d * d - 0.25 * q2 * (d * d - 12.0 * z * z) -
               0.125 * q4 * rt2) /
              (std::pow(N, 4) * std::pow(R, 4));
        r.h = (2.0 * d * d - 4.0 * z * z + 0.25 * q2 * (5.0 * d * d - 4.0 * z * z)) /
                  (std::pow(N, 5) * std::pow(R, 5)) +
              w * w * (4.0 * z * z - 0.25 * q2 * rt2) / (std::pow(N, 3) * std::pow(R, 3));
    } else if (i == 2 && j == 2) {
        r.f = w *
              (z * z * (16.0 + 2.0 * q2 + q4) - d * d * (2.0 + 1.5 * q2 + 0.25 * q4)) /
              (2.0 * std::pow(N, 4) * std::pow(R, 4));
        r.h = (d * d * (1.0 + 0.25 * q2) - 8.0 * z * z * (1.0 + 5.0 * q2 / 8.0)) /
                  (std::pow(N, 5) * std::pow(R, 5)) +
              w * w * (a * a * z * z * R * R - d * d * (1.0 + 0.25 * q2)) /
                  (std::pow(N, 3) * std::pow(R, 3));
    } else if (i == 0 && j == 1) {
        r.f = -w * a * d * (1.0 - q2 / 2.0) / (2.0 * std::pow(N, 4) * R * R);
        r.h = a * d * (1.0 + q2) / (2.0 * std::pow(N, 5) * std::pow(R, 3)) +
              w * w * a * d / (2.0 * std::pow(N, 3) * R);
    } else if (i == 1 && j == 0) {
        FH upper = par_boundary(0, 1, a, d, z, w);
        r.f = -upper.f;
        r.h = -upper.h;
    } else if ((i == 0 && j == 2) || (i == 2 && j == 0)) {
        r.f = -w * a * z * (1.0 - q2 / 2.0) / (std::pow(N, 4) * R * R);
        r.h = a * z * (1.0 + q2) / (std::pow(N, 5) * std::pow(R, 3)) +
              w * w * a * z / (std::pow(N, 3) * R);
    } else if (i == 1 && j == 2) {
        r.f = -2.0 * w * z * d * (3.0 + q2 + 0.25 * q4) / (std::pow(N, 4) * std::pow(R, 4));
        r.h = 6.0 * z * d * (1.0 + q2 / 2.0) / (std::pow(N, 5) * std::pow(R, 5)) -
              2.0 * w * w * z * d * (1.0 + q2 / 2.0) / (std::pow(N, 3) * std::pow(R, 3));
    } else if (i == 2 && j == 1) {
        FH upper = par_boundary(1, 2, a, d, z, w);
        r.f = -upper.f;
        r.h = -upper.h;
    }
    return r;
}

// Free-space tensor, atoms parallel to the mirror: the perpendicular
// free-space tensor with the y and z indices exchanged.
inline FH par_free(int i, int j, double a, double d, double w) {
    auto swap_yz = [](int k) { return k == 1 ? 2 : (k == 2 ? 1 : 0); };
    return perp_free(swap_yz(i), swap_yz(j), a, d, w);
}

}  // namespace em_reference
