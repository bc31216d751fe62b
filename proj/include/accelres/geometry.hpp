#pragma once

/// Atom-pair geometry near a perfectly reflecting mirror at z = 0.
///
/// Both atoms ride the same uniformly accelerated (hyperbolic) world-line
/// family, acceleration a along x, at constant mutual separation.  Two
/// configurations are supported:
///
///   perpendicular : atoms on the z axis at z and z + L      (separation L)
///   parallel      : atoms at (0,0,z) and (0,D,z)            (separation D)
///
/// Every downstream formula depends on the pair only through the parameter
/// tuple (alignment, separation, z, a) and the derived image-method
/// distances, so trajectories are never sampled.

#include <optional>
#include <stdexcept>

namespace accelres {

enum class Alignment { perpendicular, parallel };

struct PairGeometry {
    Alignment alignment = Alignment::perpendicular;
    double separation = 0.0;  ///< L (perpendicular) or D (parallel) [eV^-1]
    double z = 0.0;           ///< nearest atom's distance from the mirror [eV^-1]
    double a = 0.0;           ///< common proper acceleration [eV]

    static PairGeometry perpendicular(double L, double z, double a);
    static PairGeometry parallel(double D, double z, double a);

    /// Throws std::domain_error when separation <= 0, z < 0 or a < 0.
    /// z = 0 is admitted as the degenerate mirror-contact configuration.
    void validate() const;
};

/// Direct and image-method distances of a pair configuration.
///
/// rtilde_sq = D^2 - 4 z^2 is kept as a signed square (it enters only as
/// a^2 * rtilde_sq and may legitimately be negative for D < 2z); it is never
/// square-rooted.  Absent for the perpendicular alignment.
struct ImageDistances {
    double direct = 0.0;  ///< L or D
    double image = 0.0;   ///< L + 2z or sqrt(D^2 + 4 z^2)
    std::optional<double> rtilde_sq;
};

ImageDistances image_distances(const PairGeometry& g);

/// a*x threshold below which the sinh/asinh helpers switch to their
/// Taylor branch to avoid cancellation near the inertial limit.
inline constexpr double series_branch_threshold = 1e-4;

/// Effective spatial interval (2/a) sinh(a dtau / 2) traversed on the
/// hyperbolic world-line during proper time dtau.  Exactly dtau at a = 0,
/// monotone increasing in dtau.
double rindler_interval(double a, double dtau);

/// Inverse of rindler_interval in its second argument:
/// (2/a) asinh(a d / 2), the proper-time lapse whose interval is d.
/// Exactly d at a = 0.  This is the phase distance entering every
/// cos/sin((2 omega / a) asinh(a d / 2)) factor.
double rindler_phase_distance(double a, double d);

}  // namespace accelres
