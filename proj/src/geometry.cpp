#include "accelres/geometry.hpp"

#include <cmath>

namespace accelres {

PairGeometry PairGeometry::perpendicular(double L, double z, double a) {
    PairGeometry g{Alignment::perpendicular, L, z, a};
    g.validate();
    return g;
}

PairGeometry PairGeometry::parallel(double D, double z, double a) {
    PairGeometry g{Alignment::parallel, D, z, a};
    g.validate();
    return g;
}

void PairGeometry::validate() const {
    if (!(std::isfinite(separation) && std::isfinite(z) && std::isfinite(a))) {
        throw std::domain_error("PairGeometry: parameters must be finite");
    }
    if (separation <= 0.0) {
        throw std::domain_error("PairGeometry: separation must be > 0");
    }
    if (z < 0.0) {
        throw std::domain_error("PairGeometry: mirror distance z must be >= 0");
    }
    if (a < 0.0) {
        throw std::domain_error("PairGeometry: proper acceleration must be >= 0");
    }
}

ImageDistances image_distances(const PairGeometry& g) {
    g.validate();
    ImageDistances d;
    d.direct = g.separation;
    if (g.alignment == Alignment::perpendicular) {
        d.image = g.separation + 2.0 * g.z;
    } else {
        const double D = g.separation;
        const double two_z = 2.0 * g.z;
        d.image = std::sqrt(D * D + two_z * two_z);
        // factored form keeps full precision near D = 2z
        d.rtilde_sq = (D - two_z) * (D + two_z);
    }
    return d;
}

double rindler_interval(double a, double dtau) {
    const double u = a * dtau;
    if (std::abs(u) < series_branch_threshold) {
        // (2/a) sinh(a x / 2) = x (1 + (a x)^2/24 + (a x)^4/1920 + ...)
        const double t = u * u;
        return dtau * (1.0 + t * (1.0 / 24.0 + t * (1.0 / 1920.0)));
    }
    return (2.0 / a) * std::sinh(0.5 * u);
}

double rindler_phase_distance(double a, double d) {
    const double u = a * d;
    if (std::abs(u) < series_branch_threshold) {
        // (2/a) asinh(a d / 2) = d (1 - (a d)^2/24 + 3 (a d)^4/640 + ...)
        const double t = u * u;
        return d * (1.0 - t * (1.0 / 24.0 - t * (3.0 / 640.0)));
    }
    return (2.0 / a) * std::asinh(0.5 * u);
}

}  // namespace accelres
