#include "accelres/em_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace accelres {

namespace {

constexpr double inv_4pi = 1.0 / (4.0 * std::numbers::pi);

// Wraps every numeric coefficient of the tensor formulas so the validation
// suite can perturb any single one of them.
class Coeff {
public:
    explicit Coeff(const CoeffMutation& mut) : mut_(mut) {}
    double operator()(double v) {
        const double out = (count_ == mut_.site) ? v * (1.0 + mut_.rel) : v;
        ++count_;
        return out;
    }
    ~Coeff() { mut_.sites = count_; }

private:
    const CoeffMutation& mut_;
    int count_ = 0;
};

struct NPowers {
    double n1, n2, n3, n4, n5;
};

NPowers n_powers(double a, double d) {
    const double n2 = 1.0 + 0.25 * a * a * d * d;
    const double n1 = std::sqrt(n2);
    return {n1, n2, n2 * n1, n2 * n2, n2 * n2 * n1};
}

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::domain_error(std::string(what) + " must be > 0 and finite");
    }
}

}  // namespace

const char* tensor_case_name(TensorCase c) {
    switch (c) {
        case TensorCase::perp_boundary: return "perp-boundary";
        case TensorCase::perp_free: return "perp-free";
        case TensorCase::par_boundary: return "par-boundary";
        case TensorCase::par_free: return "par-free";
    }
    return "unknown";
}

double SusceptibilityTensor::f_at(int i, int j) const {
    static constexpr int pair_index[3][3] = {{XX, XY, XZ}, {XY, YY, YZ}, {XZ, YZ, ZZ}};
    const int p = pair_index[i][j];
    if (parity[p] == 0) return 0.0;
    const double sign = (i > j) ? static_cast<double>(parity[p]) : 1.0;
    return sign * f[p];
}

double SusceptibilityTensor::h_at(int i, int j) const {
    static constexpr int pair_index[3][3] = {{XX, XY, XZ}, {XY, YY, YZ}, {XZ, YZ, ZZ}};
    const int p = pair_index[i][j];
    if (parity[p] == 0) return 0.0;
    const double sign = (i > j) ? static_cast<double>(parity[p]) : 1.0;
    return sign * h[p];
}

SusceptibilityTensor fh_perp_boundary(double a, double r_image, double omega,
                                      const CoeffMutation& mut) {
    require_positive(r_image, "fh_perp_boundary: image distance");
    Coeff C(mut);
    const double R = r_image;
    const double aR2 = a * a * R * R;
    const double aR4 = aR2 * aR2;
    const double w2 = omega * omega;
    const auto [N1, N2, N3, N4, N5] = n_powers(a, R);

    SusceptibilityTensor t;
    t.kind = TensorCase::perp_boundary;
    t.parity = {1, 1, 1, 0, +1, 0};  // xz pair symmetric

    t.f[XX] = omega * (C(1.0) + C(1.0) * aR2) / (N4 * R * R);
    t.f[YY] = omega * (C(1.0) + C(0.5) * aR2) / (N2 * R * R);
    t.f[ZZ] = omega * (C(2.0) + C(0.25) * aR2 + C(0.125) * aR4) / (N4 * R * R);
    t.f[XZ] = -C(0.5) * a * omega * (C(1.0) - C(0.5) * aR2) / (N4 * R);

    t.h[XX] = -(C(1.0) + C(0.5) * aR2 + C(0.25) * aR4) / (N5 * R * R * R) + C(1.0) * w2 / (N3 * R);
    t.h[YY] = -C(1.0) / (N3 * R * R * R) + C(1.0) * w2 / (N1 * R);
    t.h[ZZ] = -C(2.0) * (C(1.0) + C(0.625) * aR2) / (N5 * R * R * R) + C(0.25) * a * a * R * w2 / N3;
    t.h[XZ] = C(0.5) * a * (C(1.0) + C(1.0) * aR2) / (N5 * R * R) + C(0.5) * a * w2 / N3;
    return t;
}

SusceptibilityTensor fh_perp_free(double a, double separation, double omega,
                                  const CoeffMutation& mut) {
    require_positive(separation, "fh_perp_free: separation");
    Coeff C(mut);
    const double L = separation;
    const double aL2 = a * a * L * L;
    const double aL4 = aL2 * aL2;
    const double w2 = omega * omega;
    const auto [N1, N2, N3, N4, N5] = n_powers(a, L);

    SusceptibilityTensor t;
    t.kind = TensorCase::perp_free;
    t.parity = {1, 1, 1, 0, -1, 0};  // xz pair antisymmetric

    t.f[XX] = omega * (C(1.0) + C(1.0) * aL2) / (N4 * L * L);
    t.f[YY] = omega * (C(1.0) + C(0.5) * aL2) / (N2 * L * L);
    t.f[ZZ] = -omega * (C(2.0) + C(0.25) * aL2 + C(0.125) * aL4) / (N4 * L * L);
    t.f[XZ] = C(0.5) * a * omega * (C(1.0) - C(0.5) * aL2) / (N4 * L);

    t.h[XX] = -(C(1.0) + C(0.5) * aL2 + C(0.25) * aL4) / (N5 * L * L * L) + C(1.0) * w2 / (N3 * L);
    t.h[YY] = -C(1.0) / (N3 * L * L * L) + C(1.0) * w2 / (N1 * L);
    t.h[ZZ] = C(2.0) * (C(1.0) + C(0.625) * aL2) / (N5 * L * L * L) - C(0.25) * a * a * L * w2 / N3;
    t.h[XZ] = -C(0.5) * a * (C(1.0) + C(1.0) * aL2) / (N5 * L * L) - C(0.5) * a * w2 / N3;
    return t;
}

SusceptibilityTensor fh_par_boundary(double a, double separation, double z, double omega,
                                     const CoeffMutation& mut) {
    require_positive(separation, "fh_par_boundary: separation");
    require_positive(z, "fh_par_boundary: mirror distance");
    Coeff C(mut);
    const double D = separation;
    const double D2 = D * D;
    const double z2 = z * z;
    const double R2 = D2 + 4.0 * z2;
    const double R = std::sqrt(R2);
    const double R3 = R2 * R;
    const double R4 = R2 * R2;
    const double R5 = R4 * R;
    const double aR2 = a * a * R2;
    const double aR4 = aR2 * aR2;
    // signed square D^2 - 4 z^2; legitimately negative for D < 2z
    const double rt2 = (D - 2.0 * z) * (D + 2.0 * z);
    const double w2 = omega * omega;
    const auto [N1, N2, N3, N4, N5] = n_powers(a, R);
    (void)N1;
    (void)N2;

    SusceptibilityTensor t;
    t.kind = TensorCase::par_boundary;
    t.parity = {1, 1, 1, -1, +1, -1};  // xy, yz antisymmetric; xz symmetric

    t.f[XX] = omega * (C(1.0) + C(1.0) * aR2) / (N4 * R2);
    t.f[YY] = omega *
              (C(4.0) * z2 - C(2.0) * D2 - C(0.25) * aR2 * (D2 - C(12.0) * z2) -
               C(0.125) * aR4 * rt2) /
              (N4 * R4);
    t.f[ZZ] = omega *
              (z2 * (C(16.0) + C(2.0) * aR2 + C(1.0) * aR4) -
               D2 * (C(2.0) + C(1.5) * aR2 + C(0.25) * aR4)) /
              (C(2.0) * N4 * R4);
    t.f[XY] = -C(0.5) * omega * a * D * (C(1.0) - C(0.5) * aR2) / (N4 * R2);
    t.f[XZ] = -C(1.0) * omega * a * z * (C(1.0) - C(0.5) * aR2) / (N4 * R2);
    t.f[YZ] = -C(2.0) * omega * z * D * (C(3.0) + C(1.0) * aR2 + C(0.25) * aR4) / (N4 * R4);

    t.h[XX] = -(C(1.0) + C(0.5) * aR2 + C(0.25) * aR4) / (N5 * R3) + C(1.0) * w2 / (N3 * R);
    t.h[YY] = (C(2.0) * D2 - C(4.0) * z2 + C(0.25) * aR2 * (C(5.0) * D2 - C(4.0) * z2)) /
                  (N5 * R5) +
              w2 * (C(4.0) * z2 - C(0.25) * aR2 * rt2) / (N3 * R3);
    t.h[ZZ] = (D2 * (C(1.0) + C(0.25) * aR2) - C(8.0) * z2 * (C(1.0) + C(0.625) * aR2)) /
                  (N5 * R5) +
              w2 * (C(1.0) * a * a * z2 * R2 - D2 * (C(1.0) + C(0.25) * aR2)) / (N3 * R3);
    t.h[XY] = C(0.5) * a * D * (C(1.0) + C(1.0) * aR2) / (N5 * R3) + C(0.5) * w2 * a * D / (N3 * R);
    t.h[XZ] = C(1.0) * a * z * (C(1.0) + C(1.0) * aR2) / (N5 * R3) + C(1.0) * w2 * a * z / (N3 * R);
    t.h[YZ] = C(6.0) * z * D * (C(1.0) + C(0.5) * aR2) / (N5 * R5) -
              C(2.0) * w2 * z * D * (C(1.0) + C(0.5) * aR2) / (N3 * R3);
    return t;
}

SusceptibilityTensor fh_par_free(double a, double separation, double omega,
                                 const CoeffMutation& mut) {
    const SusceptibilityTensor perp = fh_perp_free(a, separation, omega, mut);
    SusceptibilityTensor t;
    t.kind = TensorCase::par_free;
    // y <-> z exchange: the separation axis is y here instead of z, so the
    // nonzero off-diagonal pair becomes xy, still antisymmetric.
    t.f[XX] = perp.f[XX];
    t.f[YY] = perp.f[ZZ];
    t.f[ZZ] = perp.f[YY];
    t.f[XY] = perp.f[XZ];
    t.h[XX] = perp.h[XX];
    t.h[YY] = perp.h[ZZ];
    t.h[ZZ] = perp.h[YY];
    t.h[XY] = perp.h[XZ];
    t.parity = {1, 1, 1, -1, 0, 0};
    return t;
}

int fh_coefficient_count(TensorCase c) {
    CoeffMutation probe;
    switch (c) {
        case TensorCase::perp_boundary: fh_perp_boundary(1.0, 1.0, 1.0, probe); break;
        case TensorCase::perp_free: fh_perp_free(1.0, 1.0, 1.0, probe); break;
        case TensorCase::par_boundary: fh_par_boundary(1.0, 1.0, 0.5, 1.0, probe); break;
        case TensorCase::par_free: fh_par_free(1.0, 1.0, 1.0, probe); break;
    }
    return probe.sites;
}

Mat3 p_tensor(const SusceptibilityTensor& t, double a, double distance, double omega0) {
    require_positive(distance, "p_tensor: distance");
    const double theta = omega0 * rindler_phase_distance(a, distance);
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    Mat3 p;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            p(i, j) = t.f_at(i, j) * s - t.h_at(i, j) * c;
        }
    }
    return p;
}

void EmParams::validate() const {
    geometry.validate();
    if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
        throw std::domain_error("EmParams: omega0 must be > 0");
    }
    for (int i = 0; i < 3; ++i) {
        if (!std::isfinite(dipoles.mu_a[i]) || !std::isfinite(dipoles.mu_b[i])) {
            throw std::domain_error("EmParams: dipole components must be finite");
        }
    }
}

namespace {

double diagonal_sum(const DipolePair& d, const Mat3& p) {
    return d.mu_a.x * d.mu_b.x * p(0, 0) + d.mu_a.y * d.mu_b.y * p(1, 1) +
           d.mu_a.z * d.mu_b.z * p(2, 2);
}

}  // namespace

EnergyBreakdown em_energy_perp(const EmParams& p) {
    p.validate();
    if (p.geometry.alignment != Alignment::perpendicular) {
        throw std::invalid_argument("em_energy_perp: geometry is not perpendicular");
    }
    const ImageDistances dist = image_distances(p.geometry);
    const double a = p.geometry.a;
    const double s = bell_factor(p.sign);
    const DipolePair& mu = p.dipoles;

    const SusceptibilityTensor t0 = fh_perp_free(a, dist.direct, p.omega0);
    const SusceptibilityTensor tb = fh_perp_boundary(a, dist.image, p.omega0);
    const Mat3 p0 = p_tensor(t0, a, dist.direct, p.omega0);
    const Mat3 pb = p_tensor(tb, a, dist.image, p.omega0);

    const double cross_minus = mu.mu_a.x * mu.mu_b.z - mu.mu_a.z * mu.mu_b.x;
    const double cross_plus = mu.mu_a.x * mu.mu_b.z + mu.mu_a.z * mu.mu_b.x;

    // Upper signs for the symmetric state: outer and inner signs tied.
    const double free_term = s * inv_4pi * (diagonal_sum(mu, p0) + s * cross_minus * p0(0, 2));
    const double boundary_term =
        -s * inv_4pi * (diagonal_sum(mu, pb) + s * cross_plus * pb(0, 2));
    return make_breakdown(free_term, boundary_term);
}

EnergyBreakdown em_energy_par(const EmParams& p) {
    p.validate();
    if (p.geometry.alignment != Alignment::parallel) {
        throw std::invalid_argument("em_energy_par: geometry is not parallel");
    }
    const ImageDistances dist = image_distances(p.geometry);
    const double a = p.geometry.a;
    const DipolePair& mu = p.dipoles;

    const SusceptibilityTensor t0 = fh_par_free(a, dist.direct, p.omega0);
    const SusceptibilityTensor tb = fh_par_boundary(a, dist.direct, p.geometry.z, p.omega0);
    // The free tensor modulates with the separation, the boundary tensor
    // with the image distance.
    const Mat3 p0 = p_tensor(t0, a, dist.direct, p.omega0);
    const Mat3 pb = p_tensor(tb, a, dist.image, p.omega0);

    const double xy_minus = mu.mu_a.x * mu.mu_b.y - mu.mu_a.y * mu.mu_b.x;
    const double xz_plus = mu.mu_a.x * mu.mu_b.z + mu.mu_a.z * mu.mu_b.x;
    const double yz_minus = mu.mu_a.y * mu.mu_b.z - mu.mu_a.z * mu.mu_b.y;

    // No Bell-state sign appears in this configuration.
    const double free_term = inv_4pi * (diagonal_sum(mu, p0) + xy_minus * p0(0, 1));
    const double boundary_term = -inv_4pi * (diagonal_sum(mu, pb) + xy_minus * pb(0, 1) +
                                             xz_plus * pb(0, 2) + yz_minus * pb(1, 2));
    return make_breakdown(free_term, boundary_term);
}

EnergyBreakdown em_energy(const EmParams& p) {
    return p.geometry.alignment == Alignment::perpendicular ? em_energy_perp(p)
                                                            : em_energy_par(p);
}

DipolePair dipole_preset(std::string_view name, double magnitude) {
    if (name == "cross-xz") return {{magnitude, 0.0, 0.0}, {0.0, 0.0, magnitude}};
    if (name == "cross-xy") return {{magnitude, 0.0, 0.0}, {0.0, magnitude, 0.0}};
    if (name == "cross-yz") return {{0.0, magnitude, 0.0}, {0.0, 0.0, magnitude}};
    if (name == "parallel-yy") return {{0.0, magnitude, 0.0}, {0.0, magnitude, 0.0}};
    throw std::invalid_argument("dipole_preset: unknown preset '" + std::string(name) + "'");
}

}  // namespace accelres
