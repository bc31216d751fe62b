#pragma once

/// Electromagnetic resonance interaction between the two accelerated atoms
/// near the mirror, for arbitrary real transition dipoles.
///
/// The field susceptibility is encoded by two modulation functions f_ij and
/// h_ij per tensor case (free space / boundary, perpendicular / parallel
/// alignment).  The energy is assembled from
///
///     P_ij = f_ij sin(Theta) - h_ij cos(Theta),
///     Theta = omega0 * rindler_phase_distance(a, d)
///
/// contracted with the dipole components, with d the distance the tensor
/// case modulates (separation for free tensors, image distance for boundary
/// tensors).

#include <array>
#include <string_view>

#include "accelres/geometry.hpp"
#include "accelres/scalar_model.hpp"

namespace accelres {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
    double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

/// Transition dipole components of atoms A and B [e eV^-1].  Real by
/// construction; the zero pair is legal and yields zero energy.
struct DipolePair {
    Vec3 mu_a;
    Vec3 mu_b;
};

struct Mat3 {
    std::array<std::array<double, 3>, 3> m{};
    double operator()(int i, int j) const { return m[i][j]; }
    double& operator()(int i, int j) { return m[i][j]; }
};

enum class TensorCase { perp_boundary, perp_free, par_boundary, par_free };

const char* tensor_case_name(TensorCase c);

/// Perturbation hook for the validation suite's mutation-sensitivity sweep:
/// multiplies the `site`-th numeric coefficient of a tensor-case evaluator
/// by (1 + rel).  `sites` receives the number of coefficient sites visited.
struct CoeffMutation {
    int site = -1;
    double rel = 0.0;
    mutable int sites = 0;
};

/// Index pairs of the symmetric component storage.
enum ComponentPair { XX = 0, YY = 1, ZZ = 2, XY = 3, XZ = 4, YZ = 5 };

/// The f/h modulation functions of one tensor case, stored on the upper
/// triangle.  parity[p] is +1 when the (i,j) and (j,i) components are equal,
/// -1 when they differ by sign, 0 when the pair is identically zero.
struct SusceptibilityTensor {
    TensorCase kind = TensorCase::perp_free;
    std::array<double, 6> f{};
    std::array<double, 6> h{};
    std::array<int, 6> parity{};

    double f_at(int i, int j) const;
    double h_at(int i, int j) const;
};

SusceptibilityTensor fh_perp_boundary(double a, double r_image, double omega,
                                      const CoeffMutation& mut = {});
SusceptibilityTensor fh_perp_free(double a, double separation, double omega,
                                  const CoeffMutation& mut = {});
SusceptibilityTensor fh_par_boundary(double a, double separation, double z, double omega,
                                     const CoeffMutation& mut = {});
/// Perpendicular free tensor with the y and z indices exchanged (the
/// parallel alignment's separation axis is y instead of z).
SusceptibilityTensor fh_par_free(double a, double separation, double omega,
                                 const CoeffMutation& mut = {});

/// Number of mutation sites of a tensor case evaluator.
int fh_coefficient_count(TensorCase c);

/// P_ij = f_ij sin(Theta) - h_ij cos(Theta) with Theta the phase matching
/// `distance`; at a = 0, Theta = omega0 * distance.
Mat3 p_tensor(const SusceptibilityTensor& t, double a, double distance, double omega0);

struct EmParams {
    PairGeometry geometry;
    double omega0 = 0.0;
    DipolePair dipoles;
    BellSign sign = BellSign::symmetric;

    void validate() const;
};

/// Perpendicular alignment.  The Bell-state sign enters as printed for this
/// configuration: the outer sign and the sign in front of the xz cross
/// product are tied (symmetric state takes the upper signs).
/// Throws std::invalid_argument for a parallel geometry.
EnergyBreakdown em_energy_perp(const EmParams& p);

/// Parallel alignment.  No Bell-state sign appears in this configuration's
/// energy; p.sign is ignored.  Throws std::invalid_argument for a
/// perpendicular geometry.
EnergyBreakdown em_energy_par(const EmParams& p);

/// Dispatch on p.geometry.alignment.
EnergyBreakdown em_energy(const EmParams& p);

/// Named dipole orientation presets: "cross-xz" (mu_A || x, mu_B || z),
/// "cross-xy", "cross-yz", "parallel-yy".  Throws std::invalid_argument for
/// an unknown name.
DipolePair dipole_preset(std::string_view name, double magnitude = 1.0);

}  // namespace accelres
