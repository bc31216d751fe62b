#include "accelres/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>

namespace accelres::validation {

namespace {

constexpr double zero_zero_abs_tolerance = 1e-30;

}  // namespace

double scalar_envelope(double a, double d) {
    const double q = 0.5 * a * d;
    return 1.0 / (d * std::sqrt(1.0 + q * q));
}

OracleReport compare(std::string case_id, double model, double oracle, double tolerance,
                     double envelope) {
    OracleReport r;
    r.case_id = std::move(case_id);
    r.model_value = model;
    r.oracle_value = oracle;
    r.tolerance = tolerance;
    const double diff = std::abs(model - oracle);
    const double denom = std::max(std::abs(oracle), 1e-3 * std::abs(envelope));
    if (denom == 0.0) {
        // exact-zero expectation: hold the difference to an absolute floor
        r.rel_error = diff / zero_zero_abs_tolerance;
        r.tolerance = 1.0;
    } else {
        r.rel_error = diff / denom;
    }
    r.passed = r.rel_error <= r.tolerance;
    return r;
}

// ---------------------------------------------------------------------------
// Scalar light-cone oracle
// ---------------------------------------------------------------------------

double scalar_delta_root_oracle(double a, double d, double omega0) {
    if (!(a > 0.0) || !(d > 0.0) || !std::isfinite(a) || !std::isfinite(d)) {
        throw std::domain_error("scalar_delta_root_oracle: requires a > 0 and d > 0");
    }
    constexpr int max_steps = 200;
    int steps = 0;

    // The interval function grows at least linearly, so the crossing lies in
    // (0, d]: rindler_interval(a, d) >= d.
    double lo = 0.0;
    double hi = d;
    while ((hi - lo) > 1e-3 * hi) {
        if (++steps > max_steps) {
            throw std::runtime_error("scalar_delta_root_oracle: bisection did not converge");
        }
        const double mid = 0.5 * (lo + hi);
        if (rindler_interval(a, mid) - d < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    // Newton polish with a central-difference derivative.
    double root = 0.5 * (lo + hi);
    for (;;) {
        if (++steps > max_steps) {
            throw std::runtime_error("scalar_delta_root_oracle: Newton polish did not converge");
        }
        const double fd = 1e-6 * root;
        const double deriv =
            (rindler_interval(a, root + fd) - rindler_interval(a, root - fd)) / (2.0 * fd);
        const double delta = (rindler_interval(a, root) - d) / deriv;
        root -= delta;
        if (std::abs(delta) <= 1e-12 * std::abs(root)) break;
    }

    // Trajectory pieces relative to the reference proper time tau = 0.  The
    // delta-function weight is 1/(|dx| |d(light_cone)/dtau'|), both factors
    // evaluated numerically at the crossing.
    const auto x_separation = [&](double dtau) { return (std::cosh(a * dtau) - 1.0) / a; };
    const auto light_cone = [&](double dtau) {
        const double xs = x_separation(dtau);
        return std::sinh(a * dtau) / a - std::sqrt(xs * xs + d * d);
    };
    const double h = 1e-6 * root;
    const double jacobian = std::abs((light_cone(root + h) - light_cone(root - h)) / (2.0 * h));
    const double xs = x_separation(root);
    const double abs_dx = std::sqrt(xs * xs + d * d);
    return std::cos(omega0 * root) / (abs_dx * jacobian);
}

// ---------------------------------------------------------------------------
// Static electromagnetic oracle
// ---------------------------------------------------------------------------

Mat3 em_static_oracle(double d, const Vec3& n_axis, double omega0) {
    if (!(d > 0.0) || !std::isfinite(d)) {
        throw std::domain_error("em_static_oracle: distance must be > 0");
    }
    const double norm = std::sqrt(n_axis.x * n_axis.x + n_axis.y * n_axis.y + n_axis.z * n_axis.z);
    if (!(norm > 0.0)) {
        throw std::domain_error("em_static_oracle: axis must be nonzero");
    }
    const double n[3] = {n_axis.x / norm, n_axis.y / norm, n_axis.z / norm};
    const double c = std::cos(omega0 * d);
    const double s = std::sin(omega0 * d);
    const double near_terms = c / (d * d * d) + omega0 * s / (d * d);
    const double wave_term = omega0 * omega0 * c / d;
    Mat3 v;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double delta = (i == j) ? 1.0 : 0.0;
            v(i, j) = (delta - 3.0 * n[i] * n[j]) * near_terms - (delta - n[i] * n[j]) * wave_term;
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Asymptotic error maps
// ---------------------------------------------------------------------------

AsymptoticGrid default_grid(Regime regime) {
    AsymptoticGrid g;
    g.a_times_distance = {1e2, 1e3, 1e4};
    if (regime == Regime::far_zone) {
        g.phase_numbers = {0.1, 0.3, 1.0};  // omega0 * separation
    } else {
        g.phase_numbers = {0.3, 1.0};  // omega0 * image distance, a * separation pinned at 1e-2
    }
    return g;
}

namespace {

struct TermErrors {
    bool free_kept = false, boundary_kept = false, total_kept = false;
    double free_err = 0.0, boundary_err = 0.0, total_err = 0.0;
};

TermErrors term_errors(const EnergyBreakdown& exact, const EnergyBreakdown& approx,
                       double cos_direct, double cos_image, double min_abs_cos) {
    TermErrors e;
    if (std::abs(cos_direct) > min_abs_cos) {
        e.free_kept = true;
        e.free_err = std::abs(approx.free_term - exact.free_term) / std::abs(exact.free_term);
    }
    if (std::abs(cos_image) > min_abs_cos) {
        e.boundary_kept = true;
        e.boundary_err =
            std::abs(approx.boundary_term - exact.boundary_term) / std::abs(exact.boundary_term);
    }
    if (e.free_kept && e.boundary_kept && exact.total != 0.0) {
        e.total_kept = true;
        e.total_err = std::abs(approx.total - exact.total) / std::abs(exact.total);
    }
    return e;
}

double phase_cos(double a, double d, double omega0) {
    return std::cos(omega0 * rindler_phase_distance(a, d));
}

double map_tolerance(Regime regime, double ad) {
    if (regime == Regime::far_zone) {
        if (ad >= 9.999e3) return 1e-6;
        if (ad >= 9.999e2) return 1e-3;
    }
    // the intermediate-zone free term keeps a fixed a * separation, so only
    // the regime-level bound applies at every decade
    return 1e-2;
}

void append_monotone_reports(std::vector<OracleReport>& out,
                             const std::map<std::string, std::map<double, double>>& series) {
    for (const auto& [key, by_ad] : series) {
        if (by_ad.size() < 2) continue;
        bool decreasing = true;
        double worst_ratio = 0.0;
        double prev = -1.0;
        for (const auto& [ad, err] : by_ad) {
            if (prev >= 0.0) {
                const double ratio = (prev > 0.0) ? err / prev : 0.0;
                worst_ratio = std::max(worst_ratio, ratio);
                if (err >= prev) decreasing = false;
            }
            prev = err;
        }
        OracleReport r;
        r.case_id = key + "/monotone";
        r.model_value = worst_ratio;
        r.oracle_value = 0.0;
        r.rel_error = worst_ratio;
        r.tolerance = 1.0;
        r.passed = decreasing;
        out.push_back(r);
    }
}

std::string format_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

}  // namespace

std::vector<OracleReport> asymptotic_error_map(Regime regime) {
    return asymptotic_error_map(regime, default_grid(regime));
}

std::vector<OracleReport> asymptotic_error_map(Regime regime, const AsymptoticGrid& grid) {
    std::vector<OracleReport> out;
    std::map<std::string, std::map<double, double>> series;
    const char* regime_name = (regime == Regime::far_zone) ? "far" : "intermediate";
    bool any_kept = false;

    for (const Alignment alignment : {Alignment::perpendicular, Alignment::parallel}) {
        const char* align_name = (alignment == Alignment::perpendicular) ? "perp" : "par";
        for (const double ad : grid.a_times_distance) {
            for (const double pn : grid.phase_numbers) {
                ScalarParams p;
                if (regime == Regime::far_zone) {
                    // separation 1, image distance 2, a and omega0 set by the
                    // dimensionless pair (a*d, omega0*d)
                    const double z = (alignment == Alignment::perpendicular)
                                         ? 0.5
                                         : 0.5 * std::sqrt(3.0);
                    p.geometry = {alignment, 1.0, z, ad};
                    p.omega0 = pn;
                } else {
                    // a * separation pinned well below 1, a * image swept in
                    // decades, omega0 set by omega0 * image
                    const double a = 1e-2;
                    const double image = ad / a;
                    const double z = (alignment == Alignment::perpendicular)
                                         ? 0.5 * (image - 1.0)
                                         : 0.5 * std::sqrt(image * image - 1.0);
                    p.geometry = {alignment, 1.0, z, a};
                    p.omega0 = pn / image;
                }
                p.lambda_sq = 1.0;
                p.sign = BellSign::symmetric;

                const ImageDistances dist = image_distances(p.geometry);
                const EnergyBreakdown exact = scalar_energy(p);
                const EnergyBreakdown approx = (regime == Regime::far_zone)
                                                   ? scalar_energy_far_zone(p)
                                                   : scalar_energy_intermediate(p);
                const double a = p.geometry.a;
                const TermErrors e =
                    term_errors(exact, approx, phase_cos(a, dist.direct, p.omega0),
                                phase_cos(a, dist.image, p.omega0), grid.min_abs_cos);

                const double tol = map_tolerance(regime, ad);
                const std::string base = std::string("asymptotic/") + regime_name + "/" +
                                         align_name + "/ad=" + format_double(ad) +
                                         "/pn=" + format_double(pn);
                const std::string series_base = std::string("asymptotic/") + regime_name + "/" +
                                                align_name + "/pn=" + format_double(pn);
                const auto emit = [&](const char* term, double err, double model, double oracle) {
                    any_kept = true;
                    OracleReport r;
                    r.case_id = base + "/" + term;
                    r.model_value = model;
                    r.oracle_value = oracle;
                    r.rel_error = err;
                    r.tolerance = tol;
                    r.passed = err <= tol;
                    out.push_back(r);
                };
                if (e.free_kept) {
                    emit("free", e.free_err, approx.free_term, exact.free_term);
                    // the intermediate-zone free term does not vary with the
                    // image distance; only decaying series enter the summary
                    if (regime == Regime::far_zone) {
                        series[series_base + "/free"][ad] = e.free_err;
                    }
                }
                if (e.boundary_kept) {
                    emit("boundary", e.boundary_err, approx.boundary_term, exact.boundary_term);
                    series[series_base + "/boundary"][ad] = e.boundary_err;
                }
                if (e.total_kept) {
                    emit("total", e.total_err, approx.total, exact.total);
                }
            }
        }
    }
    if (!any_kept) {
        throw std::invalid_argument("asymptotic_error_map: phase filter removed every grid point");
    }
    append_monotone_reports(out, series);
    return out;
}

// ---------------------------------------------------------------------------
// Pinned finite-acceleration reference values for the susceptibility
// components, frozen from an independent transcription of the same formulas.
// They make every implemented coefficient observable at a > 0, where the
// static oracle is blind.
// ---------------------------------------------------------------------------

namespace {

struct ReferenceEntry {
    TensorCase kind;
    int point;  // index into reference_points / reference_points_z
    int pair;
    double f;
    double h;
};

struct ReferencePoint {
    double a, d, w;
};
struct ReferencePointZ {
    double a, d, z, w;
};

constexpr ReferencePoint reference_points[2] = {{0.9, 1.1, 1.3}, {2.3, 0.7, 0.45}};
constexpr ReferencePointZ reference_points_z[2] = {{0.9, 1.1, 0.4, 1.3}, {2.3, 0.7, 0.9, 0.45}};

const ReferenceEntry reference_table[] = {
    {TensorCase::perp_boundary, 0, XX, 1.3724260775846577, 0.35435228821417586},
    {TensorCase::perp_boundary, 0, YY, 1.2858217026077836, 0.83608558491602736},
    {TensorCase::perp_boundary, 0, ZZ, 1.6392728809645813, -1.1299721508327789},
    {TensorCase::perp_boundary, 0, XZ, -0.17495833328661511, 0.97319857919565944},
    {TensorCase::perp_boundary, 1, XX, 1.2146111431852689, -3.1877193547861689},
    {TensorCase::perp_boundary, 1, YY, 1.2794814077084846, -1.1526912768143416},
    {TensorCase::perp_boundary, 1, ZZ, 1.179376836861348, -4.2930455501399498},
    {TensorCase::perp_boundary, 1, XZ, 0.080584179531944758, 2.5279851900271146},
    {TensorCase::perp_free, 0, XX, 1.3724260775846577, 0.35435228821417586},
    {TensorCase::perp_free, 0, YY, 1.2858217026077836, 0.83608558491602736},
    {TensorCase::perp_free, 0, ZZ, -1.6392728809645813, 1.1299721508327789},
    {TensorCase::perp_free, 0, XZ, 0.17495833328661511, -0.97319857919565944},
    {TensorCase::perp_free, 1, XX, 1.2146111431852689, -3.1877193547861689},
    {TensorCase::perp_free, 1, YY, 1.2794814077084846, -1.1526912768143416},
    {TensorCase::perp_free, 1, ZZ, -1.179376836861348, 4.2930455501399498},
    {TensorCase::perp_free, 1, XZ, -0.080584179531944758, -2.5279851900271146},
    {TensorCase::par_boundary, 0, XX, 0.92914287636799442, 0.35645947941736505},
    {TensorCase::par_boundary, 0, YY, -0.33650306362825477, 0.54683396168229492},
    {TensorCase::par_boundary, 0, ZZ, -0.24325408374061244, -0.6723019400302801},
    {TensorCase::par_boundary, 0, XY, -0.046158245044382942, 0.60347227134772463},
    {TensorCase::par_boundary, 0, XZ, -0.033569632759551223, 0.43888892461652701},
    {TensorCase::par_boundary, 0, YZ, -0.89506366611333876, -0.1937049490284683},
    {TensorCase::par_boundary, 1, XX, 0.071056020487133872, -0.16792883332137665},
    {TensorCase::par_boundary, 1, YY, 0.16689233445937324, 0.030017160435730064},
    {TensorCase::par_boundary, 1, ZZ, 0.13650543810085677, -0.010804333934351432},
    {TensorCase::par_boundary, 1, XY, 0.024461451568605755, 0.03286130296791559},
    {TensorCase::par_boundary, 1, XZ, 0.062900875462129094, 0.08450049334606867},
    {TensorCase::par_boundary, 1, YZ, -0.1390113430639599, -0.0088029677788134877},
    {TensorCase::par_free, 0, XX, 1.3724260775846577, 0.35435228821417586},
    {TensorCase::par_free, 0, YY, -1.6392728809645813, 1.1299721508327789},
    {TensorCase::par_free, 0, ZZ, 1.2858217026077836, 0.83608558491602736},
    {TensorCase::par_free, 0, XY, 0.17495833328661511, -0.97319857919565944},
    {TensorCase::par_free, 1, XX, 1.2146111431852689, -3.1877193547861689},
    {TensorCase::par_free, 1, YY, -1.179376836861348, 4.2930455501399498},
    {TensorCase::par_free, 1, ZZ, 1.2794814077084846, -1.1526912768143416},
    {TensorCase::par_free, 1, XY, -0.080584179531944758, -2.5279851900271146},
};

SusceptibilityTensor evaluate_case(TensorCase kind, int point, const CoeffMutation& mut) {
    if (kind == TensorCase::par_boundary) {
        const auto& p = reference_points_z[point];
        return fh_par_boundary(p.a, p.d, p.z, p.w, mut);
    }
    const auto& p = reference_points[point];
    switch (kind) {
        case TensorCase::perp_boundary: return fh_perp_boundary(p.a, p.d, p.w, mut);
        case TensorCase::perp_free: return fh_perp_free(p.a, p.d, p.w, mut);
        case TensorCase::par_free: return fh_par_free(p.a, p.d, p.w, mut);
        default: break;
    }
    throw std::logic_error("evaluate_case: unreachable");
}

const char* pair_name(int pair) {
    static const char* names[6] = {"xx", "yy", "zz", "xy", "xz", "yz"};
    return names[pair];
}

double reference_scale(TensorCase kind, int point) {
    double scale = 0.0;
    for (const auto& e : reference_table) {
        if (e.kind == kind && e.point == point) {
            scale = std::max({scale, std::abs(e.f), std::abs(e.h)});
        }
    }
    return scale;
}

std::vector<OracleReport> reference_reports(const CoeffMutation& mut, double tolerance) {
    std::vector<OracleReport> out;
    for (const auto& e : reference_table) {
        const SusceptibilityTensor t = evaluate_case(e.kind, e.point, mut);
        const double scale = reference_scale(e.kind, e.point);
        const std::string base = std::string("em-reference/") + tensor_case_name(e.kind) +
                                 "/pt" + std::to_string(e.point) + "/" + pair_name(e.pair);
        out.push_back(compare(base + "/f", t.f[e.pair], e.f, tolerance, scale));
        out.push_back(compare(base + "/h", t.h[e.pair], e.h, tolerance, scale));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Static-limit comparisons of every tensor case against the textbook oracle
// ---------------------------------------------------------------------------

// Image-reflected static tensor: interaction of a dipole with the mirror
// image of the other, components tangential to the mirror flipped.
Mat3 image_reflected_oracle(double image_distance, const Vec3& n_image, double omega0) {
    const Mat3 v = em_static_oracle(image_distance, n_image, omega0);
    Mat3 out;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const double mirror_j = (j == 2) ? 1.0 : -1.0;
            out(i, j) = -v(i, j) * mirror_j;
        }
    }
    return out;
}

double static_env(double d, double w) { return 1.0 / (d * d * d) + w / (d * d) + w * w / d; }

std::vector<OracleReport> em_static_reports(const CoeffMutation& mut, double tolerance,
                                            int n_points) {
    std::vector<OracleReport> out;
    std::mt19937_64 rng(20240811ull);
    std::uniform_real_distribution<double> dist_d(0.3, 3.0);
    std::uniform_real_distribution<double> dist_w(0.3, 3.0);
    std::uniform_real_distribution<double> dist_z(0.2, 2.0);

    for (int k = 0; k < n_points; ++k) {
        const double d = dist_d(rng);
        const double w = dist_w(rng);
        const double z = dist_z(rng);
        const double env = static_env(d, w);
        const std::string pt = "/pt" + std::to_string(k);

        // free tensors: P0 at a = 0 equals V with n along the separation axis
        {
            const Mat3 p0 = p_tensor(fh_perp_free(0.0, d, w, mut), 0.0, d, w);
            const Mat3 v = em_static_oracle(d, {0.0, 0.0, 1.0}, w);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    out.push_back(compare("em-static/perp-free" + pt + "/" + std::to_string(i) +
                                              std::to_string(j),
                                          p0(i, j), v(i, j), tolerance, env));
        }
        {
            const Mat3 p0 = p_tensor(fh_par_free(0.0, d, w, mut), 0.0, d, w);
            const Mat3 v = em_static_oracle(d, {0.0, 1.0, 0.0}, w);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    out.push_back(compare("em-static/par-free" + pt + "/" + std::to_string(i) +
                                              std::to_string(j),
                                          p0(i, j), v(i, j), tolerance, env));
        }
        // boundary tensors: P_b at a = 0 equals minus the image-reflected V
        {
            const double image = d + 2.0 * z;
            const Mat3 pb = p_tensor(fh_perp_boundary(0.0, image, w, mut), 0.0, image, w);
            const Mat3 vb = image_reflected_oracle(image, {0.0, 0.0, 1.0}, w);
            const double envb = static_env(image, w);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    out.push_back(compare("em-static/perp-boundary" + pt + "/" +
                                              std::to_string(i) + std::to_string(j),
                                          pb(i, j), vb(i, j), tolerance, envb));
        }
        {
            const double image = std::sqrt(d * d + 4.0 * z * z);
            const Mat3 pb = p_tensor(fh_par_boundary(0.0, d, z, w, mut), 0.0, image, w);
            const Mat3 vb = image_reflected_oracle(image, {0.0, d / image, -2.0 * z / image}, w);
            const double envb = static_env(image, w);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    out.push_back(compare("em-static/par-boundary" + pt + "/" +
                                              std::to_string(i) + std::to_string(j),
                                          pb(i, j), vb(i, j), tolerance, envb));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Suite sections
// ---------------------------------------------------------------------------

void scalar_oracle_section(std::vector<OracleReport>& out) {
    const double ad_values[] = {1e-3, 0.1, 1.0, 10.0, 100.0};
    const double wd_values[] = {0.1, 0.5, 1.0, 5.0, 10.0};

    const PairGeometry perp = PairGeometry::perpendicular(1.0, 0.35, 1.0);
    const PairGeometry par = PairGeometry::parallel(1.0, 0.35, 1.0);
    const double distances[3] = {image_distances(perp).direct, image_distances(perp).image,
                                 image_distances(par).image};
    const char* names[3] = {"direct", "perp-image", "par-image"};

    for (const double ad : ad_values) {
        for (const double wd : wd_values) {
            for (int c = 0; c < 3; ++c) {
                // grid is pinned by a * (direct separation) and omega0 * d
                const double a = ad;  // direct separation is 1
                const double d = distances[c];
                const double w0 = wd / d;
                const double model = scalar_kernel(a, d, w0);
                const double oracle = scalar_delta_root_oracle(a, d, w0);
                out.push_back(compare("scalar/delta-root/ad=" + format_double(ad) +
                                          "/w0d=" + format_double(wd) + "/" + names[c],
                                      model, oracle, 1e-6, scalar_envelope(a, d)));
            }
        }
    }
}

void series_section(std::vector<OracleReport>& out) {
    // inertial-limit recovery of the trajectory helpers
    for (const double a : {1e-6, 1e-9, 1e-12}) {
        for (const double x : {0.1, 1.0, 3.7, 10.0}) {
            out.push_back(compare("series/interval/a=" + format_double(a) +
                                      "/x=" + format_double(x),
                                  rindler_interval(a, x), x, 1e-8, x));
            out.push_back(compare("series/phase/a=" + format_double(a) + "/x=" + format_double(x),
                                  rindler_phase_distance(a, x), x, 1e-8, x));
        }
    }
    // kernel at a*d = 1e-6 against the inertial branch
    for (const double d : {0.5, 1.0, 2.0}) {
        const double a = 1e-6 / d;
        const double w0 = 1.0 / d;
        out.push_back(compare("series/kernel/ad=1e-6/d=" + format_double(d),
                              scalar_kernel(a, d, w0), std::cos(w0 * d) / d, 1e-10,
                              scalar_envelope(a, d)));
    }
    // both sides of the series threshold against the direct closed form
    for (const double ad : {1e-5, 9.9e-5, 1.1e-4}) {
        const double d = 1.0;
        const double a = ad;
        const double direct = (2.0 / a) * std::asinh(0.5 * a * d);
        out.push_back(compare("series/threshold/ad=" + format_double(ad),
                              rindler_phase_distance(a, d), direct, 1e-12, d));
    }
}

void property_section(std::vector<OracleReport>& out) {
    std::mt19937_64 rng(7702123ull);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const auto log_uniform = [&](double lo, double hi) {
        return lo * std::exp(u01(rng) * std::log(hi / lo));
    };

    int sign_violations = 0;
    int lambda_violations = 0;
    int total_sum_violations = 0;
    const int n_scalar = 300;
    for (int k = 0; k < n_scalar; ++k) {
        const Alignment alignment = (k % 2 == 0) ? Alignment::perpendicular : Alignment::parallel;
        PairGeometry g{alignment, log_uniform(0.05, 5.0), log_uniform(0.01, 5.0),
                       (k % 5 == 0) ? 0.0 : log_uniform(1e-6, 50.0)};
        ScalarParams sym{g, log_uniform(0.1, 20.0), log_uniform(0.1, 10.0),
                         BellSign::symmetric};
        ScalarParams anti = sym;
        anti.sign = BellSign::antisymmetric;

        const EnergyBreakdown es = scalar_energy(sym);
        const EnergyBreakdown ea = scalar_energy(anti);
        if (es.free_term != -ea.free_term || es.boundary_term != -ea.boundary_term ||
            es.total != -ea.total) {
            ++sign_violations;
        }
        ScalarParams scaled = sym;
        const double factor = log_uniform(0.01, 100.0);
        scaled.lambda_sq = sym.lambda_sq * factor;
        const EnergyBreakdown ref = scalar_energy(ScalarParams{g, sym.omega0, 1.0, sym.sign});
        const EnergyBreakdown want{sym.lambda_sq * factor * ref.free_term,
                                   sym.lambda_sq * factor * ref.boundary_term, 0.0};
        const EnergyBreakdown got = scalar_energy(scaled);
        if (got.free_term != want.free_term || got.boundary_term != want.boundary_term) {
            ++lambda_violations;
        }
        if (es.total != es.free_term + es.boundary_term) ++total_sum_violations;
    }
    out.push_back(compare("properties/scalar/bell-sign-odd", sign_violations, 0.0, 0.5, 1.0));
    out.push_back(compare("properties/scalar/lambda-linear", lambda_violations, 0.0, 0.5, 1.0));
    out.push_back(
        compare("properties/scalar/total-is-sum", total_sum_violations, 0.0, 0.5, 1.0));

    // electromagnetic bilinearity and the tied sign structure
    int bilinear_violations = 0;
    int tied_odd_violations = 0;
    int tied_even_violations = 0;
    std::uniform_real_distribution<double> comp(-2.0, 2.0);
    const int n_em = 200;
    for (int k = 0; k < n_em; ++k) {
        const Alignment alignment = (k % 2 == 0) ? Alignment::perpendicular : Alignment::parallel;
        PairGeometry g{alignment, log_uniform(0.1, 3.0), log_uniform(0.05, 3.0),
                       (k % 7 == 0) ? 0.0 : log_uniform(1e-4, 10.0)};
        EmParams p{g, log_uniform(0.2, 5.0),
                   DipolePair{{comp(rng), comp(rng), comp(rng)}, {comp(rng), comp(rng), comp(rng)}},
                   BellSign::symmetric};
        const double factor = log_uniform(0.1, 10.0);
        EmParams scaled = p;
        scaled.dipoles.mu_a = {factor * p.dipoles.mu_a.x, factor * p.dipoles.mu_a.y,
                               factor * p.dipoles.mu_a.z};
        const EnergyBreakdown base = em_energy(p);
        const EnergyBreakdown got = em_energy(scaled);
        const double envelope =
            std::abs(factor) * (std::abs(base.free_term) + std::abs(base.boundary_term)) + 1e-300;
        if (std::abs(got.free_term - factor * base.free_term) > 1e-12 * envelope ||
            std::abs(got.boundary_term - factor * base.boundary_term) > 1e-12 * envelope) {
            ++bilinear_violations;
        }

        if (alignment == Alignment::perpendicular) {
            // without xz cross couplings the energy is exactly odd in the
            // Bell sign
            EmParams diag = p;
            diag.dipoles.mu_a.z = 0.0;
            diag.dipoles.mu_b.z = 0.0;
            EmParams diag_anti = diag;
            diag_anti.sign = BellSign::antisymmetric;
            const EnergyBreakdown s1 = em_energy_perp(diag);
            const EnergyBreakdown s2 = em_energy_perp(diag_anti);
            if (s1.free_term != -s2.free_term || s1.boundary_term != -s2.boundary_term) {
                ++tied_odd_violations;
            }
            // pure cross dipoles: state-independent under the tied signs
            EmParams cross = p;
            cross.dipoles = dipole_preset("cross-xz", 1.0);
            EmParams cross_anti = cross;
            cross_anti.sign = BellSign::antisymmetric;
            const EnergyBreakdown c1 = em_energy_perp(cross);
            const EnergyBreakdown c2 = em_energy_perp(cross_anti);
            if (c1.free_term != c2.free_term || c1.boundary_term != c2.boundary_term) {
                ++tied_even_violations;
            }
        }
    }
    out.push_back(compare("properties/em/bilinear", bilinear_violations, 0.0, 0.5, 1.0));
    out.push_back(compare("properties/em/perp-diagonal-sign-odd", tied_odd_violations, 0.0, 0.5, 1.0));
    out.push_back(compare("properties/em/perp-cross-sign-even", tied_even_violations, 0.0, 0.5, 1.0));

    // tensor symmetry flags at random points
    int parity_violations = 0;
    for (int k = 0; k < 100; ++k) {
        const double a = log_uniform(1e-3, 5.0);
        const double d = log_uniform(0.1, 3.0);
        const double z = log_uniform(0.05, 3.0);
        const double w = log_uniform(0.2, 5.0);
        const SusceptibilityTensor tensors[4] = {
            fh_perp_boundary(a, d, w), fh_perp_free(a, d, w), fh_par_boundary(a, d, z, w),
            fh_par_free(a, d, w)};
        for (const auto& t : tensors) {
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                    const double parity = [&] {
                        static constexpr int pair_index[3][3] = {
                            {XX, XY, XZ}, {XY, YY, YZ}, {XZ, YZ, ZZ}};
                        return static_cast<double>(t.parity[pair_index[i][j]]);
                    }();
                    if (parity == 0.0) {
                        if (t.f_at(i, j) != 0.0 || t.h_at(i, j) != 0.0) ++parity_violations;
                    } else if (t.f_at(i, j) != parity * t.f_at(j, i) ||
                               t.h_at(i, j) != parity * t.h_at(j, i)) {
                        ++parity_violations;
                    }
                }
            }
        }
    }
    out.push_back(compare("properties/em/tensor-parity", parity_violations, 0.0, 0.5, 1.0));

    // zero dipoles give exactly zero energy
    for (const Alignment alignment : {Alignment::perpendicular, Alignment::parallel}) {
        EmParams p{{alignment, 1.0, 0.5, 1.5}, 2.0, DipolePair{}, BellSign::symmetric};
        const EnergyBreakdown e = em_energy(p);
        const char* name = alignment == Alignment::perpendicular ? "perp" : "par";
        out.push_back(
            compare(std::string("properties/em/zero-dipoles-") + name, e.total, 0.0, 1e-6, 0.0));
    }
}

void mutation_section(std::vector<OracleReport>& out) {
    constexpr double perturbation = 1e-3;
    constexpr double reference_tol = 1e-10;
    constexpr double static_tol = 1e-12;
    for (const TensorCase kind : {TensorCase::perp_boundary, TensorCase::perp_free,
                                  TensorCase::par_boundary, TensorCase::par_free}) {
        const int n_sites = fh_coefficient_count(kind);
        for (int site = 0; site < n_sites; ++site) {
            const CoeffMutation mut{site, perturbation};
            double worst = 0.0;
            bool detected = false;
            for (const auto& r : reference_reports(mut, reference_tol)) {
                if (r.case_id.find(tensor_case_name(kind)) == std::string::npos) continue;
                worst = std::max(worst, r.rel_error);
                if (!r.passed) detected = true;
            }
            if (!detected) {
                for (const auto& r : em_static_reports(mut, static_tol, 3)) {
                    worst = std::max(worst, r.rel_error);
                    if (!r.passed) detected = true;
                }
            }
            OracleReport r;
            r.case_id = std::string("mutation/") + tensor_case_name(kind) + "/site" +
                        std::to_string(site);
            r.model_value = worst;
            r.oracle_value = reference_tol;
            r.rel_error = worst;
            r.tolerance = reference_tol;
            r.passed = detected;
            out.push_back(r);
        }
    }
}

}  // namespace

std::vector<OracleReport> run_validation_suite(std::string_view filter) {
    std::vector<OracleReport> out;
    scalar_oracle_section(out);
    for (auto& r : em_static_reports(CoeffMutation{}, 1e-12, 20)) out.push_back(std::move(r));
    for (auto& r : reference_reports(CoeffMutation{}, 1e-10)) out.push_back(std::move(r));
    series_section(out);
    property_section(out);
    for (const Regime regime : {Regime::far_zone, Regime::intermediate}) {
        for (auto& r : asymptotic_error_map(regime)) out.push_back(std::move(r));
    }
    mutation_section(out);

    if (!filter.empty()) {
        std::erase_if(out, [&](const OracleReport& r) {
            return r.case_id.find(filter) == std::string::npos;
        });
    }
    return out;
}

bool all_passed(const std::vector<OracleReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const OracleReport& r) { return r.passed; });
}

void print_reports(std::ostream& os, const std::vector<OracleReport>& reports) {
    char buf[256];
    for (const auto& r : reports) {
        std::snprintf(buf, sizeof buf, "%s,%.9g,%.9g,%.9g,%.9g,%s\n", r.case_id.c_str(),
                      r.model_value, r.oracle_value, r.rel_error, r.tolerance,
                      r.passed ? "pass" : "fail");
        os << buf;
    }
}

}  // namespace accelres::validation
