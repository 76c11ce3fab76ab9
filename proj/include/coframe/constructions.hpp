#pragma once

#include "coframe/structure.hpp"

#include <array>
#include <string>
#include <vector>

namespace coframe {

/// An orthonormal coframe (eta1, eta2) on a surface, written on the (x, y, theta)
/// chart with no theta dependence, together with its structure functions:
/// d eta1 = a eta1^eta2, d eta2 = b eta1^eta2, K = a_2 - a^2 - b_1 - b^2.
struct SurfaceChart {
    std::string name;
    Chart chart = Chart::surface;
    OneFormField eta1, eta2;
    ScalarField a, b, gauss_K;

    /// (eta1, eta2, d theta): directional derivatives w.r.t. this coframe give
    /// the surface derivatives f_eta1, f_eta2 of theta-independent functions.
    CoframeField frame() const;
};

SurfaceChart euclidean_plane();
SurfaceChart hyperbolic_half_plane();
/// Stereographic chart of the sphere of curvature K0 > 0.
SurfaceChart round_sphere(double K0);

/// Residuals "deta1", "deta2" and "gauss_K" of the surface structure equations.
StructureReport check_surface(const SurfaceChart& s, const std::vector<Point3>& points,
                              const CheckOptions& opts = {});

/// phi = f eta1 + g eta2 on the surface.
struct PhiForm {
    ScalarField f, g;
};

struct InducedCartan {
    CoframeField alpha;        // (w1, w3, I w1 + J w3 - w2)
    ScalarField curvature;     // -I^2 - J^2 + J_1 - I_3 + 1
};

/// Requires extracted K = 1 on `probes` (NotUnitFlag otherwise).
InducedCartan gfs_to_cartan(const CoframeField& w, const std::vector<Point3>& probes,
                            const CheckOptions& opts = {});

/// Maxima of |-I_2 + J_1 - (Kcartan - 1)|, |I_3 + J|, |J_3 - I| over points.
std::array<double, 3> pde_residuals(const CoframeField& alpha, const ScalarField& I,
                                    const ScalarField& J, const std::vector<Point3>& points,
                                    const DerivativeOptions& opts = {});

/// (a1, I a1 + J a2 - a3, a2). Throws PdeViolation with the three residuals
/// when the directional PDE system fails on `probes`.
CoframeField cartan_to_gfs(const CoframeField& alpha, const ScalarField& I, const ScalarField& J,
                           const std::vector<Point3>& probes, const CheckOptions& opts = {});

/// (a1, phi - a3, a2). Requires d phi = (Kcartan - 1) a1^a2 and no a3 component
/// in phi; throws PhiConstraintViolation with the offending residuals.
CoframeField phi_construction(const CoframeField& alpha, const OneFormField& phi,
                              const std::vector<Point3>& probes, const CheckOptions& opts = {});

/// (v a1, v a2, a3 - *d log v) with *d log v = -(v_2/v) a1 + (v_1/v) a2.
CoframeField conformal_rescale(const CoframeField& alpha, const ScalarField& v,
                               const std::vector<Point3>& probes,
                               const DerivativeOptions& opts = {});

/// a1 = cos t eta1 + sin t eta2, a2 = -sin t eta1 + cos t eta2,
/// a3 = -d t - a eta1 - b eta2. Throws LiftConventionFailure if the Cartan
/// equations fail on `probes`.
CoframeField liouville_lift(const SurfaceChart& s, const std::vector<Point3>& probes,
                            const CheckOptions& opts = {});

struct LiouvilleGfs {
    CoframeField coframe;   // (a1 / v, -phi - a3, a2 / v)
    ScalarField v;          // 1 / sqrt(positivity functional)
    ScalarField I, J;       // closed forms, rotated to the fibre angle
};

/// Positivity functional -f_2 + a f + b g + g_1 + K of a PhiForm.
ScalarField positivity_functional(const SurfaceChart& s, const PhiForm& phi,
                                  const DerivativeOptions& opts = {});

/// Throws PositivityViolation with the minimum of the functional on `probes`.
LiouvilleGfs liouville_gfs(const SurfaceChart& s, const PhiForm& phi,
                           const std::vector<Point3>& probes, const CheckOptions& opts = {});

/// (sqrt(K0) a1, -a3, sqrt(K0) a2). Throws NonPositiveCurvature for K0 <= 0.
CoframeField constant_curvature_zoll_gfs(double K0, const CoframeField& alpha);

struct LandsbergCartan {
    CoframeField alpha;     // (w2, w3 / sqrt K, sqrt K w1 + K_2 / (2 K sqrt K) w3)
    ScalarField curvature;  // K - (3/4)(1/K)((1/K) K_2^2 - (2/3) K_22)
};

/// Requires J = 0, K > 0 and K_1 = 0 on `probes` (PreconditionViolation).
LandsbergCartan landsberg_to_cartan(const CoframeField& w, const std::vector<Point3>& probes,
                                    const CheckOptions& opts = {});

/// Maxima of |m_3|, |m_11 - 1/m + m Kcartan|, |m_12| over points.
std::array<double, 3> landsberg_pde_residuals(const CoframeField& alpha, const ScalarField& m,
                                              const std::vector<Point3>& points,
                                              const DerivativeOptions& opts = {});

/// (m_1 a2 + m a3, a1, a2 / m). Throws ZeroM or PdeViolation. `pde_tolerance`
/// applies to the second-order PDE residuals.
CoframeField cartan_to_landsberg(const CoframeField& alpha, const ScalarField& m,
                                 const std::vector<Point3>& probes, const CheckOptions& opts = {},
                                 double pde_tolerance = nested_tolerance);

} // namespace coframe
