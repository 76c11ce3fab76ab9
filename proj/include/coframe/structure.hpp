#pragma once

#include "coframe/calculus.hpp"

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coframe {

enum class StructureKind { contact, taut_circle, cartan, k_cartan, gfs, bianchi, ricci };

std::string_view to_string(StructureKind kind);

struct CheckOptions {
    DerivativeOptions derivatives;
    double tolerance = 1e-10;
    double threshold = 1e-6;  // nondegeneracy of volume coefficients
};

/// Default tolerance for first-order residuals in the given mode.
double default_tolerance(DerivativeMode mode);
/// Default tolerance for residuals that need nested differentiation.
constexpr double nested_tolerance = 1e-5;

struct StructureReport {
    StructureKind kind = StructureKind::gfs;
    std::map<std::string, std::vector<double>> invariants;  // per sample point
    std::map<std::string, double> residuals;                // max over samples
    /// Smallest |volume coefficient| seen, for checks with a nondegeneracy part.
    std::optional<double> min_volume;
    std::size_t samples = 0;
    double tolerance = 0.0;
    double threshold = 0.0;
    bool pass = false;

    double residual(const std::string& name) const { return residuals.at(name); }
    /// Recomputes `pass` from the residuals and the nondegeneracy minimum.
    void finalize();
};

StructureReport check_contact(const OneFormField& alpha, const std::vector<Point3>& points,
                              const CheckOptions& opts = {});

/// Residuals "volume_mismatch" = |a1^da1 - a2^da2| and "cross_sum" = |a1^da2 + a2^da1|.
StructureReport check_taut_contact_circle(const OneFormField& a1, const OneFormField& a2,
                                          const std::vector<Point3>& points,
                                          const CheckOptions& opts = {});

/// Residuals "a1_da2", "a2_da1" and "volume_mismatch".
StructureReport check_cartan_structure(const OneFormField& a1, const OneFormField& a2,
                                       const std::vector<Point3>& points,
                                       const CheckOptions& opts = {});

struct ConnectionFit {
    OneFormValue eta;
    double residual = 0.0;
};

/// Least-squares solution of da1 = a2^eta, da2 = eta^a1. Throws IllConditioned
/// when the fit residual exceeds `tolerance` or the system is rank deficient.
ConnectionFit connection_form(const OneFormField& a1, const OneFormField& a2, const Point3& p,
                              const DerivativeOptions& opts = {}, double tolerance = 1e-6);

/// Fit residual of a candidate connection form at p (no throwing).
double connection_residual(const OneFormValue& a1, const TwoFormValue& da1, const OneFormValue& a2,
                           const TwoFormValue& da2, const OneFormValue& eta);

/// Expands d(eta) in the coframe (a1, a2, eta). Invariant "Kcartan"; residuals
/// "deta_23", "deta_31" (the other two coefficients) and "da1", "da2" (the
/// defining equations of eta). `expected` adds "Kcartan_expected".
StructureReport extract_cartan_K(const CoframeField& alpha, const std::vector<Point3>& points,
                                 const CheckOptions& opts = {},
                                 const ScalarField* expected = nullptr);

struct GfsInvariants {
    double I = 0.0, J = 0.0, K = 0.0;
    /// dw1 coefficient on w2^w3 minus 1, dw1 on w1^w2, dw2 (three entries,
    /// minus (0,1,0)), dw3 on w2^w3.
    std::array<double, 6> residuals{};
};

GfsInvariants gfs_invariants_at(const CoframeField& w, const Point3& p,
                                const DerivativeOptions& opts = {});

/// Residual names, in order, matching GfsInvariants::residuals.
const std::array<std::string, 6>& gfs_residual_names();

/// Reads I, J, K off the structure equations. With `expected_K` the
/// seventh residual "K_expected" = |K - expected_K| is added.
StructureReport extract_gfs_invariants(const CoframeField& w, const std::vector<Point3>& points,
                                       const CheckOptions& opts = {},
                                       std::optional<double> expected_K = std::nullopt);

/// I, J, K as fields, re-extracted at every evaluation point.
struct GfsInvariantFields {
    ScalarField I, J, K;
};
GfsInvariantFields gfs_invariant_fields(const CoframeField& w, const DerivativeOptions& opts = {});

/// Residuals "J_minus_I2" and "K3_KI_J2".
StructureReport check_bianchi(const CoframeField& w, const GfsInvariantFields& invariants,
                              const std::vector<Point3>& points, const CheckOptions& opts = {});

/// Residuals "ricci_12", "ricci_23", "ricci_13" of
/// f21 - f12 = -K f3, f32 - f23 = -f1, f31 - f13 = I f1 + f2 + J f3.
StructureReport check_ricci(const ScalarField& f, const CoframeField& w,
                            const std::vector<Point3>& points, const CheckOptions& opts = {});

} // namespace coframe
