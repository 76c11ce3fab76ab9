#include "coframe/structure.hpp"

#include "coframe/error.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace coframe {

namespace {

struct Accumulator {
    std::map<std::string, double>& residuals;

    void operator()(const std::string& name, double value)
    {
        if (!std::isfinite(value))
            throw Error(ErrorKind::NonFiniteValue, "residual " + name + " is not finite");
        auto [it, inserted] = residuals.emplace(name, std::abs(value));
        if (!inserted)
            it->second = std::max(it->second, std::abs(value));
    }
};

StructureReport new_report(StructureKind kind, const std::vector<Point3>& points,
                           const CheckOptions& opts)
{
    StructureReport report;
    report.kind = kind;
    report.samples = points.size();
    report.tolerance = opts.tolerance;
    report.threshold = opts.threshold;
    return report;
}

void track_min(std::optional<double>& current, double value)
{
    value = std::abs(value);
    current = current ? std::min(*current, value) : value;
}

} // namespace

std::string_view to_string(StructureKind kind)
{
    switch (kind) {
    case StructureKind::contact: return "contact";
    case StructureKind::taut_circle: return "taut-circle";
    case StructureKind::cartan: return "cartan";
    case StructureKind::k_cartan: return "k-cartan";
    case StructureKind::gfs: return "gfs";
    case StructureKind::bianchi: return "bianchi";
    case StructureKind::ricci: return "ricci";
    }
    return "unknown";
}

double default_tolerance(DerivativeMode mode)
{
    return mode == DerivativeMode::analytic ? 1e-10 : 1e-6;
}

void StructureReport::finalize()
{
    pass = true;
    for (const auto& [name, value] : residuals)
        pass = pass && value < tolerance;
    if (min_volume)
        pass = pass && *min_volume > threshold;
}

StructureReport check_contact(const OneFormField& alpha, const std::vector<Point3>& points,
                              const CheckOptions& opts)
{
    StructureReport report = new_report(StructureKind::contact, points, opts);
    for (const Point3& p : points) {
        const double volume = wedge12(alpha.value(p), d_oneform(alpha, p, opts.derivatives));
        report.invariants["volume"].push_back(volume);
        track_min(report.min_volume, volume);
    }
    report.finalize();
    return report;
}

StructureReport check_taut_contact_circle(const OneFormField& a1, const OneFormField& a2,
                                          const std::vector<Point3>& points,
                                          const CheckOptions& opts)
{
    StructureReport report = new_report(StructureKind::taut_circle, points, opts);
    Accumulator add{report.residuals};
    for (const Point3& p : points) {
        const Vec3 v1 = a1.value(p), v2 = a2.value(p);
        const Vec3 d1 = d_oneform(a1, p, opts.derivatives), d2 = d_oneform(a2, p, opts.derivatives);
        const double vol1 = wedge12(v1, d1), vol2 = wedge12(v2, d2);
        add("volume_mismatch", vol1 - vol2);
        add("cross_sum", wedge12(v1, d2) + wedge12(v2, d1));
        track_min(report.min_volume, vol1);
    }
    report.finalize();
    return report;
}

StructureReport check_cartan_structure(const OneFormField& a1, const OneFormField& a2,
                                       const std::vector<Point3>& points, const CheckOptions& opts)
{
    StructureReport report = new_report(StructureKind::cartan, points, opts);
    Accumulator add{report.residuals};
    for (const Point3& p : points) {
        const Vec3 v1 = a1.value(p), v2 = a2.value(p);
        const Vec3 d1 = d_oneform(a1, p, opts.derivatives), d2 = d_oneform(a2, p, opts.derivatives);
        const double vol1 = wedge12(v1, d1);
        add("a1_da2", wedge12(v1, d2));
        add("a2_da1", wedge12(v2, d1));
        add("volume_mismatch", vol1 - wedge12(v2, d2));
        track_min(report.min_volume, vol1);
    }
    report.finalize();
    return report;
}

namespace {

// Rows 0-2: [a2]x eta = da1; rows 3-5: -[a1]x eta = da2.
Eigen::Matrix<double, 6, 3> connection_system(const Vec3& a1, const Vec3& a2)
{
    auto skew = [](const Vec3& v) {
        Mat3 s;
        s << 0, -v(2), v(1), v(2), 0, -v(0), -v(1), v(0), 0;
        return s;
    };
    Eigen::Matrix<double, 6, 3> a;
    a.topRows<3>() = skew(a2);
    a.bottomRows<3>() = -skew(a1);
    return a;
}

} // namespace

double connection_residual(const OneFormValue& a1, const TwoFormValue& da1, const OneFormValue& a2,
                           const TwoFormValue& da2, const OneFormValue& eta)
{
    Eigen::Matrix<double, 6, 1> rhs;
    rhs << da1, da2;
    return (connection_system(a1, a2) * eta - rhs).norm();
}

ConnectionFit connection_form(const OneFormField& a1, const OneFormField& a2, const Point3& p,
                              const DerivativeOptions& opts, double tolerance)
{
    const Vec3 v1 = a1.value(p), v2 = a2.value(p);
    const Vec3 d1 = d_oneform(a1, p, opts), d2 = d_oneform(a2, p, opts);
    const Eigen::Matrix<double, 6, 3> a = connection_system(v1, v2);
    Eigen::Matrix<double, 6, 1> rhs;
    rhs << d1, d2;
    Eigen::JacobiSVD<Eigen::Matrix<double, 6, 3>> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sigma = svd.singularValues();
    if (!(sigma(2) > 1e-12 * std::max(1.0, sigma(0))))
        throw Error(ErrorKind::IllConditioned, "connection system is rank deficient",
                    {sigma(0), sigma(1), sigma(2)});
    ConnectionFit fit;
    fit.eta = svd.solve(rhs);
    fit.residual = (a * fit.eta - rhs).norm();
    if (!(fit.residual <= tolerance))
        throw Error(ErrorKind::IllConditioned, "pair admits no connection form", {fit.residual});
    return fit;
}

StructureReport extract_cartan_K(const CoframeField& alpha, const std::vector<Point3>& points,
                                 const CheckOptions& opts, const ScalarField* expected)
{
    StructureReport report = new_report(StructureKind::k_cartan, points, opts);
    Accumulator add{report.residuals};
    for (const Point3& p : points) {
        const CoframeJet jet = coframe_jet(alpha, p, opts.derivatives);
        const Vec3 c1 = expand_2form(jet.d.row(0).transpose(), jet.value);
        const Vec3 c2 = expand_2form(jet.d.row(1).transpose(), jet.value);
        const Vec3 c3 = expand_2form(jet.d.row(2).transpose(), jet.value);
        report.invariants["Kcartan"].push_back(c3(2));
        add("da1", (c1 - Vec3(1, 0, 0)).cwiseAbs().maxCoeff());
        add("da2", (c2 - Vec3(0, 1, 0)).cwiseAbs().maxCoeff());
        add("deta_23", c3(0));
        add("deta_31", c3(1));
        if (expected)
            add("Kcartan_expected", c3(2) - expected->value(p));
    }
    report.finalize();
    return report;
}

const std::array<std::string, 6>& gfs_residual_names()
{
    static const std::array<std::string, 6> names = {"dw1_23", "dw1_12", "dw2_23",
                                                     "dw2_31", "dw2_12", "dw3_23"};
    return names;
}

GfsInvariants gfs_invariants_at(const CoframeField& w, const Point3& p, const DerivativeOptions& opts)
{
    const CoframeJet jet = coframe_jet(w, p, opts);
    const Vec3 e1 = expand_2form(jet.d.row(0).transpose(), jet.value);
    const Vec3 e2 = expand_2form(jet.d.row(1).transpose(), jet.value);
    const Vec3 e3 = expand_2form(jet.d.row(2).transpose(), jet.value);
    GfsInvariants out;
    out.I = e1(1);
    out.J = e3(1);
    out.K = e3(2);
    out.residuals = {e1(0) - 1.0, e1(2), e2(0), e2(1) - 1.0, e2(2), e3(0)};
    return out;
}

StructureReport extract_gfs_invariants(const CoframeField& w, const std::vector<Point3>& points,
                                       const CheckOptions& opts, std::optional<double> expected_K)
{
    StructureReport report = new_report(StructureKind::gfs, points, opts);
    Accumulator add{report.residuals};
    const auto& names = gfs_residual_names();
    for (const Point3& p : points) {
        const GfsInvariants inv = gfs_invariants_at(w, p, opts.derivatives);
        report.invariants["I"].push_back(inv.I);
        report.invariants["J"].push_back(inv.J);
        report.invariants["K"].push_back(inv.K);
        for (std::size_t i = 0; i < names.size(); ++i)
            add(names[i], inv.residuals[i]);
        if (expected_K)
            add("K_expected", inv.K - *expected_K);
    }
    report.finalize();
    return report;
}

GfsInvariantFields gfs_invariant_fields(const CoframeField& w, const DerivativeOptions& opts)
{
    auto pick = [w, opts](double GfsInvariants::*member) {
        return numerical_field([w, opts, member](const Point3& p) {
            return gfs_invariants_at(w, p, opts).*member;
        });
    };
    return {pick(&GfsInvariants::I), pick(&GfsInvariants::J), pick(&GfsInvariants::K)};
}

StructureReport check_bianchi(const CoframeField& w, const GfsInvariantFields& invariants,
                              const std::vector<Point3>& points, const CheckOptions& opts)
{
    StructureReport report = new_report(StructureKind::bianchi, points, opts);
    Accumulator add{report.residuals};
    for (const Point3& p : points) {
        const Mat3 m = w.value(p);
        const Vec3 dI = directional_derivatives(gradient_at(invariants.I, p, opts.derivatives), m);
        const Vec3 dJ = directional_derivatives(gradient_at(invariants.J, p, opts.derivatives), m);
        const Vec3 dK = directional_derivatives(gradient_at(invariants.K, p, opts.derivatives), m);
        const double I = invariants.I.value(p), J = invariants.J.value(p), K = invariants.K.value(p);
        add("J_minus_I2", J - dI(1));
        add("K3_KI_J2", dK(2) + K * I + dJ(1));
    }
    report.finalize();
    return report;
}

StructureReport check_ricci(const ScalarField& f, const CoframeField& w,
                            const std::vector<Point3>& points, const CheckOptions& opts)
{
    StructureReport report = new_report(StructureKind::ricci, points, opts);
    Accumulator add{report.residuals};
    std::array<ScalarField, 3> first;
    for (int j = 0; j < 3; ++j)
        first[j] = directional_derivative_field(f, w, j, opts.derivatives);
    for (const Point3& p : points) {
        const Mat3 m = w.value(p);
        const Vec3 df = directional_derivatives(gradient_at(f, p, opts.derivatives), m);
        // second(j, i) = f_{j i}: the w^i component of d(f_j)
        Mat3 second;
        for (int j = 0; j < 3; ++j)
            second.row(j) =
                directional_derivatives(gradient_at(first[j], p, opts.derivatives), m).transpose();
        const GfsInvariants inv = gfs_invariants_at(w, p, opts.derivatives);
        add("ricci_12", second(1, 0) - second(0, 1) + inv.K * df(2));
        add("ricci_23", second(2, 1) - second(1, 2) + df(0));
        add("ricci_13", second(2, 0) - second(0, 2) - (inv.I * df(0) + df(1) + inv.J * df(2)));
    }
    report.finalize();
    return report;
}

} // namespace coframe
