#include "coframe/constructions.hpp"

#include "coframe/error.hpp"

#include <algorithm>
#include <cmath>

namespace coframe {

namespace {

ScalarField angle_cos()
{
    return make_scalar([](const auto& x) {
        using std::cos;
        return cos(x(2));
    });
}

ScalarField angle_sin()
{
    return make_scalar([](const auto& x) {
        using std::sin;
        return sin(x(2));
    });
}

double cartan_curvature(const CoframeJet& jet)
{
    return expand_2form(jet.d.row(2).transpose(), jet.value)(2);
}

} // namespace

InducedCartan gfs_to_cartan(const CoframeField& w, const std::vector<Point3>& probes,
                            const CheckOptions& opts)
{
    for (const Point3& p : probes) {
        const double K = gfs_invariants_at(w, p, opts.derivatives).K;
        if (!(std::abs(K - 1.0) <= opts.tolerance))
            throw Error(ErrorKind::NotUnitFlag, "extracted K differs from 1", {K});
    }
    const DerivativeOptions d = opts.derivatives;
    const GfsInvariantFields inv = gfs_invariant_fields(w, d);

    InducedCartan out;
    out.alpha.value = [w, d](const Point3& p) {
        const Mat3 m = w.value(p);
        const GfsInvariants g = gfs_invariants_at(w, p, d);
        Mat3 a;
        a.row(0) = m.row(0);
        a.row(1) = m.row(2);
        a.row(2) = g.I * m.row(0) + g.J * m.row(2) - m.row(1);
        return a;
    };
    out.curvature = numerical_field([w, d, inv](const Point3& p) {
        const Mat3 m = w.value(p);
        const double I = inv.I.value(p), J = inv.J.value(p);
        const Vec3 dI = directional_derivatives(gradient_at(inv.I, p, d), m);
        const Vec3 dJ = directional_derivatives(gradient_at(inv.J, p, d), m);
        return -I * I - J * J + dJ(0) - dI(2) + 1.0;
    });
    return out;
}

std::array<double, 3> pde_residuals(const CoframeField& alpha, const ScalarField& I,
                                    const ScalarField& J, const std::vector<Point3>& points,
                                    const DerivativeOptions& opts)
{
    std::array<double, 3> worst{0.0, 0.0, 0.0};
    for (const Point3& p : points) {
        const CoframeJet jet = coframe_jet(alpha, p, opts);
        const double curvature = cartan_curvature(jet);
        const Vec3 dI = directional_derivatives(gradient_at(I, p, opts), jet.value);
        const Vec3 dJ = directional_derivatives(gradient_at(J, p, opts), jet.value);
        const std::array<double, 3> r = {-dI(1) + dJ(0) - (curvature - 1.0), dI(2) + J.value(p),
                                         dJ(2) - I.value(p)};
        for (int i = 0; i < 3; ++i)
            worst[i] = std::max(worst[i], std::abs(r[i]));
    }
    return worst;
}

CoframeField cartan_to_gfs(const CoframeField& alpha, const ScalarField& I, const ScalarField& J,
                           const std::vector<Point3>& probes, const CheckOptions& opts)
{
    const auto r = pde_residuals(alpha, I, J, probes, opts.derivatives);
    if (*std::max_element(r.begin(), r.end()) > opts.tolerance)
        throw Error(ErrorKind::PdeViolation, "directional PDE system fails", {r[0], r[1], r[2]});
    const OneFormField a1 = alpha.row(0), a2 = alpha.row(1), a3 = alpha.row(2);
    return stack(a1, I * a1 + J * a2 - a3, a2);
}

CoframeField phi_construction(const CoframeField& alpha, const OneFormField& phi,
                              const std::vector<Point3>& probes, const CheckOptions& opts)
{
    std::array<double, 4> worst{0.0, 0.0, 0.0, 0.0};
    for (const Point3& p : probes) {
        const CoframeJet jet = coframe_jet(alpha, p, opts.derivatives);
        const double curvature = cartan_curvature(jet);
        const Vec3 c = expand_2form(d_oneform(phi, p, opts.derivatives), jet.value);
        const Vec3 parts = expand_1form(phi.value(p), jet.value);
        const std::array<double, 4> r = {c(0), c(1), c(2) - (curvature - 1.0), parts(2)};
        for (int i = 0; i < 4; ++i)
            worst[i] = std::max(worst[i], std::abs(r[i]));
    }
    if (*std::max_element(worst.begin(), worst.end()) > opts.tolerance)
        throw Error(ErrorKind::PhiConstraintViolation, "phi violates its structure equation",
                    {worst[0], worst[1], worst[2], worst[3]});
    const OneFormField a1 = alpha.row(0), a2 = alpha.row(1), a3 = alpha.row(2);
    return stack(a1, phi - a3, a2);
}

CoframeField conformal_rescale(const CoframeField& alpha, const ScalarField& v,
                               const std::vector<Point3>& probes, const DerivativeOptions& opts)
{
    for (const Point3& p : probes) {
        const double value = v.value(p);
        if (!(value > 0.0))
            throw Error(ErrorKind::NonPositiveV, "conformal factor must be positive", {value});
    }
    CoframeField out;
    out.value = [alpha, v, opts](const Point3& p) {
        const Mat3 m = alpha.value(p);
        const double value = v.value(p);
        const Vec3 dv = directional_derivatives(gradient_at(v, p, opts), m);
        Mat3 r;
        r.row(0) = value * m.row(0);
        r.row(1) = value * m.row(1);
        r.row(2) = m.row(2) + (dv(1) / value) * m.row(0) - (dv(0) / value) * m.row(1);
        return r;
    };
    return out;
}

CoframeField liouville_lift(const SurfaceChart& s, const std::vector<Point3>& probes,
                            const CheckOptions& opts)
{
    const ScalarField c = angle_cos(), sn = angle_sin();
    OneFormField dtheta;
    dtheta.value = [](const Point3&) { return Vec3::UnitZ().eval(); };
    dtheta.jacobian = [](const Point3&) { return Mat3::Zero().eval(); };

    const OneFormField a1 = c * s.eta1 + sn * s.eta2;
    const OneFormField a2 = c * s.eta2 - sn * s.eta1;
    const OneFormField a3 = -dtheta - s.a * s.eta1 - s.b * s.eta2;
    CoframeField alpha = stack(a1, a2, a3);

    std::vector<Point3> charted = probes;
    for (Point3& p : charted)
        p.chart = s.chart;
    const StructureReport report = extract_cartan_K(alpha, charted, opts, &s.gauss_K);
    if (!report.pass) {
        std::vector<double> details;
        for (const auto& [name, value] : report.residuals)
            details.push_back(value);
        throw Error(ErrorKind::LiftConventionFailure,
                    "lift of " + s.name + " fails the K-Cartan equations", details);
    }
    return alpha;
}

ScalarField positivity_functional(const SurfaceChart& s, const PhiForm& phi,
                                  const DerivativeOptions& opts)
{
    const CoframeField frame = s.frame();
    return numerical_field([s, phi, frame, opts](const Point3& p) {
        const Mat3 m = frame.value(p);
        const Vec3 df = directional_derivatives(gradient_at(phi.f, p, opts), m);
        const Vec3 dg = directional_derivatives(gradient_at(phi.g, p, opts), m);
        return -df(1) + s.a.value(p) * phi.f.value(p) + s.b.value(p) * phi.g.value(p) + dg(0)
               + s.gauss_K.value(p);
    });
}

LiouvilleGfs liouville_gfs(const SurfaceChart& s, const PhiForm& phi,
                           const std::vector<Point3>& probes, const CheckOptions& opts)
{
    const DerivativeOptions d = opts.derivatives;
    const ScalarField positivity = positivity_functional(s, phi, d);
    double lowest = std::numeric_limits<double>::infinity();
    for (const Point3& p : probes)
        lowest = std::min(lowest, positivity.value(p));
    if (!(lowest > 0.0))
        throw Error(ErrorKind::PositivityViolation, "positivity functional is not positive",
                    {lowest});

    const CoframeField alpha = liouville_lift(s, probes, opts);
    const CoframeField frame = s.frame();
    const OneFormField lifted_phi = phi.f * s.eta1 + phi.g * s.eta2;

    LiouvilleGfs out;
    out.v = numerical_field([positivity](const Point3& p) {
        return 1.0 / std::sqrt(positivity.value(p));
    });
    const ScalarField v = out.v;
    out.coframe.value = [alpha, lifted_phi, v](const Point3& p) {
        const Mat3 a = alpha.value(p);
        const double scale = 1.0 / v.value(p);
        Mat3 w;
        w.row(0) = scale * a.row(0);
        w.row(1) = -lifted_phi.value(p).transpose() - a.row(2);
        w.row(2) = scale * a.row(1);
        return w;
    };

    // Invariants downstairs, rotated into the fibre.
    auto downstairs = [s, phi, frame, v, d](const Point3& p) {
        const double vv = v.value(p);
        const Vec3 dv = directional_derivatives(gradient_at(v, p, d), frame.value(p));
        return std::pair<double, double>{-phi.f.value(p) * vv - dv(1),
                                         -phi.g.value(p) * vv + dv(0)};
    };
    out.I = numerical_field([downstairs](const Point3& p) {
        const auto [i, j] = downstairs(p);
        return std::cos(p.x(2)) * i + std::sin(p.x(2)) * j;
    });
    out.J = numerical_field([downstairs](const Point3& p) {
        const auto [i, j] = downstairs(p);
        return -std::sin(p.x(2)) * i + std::cos(p.x(2)) * j;
    });
    return out;
}

CoframeField constant_curvature_zoll_gfs(double K0, const CoframeField& alpha)
{
    if (!(K0 > 0.0))
        throw Error(ErrorKind::NonPositiveCurvature, "Zoll construction needs K0 > 0", {K0});
    const double r = std::sqrt(K0);
    return stack(r * alpha.row(0), -alpha.row(2), r * alpha.row(1));
}

LandsbergCartan landsberg_to_cartan(const CoframeField& w, const std::vector<Point3>& probes,
                                    const CheckOptions& opts)
{
    const DerivativeOptions d = opts.derivatives;
    const GfsInvariantFields inv = gfs_invariant_fields(w, d);
    for (const Point3& p : probes) {
        const GfsInvariants g = gfs_invariants_at(w, p, d);
        if (!(std::abs(g.J) <= opts.tolerance))
            throw Error(ErrorKind::PreconditionViolation, "J != 0", {g.J});
        if (!(g.K > 0.0))
            throw Error(ErrorKind::PreconditionViolation, "K <= 0", {g.K});
        const Vec3 dK = directional_derivatives(gradient_at(inv.K, p, d), w.value(p));
        if (!(std::abs(dK(0)) <= nested_tolerance))
            throw Error(ErrorKind::PreconditionViolation, "K_1 != 0", {dK(0)});
    }
    const ScalarField K2 = directional_derivative_field(inv.K, w, 1, d);

    LandsbergCartan out;
    out.alpha.value = [w, inv, K2](const Point3& p) {
        const Mat3 m = w.value(p);
        const double K = inv.K.value(p), k2 = K2.value(p), root = std::sqrt(K);
        Mat3 a;
        a.row(0) = m.row(1);
        a.row(1) = m.row(2) / root;
        a.row(2) = root * m.row(0) + k2 / (2.0 * K * root) * m.row(2);
        return a;
    };
    out.curvature = numerical_field([w, inv, K2, d](const Point3& p) {
        const double K = inv.K.value(p), k2 = K2.value(p);
        const double k22 = directional_derivatives(gradient_at(K2, p, d), w.value(p))(1);
        return K - 0.75 / K * (k2 * k2 / K - 2.0 / 3.0 * k22);
    });
    return out;
}

std::array<double, 3> landsberg_pde_residuals(const CoframeField& alpha, const ScalarField& m,
                                              const std::vector<Point3>& points,
                                              const DerivativeOptions& opts)
{
    const ScalarField m1 = directional_derivative_field(m, alpha, 0, opts);
    std::array<double, 3> worst{0.0, 0.0, 0.0};
    for (const Point3& p : points) {
        const CoframeJet jet = coframe_jet(alpha, p, opts);
        const double curvature = cartan_curvature(jet);
        const double value = m.value(p);
        const Vec3 dm = directional_derivatives(gradient_at(m, p, opts), jet.value);
        const Vec3 dm1 = directional_derivatives(gradient_at(m1, p, opts), jet.value);
        const std::array<double, 3> r = {dm(2), dm1(0) - 1.0 / value + value * curvature, dm1(1)};
        for (int i = 0; i < 3; ++i)
            worst[i] = std::max(worst[i], std::abs(r[i]));
    }
    return worst;
}

CoframeField cartan_to_landsberg(const CoframeField& alpha, const ScalarField& m,
                                 const std::vector<Point3>& probes, const CheckOptions& opts,
                                 double pde_tolerance)
{
    for (const Point3& p : probes) {
        const double value = m.value(p);
        if (!(std::abs(value) >= 1e-12))
            throw Error(ErrorKind::ZeroM, "m vanishes", {value});
    }
    const auto r = landsberg_pde_residuals(alpha, m, probes, opts.derivatives);
    if (r[0] > opts.tolerance || r[1] > pde_tolerance || r[2] > pde_tolerance)
        throw Error(ErrorKind::PdeViolation, "m fails its directional PDE system", {r[0], r[1], r[2]});
    const OneFormField a1 = alpha.row(0), a2 = alpha.row(1), a3 = alpha.row(2);
    const ScalarField m1 = directional_derivative_field(m, alpha, 0, opts.derivatives);
    return stack(m1 * a2 + m * a3, a1, reciprocal(m) * a2);
}

} // namespace coframe
