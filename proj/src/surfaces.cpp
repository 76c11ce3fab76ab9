#include "coframe/constructions.hpp"

#include "coframe/error.hpp"

#include <cmath>

namespace coframe {

namespace {

template <typename Scalar>
Vec3T<Scalar> covector(const Scalar& x, const Scalar& y)
{
    return Vec3T<Scalar>(x, y, Scalar(0));
}

} // namespace

CoframeField SurfaceChart::frame() const
{
    OneFormField dtheta;
    dtheta.value = [](const Point3&) { return Vec3::UnitZ().eval(); };
    dtheta.jacobian = [](const Point3&) { return Mat3::Zero().eval(); };
    return stack(eta1, eta2, dtheta);
}

SurfaceChart euclidean_plane()
{
    SurfaceChart s;
    s.name = "plane";
    s.chart = Chart::e2;
    s.eta1 = make_oneform([](const auto& x) {
        using S = typename std::decay_t<decltype(x)>::Scalar;
        return covector<S>(S(1), S(0));
    });
    s.eta2 = make_oneform([](const auto& x) {
        using S = typename std::decay_t<decltype(x)>::Scalar;
        return covector<S>(S(0), S(1));
    });
    s.a = constant_scalar(0.0);
    s.b = constant_scalar(0.0);
    s.gauss_K = constant_scalar(0.0);
    return s;
}

SurfaceChart hyperbolic_half_plane()
{
    SurfaceChart s;
    s.name = "hyperbolic";
    s.chart = Chart::sl2;
    s.eta1 = make_oneform([](const auto& x) {
        using S = typename std::decay_t<decltype(x)>::Scalar;
        return covector<S>(S(1) / x(1), S(0));
    });
    s.eta2 = make_oneform([](const auto& x) {
        using S = typename std::decay_t<decltype(x)>::Scalar;
        return covector<S>(S(0), S(1) / x(1));
    });
    s.a = constant_scalar(1.0);
    s.b = constant_scalar(0.0);
    s.gauss_K = constant_scalar(-1.0);
    return s;
}

SurfaceChart round_sphere(double K0)
{
    if (!(K0 > 0.0))
        throw Error(ErrorKind::NonPositiveCurvature, "round sphere needs K0 > 0", {K0});
    const double r = std::sqrt(K0);
    auto conformal = [r](const auto& x) {
        using S = typename std::decay_t<decltype(x)>::Scalar;
        return S(S(2.0 / r) / (S(1) + x(0) * x(0) + x(1) * x(1)));
    };
    SurfaceChart s;
    s.name = "sphere";
    s.chart = Chart::surface;
    s.eta1 = make_oneform([conformal](const auto& x) {
        using S = typename std::decay_t<decltype(x)>::Scalar;
        return covector<S>(conformal(x), S(0));
    });
    s.eta2 = make_oneform([conformal](const auto& x) {
        using S = typename std::decay_t<decltype(x)>::Scalar;
        return covector<S>(S(0), conformal(x));
    });
    s.a = make_scalar([r](const auto& x) {
        using S = typename std::decay_t<decltype(x)>::Scalar;
        return S(r * x(1));
    });
    s.b = make_scalar([r](const auto& x) {
        using S = typename std::decay_t<decltype(x)>::Scalar;
        return S(-r * x(0));
    });
    s.gauss_K = constant_scalar(K0);
    return s;
}

StructureReport check_surface(const SurfaceChart& s, const std::vector<Point3>& points,
                              const CheckOptions& opts)
{
    StructureReport report;
    report.kind = StructureKind::cartan;
    report.samples = points.size();
    report.tolerance = opts.tolerance;
    report.threshold = opts.threshold;
    const CoframeField frame = s.frame();
    auto add = [&report](const std::string& name, double v) {
        double& slot = report.residuals[name];
        slot = std::max(slot, std::abs(v));
    };
    for (const Point3& p : points) {
        const CoframeJet jet = coframe_jet(frame, p, opts.derivatives);
        const double a = s.a.value(p), b = s.b.value(p);
        const Vec3 c1 = expand_2form(jet.d.row(0).transpose(), jet.value);
        const Vec3 c2 = expand_2form(jet.d.row(1).transpose(), jet.value);
        add("deta1", (c1 - Vec3(0, 0, a)).cwiseAbs().maxCoeff());
        add("deta2", (c2 - Vec3(0, 0, b)).cwiseAbs().maxCoeff());
        const Vec3 da = directional_derivatives(gradient_at(s.a, p, opts.derivatives), jet.value);
        const Vec3 db = directional_derivatives(gradient_at(s.b, p, opts.derivatives), jet.value);
        add("gauss_K", da(1) - a * a - db(0) - b * b - s.gauss_K.value(p));
    }
    report.finalize();
    return report;
}

} // namespace coframe
