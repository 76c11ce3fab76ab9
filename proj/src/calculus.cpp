#include "coframe/calculus.hpp"

#include "coframe/error.hpp"

#include <Eigen/LU>

#include <cmath>

namespace coframe {

namespace {

bool use_analytic(const DerivativeOptions& opts)
{
    return opts.mode == DerivativeMode::analytic;
}

template <typename T>
const T& finite_or_throw(const T& value, const char* what)
{
    if (!all_finite(value))
        throw Error(ErrorKind::NonFiniteValue, what);
    return value;
}

} // namespace

Vec3 numerical_gradient(const std::function<double(const Point3&)>& f, const Point3& p, double h)
{
    Vec3 g;
    for (int k = 0; k < 3; ++k)
        g(k) = richardson_partial(f, p, k, h);
    return g;
}

Vec3 gradient_at(const ScalarField& f, const Point3& p, const DerivativeOptions& opts)
{
    if (use_analytic(opts) && f.gradient)
        return finite_or_throw(f.gradient(p), "gradient is not finite");
    return finite_or_throw(numerical_gradient(f.value, p, opts.step), "gradient is not finite");
}

Mat3 hessian_at(const ScalarField& f, const Point3& p, const DerivativeOptions& opts)
{
    if (use_analytic(opts) && f.hessian)
        return finite_or_throw(f.hessian(p), "Hessian is not finite");
    Mat3 h;
    if (use_analytic(opts) && f.gradient) {
        for (int k = 0; k < 3; ++k)
            h.col(k) = richardson_partial(f.gradient, p, k, opts.step);
    } else {
        auto grad = [&](const Point3& q) { return numerical_gradient(f.value, q, opts.step); };
        for (int k = 0; k < 3; ++k)
            h.col(k) = richardson_partial(grad, p, k, opts.step);
    }
    return finite_or_throw(Mat3(0.5 * (h + h.transpose())), "Hessian is not finite");
}

Mat3 jacobian_at(const OneFormField& a, const Point3& p, const DerivativeOptions& opts)
{
    if (use_analytic(opts) && a.jacobian)
        return finite_or_throw(a.jacobian(p), "Jacobian is not finite");
    Mat3 jac;
    for (int k = 0; k < 3; ++k)
        jac.col(k) = richardson_partial(a.value, p, k, opts.step);
    return finite_or_throw(jac, "Jacobian is not finite");
}

Jacobian3 jacobian_at(const CoframeField& w, const Point3& p, const DerivativeOptions& opts)
{
    if (use_analytic(opts) && w.jacobian)
        return finite_or_throw(w.jacobian(p), "Jacobian is not finite");
    Jacobian3 jac;
    for (int k = 0; k < 3; ++k)
        jac[k] = richardson_partial(w.value, p, k, opts.step);
    return finite_or_throw(jac, "Jacobian is not finite");
}

OneFormValue d_scalar(const ScalarField& f, const Point3& p, const DerivativeOptions& opts)
{
    return gradient_at(f, p, opts);
}

TwoFormValue d_oneform(const OneFormField& a, const Point3& p, const DerivativeOptions& opts)
{
    return curl(jacobian_at(a, p, opts));
}

CoframeJet coframe_jet(const CoframeField& w, const Point3& p, const DerivativeOptions& opts)
{
    CoframeJet jet;
    jet.value = finite_or_throw(w.value(p), "coframe value is not finite");
    const Jacobian3 jac = jacobian_at(w, p, opts);
    for (int i = 0; i < 3; ++i)
        jet.d.row(i) = d_row(jac, i).transpose();
    return jet;
}

void require_nonsingular(const Mat3& m)
{
    const double det = m.determinant();
    if (!(std::abs(det) >= 1e-12))
        throw Error(ErrorKind::SingularCoframe, "coframe determinant below 1e-12", {det});
}

Vec3 directional_derivatives(const Vec3& grad, const Mat3& m)
{
    require_nonsingular(m);
    return m.transpose().partialPivLu().solve(grad);
}

Vec3 coframe_directional_derivatives(const ScalarField& f, const CoframeField& w, const Point3& p,
                                     const DerivativeOptions& opts)
{
    return directional_derivatives(gradient_at(f, p, opts), w.value(p));
}

TwoFormValue assemble_2form(const Vec3& c, const Mat3& m)
{
    const Vec3 r1 = m.row(0).transpose(), r2 = m.row(1).transpose(), r3 = m.row(2).transpose();
    return c(0) * wedge11(r2, r3) + c(1) * wedge11(r3, r1) + c(2) * wedge11(r1, r2);
}

Vec3 expand_2form(const TwoFormValue& b, const Mat3& m)
{
    require_nonsingular(m);
    const Vec3 r1 = m.row(0).transpose(), r2 = m.row(1).transpose(), r3 = m.row(2).transpose();
    Mat3 pairs;
    pairs.col(0) = wedge11(r2, r3);
    pairs.col(1) = wedge11(r3, r1);
    pairs.col(2) = wedge11(r1, r2);
    return pairs.partialPivLu().solve(b);
}

Vec3 expand_2form_in_coframe(const TwoFormValue& b, const CoframeField& w, const Point3& p)
{
    return expand_2form(b, w.value(p));
}

Vec3 expand_1form(const OneFormValue& a, const Mat3& m)
{
    require_nonsingular(m);
    return m.transpose().partialPivLu().solve(a);
}

ScalarField directional_derivative_field(const ScalarField& f, const CoframeField& w, int j,
                                         const DerivativeOptions& opts)
{
    ScalarField out;
    out.value = [f, w, j, opts](const Point3& p) {
        return directional_derivatives(gradient_at(f, p, opts), w.value(p))(j);
    };
    if (opts.mode == DerivativeMode::analytic && f.gradient && f.hessian && w.jacobian) {
        // M^T y = g  =>  M^T dy_k = H e_k - (dM_k)^T y
        out.gradient = [f, w, j](const Point3& p) {
            const Mat3 m = w.value(p);
            require_nonsingular(m);
            const auto lu = m.transpose().partialPivLu();
            const Vec3 y = lu.solve(f.gradient(p));
            const Mat3 h = f.hessian(p);
            const Jacobian3 dm = w.jacobian(p);
            Vec3 g;
            for (int k = 0; k < 3; ++k)
                g(k) = lu.solve(Vec3(h.col(k) - dm[k].transpose() * y))(j);
            return g;
        };
    }
    return out;
}

ScalarField numerical_field(std::function<double(const Point3&)> value)
{
    ScalarField out;
    out.value = std::move(value);
    return out;
}

} // namespace coframe
