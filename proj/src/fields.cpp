#include "coframe/fields.hpp"

#include "coframe/calculus.hpp"

namespace coframe {

namespace {

template <typename A, typename B>
bool both(const A& a, const B& b)
{
    return static_cast<bool>(a) && static_cast<bool>(b);
}

} // namespace

OneFormField CoframeField::row(int i) const
{
    OneFormField out;
    auto v = value;
    out.value = [v, i](const Point3& p) -> Vec3 { return v(p).row(i).transpose(); };
    if (jacobian) {
        auto jac = jacobian;
        out.jacobian = [jac, i](const Point3& p) {
            const Jacobian3 j = jac(p);
            Mat3 out;
            for (int k = 0; k < 3; ++k)
                out.col(k) = j[k].row(i).transpose();
            return out;
        };
    }
    return out;
}

ScalarField constant_scalar(double c)
{
    ScalarField f;
    f.value = [c](const Point3&) { return c; };
    f.gradient = [](const Point3&) { return Vec3::Zero().eval(); };
    f.hessian = [](const Point3&) { return Mat3::Zero().eval(); };
    return f;
}

ScalarField coordinate_scalar(int k)
{
    ScalarField f;
    f.value = [k](const Point3& p) { return p.x(k); };
    f.gradient = [k](const Point3&) { return Vec3::Unit(k).eval(); };
    f.hessian = [](const Point3&) { return Mat3::Zero().eval(); };
    return f;
}

ScalarField without_derivatives(ScalarField f)
{
    f.gradient = nullptr;
    f.hessian = nullptr;
    return f;
}

OneFormField without_derivatives(OneFormField a)
{
    a.jacobian = nullptr;
    return a;
}

CoframeField without_derivatives(CoframeField w)
{
    w.jacobian = nullptr;
    return w;
}

ScalarField operator+(const ScalarField& f, const ScalarField& g)
{
    ScalarField out;
    out.value = [f, g](const Point3& p) { return f.value(p) + g.value(p); };
    if (both(f.gradient, g.gradient))
        out.gradient = [f, g](const Point3& p) { return (f.gradient(p) + g.gradient(p)).eval(); };
    if (both(f.hessian, g.hessian))
        out.hessian = [f, g](const Point3& p) { return (f.hessian(p) + g.hessian(p)).eval(); };
    return out;
}

ScalarField operator-(const ScalarField& f, const ScalarField& g)
{
    return f + (-1.0) * g;
}

ScalarField operator*(double c, const ScalarField& f)
{
    ScalarField out;
    out.value = [c, f](const Point3& p) { return c * f.value(p); };
    if (f.gradient)
        out.gradient = [c, f](const Point3& p) { return (c * f.gradient(p)).eval(); };
    if (f.hessian)
        out.hessian = [c, f](const Point3& p) { return (c * f.hessian(p)).eval(); };
    return out;
}

ScalarField operator*(const ScalarField& f, const ScalarField& g)
{
    ScalarField out;
    out.value = [f, g](const Point3& p) { return f.value(p) * g.value(p); };
    if (both(f.gradient, g.gradient)) {
        out.gradient = [f, g](const Point3& p) {
            return (f.value(p) * g.gradient(p) + g.value(p) * f.gradient(p)).eval();
        };
        if (both(f.hessian, g.hessian))
            out.hessian = [f, g](const Point3& p) {
                const Vec3 df = f.gradient(p);
                const Vec3 dg = g.gradient(p);
                return (f.value(p) * g.hessian(p) + g.value(p) * f.hessian(p) + df * dg.transpose()
                        + dg * df.transpose())
                    .eval();
            };
    }
    return out;
}

ScalarField reciprocal(const ScalarField& f)
{
    ScalarField out;
    out.value = [f](const Point3& p) { return 1.0 / f.value(p); };
    if (f.gradient) {
        out.gradient = [f](const Point3& p) {
            const double v = f.value(p);
            return (-f.gradient(p) / (v * v)).eval();
        };
        if (f.hessian)
            out.hessian = [f](const Point3& p) {
                const double v = f.value(p);
                const Vec3 g = f.gradient(p);
                return (-f.hessian(p) / (v * v) + 2.0 * g * g.transpose() / (v * v * v)).eval();
            };
    }
    return out;
}

OneFormField operator+(const OneFormField& a, const OneFormField& b)
{
    OneFormField out;
    out.value = [a, b](const Point3& p) { return (a.value(p) + b.value(p)).eval(); };
    if (both(a.jacobian, b.jacobian))
        out.jacobian = [a, b](const Point3& p) { return (a.jacobian(p) + b.jacobian(p)).eval(); };
    return out;
}

OneFormField operator*(double c, const OneFormField& a)
{
    OneFormField out;
    out.value = [c, a](const Point3& p) { return (c * a.value(p)).eval(); };
    if (a.jacobian)
        out.jacobian = [c, a](const Point3& p) { return (c * a.jacobian(p)).eval(); };
    return out;
}

OneFormField operator-(const OneFormField& a)
{
    return (-1.0) * a;
}

OneFormField operator-(const OneFormField& a, const OneFormField& b)
{
    return a + (-1.0) * b;
}

OneFormField operator*(const ScalarField& f, const OneFormField& a)
{
    OneFormField out;
    out.value = [f, a](const Point3& p) { return (f.value(p) * a.value(p)).eval(); };
    if (both(f.gradient, a.jacobian))
        out.jacobian = [f, a](const Point3& p) {
            return (f.value(p) * a.jacobian(p) + a.value(p) * f.gradient(p).transpose()).eval();
        };
    return out;
}

OneFormField exact(const ScalarField& f)
{
    OneFormField out;
    if (f.gradient) {
        out.value = f.gradient;
        if (f.hessian)
            out.jacobian = f.hessian;
    } else {
        auto value = f.value;
        out.value = [value](const Point3& p) { return numerical_gradient(value, p, 1e-4); };
    }
    return out;
}

CoframeField stack(const OneFormField& w1, const OneFormField& w2, const OneFormField& w3)
{
    CoframeField out;
    out.value = [w1, w2, w3](const Point3& p) {
        Mat3 m;
        m.row(0) = w1.value(p).transpose();
        m.row(1) = w2.value(p).transpose();
        m.row(2) = w3.value(p).transpose();
        return m;
    };
    if (w1.jacobian && w2.jacobian && w3.jacobian)
        out.jacobian = [w1, w2, w3](const Point3& p) {
            const Mat3 j1 = w1.jacobian(p), j2 = w2.jacobian(p), j3 = w3.jacobian(p);
            Jacobian3 out;
            for (int k = 0; k < 3; ++k) {
                out[k].row(0) = j1.col(k).transpose();
                out[k].row(1) = j2.col(k).transpose();
                out[k].row(2) = j3.col(k).transpose();
            }
            return out;
        };
    return out;
}

} // namespace coframe
