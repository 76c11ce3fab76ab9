#pragma once

// Runtime field types. Every field is a bundle of pure callables on Point3;
// derivative callables are optional and are filled in only when they are
// exact. Anything missing is differentiated numerically by calculus.hpp.

#include "coframe/autodiff.hpp"
#include "coframe/forms.hpp"

#include <functional>
#include <utility>

namespace coframe {

struct ScalarField {
    std::function<double(const Point3&)> value;
    std::function<Vec3(const Point3&)> gradient;  // optional
    std::function<Mat3(const Point3&)> hessian;   // optional

    double operator()(const Point3& p) const { return value(p); }
};

struct OneFormField {
    std::function<Vec3(const Point3&)> value;
    std::function<Mat3(const Point3&)> jacobian;  // optional, J(j,k) = dc_j/dx^k

    Vec3 operator()(const Point3& p) const { return value(p); }
};

/// Three one-forms as the rows of a matrix-valued function.
struct CoframeField {
    std::function<Mat3(const Point3&)> value;
    std::function<Jacobian3(const Point3&)> jacobian;  // optional

    Mat3 operator()(const Point3& p) const { return value(p); }
    OneFormField row(int i) const;
};

/// Builders from scalar templates. `F` must accept Vec3T<S> for S = double,
/// Dual<double> and (for the Hessian) Dual<Dual<double>>.
template <typename F>
ScalarField make_scalar(F f)
{
    ScalarField out;
    out.value = [f](const Point3& p) { return static_cast<double>(f(p.x)); };
    out.gradient = [f](const Point3& p) { return gradient(f, p.x); };
    out.hessian = [f](const Point3& p) { return hessian(f, p.x); };
    return out;
}

/// Like make_scalar but without a Hessian, for templates that are not
/// twice-nestable.
template <typename F>
ScalarField make_scalar_first_order(F f)
{
    ScalarField out;
    out.value = [f](const Point3& p) { return static_cast<double>(f(p.x)); };
    out.gradient = [f](const Point3& p) { return gradient(f, p.x); };
    return out;
}

template <typename F>
OneFormField make_oneform(F f)
{
    OneFormField out;
    out.value = [f](const Point3& p) -> Vec3 { return f(p.x); };
    out.jacobian = [f](const Point3& p) { return oneform_jacobian(f, p.x); };
    return out;
}

template <typename F>
CoframeField make_coframe(F f)
{
    CoframeField out;
    out.value = [f](const Point3& p) -> Mat3 { return f(p.x); };
    out.jacobian = [f](const Point3& p) { return jacobian(f, p.x); };
    return out;
}

ScalarField constant_scalar(double c);
ScalarField coordinate_scalar(int k);
/// Drops every analytic derivative, forcing numerical differentiation.
ScalarField without_derivatives(ScalarField f);
OneFormField without_derivatives(OneFormField a);
CoframeField without_derivatives(CoframeField w);

// Field algebra. Analytic derivatives are propagated whenever every operand
// carries them.
ScalarField operator+(const ScalarField& f, const ScalarField& g);
ScalarField operator-(const ScalarField& f, const ScalarField& g);
ScalarField operator*(const ScalarField& f, const ScalarField& g);
ScalarField operator*(double c, const ScalarField& f);
/// 1/f; the caller guarantees f has no zeros on the points it evaluates.
ScalarField reciprocal(const ScalarField& f);

OneFormField operator+(const OneFormField& a, const OneFormField& b);
OneFormField operator-(const OneFormField& a, const OneFormField& b);
OneFormField operator-(const OneFormField& a);
OneFormField operator*(double c, const OneFormField& a);
OneFormField operator*(const ScalarField& f, const OneFormField& a);

/// df as a one-form field. Its Jacobian is the Hessian of f when known.
OneFormField exact(const ScalarField& f);

CoframeField stack(const OneFormField& w1, const OneFormField& w2, const OneFormField& w3);

} // namespace coframe
