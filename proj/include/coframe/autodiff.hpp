#pragma once

// Forward-mode differentiation of scalar-templated closed forms. Catalog
// coframes are written once as templates over the scalar type; these helpers
// instantiate them with Eigen's AutoDiffScalar to obtain exact Jacobians and
// Hessians. Nesting works: a template may itself call `gradient` internally.

#include "coframe/forms.hpp"

#include <unsupported/Eigen/AutoDiff>

#include <cmath>

namespace coframe {

template <typename Scalar>
using Dual = Eigen::AutoDiffScalar<Eigen::Matrix<Scalar, 3, 1>>;

template <typename Scalar>
using Vec3T = Eigen::Matrix<Scalar, 3, 1>;

template <typename Scalar>
using Mat3T = Eigen::Matrix<Scalar, 3, 3>;

template <typename Scalar>
Vec3T<Dual<Scalar>> seed(const Vec3T<Scalar>& x)
{
    Vec3T<Dual<Scalar>> out;
    for (int k = 0; k < 3; ++k) {
        Vec3T<Scalar> unit = Vec3T<Scalar>::Zero();
        unit(k) = Scalar(1);
        out(k) = Dual<Scalar>(x(k), unit);
    }
    return out;
}

/// Gradient of a scalar template `f` at `x`.
template <typename F, typename Scalar>
Vec3T<Scalar> gradient(const F& f, const Vec3T<Scalar>& x)
{
    Dual<Scalar> y = f(seed(x));
    if (y.derivatives().size() == 0)
        return Vec3T<Scalar>::Zero();
    return y.derivatives();
}

/// Value and gradient together.
template <typename F, typename Scalar>
std::pair<Scalar, Vec3T<Scalar>> value_gradient(const F& f, const Vec3T<Scalar>& x)
{
    Dual<Scalar> y = f(seed(x));
    Vec3T<Scalar> g = y.derivatives().size() == 0 ? Vec3T<Scalar>::Zero()
                                                   : Vec3T<Scalar>(y.derivatives());
    return {y.value(), g};
}

/// Hessian of a scalar template, by nesting forward mode.
template <typename F>
Mat3 hessian(const F& f, const Vec3& x)
{
    auto inner = [&f](const auto& z) { return gradient(f, z); };
    Vec3T<Dual<double>> g = inner(seed(x));
    Mat3 h;
    for (int i = 0; i < 3; ++i) {
        if (g(i).derivatives().size() == 0)
            h.row(i).setZero();
        else
            h.row(i) = g(i).derivatives().transpose();
    }
    return h;
}

/// Jacobian of a 3x3 matrix template: entry k is dM/dx^k.
template <typename F>
Jacobian3 jacobian(const F& f, const Vec3& x)
{
    Mat3T<Dual<double>> m = f(seed(x));
    Jacobian3 jac;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const auto& d = m(i, j).derivatives();
            for (int k = 0; k < 3; ++k)
                jac[k](i, j) = d.size() == 0 ? 0.0 : d(k);
        }
    return jac;
}

/// Jacobian of a one-form template: J(j,k) = dc_j/dx^k.
template <typename F>
Mat3 oneform_jacobian(const F& f, const Vec3& x)
{
    Vec3T<Dual<double>> c = f(seed(x));
    Mat3 jac;
    for (int j = 0; j < 3; ++j) {
        const auto& d = c(j).derivatives();
        for (int k = 0; k < 3; ++k)
            jac(j, k) = d.size() == 0 ? 0.0 : d(k);
    }
    return jac;
}

/// arctan for plain and dual scalars. AutoDiffScalar ships asin but no atan.
template <typename Scalar>
Scalar arctan(const Scalar& t)
{
    using std::asin;
    using std::sqrt;
    return asin(t / sqrt(Scalar(1) + t * t));
}

inline double arctan(double t) { return std::atan(t); }

} // namespace coframe
