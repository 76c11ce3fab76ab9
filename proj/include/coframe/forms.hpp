#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <array>
#include <cmath>
#include <string_view>

namespace coframe {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Charts of the model 3-manifolds. Lens-space structures live on the
/// su2 hemisphere chart; `lens` is kept as an alias with the same domain.
enum class Chart { su2_hemisphere, e2, sl2, surface, lens };

std::string_view to_string(Chart chart);

struct Point3 {
    Chart chart = Chart::e2;
    Vec3 x = Vec3::Zero();
};

/// True when `p` lies in the open domain of its chart.
bool admissible(const Point3& p);

/// Pointwise form values in the coordinate cobasis of a chart.
/// One-forms use (dx1, dx2, dx3); two-forms use (dx2^dx3, dx3^dx1, dx1^dx2);
/// three-forms are the coefficient of dx1^dx2^dx3.
template <typename Scalar>
using OneForm = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using TwoForm = Eigen::Matrix<Scalar, 3, 1>;

using OneFormValue = OneForm<double>;
using TwoFormValue = TwoForm<double>;
using ThreeFormValue = double;

/// Partial derivatives of a matrix-valued field: entry k is dM/dx^k.
using Jacobian3 = std::array<Mat3, 3>;

template <typename DerivedA, typename DerivedB>
TwoForm<typename DerivedA::Scalar> wedge11(const Eigen::MatrixBase<DerivedA>& a,
                                           const Eigen::MatrixBase<DerivedB>& b)
{
    return a.cross(b);
}

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar wedge12(const Eigen::MatrixBase<DerivedA>& a,
                                  const Eigen::MatrixBase<DerivedB>& b)
{
    return a.dot(b);
}

/// Exterior derivative of a one-form from its Jacobian J(j,k) = dc_j/dx^k.
template <typename Derived>
TwoForm<typename Derived::Scalar> curl(const Eigen::MatrixBase<Derived>& jac)
{
    return {jac(2, 1) - jac(1, 2), jac(0, 2) - jac(2, 0), jac(1, 0) - jac(0, 1)};
}

/// Exterior derivative of row `i` of a coframe given its Jacobian.
inline TwoFormValue d_row(const Jacobian3& jac, int i)
{
    Mat3 rowJac;
    for (int k = 0; k < 3; ++k)
        rowJac.col(k) = jac[k].row(i).transpose();
    return curl(rowJac);
}

inline bool all_finite(double v) { return std::isfinite(v); }

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m)
{
    return m.allFinite();
}

inline bool all_finite(const Jacobian3& jac)
{
    return jac[0].allFinite() && jac[1].allFinite() && jac[2].allFinite();
}

} // namespace coframe
