#pragma once

#include "coframe/fields.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace coframe {

/// g = x0 + i x1 + j y0 + k y1. On the su2 chart (a1, b0, b1) the point g has
/// x0 = a0, x1 = a1, y0 = b0, y1 = b1.
struct Quaternion {
    double x0 = 1.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;

    double norm() const;
    Eigen::Vector4d vector() const { return {x0, x1, y0, y1}; }
};

Quaternion hamilton_product(const Quaternion& g, const Quaternion& h);
/// Conjugate of a unit quaternion; throws NonUnit if |1 - |g|^2| > 1e-10.
Quaternion quat_inverse(const Quaternion& g);

/// Generator cos(2 pi / m) + i sin(2 pi / m) of the cyclic group C_m.
Quaternion cyclic_generator(int m);
/// {1, -1, i, -i, j, -j, k, -k}.
std::vector<Quaternion> quaternion_group();

/// Point of the hemisphere chart as a unit quaternion with a0 > 0.
Quaternion from_chart(const Point3& p);
/// Throws ChartExit unless x0 > 0.
Point3 to_chart(const Quaternion& g);

struct E2Element {
    double x = 0.0, y = 0.0, theta = 0.0;
};

/// (x1, y1, t1)(x2, y2, t2) = (R(t1)(x2, y2) + (x1, y1), t1 + t2).
E2Element e2_compose(const E2Element& p, const E2Element& q);

struct Sl2Matrix {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    double det() const { return a * d - b * c; }
};

Sl2Matrix sl2_multiply(const Sl2Matrix& A, const Sl2Matrix& B);
Sl2Matrix parabolic(double s);       // z -> z + s
Sl2Matrix hyperbolic(double lambda);  // z -> lambda^2 z
Sl2Matrix elliptic();                 // z -> -1 / z

/// (a z + b) / (c z + d); throws NonHyperbolicPoint unless Im z > 0.
std::complex<double> mobius_apply(const Sl2Matrix& A, std::complex<double> z);

struct InvarianceReport {
    double max_deviation = 0.0;
    std::size_t evaluations = 0;
    std::size_t skipped = 0;  // sample/generator pairs whose translate left the chart
};

enum class InvarianceMode { exact, up_to_sign };

using QuaternionProbe = std::function<double(const Quaternion&)>;

/// max |f(g x) - f(g)| over samples g and generators x, with f a field on the
/// hemisphere chart. Translates that leave the chart are skipped; ChartExit if
/// a generator leaves the chart from every sample.
InvarianceReport invariance_check(const ScalarField& field, const std::vector<Quaternion>& generators,
                                  const std::vector<Point3>& samples,
                                  InvarianceMode mode = InvarianceMode::exact);

/// Same check for a probe defined on all of SU(2), so no translate is skipped.
InvarianceReport invariance_check(const QuaternionProbe& probe,
                                  const std::vector<Quaternion>& generators,
                                  const std::vector<Point3>& samples,
                                  InvarianceMode mode = InvarianceMode::exact);

/// max |f(A z) - f(z)| for f on the upper half-plane (coordinates x, y of the
/// samples; theta is carried along unchanged).
InvarianceReport surface_invariance_check(const ScalarField& field,
                                          const std::vector<Sl2Matrix>& generators,
                                          const std::vector<Point3>& samples);

/// u(g) = b0^2 + b1^2 and v(g) = arctan((a0 b0 + a1 b1) / (a0 b1 - a1 b0)).
double probe_u(const Quaternion& g);
double probe_v(const Quaternion& g);

} // namespace coframe
