#include "coframe/groups.hpp"

#include "coframe/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace coframe {

double Quaternion::norm() const
{
    return vector().norm();
}

Quaternion hamilton_product(const Quaternion& g, const Quaternion& h)
{
    return {g.x0 * h.x0 - g.x1 * h.x1 - g.y0 * h.y0 - g.y1 * h.y1,
            g.x0 * h.x1 + g.x1 * h.x0 + g.y0 * h.y1 - g.y1 * h.y0,
            g.x0 * h.y0 - g.x1 * h.y1 + g.y0 * h.x0 + g.y1 * h.x1,
            g.x0 * h.y1 + g.x1 * h.y0 - g.y0 * h.x1 + g.y1 * h.x0};
}

Quaternion quat_inverse(const Quaternion& g)
{
    const double n2 = g.vector().squaredNorm();
    if (!(std::abs(n2 - 1.0) <= 1e-10))
        throw Error(ErrorKind::NonUnit, "inverse is defined for unit quaternions", {n2});
    return {g.x0, -g.x1, -g.y0, -g.y1};
}

Quaternion cyclic_generator(int m)
{
    const double angle = 2.0 * std::numbers::pi / m;
    return {std::cos(angle), std::sin(angle), 0.0, 0.0};
}

std::vector<Quaternion> quaternion_group()
{
    return {{1, 0, 0, 0},  {-1, 0, 0, 0}, {0, 1, 0, 0}, {0, -1, 0, 0},
            {0, 0, 1, 0},  {0, 0, -1, 0}, {0, 0, 0, 1}, {0, 0, 0, -1}};
}

Quaternion from_chart(const Point3& p)
{
    if (!admissible(Point3{Chart::su2_hemisphere, p.x}))
        throw Error(ErrorKind::PointOutOfChart, "point is outside the hemisphere chart");
    return {std::sqrt(1.0 - p.x.squaredNorm()), p.x(0), p.x(1), p.x(2)};
}

Point3 to_chart(const Quaternion& g)
{
    if (!(g.x0 > 0.0))
        throw Error(ErrorKind::ChartExit, "quaternion is outside the a0 > 0 hemisphere", {g.x0});
    return {Chart::su2_hemisphere, Vec3(g.x1, g.y0, g.y1)};
}

E2Element e2_compose(const E2Element& p, const E2Element& q)
{
    const double c = std::cos(p.theta), s = std::sin(p.theta);
    return {c * q.x - s * q.y + p.x, s * q.x + c * q.y + p.y, p.theta + q.theta};
}

Sl2Matrix sl2_multiply(const Sl2Matrix& A, const Sl2Matrix& B)
{
    return {A.a * B.a + A.b * B.c, A.a * B.b + A.b * B.d, A.c * B.a + A.d * B.c,
            A.c * B.b + A.d * B.d};
}

Sl2Matrix parabolic(double s)
{
    return {1.0, s, 0.0, 1.0};
}

Sl2Matrix hyperbolic(double lambda)
{
    return {lambda, 0.0, 0.0, 1.0 / lambda};
}

Sl2Matrix elliptic()
{
    return {0.0, 1.0, -1.0, 0.0};
}

std::complex<double> mobius_apply(const Sl2Matrix& A, std::complex<double> z)
{
    if (!(z.imag() > 0.0))
        throw Error(ErrorKind::NonHyperbolicPoint, "Mobius action needs Im z > 0", {z.imag()});
    return (A.a * z + A.b) / (A.c * z + A.d);
}

namespace {

double deviation(double moved, double original, InvarianceMode mode)
{
    if (mode == InvarianceMode::up_to_sign)
        return std::abs(std::abs(moved) - std::abs(original));
    return std::abs(moved - original);
}

} // namespace

InvarianceReport invariance_check(const ScalarField& field, const std::vector<Quaternion>& generators,
                                  const std::vector<Point3>& samples, InvarianceMode mode)
{
    InvarianceReport report;
    for (const Quaternion& x : generators) {
        std::size_t used = 0;
        for (const Point3& p : samples) {
            const Quaternion moved = hamilton_product(from_chart(p), x);
            if (!(moved.x0 > 0.0) || !admissible(to_chart(moved))) {
                ++report.skipped;
                continue;
            }
            report.max_deviation = std::max(
                report.max_deviation, deviation(field.value(to_chart(moved)), field.value(p), mode));
            ++report.evaluations;
            ++used;
        }
        if (used == 0 && !samples.empty())
            throw Error(ErrorKind::ChartExit, "every right translate left the hemisphere chart",
                        {x.x0, x.x1, x.y0, x.y1});
    }
    return report;
}

InvarianceReport invariance_check(const QuaternionProbe& probe,
                                  const std::vector<Quaternion>& generators,
                                  const std::vector<Point3>& samples, InvarianceMode mode)
{
    InvarianceReport report;
    for (const Quaternion& x : generators)
        for (const Point3& p : samples) {
            const Quaternion g = from_chart(p);
            report.max_deviation = std::max(
                report.max_deviation, deviation(probe(hamilton_product(g, x)), probe(g), mode));
            ++report.evaluations;
        }
    return report;
}

InvarianceReport surface_invariance_check(const ScalarField& field,
                                          const std::vector<Sl2Matrix>& generators,
                                          const std::vector<Point3>& samples)
{
    InvarianceReport report;
    for (const Sl2Matrix& A : generators)
        for (const Point3& p : samples) {
            const std::complex<double> w = mobius_apply(A, {p.x(0), p.x(1)});
            Point3 q = p;
            q.x(0) = w.real();
            q.x(1) = w.imag();
            if (!admissible(q))
                throw Error(ErrorKind::ChartExit, "Mobius image left the chart");
            report.max_deviation =
                std::max(report.max_deviation, std::abs(field.value(q) - field.value(p)));
            ++report.evaluations;
        }
    return report;
}

double probe_u(const Quaternion& g)
{
    return g.y0 * g.y0 + g.y1 * g.y1;
}

double probe_v(const Quaternion& g)
{
    return std::atan((g.x0 * g.y0 + g.x1 * g.y1) / (g.x0 * g.y1 - g.x1 * g.y0));
}

} // namespace coframe
