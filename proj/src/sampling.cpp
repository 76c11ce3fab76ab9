#include "coframe/sampling.hpp"

#include "coframe/error.hpp"

#include <cmath>
#include <numbers>

namespace coframe {

std::uint64_t SplitMix64::next()
{
    std::uint64_t z = (m_state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double unit_double(std::uint64_t bits)
{
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

bool SampleDomain::contains(const Vec3& x) const
{
    for (int k = 0; k < 3; ++k)
        if (x(k) < lo(k) || x(k) > hi(k))
            return false;
    if (!admissible(Point3{chart, x}))
        return false;
    return !accept || accept(x);
}

SampleDomain su2_safe_box()
{
    SampleDomain d;
    d.chart = Chart::su2_hemisphere;
    d.lo = Vec3::Constant(-0.9);
    d.hi = Vec3::Constant(0.9);
    d.accept = [](const Vec3& x) { return x.squaredNorm() <= 0.81; };
    return d;
}

SampleDomain su2_safe_box_off_singular_locus()
{
    SampleDomain d = su2_safe_box();
    d.accept = [](const Vec3& x) {
        if (x.squaredNorm() > 0.81)
            return false;
        const double a0 = std::sqrt(1.0 - x.squaredNorm());
        return std::abs(a0 * x(2) - x(0) * x(1)) >= 0.05;
    };
    return d;
}

SampleDomain e2_safe_box()
{
    SampleDomain d;
    d.chart = Chart::e2;
    d.lo = Vec3(-2.0, -2.0, 0.0);
    d.hi = Vec3(2.0, 2.0, 2.0 * std::numbers::pi);
    return d;
}

SampleDomain sl2_safe_box()
{
    SampleDomain d;
    d.chart = Chart::sl2;
    d.lo = Vec3(-2.0, 0.5, 0.0);
    d.hi = Vec3(2.0, 3.0, 2.0 * std::numbers::pi);
    return d;
}

std::vector<Point3> sample_points(const SampleDomain& domain, std::uint64_t seed, std::size_t n)
{
    constexpr int max_attempts = 10000;
    std::vector<Point3> points;
    points.reserve(n);
    SplitMix64 seeds(seed);
    for (std::size_t i = 0; i < n; ++i) {
        std::mt19937_64 stream(seeds.next());
        bool found = false;
        for (int attempt = 0; attempt < max_attempts && !found; ++attempt) {
            Vec3 x;
            for (int k = 0; k < 3; ++k)
                x(k) = domain.lo(k) + (domain.hi(k) - domain.lo(k)) * unit_double(stream());
            if (domain.contains(x)) {
                points.push_back(Point3{domain.chart, x});
                found = true;
            }
        }
        if (!found)
            throw Error(ErrorKind::PointOutOfChart, "rejection sampling found no admissible point");
    }
    return points;
}

} // namespace coframe
