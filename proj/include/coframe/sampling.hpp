#pragma once

#include "coframe/forms.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace coframe {

/// SplitMix64 (Steele, Lea, Flood). Used to derive independent per-point seeds.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : m_state(state) {}
    std::uint64_t next();

private:
    std::uint64_t m_state;
};

/// Uniform double in [0,1) from the top 53 bits; identical on every platform.
double unit_double(std::uint64_t bits);

/// A compact safe box in a chart with an optional rejection predicate.
struct SampleDomain {
    Chart chart = Chart::e2;
    Vec3 lo = Vec3::Constant(-1.0);
    Vec3 hi = Vec3::Constant(1.0);
    std::function<bool(const Vec3&)> accept;  // optional

    bool contains(const Vec3& x) const;
};

SampleDomain su2_safe_box();
/// su2 safe box minus a band around the locus a0 b1 - a1 b0 = 0.
SampleDomain su2_safe_box_off_singular_locus();
SampleDomain e2_safe_box();
SampleDomain sl2_safe_box();

/// Deterministic sample set: point i is drawn from its own mt19937_64 stream
/// seeded by SplitMix64, so the set does not depend on evaluation order.
std::vector<Point3> sample_points(const SampleDomain& domain, std::uint64_t seed, std::size_t n);

} // namespace coframe
