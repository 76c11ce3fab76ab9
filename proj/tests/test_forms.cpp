#include "coframe/calculus.hpp"
#include "coframe/catalog.hpp"
#include "coframe/error.hpp"
#include "coframe/sampling.hpp"

#include <doctest.h>

#include <cmath>

using namespace coframe;

namespace {

Point3 at(Chart chart, double a, double b, double c)
{
    return {chart, Vec3(a, b, c)};
}

template <typename F>
void check_error(F&& f, ErrorKind kind)
{
    try {
        f();
        FAIL("no error thrown");
    } catch (const Error& e) {
        CHECK(e.kind() == kind);
    }
}

} // namespace

TEST_CASE("wedge products on coefficient vectors")
{
    const Vec3 a(1, 2, 3), b(4, 5, 6);
    CHECK(wedge11(a, b).isApprox(Vec3(-3, 6, -3)));
    CHECK(wedge11(a, a).norm() == 0.0);
    CHECK(wedge11(a, b).isApprox(-wedge11(b, a)));
    CHECK(wedge12(Vec3(1, 2, 3), Vec3(3, 2, 1)) == doctest::Approx(10.0));
    // dx1 ^ (dx2 ^ dx3) = dx1 ^ dx2 ^ dx3
    CHECK(wedge12(Vec3::UnitX(), wedge11(Vec3::UnitY(), Vec3::UnitZ())) == 1.0);
}

TEST_CASE("gradient of u = b0^2 + b1^2")
{
    const ScalarField u = make_scalar(models::Su2U{});
    const Point3 p = at(Chart::su2_hemisphere, 0.1, 0.2, 0.3);
    CHECK(gradient_at(u, p).isApprox(Vec3(0, 0.4, 0.6)));
    const DerivativeOptions fd{DerivativeMode::finite_difference, 1e-4};
    CHECK((gradient_at(u, p, fd) - Vec3(0, 0.4, 0.6)).norm() < 1e-10);
    CHECK(hessian_at(u, p).isApprox(Vec3(0, 2, 2).asDiagonal().toDenseMatrix()));
}

TEST_CASE("d of a one-form is the curl of its coefficients")
{
    // a = -x2 dx1 + x1 dx2 has da = 2 dx1^dx2.
    const OneFormField a = make_oneform([](const auto& x) {
        using S = models::ScalarOf<std::decay_t<decltype(x)>>;
        return Vec3T<S>(S(-x(1)), x(0), S(0));
    });
    const Point3 p = at(Chart::e2, 0.3, -0.7, 1.1);
    CHECK((d_oneform(a, p) - Vec3(0, 0, 2)).norm() < 1e-14);
    const DerivativeOptions fd{DerivativeMode::finite_difference, 1e-4};
    CHECK((d_oneform(a, p, fd) - Vec3(0, 0, 2)).norm() < 1e-9);
}

TEST_CASE("d d f = 0 on random points")
{
    const ScalarField f = make_scalar([](const auto& x) {
        using S = models::ScalarOf<std::decay_t<decltype(x)>>;
        using std::exp;
        using std::sin;
        return S(sin(x(0) * x(1)) + exp(x(2)) * x(0));
    });
    const OneFormField df = exact(f);
    for (const Point3& p : sample_points(e2_safe_box(), 11, 50)) {
        CHECK(d_oneform(df, p).norm() < 1e-12);
        const DerivativeOptions fd{DerivativeMode::finite_difference, 1e-4};
        CHECK(d_oneform(df, p, fd).norm() < 1e-6);
    }
}

TEST_CASE("Richardson step is fourth-order accurate")
{
    const Point3 p = at(Chart::e2, 0.4, 0.1, 0.0);
    auto f = [](const Point3& q) { return std::sin(q.x(0)); };
    const double exact_value = std::cos(0.4);
    const double coarse = std::abs(richardson_partial(f, p, 0, 1e-2) - exact_value);
    const double fine = std::abs(richardson_partial(f, p, 0, 5e-3) - exact_value);
    CHECK(coarse > 0.0);
    // Halving h reduces the error by about 2^4.
    CHECK(coarse / fine == doctest::Approx(16.0).epsilon(0.05));
}

TEST_CASE("stencil leaving the chart raises StepOutOfChart")
{
    const ScalarField f = numerical_field([](const Point3& p) { return p.x(1); });
    const Point3 edge = at(Chart::sl2, 0.0, 5e-5, 0.0);
    const DerivativeOptions fd{DerivativeMode::finite_difference, 1e-4};
    check_error([&] { gradient_at(f, edge, fd); }, ErrorKind::StepOutOfChart);
}

TEST_CASE("degenerate coframe raises SingularCoframe")
{
    Mat3 m = Mat3::Identity();
    m.row(2) = m.row(0);
    check_error([&] { directional_derivatives(Vec3(1, 2, 3), m); }, ErrorKind::SingularCoframe);
    check_error([&] { expand_2form(Vec3(1, 0, 0), m); }, ErrorKind::SingularCoframe);
}

TEST_CASE("non-finite values are rejected")
{
    const ScalarField bad = numerical_field([](const Point3&) { return std::nan(""); });
    const DerivativeOptions fd{DerivativeMode::finite_difference, 1e-4};
    check_error([&] { gradient_at(bad, at(Chart::e2, 0, 0, 0), fd); }, ErrorKind::NonFiniteValue);
}

TEST_CASE("expand_2form inverts assemble_2form")
{
    const CatalogEntry e = su2_standard();
    for (const Point3& p : sample_points(e.domain, 5, 40)) {
        const Mat3 m = e.coframe.value(p);
        const Vec3 c(0.3, -1.2, 2.5);
        CHECK((expand_2form(assemble_2form(c, m), m) - c).norm() < 1e-12);
        // The pair w2^w3 expands to (1, 0, 0).
        const Vec3 pair = wedge11(Vec3(m.row(1).transpose()), Vec3(m.row(2).transpose()));
        CHECK((expand_2form(pair, m) - Vec3(1, 0, 0)).norm() < 1e-12);
    }
}

TEST_CASE("directional derivatives reassemble the differential")
{
    const ScalarField f = make_scalar(models::Su2V{});
    const CatalogEntry e = su2_standard();
    for (const Point3& p : sample_points(su2_safe_box_off_singular_locus(), 3, 40)) {
        const Mat3 m = e.coframe.value(p);
        const Vec3 grad = gradient_at(f, p);
        const Vec3 coeffs = directional_derivatives(grad, m);
        CHECK((m.transpose() * coeffs - grad).norm() < 1e-12);
        CHECK((expand_1form(grad, m) - coeffs).norm() < 1e-12);
    }
}

TEST_CASE("exact gradient of a directional-derivative field")
{
    const ScalarField f = make_scalar(models::Su2U{});
    const CatalogEntry e = su2_standard();
    const ScalarField f1 = directional_derivative_field(f, e.coframe, 0);
    REQUIRE(f1.gradient);
    for (const Point3& p : sample_points(e.domain, 9, 30)) {
        const Vec3 numeric = numerical_gradient(f1.value, p, 1e-4);
        CHECK((f1.gradient(p) - numeric).norm() < 1e-8);
    }
}

TEST_CASE("field algebra propagates analytic derivatives")
{
    const ScalarField x = coordinate_scalar(0), y = coordinate_scalar(1);
    const ScalarField h = x * y + 2.0 * reciprocal(y);
    const Point3 p = at(Chart::sl2, 0.7, 1.3, 0.2);
    REQUIRE(h.gradient);
    CHECK(h.value(p) == doctest::Approx(0.7 * 1.3 + 2.0 / 1.3));
    CHECK((h.gradient(p) - Vec3(1.3, 0.7 - 2.0 / (1.3 * 1.3), 0)).norm() < 1e-14);
    const Mat3 expected_hessian =
        (Mat3() << 0, 1, 0, 1, 4.0 / std::pow(1.3, 3), 0, 0, 0, 0).finished();
    CHECK((h.hessian(p) - expected_hessian).norm() < 1e-12);
}

TEST_CASE("analytic Jacobians agree with finite differences on every catalog entry")
{
    for (const std::string& id : catalog_ids()) {
        CAPTURE(id);
        const CatalogEntry e = find_entry(id);
        REQUIRE(e.coframe.jacobian);
        const DerivativeOptions fd{DerivativeMode::finite_difference, 1e-4};
        for (const Point3& p : sample_points(e.domain, 17, 100)) {
            const Jacobian3 exact_jac = jacobian_at(e.coframe, p);
            const Jacobian3 numeric = jacobian_at(e.coframe, p, fd);
            for (int k = 0; k < 3; ++k) {
                const double scale = std::max(1.0, exact_jac[k].cwiseAbs().maxCoeff());
                CHECK((exact_jac[k] - numeric[k]).cwiseAbs().maxCoeff() / scale < 1e-6);
            }
        }
    }
}

TEST_CASE("sampling is deterministic and order independent")
{
    const auto a = sample_points(sl2_safe_box(), 42, 20);
    const auto b = sample_points(sl2_safe_box(), 42, 20);
    const auto c = sample_points(sl2_safe_box(), 43, 20);
    REQUIRE(a.size() == 20);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].x == b[i].x);
        CHECK(sl2_safe_box().contains(a[i].x));
    }
    CHECK(a[0].x != c[0].x);
    // Point i does not depend on how many points follow it.
    const auto prefix = sample_points(sl2_safe_box(), 42, 5);
    for (std::size_t i = 0; i < prefix.size(); ++i)
        CHECK(prefix[i].x == a[i].x);
    CHECK(unit_double(~0ULL) < 1.0);
    CHECK(unit_double(0) == 0.0);
}

TEST_CASE("SplitMix64 reference outputs")
{
    // First outputs for state 0 of the reference implementation.
    SplitMix64 g(0);
    CHECK(g.next() == 0xe220a8397b1dcdafULL);
    CHECK(g.next() == 0x6e789e6aa1b965f4ULL);
}
