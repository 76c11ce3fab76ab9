#pragma once

#include "coframe/constructions.hpp"
#include "coframe/groups.hpp"
#include "coframe/models.hpp"
#include "coframe/sampling.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coframe {

enum class EntryKind { cartan, gfs };

std::string_view to_string(EntryKind kind);

/// Invariance of a scalar probe on SU(2) under right translation by generators.
struct QuaternionClaim {
    std::string name;
    QuaternionProbe probe;
    std::vector<Quaternion> generators;
    InvarianceMode mode = InvarianceMode::exact;
};

/// Invariance of a function on the upper half-plane under Mobius generators.
struct SurfaceClaim {
    std::string name;
    ScalarField probe;
    std::vector<Sl2Matrix> generators;
};

struct CatalogEntry {
    std::string id;
    std::string provenance;
    EntryKind kind = EntryKind::gfs;
    Chart chart = Chart::e2;
    SampleDomain domain;
    /// Rows (a1, a2, a3) for Cartan entries, (w1, w2, w3) for GFS entries.
    CoframeField coframe;

    std::optional<ScalarField> expected_I, expected_J;
    std::optional<double> expected_K;
    std::optional<ScalarField> expected_curvature;  // Cartan entries

    std::vector<QuaternionClaim> quaternion_claims;
    std::vector<SurfaceClaim> surface_claims;

    /// Optional function whose zero set is excluded from the entry's domain.
    std::function<double(const Point3&)> singular_locus;

    /// Throws PointOutOfChart or SingularLocus.
    void admit(const Point3& p) const;
};

/// Sorted identifiers of the registered entries.
std::vector<std::string> catalog_ids();
/// Resolves an identifier, including parameterized ones such as "lens:a=0.4".
/// Throws UnknownStructure, or OutOfRangeA for a lens parameter outside (0, 1).
CatalogEntry find_entry(const std::string& id);

CatalogEntry su2_standard();
CatalogEntry e2_standard();
CatalogEntry sl2_standard();
/// (beta1 / sqrt K, -beta3 / sqrt K, beta2): the (0, 0, K) structure on SU(2).
CatalogEntry su2_trivial(double K);
CatalogEntry sl2_pde_gfs(double C);
/// f(y) = m y + n, g = 0.
CatalogEntry sl2_translation_gfs(double m, double n);
CatalogEntry lens_family(double a);
CatalogEntry lens_gfs(double a);
CatalogEntry sphere_liouville(double K0);
CatalogEntry sphere_zoll(double K0);

namespace detail {

/// Probe points used when a construction validates its input.
std::vector<Point3> probe_points(const SampleDomain& domain);
/// Throws PositivityViolation unless `positivity` > 0 at every probe.
void require_positive(const std::function<double(const Point3&)>& positivity,
                      const SampleDomain& domain, const std::string& what);
/// (c I_d + s J_d, -s I_d + c J_d) for the fibre angle theta = p.x(2).
std::pair<double, double> rotate_to_fibre(double I_down, double J_down, double theta);

} // namespace detail

/// f = Phi(u, v) with Phi a two-variable template. Expected invariants are the
/// directional derivatives of f along the first two Maurer-Cartan vectors.
template <typename Phi>
CatalogEntry su2_f_deformed(std::string id, Phi phi, std::vector<QuaternionClaim> claims = {})
{
    const models::Su2Potential<Phi> f{phi};
    CatalogEntry e;
    e.id = std::move(id);
    e.provenance = "SU(2) coframe (beta1, df - beta3, beta2) with f = Phi(u, v)";
    e.kind = EntryKind::gfs;
    e.chart = Chart::su2_hemisphere;
    e.domain = su2_safe_box_off_singular_locus();
    e.coframe = make_coframe(models::Su2Deformed<models::Su2Potential<Phi>>{f});
    // Directional derivatives along the doubled Maurer-Cartan forms.
    e.expected_I = numerical_field([f](const Point3& p) {
        const Vec3 g = gradient(f, p.x);
        const double a0 = models::su2_a0(p.x);
        return 0.5 * (g(0) * p.x(2) - g(2) * p.x(0) + g(1) * a0);
    });
    e.expected_J = numerical_field([f](const Point3& p) {
        const Vec3 g = gradient(f, p.x);
        const double a0 = models::su2_a0(p.x);
        return 0.5 * (g(1) * p.x(0) - g(0) * p.x(1) + g(2) * a0);
    });
    e.expected_K = 1.0;
    e.quaternion_claims = std::move(claims);
    e.singular_locus = [](const Point3& p) { return models::su2_w_denominator(p.x); };
    return e;
}

/// Plane PDE solution I = c eta + s f, J = -s eta + c f, where the caller
/// supplies eta with eta_y = f_x + 1 in closed form. Built by cartan_to_gfs
/// over the standard structure, so a wrong eta raises PdeViolation.
template <typename F, typename Eta>
CatalogEntry e2_pde_gfs(std::string id, F f, Eta eta)
{
    CatalogEntry e;
    e.id = std::move(id);
    e.provenance = "E2 standard structure with rotated PDE solution (eta, f)";
    e.kind = EntryKind::gfs;
    e.chart = Chart::e2;
    e.domain = e2_safe_box();
    auto I = [f, eta](const auto& x) {
        using S = models::ScalarOf<std::decay_t<decltype(x)>>;
        using std::cos;
        using std::sin;
        return S(cos(x(2)) * eta(x) + sin(x(2)) * f(x));
    };
    auto J = [f, eta](const auto& x) {
        using S = models::ScalarOf<std::decay_t<decltype(x)>>;
        using std::cos;
        using std::sin;
        return S(-sin(x(2)) * eta(x) + cos(x(2)) * f(x));
    };
    const CatalogEntry base = e2_standard();
    e.coframe = cartan_to_gfs(base.coframe, make_scalar(I), make_scalar(J),
                              detail::probe_points(e.domain));
    e.expected_I = numerical_field([I](const Point3& p) { return I(p.x); });
    e.expected_J = numerical_field([J](const Point3& p) { return J(p.x); });
    e.expected_K = 1.0;
    return e;
}

/// Plane GFS from phi = f dx + g dy with D = -f_y + g_x > 0. The invariants
/// below are the closed forms on the plane, rotated to the fibre angle.
template <typename F, typename G>
CatalogEntry e2_torus_gfs(std::string id, F f, G g)
{
    auto positivity = [f, g](const Point3& p) {
        return -gradient(f, p.x)(1) + gradient(g, p.x)(0);
    };
    CatalogEntry e;
    e.id = std::move(id);
    e.provenance = "E2 GFS (sqrt(D) a1, -phi - a3, sqrt(D) a2) with phi = f dx + g dy";
    e.kind = EntryKind::gfs;
    e.chart = Chart::e2;
    e.domain = e2_safe_box();
    detail::require_positive(positivity, e.domain, "-f_y + g_x");
    e.coframe = make_coframe(models::E2TorusGfs<F, G>{f, g});
    auto invariants = [f, g](const Point3& p) {
        const Vec3 df = gradient(f, p.x), dg = gradient(g, p.x);
        const Mat3 hf = hessian(f, p.x), hg = hessian(g, p.x);
        const double D = -df(1) + dg(0);
        const double I = -f(p.x) / std::sqrt(D) - (hf(1, 1) - hg(0, 1)) / (2.0 * std::pow(D, 1.5));
        const double J = -g(p.x) / std::sqrt(D) + (hf(0, 1) - hg(0, 0)) / (2.0 * std::pow(D, 1.5));
        return detail::rotate_to_fibre(I, J, p.x(2));
    };
    e.expected_I = numerical_field([invariants](const Point3& p) { return invariants(p).first; });
    e.expected_J = numerical_field([invariants](const Point3& p) { return invariants(p).second; });
    e.expected_K = 1.0;
    return e;
}

/// Hyperbolic-plane GFS for translation-invariant phi = (f(y) dx + g(y) dy) / y.
template <typename F, typename G>
CatalogEntry sl2_translation_gfs(std::string id, F f, G g)
{
    auto positivity = [f](const Point3& p) {
        const double y = p.x(1);
        return -y * models::derivative(f, y) + f(y) - 1.0;
    };
    CatalogEntry e;
    e.id = std::move(id);
    e.provenance = "SL2 GFS lifted from translation-invariant phi on the hyperbolic plane";
    e.kind = EntryKind::gfs;
    e.chart = Chart::sl2;
    e.domain = sl2_safe_box();
    detail::require_positive(positivity, e.domain, "-y f'(y) + f - 1");
    e.coframe = make_coframe(models::Sl2TranslationGfs<F, G>{f, g});
    auto invariants = [f, g, positivity](const Point3& p) {
        const double y = p.x(1);
        const double D = positivity(p);
        auto df = [f](const auto& t) { return models::derivative(f, t); };
        const double f2 = models::derivative(df, y);
        const double I = -(f(y) + y * y * f2 / (2.0 * D)) / std::sqrt(D);
        const double J = -g(y) / std::sqrt(D);
        return detail::rotate_to_fibre(I, J, p.x(2));
    };
    e.expected_I = numerical_field([invariants](const Point3& p) { return invariants(p).first; });
    e.expected_J = numerical_field([invariants](const Point3& p) { return invariants(p).second; });
    e.expected_K = 1.0;
    e.surface_claims.push_back(
        {"f(y) under z -> z + 1", numerical_field([f](const Point3& p) { return double(f(p.x(1))); }),
         {parabolic(1.0)}});
    return e;
}

/// Hyperbolic-plane GFS for dilatation-invariant phi = gbar(x / y) dy / y.
template <typename Gbar>
CatalogEntry sl2_dilatation_gfs(std::string id, Gbar gbar)
{
    auto positivity = [gbar](const Point3& p) {
        return models::derivative(gbar, p.x(0) / p.x(1)) - 1.0;
    };
    CatalogEntry e;
    e.id = std::move(id);
    e.provenance = "SL2 GFS lifted from dilatation-invariant phi on the hyperbolic plane";
    e.kind = EntryKind::gfs;
    e.chart = Chart::sl2;
    e.domain = sl2_safe_box();
    detail::require_positive(positivity, e.domain, "gbar'(x/y) - 1");
    e.coframe = make_coframe(models::Sl2DilatationGfs<Gbar>{gbar});
    auto invariants = [gbar, positivity](const Point3& p) {
        const double x = p.x(0), y = p.x(1), tau = x / y;
        const double D = positivity(p);
        auto dg = [gbar](const auto& t) { return models::derivative(gbar, t); };
        const double g2 = models::derivative(dg, tau);
        const double I = -(x / (2.0 * y)) * g2 / std::pow(D, 1.5);
        const double J = -g2 / (2.0 * std::pow(D, 1.5)) - gbar(tau) / std::sqrt(D);
        return detail::rotate_to_fibre(I, J, p.x(2));
    };
    e.expected_I = numerical_field([invariants](const Point3& p) { return invariants(p).first; });
    e.expected_J = numerical_field([invariants](const Point3& p) { return invariants(p).second; });
    e.expected_K = 1.0;
    e.surface_claims.push_back(
        {"gbar(x/y) under z -> 4z",
         numerical_field([gbar](const Point3& p) { return double(gbar(p.x(0) / p.x(1))); }),
         {hyperbolic(2.0)}});
    return e;
}

} // namespace coframe
