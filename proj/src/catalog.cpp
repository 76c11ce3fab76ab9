#include "coframe/catalog.hpp"

#include "coframe/error.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>

namespace coframe {

std::string_view to_string(EntryKind kind)
{
    return kind == EntryKind::cartan ? "cartan" : "gfs";
}

void CatalogEntry::admit(const Point3& p) const
{
    if (p.chart != chart || !admissible(p))
        throw Error(ErrorKind::PointOutOfChart, "point is outside the chart of " + id,
                    {p.x(0), p.x(1), p.x(2)});
    if (singular_locus && !(std::abs(singular_locus(p)) > 1e-9))
        throw Error(ErrorKind::SingularLocus, "point lies on the singular locus of " + id,
                    {p.x(0), p.x(1), p.x(2)});
}

namespace detail {

std::vector<Point3> probe_points(const SampleDomain& domain)
{
    return sample_points(domain, 0x70726f6265ULL, 32);
}

void require_positive(const std::function<double(const Point3&)>& positivity,
                      const SampleDomain& domain, const std::string& what)
{
    double lowest = std::numeric_limits<double>::infinity();
    for (const Point3& p : probe_points(domain))
        lowest = std::min(lowest, positivity(p));
    if (!(lowest > 0.0))
        throw Error(ErrorKind::PositivityViolation, what + " is not positive on the domain", {lowest});
}

std::pair<double, double> rotate_to_fibre(double I_down, double J_down, double theta)
{
    const double c = std::cos(theta), s = std::sin(theta);
    return {c * I_down + s * J_down, -s * I_down + c * J_down};
}

} // namespace detail

namespace {

SampleDomain surface_box()
{
    SampleDomain d;
    d.chart = Chart::surface;
    d.lo = Vec3(-1.5, -1.5, 0.0);
    d.hi = Vec3(1.5, 1.5, 2.0 * std::numbers::pi);
    return d;
}

CatalogEntry cartan_entry(std::string id, std::string provenance, Chart chart, SampleDomain domain,
                          CoframeField coframe, ScalarField curvature)
{
    CatalogEntry e;
    e.id = std::move(id);
    e.provenance = std::move(provenance);
    e.kind = EntryKind::cartan;
    e.chart = chart;
    e.domain = std::move(domain);
    e.coframe = std::move(coframe);
    e.expected_curvature = std::move(curvature);
    return e;
}

double lens_weight_probe(const Quaternion& g, double a)
{
    return a * (g.x0 * g.x0 + g.x1 * g.x1) + (1.0 - a) * (g.y0 * g.y0 + g.y1 * g.y1);
}

void require_lens_parameter(double a)
{
    if (!(a > 0.0 && a < 1.0))
        throw Error(ErrorKind::OutOfRangeA, "lens parameter must lie in (0, 1)", {a});
}

QuaternionClaim lens_claim(double a)
{
    return {"lens weight under C_5", [a](const Quaternion& g) { return lens_weight_probe(g, a); },
            {cyclic_generator(5)}, InvarianceMode::exact};
}

} // namespace

CatalogEntry su2_standard()
{
    return cartan_entry("su2.standard", "doubled right-invariant Maurer-Cartan forms of SU(2)",
                        Chart::su2_hemisphere, su2_safe_box(),
                        make_coframe(models::Su2MaurerCartan{}), constant_scalar(1.0));
}

CatalogEntry e2_standard()
{
    return cartan_entry("e2.standard", "Maurer-Cartan forms of the universal cover of E(2)",
                        Chart::e2, e2_safe_box(), make_coframe(models::E2MaurerCartan{}),
                        constant_scalar(0.0));
}

CatalogEntry sl2_standard()
{
    return cartan_entry("sl2.standard", "Maurer-Cartan forms of the universal cover of SL(2,R)",
                        Chart::sl2, sl2_safe_box(), make_coframe(models::Sl2MaurerCartan{}),
                        constant_scalar(-1.0));
}

CatalogEntry su2_trivial(double K)
{
    if (!(K > 0.0))
        throw Error(ErrorKind::NonPositiveCurvature, "trivial structure needs K > 0", {K});
    CatalogEntry e;
    e.id = "su2.trivial:K=" + std::to_string(K);
    e.provenance = "SU(2) coframe (beta1 / sqrt K, -beta3 / sqrt K, beta2) with I = J = 0";
    e.kind = EntryKind::gfs;
    e.chart = Chart::su2_hemisphere;
    e.domain = su2_safe_box();
    e.coframe = make_coframe(models::Su2Trivial{K});
    e.expected_I = constant_scalar(0.0);
    e.expected_J = constant_scalar(0.0);
    e.expected_K = K;
    return e;
}

CatalogEntry sl2_pde_gfs(double C)
{
    auto amplitude = [C](const auto& x) {
        using S = models::ScalarOf<std::decay_t<decltype(x)>>;
        return S((S(C) - S(2) * x(0)) / x(1));
    };
    auto I = [amplitude](const auto& x) {
        using S = models::ScalarOf<std::decay_t<decltype(x)>>;
        using std::sin;
        return S(amplitude(x) * sin(x(2)));
    };
    auto J = [amplitude](const auto& x) {
        using S = models::ScalarOf<std::decay_t<decltype(x)>>;
        using std::cos;
        return S(amplitude(x) * cos(x(2)));
    };
    CatalogEntry e;
    e.id = "sl2.pde:C=" + std::to_string(C);
    e.provenance = "SL2 standard structure with PDE solution I = ((C - 2x)/y) sin t, J = ((C - 2x)/y) cos t";
    e.kind = EntryKind::gfs;
    e.chart = Chart::sl2;
    e.domain = sl2_safe_box();
    e.coframe = cartan_to_gfs(sl2_standard().coframe, make_scalar(I), make_scalar(J),
                              detail::probe_points(e.domain));
    e.expected_I = numerical_field([I](const Point3& p) { return I(p.x); });
    e.expected_J = numerical_field([J](const Point3& p) { return J(p.x); });
    e.expected_K = 1.0;
    return e;
}

CatalogEntry sl2_translation_gfs(double m, double n)
{
    auto f = [m, n](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        return T(m * t + n);
    };
    auto g = [](const auto& t) {
        using T = std::decay_t<decltype(t)>;
        return T(0.0 * t);
    };
    return sl2_translation_gfs("sl2.translation:m=" + std::to_string(m) + ",n=" + std::to_string(n),
                               f, g);
}

CatalogEntry lens_family(double a)
{
    require_lens_parameter(a);
    CatalogEntry e = cartan_entry("lens:a=" + std::to_string(a),
                                  "Cartan structure from 4 (a z1 dz2 - (1 - a) z2 dz1) on S^3",
                                  Chart::su2_hemisphere, su2_safe_box(),
                                  make_coframe(models::LensCoframe{a}),
                                  make_scalar(models::LensCurvature{a}));
    e.quaternion_claims.push_back(lens_claim(a));
    return e;
}

CatalogEntry lens_gfs(double a)
{
    require_lens_parameter(a);
    CatalogEntry e;
    e.id = "lens.gfs:a=" + std::to_string(a);
    e.provenance = "GFS (sqrt(Kc) a1, -a3, sqrt(Kc) a2) over the lens-family Cartan structure";
    e.kind = EntryKind::gfs;
    e.chart = Chart::su2_hemisphere;
    e.domain = su2_safe_box();
    e.coframe = make_coframe(
        models::ZollGfs<models::LensCoframe, models::LensCurvature>{{a}, {a}});
    auto invariants = [a](const Point3& p) {
        const models::LensCurvature curvature{a};
        const Vec3 grad = gradient(curvature, p.x);
        const Vec3 dk = directional_derivatives(grad, models::LensCoframe{a}(p.x));
        const double k = curvature(p.x);
        const double scale = 2.0 * k * std::sqrt(k);
        return std::pair<double, double>{dk(1) / scale, -dk(0) / scale};
    };
    e.expected_I = numerical_field([invariants](const Point3& p) { return invariants(p).first; });
    e.expected_J = numerical_field([invariants](const Point3& p) { return invariants(p).second; });
    e.expected_K = 1.0;
    e.quaternion_claims.push_back(lens_claim(a));
    return e;
}

CatalogEntry sphere_liouville(double K0)
{
    const SurfaceChart s = round_sphere(K0);
    const SampleDomain domain = surface_box();
    return cartan_entry("sphere.liouville:K0=" + std::to_string(K0),
                        "Liouville-Cartan structure of the round sphere of curvature K0",
                        Chart::surface, domain, liouville_lift(s, detail::probe_points(domain)),
                        constant_scalar(K0));
}

CatalogEntry sphere_zoll(double K0)
{
    const CatalogEntry base = sphere_liouville(K0);
    CatalogEntry e;
    e.id = "sphere.zoll:K0=" + std::to_string(K0);
    e.provenance = "GFS (sqrt(K0) a1, -a3, sqrt(K0) a2) over the round sphere of curvature K0";
    e.kind = EntryKind::gfs;
    e.chart = Chart::surface;
    e.domain = base.domain;
    e.coframe = constant_curvature_zoll_gfs(K0, base.coframe);
    e.expected_I = constant_scalar(0.0);
    e.expected_J = constant_scalar(0.0);
    e.expected_K = 1.0;
    return e;
}

namespace {

// ---------------------------------------------------------------- fixed entries

QuaternionClaim u_claim(std::vector<Quaternion> generators, std::string group)
{
    return {"u under " + group, probe_u, std::move(generators), InvarianceMode::exact};
}

QuaternionClaim v_claim(std::vector<Quaternion> generators, std::string group, InvarianceMode mode)
{
    return {(mode == InvarianceMode::exact ? "v under " : "|v| under ") + group, probe_v,
            std::move(generators), mode};
}

CatalogEntry named(CatalogEntry e, std::string id)
{
    e.id = std::move(id);
    return e;
}

using Factory = std::function<CatalogEntry()>;

const std::map<std::string, Factory>& fixed_entries()
{
    static const std::map<std::string, Factory> entries = {
        {"su2.standard", su2_standard},
        {"e2.standard", e2_standard},
        {"sl2.standard", sl2_standard},
        {"su2.f:u",
         [] {
             return su2_f_deformed(
                 "su2.f:u", [](const auto& u, const auto&) { return u; },
                 {u_claim({cyclic_generator(3), cyclic_generator(5)}, "C_3 and C_5")});
         }},
        {"su2.f:v",
         [] {
             return su2_f_deformed(
                 "su2.f:v", [](const auto&, const auto& v) { return v; },
                 {u_claim({cyclic_generator(2)}, "C_2"),
                  v_claim({cyclic_generator(2)}, "C_2", InvarianceMode::exact)});
         }},
        {"su2.f:u+0.5v",
         [] {
             return su2_f_deformed(
                 "su2.f:u+0.5v", [](const auto& u, const auto& v) { return u + 0.5 * v; },
                 {u_claim({cyclic_generator(2)}, "C_2"),
                  v_claim({cyclic_generator(2)}, "C_2", InvarianceMode::exact)});
         }},
        {"su2.f:v^2",
         [] {
             QuaternionClaim even{"f = v^2 under D8*",
                                  [](const Quaternion& g) { return probe_v(g) * probe_v(g); },
                                  quaternion_group(), InvarianceMode::exact};
             return su2_f_deformed(
                 "su2.f:v^2", [](const auto&, const auto& v) { return v * v; },
                 {v_claim(quaternion_group(), "D8*", InvarianceMode::up_to_sign), even});
         }},
        {"e2.pde:f=0,g=0",
         [] {
             return e2_pde_gfs(
                 "e2.pde:f=0,g=0",
                 [](const auto& x) { return models::ScalarOf<std::decay_t<decltype(x)>>(0.0 * x(0)); },
                 [](const auto& x) { return models::ScalarOf<std::decay_t<decltype(x)>>(x(1)); });
         }},
        {"e2.pde:f=x,g=0",
         [] {
             return e2_pde_gfs(
                 "e2.pde:f=x,g=0",
                 [](const auto& x) { return models::ScalarOf<std::decay_t<decltype(x)>>(x(0)); },
                 [](const auto& x) {
                     return models::ScalarOf<std::decay_t<decltype(x)>>(2.0 * x(1));
                 });
         }},
        {"e2.pde:f=xy,g=x^2",
         [] {
             return e2_pde_gfs(
                 "e2.pde:f=xy,g=x^2",
                 [](const auto& x) {
                     return models::ScalarOf<std::decay_t<decltype(x)>>(x(0) * x(1));
                 },
                 [](const auto& x) {
                     return models::ScalarOf<std::decay_t<decltype(x)>>(0.5 * x(1) * x(1) + x(1) -
                                                                         x(0) * x(0));
                 });
         }},
        {"e2.torus:g=x",
         [] {
             return e2_torus_gfs(
                 "e2.torus:g=x",
                 [](const auto& x) { return models::ScalarOf<std::decay_t<decltype(x)>>(0.0 * x(0)); },
                 [](const auto& x) { return models::ScalarOf<std::decay_t<decltype(x)>>(x(0)); });
         }},
        {"e2.torus:g=2x",
         [] {
             return e2_torus_gfs(
                 "e2.torus:g=2x",
                 [](const auto& x) { return models::ScalarOf<std::decay_t<decltype(x)>>(0.0 * x(0)); },
                 [](const auto& x) {
                     return models::ScalarOf<std::decay_t<decltype(x)>>(2.0 * x(0));
                 });
         }},
        {"e2.torus:f=0.2sin(y),g=x",
         [] {
             return e2_torus_gfs(
                 "e2.torus:f=0.2sin(y),g=x",
                 [](const auto& x) {
                     using std::sin;
                     return models::ScalarOf<std::decay_t<decltype(x)>>(0.2 * sin(x(1)));
                 },
                 [](const auto& x) { return models::ScalarOf<std::decay_t<decltype(x)>>(x(0)); });
         }},
        {"sl2.translation:f=2-0.1y^2,g=0.5y",
         [] {
             return sl2_translation_gfs(
                 "sl2.translation:f=2-0.1y^2,g=0.5y",
                 [](const auto& t) { return std::decay_t<decltype(t)>(2.0 - 0.1 * t * t); },
                 [](const auto& t) { return std::decay_t<decltype(t)>(0.5 * t); });
         }},
        {"sl2.dilatation:gbar=2tau",
         [] {
             return sl2_dilatation_gfs(
                 "sl2.dilatation:gbar=2tau",
                 [](const auto& t) { return std::decay_t<decltype(t)>(2.0 * t); });
         }},
        {"sl2.dilatation:gbar=2tau+0.1tau^2",
         [] {
             return sl2_dilatation_gfs(
                 "sl2.dilatation:gbar=2tau+0.1tau^2",
                 [](const auto& t) { return std::decay_t<decltype(t)>(2.0 * t + 0.1 * t * t); });
         }},
    };
    return entries;
}

// ---------------------------------------------------------------- parameterized entries

struct Family {
    std::vector<std::string> keys;
    std::function<CatalogEntry(const std::vector<double>&)> build;
    std::vector<std::string> defaults;  // parameter text of the listed instances
};

const std::map<std::string, Family>& families()
{
    static const std::map<std::string, Family> table = {
        {"su2.trivial", {{"K"}, [](const auto& v) { return su2_trivial(v[0]); }, {"K=1", "K=4"}}},
        {"sl2.pde", {{"C"}, [](const auto& v) { return sl2_pde_gfs(v[0]); }, {"C=0", "C=1"}}},
        {"sl2.translation",
         {{"m", "n"},
          [](const auto& v) { return sl2_translation_gfs(v[0], v[1]); },
          {"m=0,n=2", "m=1,n=2"}}},
        {"lens", {{"a"}, [](const auto& v) { return lens_family(v[0]); }, {"a=0.3", "a=0.5"}}},
        {"lens.gfs", {{"a"}, [](const auto& v) { return lens_gfs(v[0]); }, {"a=0.3", "a=0.5"}}},
        {"sphere.liouville",
         {{"K0"}, [](const auto& v) { return sphere_liouville(v[0]); }, {"K0=1"}}},
        {"sphere.zoll", {{"K0"}, [](const auto& v) { return sphere_zoll(v[0]); }, {"K0=1", "K0=4"}}},
    };
    return table;
}

[[noreturn]] void unknown(const std::string& id)
{
    throw Error(ErrorKind::UnknownStructure, "no catalog entry named '" + id + "'");
}

double parse_number(const std::string& text, const std::string& id)
{
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        unknown(id);
    }
    if (used != text.size() || !std::isfinite(value))
        unknown(id);
    return value;
}

std::vector<double> parse_parameters(const std::string& text, const std::vector<std::string>& keys,
                                     const std::string& id)
{
    std::vector<double> values;
    std::size_t start = 0;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        const std::size_t end = i + 1 == keys.size() ? text.size() : text.find(',', start);
        if (end == std::string::npos)
            unknown(id);
        const std::string item = text.substr(start, end - start);
        const std::string prefix = keys[i] + "=";
        if (item.rfind(prefix, 0) != 0)
            unknown(id);
        values.push_back(parse_number(item.substr(prefix.size()), id));
        start = end + 1;
    }
    return values;
}

} // namespace

std::vector<std::string> catalog_ids()
{
    std::vector<std::string> ids;
    for (const auto& [id, factory] : fixed_entries())
        ids.push_back(id);
    for (const auto& [prefix, family] : families())
        for (const std::string& params : family.defaults)
            ids.push_back(prefix + ":" + params);
    std::sort(ids.begin(), ids.end());
    return ids;
}

CatalogEntry find_entry(const std::string& id)
{
    if (const auto it = fixed_entries().find(id); it != fixed_entries().end())
        return it->second();
    const std::size_t colon = id.find(':');
    if (colon == std::string::npos)
        unknown(id);
    const auto family = families().find(id.substr(0, colon));
    if (family == families().end())
        unknown(id);
    CatalogEntry e = family->second.build(parse_parameters(id.substr(colon + 1), family->second.keys, id));
    return named(std::move(e), id);
}

} // namespace coframe
