// Acceptance harness: one line per criterion. Criteria listed in
// `known_deviations` may fail without affecting the exit code.

#include "coframe/error.hpp"
#include "coframe/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace coframe;

namespace {

const std::set<std::string> known_deviations = {
    // w1^dw3 + w3^dw1 vanishes identically on any GFS, scaled third row included.
    "5b",
    // The lens-family connection gives 1/(8 S^3) = 4.6296... at the origin.
    "9b",
};

constexpr std::size_t points = 200;
constexpr std::uint64_t seed = 1;

int unexpected_failures = 0;

void report(const std::string& id, const std::string& what, bool pass, const std::string& detail)
{
    const bool known = known_deviations.count(id) > 0;
    const char* status = pass ? "PASS" : (known ? "FAIL [known deviation]" : "FAIL");
    if (!pass && !known)
        ++unexpected_failures;
    std::printf("%-4s %-24s %s  %s\n", id.c_str(), status, what.c_str(), detail.c_str());
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

/// Runs `body`, turning a thrown library error into a failed line.
void guarded(const std::string& id, const std::string& what, const std::function<void()>& body)
{
    try {
        body();
    } catch (const std::exception& e) {
        report(id, what, false, std::string("threw: ") + e.what());
    }
}

std::vector<CatalogEntry> unit_K_entries()
{
    std::vector<CatalogEntry> out;
    for (const std::string& id : catalog_ids()) {
        CatalogEntry e = find_entry(id);
        if (e.kind == EntryKind::gfs && e.expected_K == 1.0)
            out.push_back(std::move(e));
    }
    return out;
}

double max_coframe_difference(const CoframeField& a, const CoframeField& b, const std::vector<Point3>& pts)
{
    double worst = 0.0;
    for (const Point3& p : pts)
        worst = std::max(worst, (a.value(p) - b.value(p)).cwiseAbs().maxCoeff());
    return worst;
}

double max_abs_error(const std::vector<double>& values, double target)
{
    double worst = 0.0;
    for (double v : values)
        worst = std::max(worst, std::abs(v - target));
    return worst;
}

void standard_structures()
{
    const std::vector<std::pair<std::string, double>> cases = {
        {"su2.standard", 1.0}, {"e2.standard", 0.0}, {"sl2.standard", -1.0}};
    for (const auto& [id, curvature] : cases) {
        guarded("1", id, [&, id = id, curvature = curvature] {
            const CatalogEntry e = find_entry(id);
            const auto pts = sample_points(e.domain, seed, points);
            bool pass = true;
            double worst_analytic = 0.0, worst_fd = 0.0, slowest = 0.0;
            for (const auto& [mode, tol] : {std::pair{DerivativeMode::analytic, 1e-10},
                                            std::pair{DerivativeMode::finite_difference, 1e-6}}) {
                const auto start = std::chrono::steady_clock::now();
                CheckOptions o;
                o.derivatives = {mode, 1e-4};
                o.tolerance = tol;
                const StructureReport cartan = check_cartan_structure(e.coframe.row(0), e.coframe.row(1), pts, o);
                const StructureReport k = extract_cartan_K(e.coframe, pts, o);
                double worst = max_abs_error(k.invariants.at("Kcartan"), curvature);
                for (const auto& [name, r] : cartan.residuals)
                    worst = std::max(worst, r);
                for (const auto& [name, r] : k.residuals)
                    worst = std::max(worst, r);
                const double elapsed = seconds_since(start);
                slowest = std::max(slowest, elapsed);
                pass = pass && cartan.pass && k.pass && worst < tol && elapsed < 1.0;
                (mode == DerivativeMode::analytic ? worst_analytic : worst_fd) = worst;
            }
            report("1", "standard Cartan structure " + id, pass,
                   fmt("K=%g analytic %.2e fd %.2e", curvature, worst_analytic, worst_fd) +
                       fmt(" slowest %.3fs", slowest));
        });
    }
}

void gfs_extraction(const std::vector<CatalogEntry>& entries)
{
    guarded("2", "GFS extraction", [&] {
        const auto start = std::chrono::steady_clock::now();
        double worst = 0.0;
        std::string worst_id;
        bool pass = true;
        CheckOptions o;
        o.tolerance = 1e-6;
        for (const CatalogEntry& e : entries) {
            const StructureReport r =
                extract_gfs_invariants(e.coframe, sample_points(e.domain, seed, points), o, 1.0);
            pass = pass && r.pass && r.residuals.size() == 7;
            for (const auto& [name, value] : r.residuals)
                if (value > worst) {
                    worst = value;
                    worst_id = e.id;
                }
        }
        const double elapsed = seconds_since(start);
        pass = pass && worst < 1e-6 && elapsed < 5.0;
        report("2", "GFS extraction on every (I,J,1) entry", pass,
               fmt("%g entries, max residual %.2e", double(entries.size()), worst) + " (" + worst_id + ")" +
                   fmt(" in %.2fs", elapsed));
    });
}

void closed_forms()
{
    const std::vector<std::string> ids = {"su2.f:u",
                                          "sl2.pde:C=0",
                                          "sl2.translation:m=0,n=2",
                                          "sl2.translation:m=1,n=2",
                                          "sl2.dilatation:gbar=2tau",
                                          "e2.torus:g=x",
                                          "lens.gfs:a=0.3"};
    for (const std::string& id : ids) {
        guarded("3", id, [&] {
            const CatalogEntry e = find_entry(id);
            const auto pts = sample_points(e.domain, seed, points);
            double worst = 0.0;
            for (const Point3& p : pts) {
                const GfsInvariants g = gfs_invariants_at(e.coframe, p);
                worst = std::max({worst, std::abs(g.I - e.expected_I->value(p)),
                                  std::abs(g.J - e.expected_J->value(p))});
            }
            report("3", "closed-form I, J for " + id, worst < 1e-6, fmt("max error %.2e", worst));
        });
    }
}

void bianchi(const std::vector<CatalogEntry>& entries)
{
    guarded("4", "Bianchi identities", [&] {
        double worst = 0.0;
        std::string worst_id;
        const DerivativeOptions fd{DerivativeMode::finite_difference, 1e-4};
        CheckOptions o;
        o.derivatives = fd;
        o.tolerance = 1e-5;
        bool pass = true;
        for (const CatalogEntry& e : entries) {
            const StructureReport r = check_bianchi(e.coframe, gfs_invariant_fields(e.coframe, fd),
                                                    sample_points(e.domain, seed, points), o);
            pass = pass && r.pass;
            for (const auto& [name, value] : r.residuals)
                if (value > worst) {
                    worst = value;
                    worst_id = e.id;
                }
        }
        report("4", "|J - I_2|, |I + J_2| by nested differencing", pass && worst < 1e-5,
               fmt("max residual %.2e", worst) + " (" + worst_id + ")");
    });
}

void taut_circles(const std::vector<CatalogEntry>& entries)
{
    guarded("5a", "taut circle", [&] {
        bool pass = true;
        double worst = 0.0;
        for (const CatalogEntry& e : entries) {
            const auto pts = sample_points(e.domain, seed, points);
            const StructureReport r = check_taut_contact_circle(e.coframe.row(0), e.coframe.row(2), pts);
            pass = pass && r.pass;
            for (const auto& [name, value] : r.residuals)
                worst = std::max(worst, value);
        }
        report("5a", "(w1, w3) taut circle on every K=1 entry", pass, fmt("max residual %.2e", worst));
    });
    guarded("5b", "corrupted entry", [] {
        const CatalogEntry e = find_entry("sl2.pde:C=0");
        const CoframeField w = e.coframe;
        const CoframeField bad = stack(w.row(0), w.row(1), 1.1 * w.row(2));
        const StructureReport r =
            check_taut_contact_circle(bad.row(0), bad.row(2), sample_points(e.domain, seed, points));
        const double cross = r.residual("cross_sum"), mismatch = r.residual("volume_mismatch");
        report("5b", "|a1^da2 + a2^da1| > 1e-3 on w3 scaled by 1.1", cross > 1e-3,
               fmt("cross_sum %.2e", cross));
        report("5c", "volume mismatch flags the same corruption", mismatch > 1e-3 && !r.pass,
               fmt("volume_mismatch %.2e", mismatch));
    });
}

void round_trips()
{
    for (const std::string id : {"sl2.pde:C=0", "e2.pde:f=xy,g=x^2", "e2.pde:f=x,g=0"}) {
        guarded("6a", id, [&] {
            const CatalogEntry e = find_entry(id);
            const CatalogEntry base = e.chart == Chart::sl2 ? sl2_standard() : e2_standard();
            const auto pts = sample_points(e.domain, seed, points);
            const CoframeField forward = cartan_to_gfs(base.coframe, *e.expected_I, *e.expected_J, pts);
            const InducedCartan back = gfs_to_cartan(forward, pts);
            const double err = max_coframe_difference(back.alpha, base.coframe, pts);
            report("6a", "gfs_to_cartan(cartan_to_gfs) on " + id, err < 1e-8, fmt("max error %.2e", err));
        });
    }
    for (const double K : {1.0, 4.0}) {
        guarded("6b", "Landsberg", [&] {
            const CatalogEntry e = su2_trivial(K);
            const auto pts = sample_points(e.domain, seed, points);
            const LandsbergCartan lc = landsberg_to_cartan(e.coframe, pts);
            const CoframeField back = cartan_to_landsberg(lc.alpha, constant_scalar(1.0 / std::sqrt(K)), pts);
            const double err = max_coframe_difference(back, e.coframe, pts);
            report("6b", fmt("Landsberg <-> Cartan round trip, K=%g", K), err < 1e-6,
                   fmt("max error %.2e", err));
        });
    }
}

void cross_formula()
{
    guarded("7", "cross formula", [] {
        const CatalogEntry e = find_entry("su2.f:u");
        const auto pts = sample_points(e.domain, seed, points);
        const InducedCartan induced = gfs_to_cartan(e.coframe, pts);
        CheckOptions o;
        o.tolerance = nested_tolerance;
        const StructureReport k = extract_cartan_K(induced.alpha, pts, o, &induced.curvature);
        const double err = k.residual("Kcartan_expected");
        report("7", "Kcartan of induced triple = -I^2 - J^2 + J_1 - I_3 + 1", err < 1e-5,
               fmt("max error %.2e", err));
    });
}

double quat_distance(const Quaternion& a, const Quaternion& b)
{
    return (a.vector() - b.vector()).cwiseAbs().maxCoeff();
}

void group_theory()
{
    guarded("8a", "Hamilton product", [] {
        double worst = 0.0;
        const auto group = quaternion_group();
        for (const Quaternion& a : group)
            for (const Quaternion& b : group) {
                for (const Quaternion& c : group)
                    worst = std::max(worst, quat_distance(hamilton_product(hamilton_product(a, b), c),
                                                          hamilton_product(a, hamilton_product(b, c))));
                double nearest = 1e300;
                for (const Quaternion& g : group)
                    nearest = std::min(nearest, quat_distance(g, hamilton_product(a, b)));
                worst = std::max(worst, nearest);
            }
        for (const Point3& p : sample_points(su2_safe_box(), seed, points)) {
            const Quaternion g = from_chart(p);
            worst = std::max(worst, quat_distance(hamilton_product(g, quat_inverse(g)), Quaternion{}));
        }
        Quaternion power;
        for (int n = 0; n < 5; ++n)
            power = hamilton_product(power, cyclic_generator(5));
        worst = std::max(worst, quat_distance(power, Quaternion{}));
        report("8a", "associativity, inverse, D8* closure, C5 order", worst < 1e-10, fmt("max error %.2e", worst));
    });
    guarded("8b", "invariance", [] {
        const auto pts = sample_points(su2_safe_box_off_singular_locus(), seed, points);
        double u_dev = 0.0;
        for (int m = 2; m <= 8; ++m)
            u_dev = std::max(u_dev, invariance_check(probe_u, {cyclic_generator(m)}, pts).max_deviation);
        const double v_dev =
            invariance_check(probe_v, quaternion_group(), pts, InvarianceMode::up_to_sign).max_deviation;
        const ScalarField gbar = numerical_field([](const Point3& p) { return 2.0 * p.x(0) / p.x(1); });
        const double g_dev = surface_invariance_check(gbar, {hyperbolic(2.0)},
                                                      sample_points(sl2_safe_box(), seed, points))
                                 .max_deviation;
        report("8b", "u under C_m, |v| under D8*, gbar(x/y) under A_2",
               u_dev < 1e-12 && v_dev < 1e-12 && g_dev < 1e-12,
               fmt("deviations %.2e %.2e %.2e", u_dev, v_dev, g_dev));
    });
}

void lens_family_checks()
{
    guarded("9a", "lens a=1/2", [] {
        const CatalogEntry e = lens_family(0.5);
        const StructureReport k = extract_cartan_K(e.coframe, sample_points(e.domain, seed, points));
        const double err = max_abs_error(k.invariants.at("Kcartan"), 1.0);
        report("9a", "Kcartan(a=1/2) = 1", err < 1e-10 && k.pass, fmt("max error %.2e", err));
    });
    guarded("9b", "lens a=0.3 origin", [] {
        const CatalogEntry e = lens_family(0.3);
        const double K0 =
            extract_cartan_K(e.coframe, {Point3{Chart::su2_hemisphere, Vec3::Zero()}}).invariants.at("Kcartan")[0];
        report("9b", "Kcartan(a=0.3) at origin = 1/0.504", std::abs(K0 - 1.0 / 0.504) < 1e-10,
               fmt("extracted %.10f, target %.10f", K0, 1.0 / 0.504));
    });
    guarded("9c", "lens GFS", [] {
        const CatalogEntry e = lens_gfs(0.3);
        CheckOptions o;
        o.tolerance = 1e-6;
        const StructureReport r = extract_gfs_invariants(e.coframe, sample_points(e.domain, seed, points), o, 1.0);
        const auto& I = r.invariants.at("I");
        const auto [lo, hi] = std::minmax_element(I.begin(), I.end());
        report("9c", "lens GFS a=0.3 passes extraction with nonconstant I", r.pass && *hi - *lo > 1e-3,
               fmt("I range %.3e", *hi - *lo));
    });
}

template <typename F>
std::optional<Error> error_from(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e;
    }
    return std::nullopt;
}

void negative_controls()
{
    auto y = [](const auto& x) { return models::ScalarOf<std::decay_t<decltype(x)>>(x(1)); };
    auto zero = [](const auto& x) { return models::ScalarOf<std::decay_t<decltype(x)>>(0.0 * x(0)); };
    const auto torus = error_from([&] { e2_torus_gfs("e2.torus:f=y,g=0", y, zero); });
    report("10a", "e2.torus f=y, g=0 raises PositivityViolation",
           torus && torus->kind() == ErrorKind::PositivityViolation, torus ? torus->what() : "no error");

    auto half = [](const auto& t) { return 0.5 * t; };
    const auto dil = error_from([&] { sl2_dilatation_gfs("sl2.dilatation:gbar=tau/2", half); });
    report("10b", "sl2 dilatation gbar=tau/2 raises PositivityViolation",
           dil && dil->kind() == ErrorKind::PositivityViolation, dil ? dil->what() : "no error");

    const CatalogEntry base = sl2_standard();
    const auto pde = error_from([&] {
        cartan_to_gfs(base.coframe, constant_scalar(0.0), constant_scalar(0.0),
                      sample_points(base.domain, seed, points));
    });
    const bool ok = pde && pde->kind() == ErrorKind::PdeViolation && !pde->details().empty() &&
                    std::abs(pde->details()[0] - 2.0) < 1e-8;
    report("10c", "cartan_to_gfs(I=J=0) on sl2 raises PdeViolation, first residual 2", ok,
           pde && !pde->details().empty() ? fmt("first residual %.12f", pde->details()[0]) : "no error");
}

} // namespace

int main()
{
    const auto start = std::chrono::steady_clock::now();
    const std::vector<CatalogEntry> entries = unit_K_entries();
    standard_structures();
    gfs_extraction(entries);
    closed_forms();
    bianchi(entries);
    taut_circles(entries);
    round_trips();
    cross_formula();
    group_theory();
    lens_family_checks();
    negative_controls();
    const double elapsed = seconds_since(start);
    std::printf("total %.2fs, %d unexpected failure(s)\n", elapsed, unexpected_failures);
    return unexpected_failures == 0 ? 0 : 1;
}
