#include "coframe/verify.hpp"

#include "coframe/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

namespace coframe {

namespace {

constexpr double invariance_tolerance = 1e-12;

std::string_view mode_name(DerivativeMode mode)
{
    return mode == DerivativeMode::analytic ? "analytic" : "fd";
}

class Collector {
public:
    explicit Collector(VerifyReport& report) : m_report(report) {}

    void residual(const std::string& name, double value, double tolerance)
    {
        m_report.checks.push_back({name, value, tolerance, value < tolerance});
    }

    /// Residual maxima of a structure report, prefixed with the check name.
    void residuals(const std::string& prefix, const StructureReport& r)
    {
        for (const auto& [name, value] : r.residuals)
            residual(prefix + "." + name, value, r.tolerance);
    }

    void nondegenerate(const std::string& name, const StructureReport& r)
    {
        const double volume = r.min_volume.value_or(0.0);
        m_report.checks.push_back({name, volume, r.threshold, volume > r.threshold});
    }

    void flag(const std::string& name, bool ok)
    {
        m_report.checks.push_back({name, ok ? 0.0 : 1.0, 0.5, ok});
    }

    void summarize(const StructureReport& r)
    {
        for (const auto& [name, values] : r.invariants) {
            if (values.empty())
                continue;
            InvariantSummary s;
            s.min = *std::min_element(values.begin(), values.end());
            s.max = *std::max_element(values.begin(), values.end());
            double total = 0.0;
            for (double v : values)
                total += v;
            s.mean = total / static_cast<double>(values.size());
            m_report.invariant_summaries[name] = s;
        }
    }

private:
    VerifyReport& m_report;
};

double max_abs_difference(const std::vector<double>& extracted, const ScalarField& expected,
                          const std::vector<Point3>& points)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i)
        worst = std::max(worst, std::abs(extracted[i] - expected.value(points[i])));
    return worst;
}

double max_abs(const std::vector<double>& values, double offset)
{
    double worst = 0.0;
    for (double v : values)
        worst = std::max(worst, std::abs(v - offset));
    return worst;
}

void verify_invariance(const CatalogEntry& entry, const std::vector<Point3>& points, Collector& out)
{
    for (const QuaternionClaim& claim : entry.quaternion_claims) {
        const InvarianceReport r = invariance_check(claim.probe, claim.generators, points, claim.mode);
        out.residual("invariance." + claim.name, r.max_deviation, invariance_tolerance);
    }
    for (const SurfaceClaim& claim : entry.surface_claims) {
        const InvarianceReport r = surface_invariance_check(claim.probe, claim.generators, points);
        out.residual("invariance." + claim.name, r.max_deviation, invariance_tolerance);
    }
}

void verify_cartan(const CatalogEntry& entry, const std::vector<Point3>& points,
                   const CheckOptions& opts, Collector& out)
{
    const OneFormField a1 = entry.coframe.row(0), a2 = entry.coframe.row(1);
    const StructureReport cartan = check_cartan_structure(a1, a2, points, opts);
    out.residuals("cartan", cartan);
    out.nondegenerate("cartan.min_volume", cartan);

    const ScalarField* expected = entry.expected_curvature ? &*entry.expected_curvature : nullptr;
    const StructureReport k = extract_cartan_K(entry.coframe, points, opts, expected);
    out.residuals("kcartan", k);
    out.summarize(k);
}

void verify_gfs(const CatalogEntry& entry, const std::vector<Point3>& points,
                const CheckOptions& opts, Collector& out)
{
    const StructureReport gfs = extract_gfs_invariants(entry.coframe, points, opts, entry.expected_K);
    out.residuals("gfs", gfs);
    out.summarize(gfs);
    if (entry.expected_I)
        out.residual("expected.I", max_abs_difference(gfs.invariants.at("I"), *entry.expected_I, points),
                     opts.tolerance);
    if (entry.expected_J)
        out.residual("expected.J", max_abs_difference(gfs.invariants.at("J"), *entry.expected_J, points),
                     opts.tolerance);

    CheckOptions nested = opts;
    nested.tolerance = std::max(opts.tolerance, nested_tolerance);
    const GfsInvariantFields fields = gfs_invariant_fields(entry.coframe, opts.derivatives);
    out.residuals("bianchi", check_bianchi(entry.coframe, fields, points, nested));

    const OneFormField w1 = entry.coframe.row(0), w2 = entry.coframe.row(1),
                       w3 = entry.coframe.row(2);
    out.nondegenerate("contact.w1.min_volume", check_contact(w1, points, opts));
    out.nondegenerate("contact.w2.min_volume", check_contact(w2, points, opts));

    // (w1, w3) is a taut contact circle exactly when K = 1, and (w1, w2)
    // exactly when I = 0.
    const StructureReport taut13 = check_taut_contact_circle(w1, w3, points, opts);
    if (entry.expected_K == 1.0)
        out.residuals("taut_circle.w1_w3", taut13);
    const bool unit_K = max_abs(gfs.invariants.at("K"), 1.0) < opts.tolerance;
    out.flag("biconditional.taut_w1_w3_iff_K1", taut13.pass == unit_K);
    const StructureReport taut12 = check_taut_contact_circle(w1, w2, points, opts);
    const bool zero_I = max_abs(gfs.invariants.at("I"), 0.0) < opts.tolerance;
    out.flag("biconditional.taut_w1_w2_iff_I0", taut12.pass == zero_I);
}

} // namespace

void validate(const VerifyConfig& cfg)
{
    if (cfg.samples < 1)
        throw Error(ErrorKind::PreconditionViolation, "samples must be at least 1");
    if (!(cfg.step > 0.0))
        throw Error(ErrorKind::PreconditionViolation, "step must be positive", {cfg.step});
    if (cfg.tolerance && !(*cfg.tolerance > 0.0))
        throw Error(ErrorKind::PreconditionViolation, "tolerance must be positive", {*cfg.tolerance});
}

VerifyReport run_verification(const CatalogEntry& entry, const VerifyConfig& cfg)
{
    validate(cfg);
    VerifyReport report;
    report.id = entry.id;
    report.seed = cfg.seed;
    report.samples = cfg.samples;
    report.mode = cfg.mode;

    CheckOptions opts;
    opts.derivatives = {cfg.mode, cfg.step};
    opts.tolerance = cfg.tolerance.value_or(default_tolerance(cfg.mode));

    const std::vector<Point3> points = sample_points(entry.domain, cfg.seed, cfg.samples);
    for (const Point3& p : points)
        entry.admit(p);

    Collector out(report);
    if (entry.kind == EntryKind::cartan)
        verify_cartan(entry, points, opts, out);
    else
        verify_gfs(entry, points, opts, out);
    verify_invariance(entry, points, out);

    report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const CheckResult& c) { return c.pass; });
    return report;
}

std::string report_json(const VerifyReport& report)
{
    nlohmann::ordered_json j;
    j["id"] = report.id;
    j["seed"] = report.seed;
    j["samples"] = report.samples;
    j["mode"] = std::string(mode_name(report.mode));
    j["pass"] = report.pass;
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : report.checks)
        j["checks"].push_back(
            {{"name", c.name}, {"residual", c.residual}, {"tolerance", c.tolerance}, {"pass", c.pass}});
    j["invariant_summaries"] = nlohmann::ordered_json::object();
    for (const auto& [name, s] : report.invariant_summaries)
        j["invariant_summaries"][name] = {{"min", s.min}, {"max", s.max}, {"mean", s.mean}};
    return j.dump(2);
}

std::string report_text(const VerifyReport& report)
{
    std::ostringstream out;
    out << report.id << "  (" << report.samples << " samples, seed " << report.seed << ", "
        << mode_name(report.mode) << ")\n";
    out << std::scientific << std::setprecision(3);
    for (const CheckResult& c : report.checks)
        out << "  " << (c.pass ? "pass" : "FAIL") << "  " << std::left << std::setw(44) << c.name
            << std::right << c.residual << "  (tol " << c.tolerance << ")\n";
    out << std::defaultfloat << std::setprecision(10);
    for (const auto& [name, s] : report.invariant_summaries)
        out << "  " << name << ": min " << s.min << ", max " << s.max << ", mean " << s.mean << "\n";
    out << (report.pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

PointInvariants invariants_at(const CatalogEntry& entry, const Vec3& x, const DerivativeOptions& opts)
{
    const Point3 p{entry.chart, x};
    entry.admit(p);
    PointInvariants inv;
    inv.id = entry.id;
    inv.kind = entry.kind;
    inv.at = x;
    CheckOptions check;
    check.derivatives = opts;
    if (entry.kind == EntryKind::cartan) {
        const StructureReport k = extract_cartan_K(entry.coframe, {p}, check);
        inv.extracted["Kcartan"] = k.invariants.at("Kcartan").front();
        if (entry.expected_curvature)
            inv.expected["Kcartan"] = entry.expected_curvature->value(p);
        return inv;
    }
    const GfsInvariants g = gfs_invariants_at(entry.coframe, p, opts);
    inv.extracted = {{"I", g.I}, {"J", g.J}, {"K", g.K}};
    if (entry.expected_I)
        inv.expected["I"] = entry.expected_I->value(p);
    if (entry.expected_J)
        inv.expected["J"] = entry.expected_J->value(p);
    if (entry.expected_K)
        inv.expected["K"] = *entry.expected_K;
    return inv;
}

std::string invariants_json(const PointInvariants& inv)
{
    nlohmann::ordered_json j;
    j["id"] = inv.id;
    j["kind"] = std::string(to_string(inv.kind));
    j["at"] = {inv.at(0), inv.at(1), inv.at(2)};
    j["invariants"] = nlohmann::ordered_json::object();
    for (const auto& [name, value] : inv.extracted) {
        nlohmann::ordered_json row = {{"extracted", value}};
        if (const auto it = inv.expected.find(name); it != inv.expected.end()) {
            row["expected"] = it->second;
            row["difference"] = value - it->second;
        }
        j["invariants"][name] = row;
    }
    return j.dump(2);
}

std::string invariants_text(const PointInvariants& inv)
{
    std::ostringstream out;
    out << inv.id << " at (" << inv.at(0) << ", " << inv.at(1) << ", " << inv.at(2) << ")\n";
    out << std::setprecision(12);
    for (const auto& [name, value] : inv.extracted) {
        out << "  " << std::left << std::setw(8) << name << std::right << std::setw(20) << value;
        if (const auto it = inv.expected.find(name); it != inv.expected.end())
            out << "  expected " << std::setw(20) << it->second << "  difference "
                << std::setprecision(3) << std::scientific << value - it->second
                << std::defaultfloat << std::setprecision(12);
        out << "\n";
    }
    return out.str();
}

std::string catalog_json()
{
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const std::string& id : catalog_ids()) {
        const CatalogEntry e = find_entry(id);
        j.push_back({{"id", id}, {"kind", std::string(to_string(e.kind))}, {"provenance", e.provenance}});
    }
    return j.dump(2);
}

} // namespace coframe
