#pragma once

#include "coframe/catalog.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coframe {

struct VerifyConfig {
    std::string id;
    std::size_t samples = 200;
    double step = 1e-4;
    std::optional<double> tolerance;  // default depends on the derivative mode
    std::uint64_t seed = 1;
    DerivativeMode mode = DerivativeMode::analytic;
};

/// Throws PreconditionViolation for samples = 0, step <= 0 or tolerance <= 0.
void validate(const VerifyConfig& cfg);

/// One named check. Nondegeneracy checks report the smallest volume
/// coefficient as `residual` and pass when it exceeds `tolerance`.
struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct InvariantSummary {
    double min = 0.0, max = 0.0, mean = 0.0;
};

struct VerifyReport {
    std::string id;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    DerivativeMode mode = DerivativeMode::analytic;
    std::vector<CheckResult> checks;
    std::map<std::string, InvariantSummary> invariant_summaries;
    bool pass = false;
};

/// Runs the check suite that applies to the entry: Cartan and K-Cartan checks
/// for Cartan entries; extraction, Bianchi identities, contact and taut-circle
/// checks for GFS entries; invariance checks for declared groups.
VerifyReport run_verification(const CatalogEntry& entry, const VerifyConfig& cfg);

std::string report_json(const VerifyReport& report);
std::string report_text(const VerifyReport& report);

/// Invariants at one point: extracted values next to the closed forms.
struct PointInvariants {
    std::string id;
    EntryKind kind = EntryKind::gfs;
    Vec3 at = Vec3::Zero();
    std::map<std::string, double> extracted;
    std::map<std::string, double> expected;
};

/// Throws PointOutOfChart or SingularLocus for inadmissible points.
PointInvariants invariants_at(const CatalogEntry& entry, const Vec3& x,
                              const DerivativeOptions& opts = {});

std::string invariants_json(const PointInvariants& inv);
std::string invariants_text(const PointInvariants& inv);

/// JSON array of {id, kind, provenance}, sorted by id.
std::string catalog_json();

} // namespace coframe
