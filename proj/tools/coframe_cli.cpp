// coframe: list catalog structures, verify them on random samples and print
// invariants at points.
//
// Exit codes: 0 success, 1 a check failed or a numeric error occurred,
// 2 unknown structure or invalid input.

#include "coframe/error.hpp"
#include "coframe/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

using coframe::Error;
using coframe::ErrorKind;

bool is_input_error(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::UnknownStructure:
    case ErrorKind::PointOutOfChart:
    case ErrorKind::SingularLocus:
    case ErrorKind::OutOfRangeA:
    case ErrorKind::PreconditionViolation:
        return true;
    default:
        return false;
    }
}

coframe::Vec3 parse_point(const std::string& text)
{
    std::vector<double> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw CLI::ValidationError("--at", "expected three comma-separated reals");
        values.push_back(v);
    }
    if (values.size() != 3)
        throw CLI::ValidationError("--at", "expected three comma-separated reals");
    return {values[0], values[1], values[2]};
}

int cmd_list(bool json)
{
    if (json) {
        std::cout << coframe::catalog_json() << "\n";
        return 0;
    }
    for (const std::string& id : coframe::catalog_ids()) {
        const coframe::CatalogEntry e = coframe::find_entry(id);
        std::cout << id << "\t" << coframe::to_string(e.kind) << "\t" << e.provenance << "\n";
    }
    return 0;
}

int cmd_verify(const coframe::VerifyConfig& cfg, bool json)
{
    coframe::validate(cfg);
    const coframe::CatalogEntry entry = coframe::find_entry(cfg.id);
    const coframe::VerifyReport report = coframe::run_verification(entry, cfg);
    std::cout << (json ? coframe::report_json(report) + "\n" : coframe::report_text(report));
    return report.pass ? 0 : 1;
}

int cmd_invariants(const std::string& id, const std::string& at, coframe::DerivativeOptions opts,
                   bool json)
{
    const coframe::CatalogEntry entry = coframe::find_entry(id);
    const coframe::PointInvariants inv = coframe::invariants_at(entry, parse_point(at), opts);
    std::cout << (json ? coframe::invariants_json(inv) + "\n" : coframe::invariants_text(inv));
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Verify generalized Finsler and Cartan structures on 3-manifolds"};
    app.require_subcommand(1);

    bool json = false;
    auto* list = app.add_subcommand("list", "List catalog identifiers");
    list->add_flag("--json", json, "Print a JSON array");

    coframe::VerifyConfig cfg;
    std::string mode = "analytic";
    double tolerance = 0.0;
    auto* verify = app.add_subcommand("verify", "Run the check suite of a catalog structure");
    verify->add_option("id", cfg.id, "Structure identifier")->required();
    verify->add_option("--samples", cfg.samples, "Number of sample points")->capture_default_str();
    verify->add_option("--step", cfg.step, "Finite-difference step")->capture_default_str();
    auto* tol = verify->add_option("--tol", tolerance, "Residual tolerance (default per mode)");
    verify->add_option("--seed", cfg.seed, "Sampling seed")->capture_default_str();
    verify->add_option("--mode", mode, "Derivative mode")
        ->check(CLI::IsMember({"analytic", "fd"}))
        ->capture_default_str();
    verify->add_flag("--json", json, "Print a JSON report");

    std::string inv_id, at;
    auto* invariants = app.add_subcommand("invariants", "Print invariants at a point");
    invariants->add_option("id", inv_id, "Structure identifier")->required();
    invariants->add_option("--at", at, "Chart point x,y,z")->required();
    invariants->add_option("--step", cfg.step, "Finite-difference step");
    invariants->add_option("--mode", mode, "Derivative mode")->check(CLI::IsMember({"analytic", "fd"}));
    invariants->add_flag("--json", json, "Print JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cfg.mode = mode == "fd" ? coframe::DerivativeMode::finite_difference
                            : coframe::DerivativeMode::analytic;
    if (*tol)
        cfg.tolerance = tolerance;

    try {
        if (*list)
            return cmd_list(json);
        if (*verify)
            return cmd_verify(cfg, json);
        return cmd_invariants(inv_id, at, {cfg.mode, cfg.step}, json);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_input_error(e.kind()) ? 2 : 1;
    }
}
