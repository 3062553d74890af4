// Scenario-driven runner for the fading interference channel bound library:
// computes inner/outer rate-region boundaries, support-curve diffs, and
// one-bit-gap certificates from JSON scenario files.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fic/scenario.hpp"

namespace {

// Distinct exit codes, also listed in --help.
constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;        // computation failed or certificate did not pass
constexpr int kExitFileNotFound = 2;   // missing input file
constexpr int kExitSchema = 3;         // malformed scenario/report JSON
constexpr int kExitPrecondition = 4;   // inputs violate a module precondition

fic::Json read_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw fic::FileError("cannot open report file: " + path);
    fic::Json j;
    try {
        in >> j;
    } catch (const fic::Json::exception& e) {
        throw fic::SchemaError(std::string("report: malformed JSON: ") + e.what());
    }
    return j;
}

int dispatch(int argc, char** argv) {
    CLI::App app{
        "ficbounds: capacity bound curves and one-bit-gap certificates for the "
        "two-user ergodic fading Gaussian interference channel.\n"
        "Exit codes: 0 success, 1 computation/certificate failure, 2 file not "
        "found, 3 schema violation, 4 precondition violation."};
    app.require_subcommand(1);

    std::string scenario_path, out_dir = ".";
    int directions = 0;
    std::uint64_t seed = 0;
    bool has_seed = false;
    int threads = 1;

    CLI::App* run = app.add_subcommand("run", "compute the bounds requested by a scenario file");
    run->add_option("scenario", scenario_path, "scenario JSON file")->required();
    run->add_option("--out", out_dir, "output directory for report/CSV/SVG artifacts");
    run->add_option("--directions", directions, "override the direction count (>= 4)");
    run->add_option("--seed", seed, "override the sampling seed")
        ->each([&](const std::string&) { has_seed = true; });
    run->add_option("--threads", threads, "worker threads (results are identical for any value)");

    std::string report_a, report_b, bound_a, bound_b, diff_out;
    CLI::App* diff = app.add_subcommand("diff", "per-direction support difference of two reports");
    diff->add_option("report-a", report_a, "first run report JSON")->required();
    diff->add_option("report-b", report_b, "second run report JSON")->required();
    diff->add_option("--bound-a", bound_a, "bound name in report A (default: its only bound)");
    diff->add_option("--bound-b", bound_b, "bound name in report B (default: its only bound)");
    diff->add_option("--out", diff_out, "write the diff CSV here (default: stdout)");

    double delta = 1.0;
    bool bisect = false;
    CLI::App* certify =
        app.add_subcommand("certify", "one-bit-gap certificate at uniform full power");
    certify->add_option("scenario", scenario_path, "scenario JSON file")->required();
    certify->add_option("--out", out_dir, "output directory for the certificate JSON");
    certify->add_option("--delta", delta, "per-user shift in bits (default 1)");
    certify->add_flag("--bisect", bisect, "also bisect the smallest passing shift to 1e-3");
    certify->add_option("--seed", seed, "override the sampling seed")
        ->each([&](const std::string&) { has_seed = true; });

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) {
        fic::Scenario sc = fic::load_scenario(scenario_path);
        fic::RunOptions opts;
        opts.out_dir = out_dir;
        if (directions > 0) opts.directions_override = directions;
        if (has_seed) opts.seed_override = seed;
        opts.threads = threads;
        fic::RunReport result = fic::run_scenario(sc, opts);

        const std::string report_path = out_dir + "/" + sc.name + "_report.json";
        std::ofstream out(report_path, std::ios::binary);
        if (!out) throw fic::FileError("cannot write " + report_path);
        out << result.report.dump(2) << "\n";

        std::cout << "regime: " << result.report["regime"].get<std::string>() << "\n";
        for (const auto& [name, bj] : result.report["bounds"].items()) {
            const auto& support = bj["support"];
            std::cout << name << ": sum-rate support " << fic::fmt12(support[support.size() / 2].get<double>())
                      << " bits at the diagonal, " << bj["members"].size() << " member(s)\n";
        }
        std::cout << "report: " << report_path << "\n";
        for (const std::string& a : result.artifacts) std::cout << "artifact: " << a << "\n";
        return kExitOk;
    }

    if (diff->parsed()) {
        const fic::DiffResult d =
            fic::diff_regions(read_report(report_a), read_report(report_b), bound_a, bound_b);
        if (diff_out.empty()) {
            std::cout << d.csv;
        } else {
            std::ofstream out(diff_out, std::ios::binary);
            if (!out) throw fic::FileError("cannot write " + diff_out);
            out << d.csv;
        }
        std::cerr << "max diff " << fic::fmt12(d.max_diff) << " bits, mean diff "
                  << fic::fmt12(d.mean_diff) << " bits over " << d.angles.size()
                  << " directions\n";
        return kExitOk;
    }

    // certify
    fic::Scenario sc = fic::load_scenario(scenario_path);
    fic::RunOptions opts;
    if (has_seed) opts.seed_override = seed;
    opts.write_artifacts = false;
    const fic::StateEnsemble ensemble =
        sc.ensemble_kind == fic::Scenario::EnsembleKind::Discrete
            ? fic::make_discrete_ensemble(sc.states, sc.weights)
            : fic::sample_rayleigh_ensemble(sc.sigmas, sc.sample_count,
                                            opts.seed_override.value_or(sc.seed));
    const fic::CsitMap csit1 = fic::csit_from_quantizer(ensemble, fic::Transmitter::Tx1, sc.csit1);
    const fic::CsitMap csit2 = fic::csit_from_quantizer(ensemble, fic::Transmitter::Tx2, sc.csit2);
    const fic::PowerPolicy phi1 = fic::PowerPolicy::uniform(csit1, sc.budget.p1);
    const fic::PowerPolicy phi2 = fic::PowerPolicy::uniform(csit2, sc.budget.p2);

    const fic::GapCertificate cert = fic::one_bit_gap_certificate(ensemble, phi1, phi2, delta);
    fic::Json cj = fic::certificate_to_json(cert);
    if (bisect)
        cj["smallest_passing_delta"] =
            fic::smallest_passing_delta(ensemble, phi1, phi2);

    std::filesystem::create_directories(out_dir);
    const std::string cert_path = out_dir + "/" + sc.name + "_certificate.json";
    std::ofstream out(cert_path, std::ios::binary);
    if (!out) throw fic::FileError("cannot write " + cert_path);
    out << cj.dump(2) << "\n";

    std::cout << "verdict: " << (cert.pass ? "pass" : "fail") << " (delta " << fic::fmt12(delta)
              << ", min term margin " << fic::fmt12(cert.min_term_margin)
              << ", worst vertex violation " << fic::fmt12(cert.containment.worst_violation)
              << ")\n";
    if (bisect)
        std::cout << "smallest passing delta: "
                  << fic::fmt12(cj["smallest_passing_delta"].get<double>()) << "\n";
    std::cout << "certificate: " << cert_path << "\n";
    return cert.pass ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const fic::FileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFileNotFound;
    } catch (const fic::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const fic::HypothesisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
