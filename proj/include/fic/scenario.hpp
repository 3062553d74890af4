#ifndef FIC_SCENARIO_HPP
#define FIC_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fic/policy_search.hpp"
#include "fic/serialize.hpp"
#include "fic/theorems.hpp"

namespace fic {

class FileError : public std::runtime_error {
public:
    explicit FileError(const std::string& what) : std::runtime_error(what) {}
};

class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// Parsed scenario file. Validation happens against the module preconditions
// before any computation starts.
struct Scenario {
    std::string name;

    enum class EnsembleKind { Discrete, Rayleigh };
    EnsembleKind ensemble_kind = EnsembleKind::Discrete;
    std::vector<ChannelState> states;  // Discrete
    std::vector<double> weights;
    std::array<double, 4> sigmas{1.0, 1.0, 1.0, 1.0};  // Rayleigh
    std::size_t sample_count = 0;
    std::uint64_t seed = 0;

    QuantizerSpec csit1 = QuantizerSpec::none();
    QuantizerSpec csit2 = QuantizerSpec::none();
    Budget budget;

    // "inner", "outer-relaxed", "outer-full", "eq39", "kramer", "etw"
    std::vector<std::string> bounds;
    PolicyGrid grid;
    int refine_rounds = 0;
    bool iid_split_restriction = false;
    int directions = 721;

    bool certify = false;
    double certify_delta = 1.0;

    bool write_csv = true;
    bool write_svg = true;
};

Scenario scenario_from_json(const Json& j);
Scenario load_scenario(const std::string& path);

struct RunOptions {
    std::string out_dir = ".";
    std::optional<int> directions_override;
    std::optional<std::uint64_t> seed_override;
    int threads = 1;
    bool write_artifacts = true;
};

struct RunReport {
    Json report;                          // full report (meta block included)
    std::vector<std::string> artifacts;   // paths written
};

RunReport run_scenario(const Scenario& scenario, const RunOptions& options);

// The boundary polyline traced by a region's support sweep, closed down to
// both axes. Every plotted point reappears verbatim in the CSV export.
std::vector<RatePoint> boundary_polyline(const RateRegion& region);

struct DiffResult {
    std::vector<double> angles;
    std::vector<double> support_a;
    std::vector<double> support_b;
    std::vector<double> diff;  // b - a per direction
    double max_diff = 0.0;
    double mean_diff = 0.0;
    std::string csv;
};

// Per-direction support difference between one bound curve of each report.
// Direction grids must match exactly.
DiffResult diff_regions(const Json& report_a, const Json& report_b, const std::string& bound_a,
                        const std::string& bound_b);

std::string support_csv(const RateRegion& region);
std::string boundary_csv(const std::vector<RatePoint>& polyline);

}  // namespace fic

#endif
