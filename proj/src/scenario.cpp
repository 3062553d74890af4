#include "fic/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "fic/rng.hpp"
#include "fic/svg.hpp"

namespace fic {

namespace {

QuantizerSpec quantizer_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("feature"))
        throw SchemaError("scenario: csit entry needs a \"feature\" field");
    const std::string feature = j["feature"].get<std::string>();
    if (feature == "none") return QuantizerSpec::none();
    if (feature == "inr-magnitude") return QuantizerSpec::inr_magnitude();
    if (feature == "full-state") return QuantizerSpec::full_state();
    if (feature == "custom-binning") {
        if (!j.contains("edges")) throw SchemaError("scenario: custom-binning needs \"edges\"");
        return QuantizerSpec::custom_binning(j["edges"].get<std::vector<double>>());
    }
    throw SchemaError("scenario: unknown csit feature \"" + feature + "\"");
}

Json quantizer_to_json(const QuantizerSpec& spec) {
    switch (spec.feature) {
        case CsitFeature::None: return Json{{"feature", "none"}};
        case CsitFeature::InrMagnitude: return Json{{"feature", "inr-magnitude"}};
        case CsitFeature::FullState: return Json{{"feature", "full-state"}};
        case CsitFeature::CustomBinning:
            return Json{{"feature", "custom-binning"}, {"edges", spec.edges}};
    }
    return {};
}

const std::vector<std::string> kKnownBounds = {"inner",  "outer-relaxed", "outer-full",
                                               "eq39",   "kramer",        "etw"};

}  // namespace

Scenario scenario_from_json(const Json& j) {
    try {
        Scenario sc;
        sc.name = j.at("name").get<std::string>();

        const Json& ej = j.at("ensemble");
        const std::string kind = ej.at("type").get<std::string>();
        if (kind == "discrete") {
            sc.ensemble_kind = Scenario::EnsembleKind::Discrete;
            for (const Json& row : ej.at("states")) {
                if (!row.is_array() || row.size() != 4)
                    throw SchemaError("scenario: each discrete state needs 4 gains");
                sc.states.push_back(ChannelState{row[0].get<double>(), row[1].get<double>(),
                                                 row[2].get<double>(), row[3].get<double>()});
            }
            sc.weights = ej.at("weights").get<std::vector<double>>();
        } else if (kind == "rayleigh") {
            sc.ensemble_kind = Scenario::EnsembleKind::Rayleigh;
            const auto sig = ej.at("sigmas").get<std::vector<double>>();
            if (sig.size() != 4) throw SchemaError("scenario: rayleigh needs 4 sigmas");
            std::copy(sig.begin(), sig.end(), sc.sigmas.begin());
            sc.sample_count = ej.at("n").get<std::size_t>();
            sc.seed = ej.at("seed").get<std::uint64_t>();
        } else {
            throw SchemaError("scenario: unknown ensemble type \"" + kind + "\"");
        }

        if (j.contains("csit")) {
            sc.csit1 = quantizer_from_json(j["csit"].at("tx1"));
            sc.csit2 = quantizer_from_json(j["csit"].at("tx2"));
        }

        const Json& bj = j.at("budget");
        sc.budget = Budget{bj.at("p1").get<double>(), bj.at("p2").get<double>()};

        sc.bounds = j.at("bounds").get<std::vector<std::string>>();
        for (const std::string& b : sc.bounds)
            if (std::find(kKnownBounds.begin(), kKnownBounds.end(), b) == kKnownBounds.end())
                throw SchemaError("scenario: unknown bound \"" + b + "\"");

        if (j.contains("grid")) {
            const Json& gj = j["grid"];
            sc.grid.power_step = gj.value("power_step", sc.grid.power_step);
            sc.grid.split_step = gj.value("split_step", sc.grid.split_step);
            sc.grid.cap = gj.value("cap", sc.grid.cap);
            sc.refine_rounds = gj.value("refine_rounds", sc.refine_rounds);
            sc.iid_split_restriction =
                gj.value("iid_split_restriction", sc.iid_split_restriction);
        }
        sc.directions = j.value("directions", sc.directions);
        sc.certify = j.value("certify", false);
        sc.certify_delta = j.value("certify_delta", 1.0);
        if (j.contains("outputs")) {
            sc.write_csv = j["outputs"].value("csv", true);
            sc.write_svg = j["outputs"].value("svg", true);
        }
        return sc;
    } catch (const Json::exception& e) {
        throw SchemaError(std::string("scenario: ") + e.what());
    }
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open scenario file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw SchemaError(std::string("scenario: malformed JSON: ") + e.what());
    }
    return scenario_from_json(j);
}

namespace {

Json scenario_to_json(const Scenario& sc) {
    Json ej;
    if (sc.ensemble_kind == Scenario::EnsembleKind::Discrete) {
        ej["type"] = "discrete";
        Json states = Json::array();
        for (const ChannelState& s : sc.states)
            states.push_back(Json::array({s.g11, s.g12, s.g21, s.g22}));
        ej["states"] = std::move(states);
        ej["weights"] = sc.weights;
    } else {
        ej["type"] = "rayleigh";
        ej["sigmas"] = Json::array({sc.sigmas[0], sc.sigmas[1], sc.sigmas[2], sc.sigmas[3]});
        ej["n"] = sc.sample_count;
        ej["seed"] = sc.seed;
    }
    return Json{{"name", sc.name},
                {"ensemble", std::move(ej)},
                {"csit", Json{{"tx1", quantizer_to_json(sc.csit1)},
                              {"tx2", quantizer_to_json(sc.csit2)}}},
                {"budget", Json{{"p1", sc.budget.p1}, {"p2", sc.budget.p2}}},
                {"bounds", sc.bounds},
                {"grid", Json{{"power_step", sc.grid.power_step},
                              {"split_step", sc.grid.split_step},
                              {"cap", sc.grid.cap},
                              {"refine_rounds", sc.refine_rounds},
                              {"iid_split_restriction", sc.iid_split_restriction}}},
                {"directions", sc.directions},
                {"certify", sc.certify},
                {"certify_delta", sc.certify_delta}};
}

StateEnsemble build_ensemble(const Scenario& sc, const RunOptions& options) {
    if (sc.ensemble_kind == Scenario::EnsembleKind::Discrete)
        return make_discrete_ensemble(sc.states, sc.weights);
    const std::uint64_t seed = options.seed_override.value_or(sc.seed);
    return sample_rayleigh_ensemble(sc.sigmas, sc.sample_count, seed);
}

std::vector<double> scenario_split_levels(const PolicyGrid& grid) {
    std::vector<double> levels;
    for (double v = 0.0; v < 1.0 - 1e-12; v += grid.split_step) levels.push_back(v);
    levels.push_back(1.0);
    return levels;
}

// The static reductions apply to a single normalized weak-interference state.
const ChannelState& require_static_weak(const StateEnsemble& ensemble, const std::string& bound) {
    if (ensemble.size() != 1)
        throw std::invalid_argument("bound \"" + bound + "\" needs a singleton ensemble");
    return ensemble.state(0);
}

RateRegion compute_bound(const std::string& name, const StateEnsemble& ensemble,
                         const CsitMap& csit1, const CsitMap& csit2, const Scenario& sc,
                         const RunOptions& options, std::vector<SearchResult>* policies) {
    SearchOptions search;
    search.refine_rounds = sc.refine_rounds;
    search.iid_split_restriction = sc.iid_split_restriction;
    search.threads = options.threads;
    const int directions = options.directions_override.value_or(sc.directions);

    if (name == "inner" || name == "outer-relaxed" || name == "outer-full") {
        const BoundKind kind = name == "inner"            ? BoundKind::InnerEq2
                               : name == "outer-relaxed"  ? BoundKind::OuterEq45
                                                          : BoundKind::OuterEq18;
        TracedBound traced = trace_boundary_detailed(kind, ensemble, csit1, csit2, sc.budget,
                                                     directions, sc.grid, search);
        if (policies) *policies = std::move(traced.member_policies);
        return traced.region;
    }

    const ChannelState& state = require_static_weak(ensemble, name);
    if (name == "etw") return union_region({etw_weak_polytope(state, sc.budget)}, directions);

    // eq39 / kramer: union over the scalar split grid at the fixed budget
    const std::vector<double> levels = scenario_split_levels(sc.grid);
    std::vector<RatePolytope> members;
    for (double alpha : levels)
        for (double beta : levels)
            members.push_back(name == "eq39" ? static_weak_outer(state, sc.budget, alpha, beta)
                                             : kramer_polytope(state, sc.budget, alpha, beta));
    return union_region(std::move(members), directions);
}

struct CurveStyle {
    const char* color;
    bool dashed;
};

CurveStyle style_for(const std::string& bound) {
    if (bound == "inner") return {"#c22", false};
    if (bound == "outer-relaxed") return {"#24c", false};
    if (bound == "outer-full") return {"#24c", true};
    if (bound == "eq39") return {"#71a", false};
    if (bound == "kramer") return {"#666", true};
    if (bound == "etw") return {"#181", true};
    return {"#000", false};
}

void write_text_file(const std::string& path, const std::string& content,
                     std::vector<std::string>& artifacts) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileError("cannot write " + path);
    out << content;
    artifacts.push_back(path);
}

}  // namespace

std::vector<RatePoint> boundary_polyline(const RateRegion& region) {
    std::vector<RatePoint> polyline;
    for (std::size_t j = 0; j < region.angles.size(); ++j) {
        const double w1 = std::cos(region.angles[j]);
        const double w2 = std::sin(region.angles[j]);
        const RatePolytope& member =
            region.members[static_cast<std::size_t>(region.achieving_member[j])];
        RatePoint best{0.0, 0.0};
        double best_v = -1.0;
        for (const RatePoint& v : vertices(member)) {
            const double s = w1 * v.r1 + w2 * v.r2;
            if (s > best_v) {
                best_v = s;
                best = v;
            }
        }
        if (polyline.empty() || polyline.back().r1 != best.r1 || polyline.back().r2 != best.r2)
            polyline.push_back(best);
    }
    if (!polyline.empty() && polyline.front().r2 > 0.0)
        polyline.insert(polyline.begin(), RatePoint{polyline.front().r1, 0.0});
    if (!polyline.empty() && polyline.back().r1 > 0.0)
        polyline.push_back(RatePoint{0.0, polyline.back().r2});
    return polyline;
}

std::string support_csv(const RateRegion& region) {
    std::ostringstream out;
    out << "direction-angle-rad,w1,w2,support-bits\n";
    for (std::size_t j = 0; j < region.angles.size(); ++j)
        out << fmt12(region.angles[j]) << "," << fmt12(std::cos(region.angles[j])) << ","
            << fmt12(std::sin(region.angles[j])) << "," << fmt12(region.support[j]) << "\n";
    return out.str();
}

std::string boundary_csv(const std::vector<RatePoint>& polyline) {
    std::ostringstream out;
    out << "r1-bits,r2-bits\n";
    for (const RatePoint& p : polyline) out << fmt12(p.r1) << "," << fmt12(p.r2) << "\n";
    return out.str();
}

RunReport run_scenario(const Scenario& scenario, const RunOptions& options) {
    const StateEnsemble ensemble = build_ensemble(scenario, options);
    const CsitMap csit1 = csit_from_quantizer(ensemble, Transmitter::Tx1, scenario.csit1);
    const CsitMap csit2 = csit_from_quantizer(ensemble, Transmitter::Tx2, scenario.csit2);
    const int directions = options.directions_override.value_or(scenario.directions);

    RunReport run;
    Json& report = run.report;
    report["scenario"] = scenario_to_json(scenario);
    if (options.directions_override) report["scenario"]["directions"] = directions;
    report["regime"] = regime_name(classify_regime(ensemble));
    report["directions"] = Json{{"count", directions}, {"angles", direction_grid(directions)}};
    report["ensemble_summary"] =
        Json{{"support_points", ensemble.size()},
             {"csit1", csit_to_json(csit1)["quantizer"]},
             {"csit1_alphabet", csit1.alphabet_size()},
             {"csit2", csit_to_json(csit2)["quantizer"]},
             {"csit2_alphabet", csit2.alphabet_size()}};

    std::vector<BoundaryCurve> curves;
    Json bounds_json;
    for (const std::string& name : scenario.bounds) {
        std::vector<SearchResult> policies;
        const RateRegion region =
            compute_bound(name, ensemble, csit1, csit2, scenario, options, &policies);
        const std::vector<RatePoint> polyline = boundary_polyline(region);

        Json bj = region_to_json(region);
        Json poly = Json::array();
        for (const RatePoint& p : polyline) poly.push_back(Json::array({p.r1, p.r2}));
        bj["polyline"] = std::move(poly);
        if (!policies.empty()) {
            Json pol = Json::array();
            for (const SearchResult& r : policies)
                pol.push_back(Json{
                    {"phi1", policies_to_json(r.phi1, r.alpha ? &*r.alpha : nullptr)},
                    {"phi2", policies_to_json(r.phi2, r.beta ? &*r.beta : nullptr)}});
            bj["member_policies"] = std::move(pol);
        }
        bounds_json[name] = std::move(bj);

        const CurveStyle st = style_for(name);
        curves.push_back(BoundaryCurve{name, st.color, st.dashed, polyline});
    }
    report["bounds"] = std::move(bounds_json);

    if (scenario.certify) {
        const PowerPolicy phi1 = PowerPolicy::uniform(csit1, scenario.budget.p1);
        const PowerPolicy phi2 = PowerPolicy::uniform(csit2, scenario.budget.p2);
        report["certificate"] = certificate_to_json(
            one_bit_gap_certificate(ensemble, phi1, phi2, scenario.certify_delta));
    }

    if (options.write_artifacts) {
        namespace fs = std::filesystem;
        fs::create_directories(options.out_dir);
        const std::string base = options.out_dir + "/" + scenario.name;
        if (scenario.write_csv) {
            for (const std::string& name : scenario.bounds) {
                RateRegion region;
                region.angles = report["bounds"][name]["directions"].get<std::vector<double>>();
                region.support = report["bounds"][name]["support"].get<std::vector<double>>();
                write_text_file(base + "_" + name + "_support.csv", support_csv(region),
                                run.artifacts);
                std::vector<RatePoint> polyline;
                for (const Json& p : report["bounds"][name]["polyline"])
                    polyline.push_back(RatePoint{p[0].get<double>(), p[1].get<double>()});
                write_text_file(base + "_" + name + "_boundary.csv", boundary_csv(polyline),
                                run.artifacts);
            }
        }
        if (scenario.write_svg)
            write_text_file(base + ".svg", render_region_svg(curves, scenario.name),
                            run.artifacts);
    }

    // volatile metadata lives only in this block; everything else is
    // bit-reproducible for a fixed scenario file
    Json meta;
    meta["tool"] = "ficbounds";
    meta["version"] = "0.1.0";
    meta["rng"] = kRngAlgorithm;
    meta["threads"] = options.threads;
    report["meta"] = std::move(meta);
    return run;
}

DiffResult diff_regions(const Json& report_a, const Json& report_b, const std::string& bound_a,
                        const std::string& bound_b) {
    auto pick = [](const Json& report, const std::string& requested, const char* which) {
        const Json& bounds = report.at("bounds");
        if (!requested.empty()) {
            if (!bounds.contains(requested))
                throw std::invalid_argument(std::string("diff: report ") + which +
                                            " has no bound \"" + requested + "\"");
            return bounds[requested];
        }
        if (bounds.size() != 1)
            throw std::invalid_argument(std::string("diff: report ") + which +
                                        " has several bounds; pick one explicitly");
        return bounds.begin().value();
    };
    const Json ja = pick(report_a, bound_a, "A");
    const Json jb = pick(report_b, bound_b, "B");

    DiffResult d;
    d.angles = ja.at("directions").get<std::vector<double>>();
    const auto angles_b = jb.at("directions").get<std::vector<double>>();
    if (d.angles != angles_b)
        throw std::invalid_argument("diff: direction grids do not match");
    d.support_a = ja.at("support").get<std::vector<double>>();
    d.support_b = jb.at("support").get<std::vector<double>>();

    std::ostringstream csv;
    csv << "direction-angle-rad,w1,w2,support-a,support-b,diff\n";
    double sum = 0.0;
    d.max_diff = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < d.angles.size(); ++j) {
        const double diff = d.support_b[j] - d.support_a[j];
        d.diff.push_back(diff);
        d.max_diff = std::max(d.max_diff, diff);
        sum += diff;
        csv << fmt12(d.angles[j]) << "," << fmt12(std::cos(d.angles[j])) << ","
            << fmt12(std::sin(d.angles[j])) << "," << fmt12(d.support_a[j]) << ","
            << fmt12(d.support_b[j]) << "," << fmt12(diff) << "\n";
    }
    d.mean_diff = sum / static_cast<double>(d.angles.size());
    d.csv = csv.str();
    return d;
}

}  // namespace fic
