#include "fic/serialize.hpp"

#include <cstdio>
#include <stdexcept>

namespace fic {

std::string fmt12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

Json ensemble_to_json(const StateEnsemble& ensemble) {
    Json states = Json::array();
    for (const ChannelState& s : ensemble.states())
        states.push_back(Json::array({s.g11, s.g12, s.g21, s.g22}));

    Json provenance;
    const Provenance& p = ensemble.provenance();
    if (p.kind == Provenance::Kind::ExactEnumeration) {
        provenance["kind"] = "exact-enumeration";
    } else {
        provenance["kind"] = "sampled";
        provenance["sampler"] = p.sampler;
        provenance["rng"] = p.rng;
        provenance["seed"] = p.seed;
        provenance["n"] = p.n;
        provenance["sigmas"] = Json::array({p.sigmas[0], p.sigmas[1], p.sigmas[2], p.sigmas[3]});
    }
    return Json{{"states", std::move(states)},
                {"weights", ensemble.weights()},
                {"provenance", std::move(provenance)}};
}

StateEnsemble ensemble_from_json(const Json& j) {
    std::vector<ChannelState> states;
    for (const Json& row : j.at("states")) {
        if (!row.is_array() || row.size() != 4)
            throw std::invalid_argument("ensemble JSON: each state needs 4 gains");
        states.push_back(make_channel_state(row[0].get<double>(), row[1].get<double>(),
                                            row[2].get<double>(), row[3].get<double>()));
    }
    std::vector<double> weights = j.at("weights").get<std::vector<double>>();

    Provenance p;
    if (j.contains("provenance") && j["provenance"].value("kind", "") == "sampled") {
        const Json& pj = j["provenance"];
        p.kind = Provenance::Kind::Sampled;
        p.sampler = pj.value("sampler", "");
        p.rng = pj.value("rng", "");
        p.seed = pj.value("seed", 0ULL);
        p.n = pj.value("n", std::size_t{0});
        if (pj.contains("sigmas"))
            for (std::size_t k = 0; k < 4; ++k) p.sigmas[k] = pj["sigmas"][k].get<double>();
    }
    return StateEnsemble(std::move(states), std::move(weights), std::move(p));
}

Json csit_to_json(const CsitMap& csit) {
    return Json{{"labels", csit.labels()},
                {"alphabet_size", csit.alphabet_size()},
                {"quantizer", csit.description()}};
}

Json polytope_to_json(const RatePolytope& polytope) {
    Json constraints = Json::array();
    for (const RateConstraint& rc : polytope.constraints)
        constraints.push_back(Json{{"a", rc.a}, {"b", rc.b}, {"c", rc.c}, {"tag", rc.tag}});
    return Json{{"constraints", std::move(constraints)}, {"meta", Json{{"bound", polytope.bound_name}}}};
}

RatePolytope polytope_from_json(const Json& j) {
    std::vector<RateConstraint> rows;
    for (const Json& rc : j.at("constraints"))
        rows.push_back(make_rate_constraint(rc.at("a").get<int>(), rc.at("b").get<int>(),
                                            rc.at("c").get<double>(),
                                            rc.value("tag", std::string{})));
    std::string name;
    if (j.contains("meta")) name = j["meta"].value("bound", "");
    return make_rate_polytope(std::move(rows), std::move(name));
}

Json policies_to_json(const PowerPolicy& phi, const SplitPolicy* split) {
    Json per_symbol = Json::array();
    for (int e = 0; e < phi.csit().alphabet_size(); ++e) {
        Json entry{{"symbol", e}, {"phi", phi.value_for_symbol(e)}};
        if (split && split->domain() == SplitPolicy::Domain::CsitIndexed)
            entry["split"] = split->value_for_symbol(e);
        per_symbol.push_back(std::move(entry));
    }
    Json out{{"per_symbol", std::move(per_symbol)}};
    if (split && split->domain() == SplitPolicy::Domain::StateIndexed)
        out["split_per_state"] = split->values();
    return out;
}

Json region_to_json(const RateRegion& region) {
    Json members = Json::array();
    for (const RatePolytope& m : region.members) members.push_back(polytope_to_json(m));
    return Json{{"directions", region.angles},
                {"support", region.support},
                {"achieving_member", region.achieving_member},
                {"members", std::move(members)}};
}

Json certificate_to_json(const GapCertificate& cert) {
    Json constraints = Json::array();
    for (const GapConstraintRecord& rec : cert.constraints) {
        Json terms = Json::array();
        for (const GapTermPair& p : rec.terms)
            terms.push_back(Json{{"label", p.label},
                                 {"outer", p.outer_value},
                                 {"inner", p.inner_value},
                                 {"margin", p.margin}});
        constraints.push_back(Json{{"outer_tag", rec.outer_tag},
                                   {"inner_tag", rec.inner_tag},
                                   {"a", rec.a},
                                   {"b", rec.b},
                                   {"outer_c", rec.outer_c},
                                   {"inner_c", rec.inner_c},
                                   {"terms", std::move(terms)},
                                   {"min_term_margin", rec.min_term_margin}});
    }
    Json vertices = Json::array();
    for (const ShiftedVertexRecord& rec : cert.containment.records)
        vertices.push_back(Json{{"vertex", Json::array({rec.vertex.r1, rec.vertex.r2})},
                                {"shifted", Json::array({rec.shifted.r1, rec.shifted.r2})},
                                {"violation", rec.violation},
                                {"contained", rec.contained}});
    return Json{{"delta", cert.delta},
                {"constraints", std::move(constraints)},
                {"shifted_vertices", std::move(vertices)},
                {"min_term_margin", cert.min_term_margin},
                {"terms_pass", cert.terms_pass},
                {"containment_pass", cert.containment_pass},
                {"verdict", cert.pass ? "pass" : "fail"}};
}

}  // namespace fic
