#ifndef FIC_SERIALIZE_HPP
#define FIC_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "fic/ensemble.hpp"
#include "fic/geometry.hpp"
#include "fic/policy.hpp"
#include "fic/polytope.hpp"
#include "fic/theorems.hpp"

namespace fic {

using Json = nlohmann::json;

// Numbers in CSV/SVG artifacts are printed with 12 significant digits so
// goldens stay meaningful; JSON keeps nlohmann's round-trip encoding.
std::string fmt12(double v);

Json ensemble_to_json(const StateEnsemble& ensemble);
StateEnsemble ensemble_from_json(const Json& j);

Json csit_to_json(const CsitMap& csit);

Json polytope_to_json(const RatePolytope& polytope);
RatePolytope polytope_from_json(const Json& j);

// Per CSIT symbol {phi, alpha, beta}; split entries omitted when absent.
Json policies_to_json(const PowerPolicy& phi, const SplitPolicy* split);

Json region_to_json(const RateRegion& region);

Json certificate_to_json(const GapCertificate& cert);

}  // namespace fic

#endif
