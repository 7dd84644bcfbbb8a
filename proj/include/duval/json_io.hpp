#pragma once

#include "duval/elliptic.hpp"
#include "duval/moduli.hpp"
#include "duval/picard.hpp"
#include "duval/plane_systems.hpp"

#include <json.hpp>

#include <string>

namespace duval {

using json = nlohmann::json;

// The nine built-in points of y^2 = x^3 + 17 with their lattice coordinates
// over the basis pair (p1, p3); re-verified against the group law on load.
PointConfig builtin_config();

// Name of the built-in configuration accepted wherever a path is expected.
inline constexpr const char* kBuiltinConfigName = "paper";

json config_to_json(const PointConfig& cfg);
PointConfig config_from_json(const json& j);
// Accepts a file path or kBuiltinConfigName.
PointConfig load_config(const std::string& path_or_name);

json to_json(const ECPoint& p);
json to_json(const PlanePoly& f);
json to_json(const DivisorClass& d);
json to_json(const NagataClass& c);
json to_json(const TorsionCertificate& c);
json to_json(const TwoTorsionResult& r);
json to_json(const IndependenceCertificate& c);
json to_json(const HalphenCertificate& c);
json to_json(const CremonaCertificate& c);
json to_json(const AllKCertificate& c);
json to_json(const GeneralityCertificate& c);
json to_json(const LinearSystemResult& r);
json to_json(const BasePoint& b);
json to_json(const SingularLocus& l);
json to_json(const PencilInvariants& inv);
json to_json(const BNDivisorData& d);

}  // namespace duval
