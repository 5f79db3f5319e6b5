#pragma once

#include <json.hpp>

#include "newtcut/b1.hpp"
#include "newtcut/blowup.hpp"
#include "newtcut/fan.hpp"
#include "newtcut/nondegeneracy.hpp"
#include "newtcut/polynomial.hpp"
#include "newtcut/verify.hpp"
#include "newtcut/zeta.hpp"

namespace newtcut {

using json = nlohmann::ordered_json;

json rat_to_json(const Rat& q);          // "p/q" string, "p" when integral
Rat rat_from_json(const json& j);

json to_json(const NewtonPolyhedron& P);
json to_json(const Fan& fan);
json to_json(const B1Certificate& c);
json to_json(const BSet& B);
json to_json(const Refusal& r);
json to_json(const NondegeneracyVerdict& v);
json to_json(const StackPresentation& sp);
json to_json(const TransformedPolynomial& fp);
json to_json(const SNCCertificate& cert);
json to_json(const PoleSet& ps);
json to_json(const RationalFunctionInS& z);

/// Round-trip parsers for the documented schemas.
std::pair<std::vector<std::pair<IVec, Rat>>, int> polyhedron_halfspaces_from_json(const json& j);
Fan fan_from_json(const json& j, int n);
std::vector<Stratum> strata_from_json(const json& j);

}  // namespace newtcut
