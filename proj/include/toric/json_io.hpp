#pragma once

#include <string>

#include <json.hpp>

#include "toric/cone.hpp"
#include "toric/fan2d.hpp"
#include "toric/isomorphism.hpp"
#include "toric/lattice.hpp"
#include "toric/replica.hpp"
#include "toric/roots.hpp"

namespace toric {

using Json = nlohmann::json;

// Integers within 53 bits travel as JSON numbers, anything larger as a
// decimal string.  Parsing accepts both and refuses floats.
Json int_to_json(const Int& x);
Int json_to_int(const Json& j);

// Rationals travel as "p/q" strings; integral values degrade to the
// integer encoding.
Json rat_to_json(const Rat& q);
Rat json_to_rat(const Json& j);

Json vec_to_json(const Vec& v);
Vec json_to_vec(const Json& j);

Json mat_to_json(const Mat& m);
Mat json_to_mat(const Json& j);

// {"ambient_rank": n, "rays": [[..],..]}.  Input lists may be redundant and
// non-primitive; they are normalized on load.  Output lists the canonical
// generators, so every emitted cone re-parses to an equal value.
Json cone_to_json(const Cone& c);
Cone json_to_cone(const Json& j);

// {"rays": [[a,b],..]} in cyclic order.
Json fan_to_json(const Fan2D& f);
Fan2D json_to_fan(const Json& j);

// {"ray": i, "weight": [..]}.
Json root_to_json(const DemazureRoot& r);
DemazureRoot json_to_root(const Json& j);

// [{"m": [..], "coeff": c}, ..] sorted by exponent.
Json function_to_json(const MonomialFunction& f);
MonomialFunction json_to_function(const Json& j);

Json quotient_to_json(const QuotientStructure& q);
Json witness_to_json(const IsoWitness& w);
Json fingerprint_to_json(const ConeFingerprint& f);
Json du_report_to_json(const DuOrbitReport& r);

Json ok_envelope(Json result);
Json error_envelope(const std::string& code, const std::string& message);

}  // namespace toric
