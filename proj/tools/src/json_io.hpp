#pragma once

// JSON schemas of the command-line tool.
//   torus point   {"turns": ["0/1", "1/2", ...]}
//   matrix        {"flavor": "SYMMETRIC", "re": [[...]], "im": [[...]]}  (rows)
//   Moebius       same as matrix, 2n x 2n
//   Lagrangian    {"basis": [[...2r reals...], ...]}  (columns)
//   invariant     {"r", "n12", "n23", "n31", "n123", "iota"}
//   tuple         {"N": [n1, ..., n5]}

#include <json.hpp>

#include "shilov/invariants.hpp"
#include "shilov/lagrangian.hpp"
#include "shilov/matrix_models.hpp"
#include "shilov/polydisc.hpp"

namespace shilov::cli {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text);

json to_json(const polydisc::TorusPoint& t);
polydisc::TorusPoint torus_from_json(const json& j);

json to_json(const CMatrix& m);
json to_json(Flavor flavor, const CMatrix& m);
CMatrix matrix_from_json(const json& j);
CVector vector_from_json(const json& j);

json to_json(const models::MoebiusElement& g);

json to_json(const lagrangian::LagrangianSubspace& l);
lagrangian::LagrangianSubspace lagrangian_from_json(const json& j, const Tolerances& eps);

json to_json(const OrbitInvariant& inv);
OrbitInvariant invariant_from_json(const json& j);

json to_json(const MonotoneTuple& n);
MonotoneTuple tuple_from_json(const json& j, int rank);

bool is_torus(const json& point);
bool is_lagrangian(const json& point);

}  // namespace shilov::cli
