#pragma once

#include <string>

#include <json.hpp>

#include "z2lab/fock.hpp"
#include "z2lab/fourier.hpp"
#include "z2lab/intset.hpp"
#include "z2lab/moments.hpp"
#include "z2lab/rcnorms.hpp"
#include "z2lab/witness.hpp"

namespace z2lab {

using json = nlohmann::ordered_json;

// Matrix object: {"rows": r, "cols": c, "re": [[..]], "im": [[..]]}
json to_json(const CMat& m);
CMat cmat_from_json(const json& j);

// Tuple object: {"n":.., "d":.., "mats":[..], "frequencies":[..]?}
json to_json(const MatrixTuple& t);
MatrixTuple tuple_from_json(const json& j);

// Family object: {"n":.., "d":.., "ops":[..]}
json to_json(const IsometryFamily& f);
IsometryFamily family_from_json(const json& j);

json to_json(const NormBracket& b);
json to_json(const QuadratureResult& q);
json to_json(const RatioReport& r);
json to_json(const MomentProfile& p);
json to_json(const MonteCarloProfile& p);
json to_json(const FamilyReport& r);
json to_json(const PatternWitness& w);
PatternWitness pattern_from_json(const json& j);
json to_json(const Z2Result& r, bool include_histogram);
json to_json(const Z2LatticeResult& r, bool include_histogram);
json to_json(const ViolationReport& r);
json to_json(const AuditResult& r);
json to_json(const AbelianRatio& r);
json to_json(const AbelianCheck& c);

json load_json_file(const std::string& path);
TrigMatrixPoly poly_from_json(const json& j);  // tuple with mandatory frequencies

}  // namespace z2lab
