#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "jsa/bimodule.hpp"
#include "jsa/superalgebra.hpp"

namespace jsa {

using json = nlohmann::json;

// Thrown on malformed input documents (CLI maps it to exit code 1).
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoadedAlgebra {
    SuperAlgebra algebra;
    // ordered pairs whose product was filled in from Eq. (1)
    std::vector<std::pair<std::string, std::string>> inferred;
};

// {"even": [...], "odd": [...], "unit": {...}|null,
//  "products": [{"left":..,"right":..,"value":{name: "p/q"}}]}
// Omitted products are zero. A pair given in one order is completed by
// supercommutativity; a pair given in both orders must satisfy Eq. (1).
json save_superalgebra(const SuperAlgebra& J);
LoadedAlgebra load_superalgebra(const json& doc);

// {"vectors": [{name: "p/q", ...}, ...]} in the coordinates of J
json save_subspace(const SuperAlgebra& J, const Subspace& s);
Subspace load_subspace(const SuperAlgebra& J, const json& doc);

// {"module_even": [...], "module_odd": [...],
//  "action": [{"alg":..,"mod":..,"value":{...}}]}
json save_bimodule(const SuperBimodule& M);
SuperBimodule load_bimodule(const SuperAlgebra& J, const json& doc);

// {"pairs": [{"left":..,"right":..,"value":{module name: "p/q"}}]}
json save_cocycle(const SuperAlgebra& J, const SuperBimodule& M, const Cocycle& mu);
Cocycle load_cocycle(const SuperAlgebra& J, const SuperBimodule& M, const json& doc);

json rat_map(const std::vector<std::string>& names, const RatVec& v);
RatVec parse_rat_map(const std::vector<std::string>& names, const json& value,
                     const std::string& where);

}  // namespace jsa
