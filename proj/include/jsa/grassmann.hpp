#pragma once

#include "jsa/superalgebra.hpp"

namespace jsa {

// Builds the Grassmann envelope G0 (x) A0 + G1 (x) A1 over the Grassmann
// algebra on g generators and checks that it is a commutative algebra
// satisfying the linearized Jordan identity on all basis quadruples.
// Requires g >= 2. The witness indices refer to envelope basis elements,
// labelled "e{i}e{j}... (x) name".
IdentityReport grassmann_envelope_check(const SuperAlgebra& J, int g);

}  // namespace jsa
