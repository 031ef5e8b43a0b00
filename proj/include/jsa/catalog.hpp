#pragma once

#include "jsa/superalgebra.hpp"

namespace jsa {

// Kac's 10-dimensional simple Jordan superalgebra.
// Basis e, v1..v4, f | x1, x2, y1, y2; unit e + f.
SuperAlgebra build_K10();

// 4-dimensional family D_t: e1, e2 | x, y with x*y = e1 + t*e2; unit e1 + e2.
SuperAlgebra build_Dt(const Rat& t);

// Kaplansky's non-unital 3-dimensional superalgebra: e | x, y with x*y = e.
SuperAlgebra build_K3();
SuperAlgebra build_K3_hull();

// Superform superalgebra F1 + V0 + V1, dim 1 + n + 2m, n >= 2, m >= 1:
// v_i*v_i = 1, w_{2p-1}*w_{2p} = 1 = -w_{2p}*w_{2p-1}.
SuperAlgebra build_superform(int n, int m);

struct CounterexampleResult {
    SuperAlgebra algebra;
    Subspace radical;
};

// Square-zero extension of the superform algebra by the degree-window module
// of monomials of degree n-1, n with the product w1*w2 perturbed to
// 1 + v1..vn. Splitting is obstructed. Requires odd n >= 3, m >= 1.
CounterexampleResult counterexample_superform_odd(int n, int m);

// u-twisted variant with w1*w2 = 1 + u v1..vn. Requires even n >= 2, m >= 1.
CounterexampleResult counterexample_superform_even(int n, int m);

// 8-dimensional extension of D_t by its regular bimodule with
// x*y = e1 + t e2 + a1 + (-2-t) a2. Obstructed for t != -1.
CounterexampleResult counterexample_Dt(const Rat& t);

}  // namespace jsa
