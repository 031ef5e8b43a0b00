#pragma once

#include <string>
#include <vector>

#include "jsa/rat.hpp"

namespace jsa {

// Normal-ordered monomial u^eps v_1^{i_1}..v_n^{i_n} w_1^{k_1}..w_{2m}^{k_{2m}}
// of the Clifford-Weyl algebra of a superform (v's square to 1 and pairwise
// anticommute, w's satisfy w_{2p-1}w_{2p} - w_{2p}w_{2p-1} = 2 within a pair
// and commute across pairs, v and w anticommute, u is an extra orthonormal
// even vector anticommuting with all of V). Parity is |K| mod 2.
struct CWMonomial {
    bool u = false;
    std::vector<int> I;  // size n, entries 0/1
    std::vector<int> K;  // size 2m, nonnegative

    int degree() const;  // |I| + |K|, the u flag not counted
    int parity() const;  // |K| mod 2
    std::string name() const;

    bool operator==(const CWMonomial& o) const { return u == o.u && I == o.I && K == o.K; }
    bool operator<(const CWMonomial& o) const;  // (degree, I lex, K lex, u)
};

struct CWTerm {
    Rat coeff;
    CWMonomial mono;
};

// sorted by monomial, zero coefficients removed
using CWSum = std::vector<CWTerm>;

CWSum cw_combine(std::vector<CWTerm> terms);

// generator of the algebra: v_j (even), w_p (odd) or u (even); 0-based index
struct CWGen {
    enum Kind { V, W, U } kind;
    int idx = 0;
    int parity() const { return kind == W ? 1 : 0; }
};

// associative normal-ordered product p*q (monomials must agree on n, m)
CWSum cw_normal_product(const CWMonomial& p, const CWMonomial& q);

// (1/2)(p g + (-1)^{|p||g|} g p) computed via cw_normal_product; the
// normative semantics for all symmetric products.
CWSum symmetric_product_oracle(const CWMonomial& p, const CWGen& g);

// Closed-form symmetric product, normalized to agree with the oracle.
CWSum symmetric_product_formula(const CWMonomial& p, const CWGen& g);

// all monomials with the given u flag and degree d, in (I lex, K lex) order
std::vector<CWMonomial> cw_monomials_of_degree(int n, int m, int d, bool u);

}  // namespace jsa
