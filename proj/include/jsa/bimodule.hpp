#pragma once

#include <map>
#include <string>
#include <vector>

#include "jsa/superalgebra.hpp"

namespace jsa {

// Graded bimodule over a Jordan superalgebra, stored one-sided: action[i][c]
// is the left product b_i . m_c; the right action follows from Eq. (1) signs.
// Construction validates the grading and, by default, that the split null
// extension satisfies the super-Jordan identity (the defining property).
class SuperBimodule {
public:
    SuperBimodule(SuperAlgebra base, std::vector<std::string> even_names,
                  std::vector<std::string> odd_names, std::vector<RatVec> action,
                  bool validate_jordan = true);

    const SuperAlgebra& base() const { return base_; }
    int mdim() const { return mdim_; }
    int even_dim() const { return even_; }
    int odd_dim() const { return mdim_ - even_; }
    int parity(int c) const { return c < even_ ? 0 : 1; }
    const std::string& name(int c) const { return names_[c]; }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& n) const;

    // b_i . m_c in module coordinates
    const RatVec& act(int i, int c) const { return action_[i * mdim_ + c]; }
    const SpVec& act_sparse(int i, int c) const { return sparse_[i * mdim_ + c]; }
    // a . m for vectors
    RatVec act_vec(const RatVec& a, const RatVec& m) const;

    // matrix of m -> m . a (row convention) for homogeneous a
    RatMat right_action_matrix(const Element& a) const;

    bool action_equals(const SuperBimodule& o) const;

private:
    SuperAlgebra base_;
    int mdim_;
    int even_;
    std::vector<std::string> names_;
    std::vector<RatVec> action_;
    std::vector<SpVec> sparse_;
};

SuperBimodule regular_bimodule(const SuperAlgebra& J);
SuperBimodule opposite_bimodule(const SuperBimodule& M);

// Super-symmetric graded bilinear map J x J -> M; the datum of an extension.
// Values are stored for pairs i <= j; value(j,i) = (-1)^{|i||j|} value(i,j).
// Diagonal odd values are forced to zero.
class Cocycle {
public:
    Cocycle() = default;
    Cocycle(int jdim, int mdim) : jdim_(jdim), mdim_(mdim) {}

    int jdim() const { return jdim_; }
    int mdim() const { return mdim_; }
    void set(const SuperAlgebra& J, int i, int j, RatVec value);
    RatVec get(const SuperAlgebra& J, int i, int j) const;
    const std::map<std::pair<int, int>, RatVec>& values() const { return v_; }
    bool is_zero() const { return v_.empty(); }

private:
    int jdim_ = 0, mdim_ = 0;
    std::map<std::pair<int, int>, RatVec> v_;  // keys i <= j, nonzero values
};

void validate_cocycle(const SuperAlgebra& J, const SuperBimodule& M, const Cocycle& mu);

// J (+) M with M.M = 0. Module basis names are prefixed with "m_" when they
// collide with base names. The unit is inherited iff the unit acts as the
// identity on M.
SuperAlgebra split_null_extension(const SuperAlgebra& J, const SuperBimodule& M);

// J (+)_mu M: product (a,m)(b,n) = (ab, mu(a,b) + a.n + m.b). Does not check
// that mu is a Jordan cocycle.
SuperAlgebra build_extension(const SuperAlgebra& J, const SuperBimodule& M, const Cocycle& mu);

// Ambient indices of the base (resp. module) basis inside the extension
// built by split_null_extension / build_extension.
std::vector<int> extension_base_columns(const SuperAlgebra& J, const SuperBimodule& M);
std::vector<int> extension_module_columns(const SuperAlgebra& J, const SuperBimodule& M);

// Defining gate: the super-Jordan identity on the split null extension,
// restricted to the quadruples that can be nonzero (all-base quadruples and
// quadruples with exactly one module slot; two or more module slots vanish
// identically because M.M = 0).
IdentityReport check_jordan_bimodule(const SuperAlgebra& J, const SuperBimodule& M);

// Same reduction for J (+)_mu M; equivalent to check_super_jordan on the
// full extension.
IdentityReport check_extension_jordan(const SuperAlgebra& J, const SuperBimodule& M,
                                      const Cocycle& mu);

// sl2 standard-basis relation verifier over a D_t module (t read off the
// base table, t != -1): for the matrices X, Y of the right action of x, y,
//   l_i (XY + YX) = (1+t)/2 (n-2i) l_i,
//   l_i X^2 = (1+t)/2 (-in + i(i-1)) l_{i-1}  (l_0 X^2 = 0),
//   l_i Y^2 = (1+t)/2 l_{i+1}                 (l_n Y^2 = 0),
// plus [X^2,E] = 0 and [Y^2,E] = 0 for E the right action of e1.
IdentityReport check_sl2_relations(const SuperBimodule& M, const RatMat& X, const RatMat& Y,
                                   const std::vector<int>& labels);

// Degree-window quotient modules over build_superform(n, m): basis monomials
// of degree r-1, r with the symmetric-product action, terms outside the
// window dropped. The Jordan gate rejects invalid windows (the plain window
// is a Jordan bimodule precisely for odd r).
SuperBimodule clifford_quotient_bimodule(int n, int m, int r);
// u-twisted window, r even (enforced).
SuperBimodule clifford_quotient_bimodule_u(int n, int m, int r);

}  // namespace jsa
