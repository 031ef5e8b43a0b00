#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jsa/linalg.hpp"

namespace jsa {

// Sparse coordinate vector: (index, coefficient) pairs, sorted by index,
// coefficients nonzero.
using SpVec = std::vector<std::pair<int, Rat>>;

SpVec to_sparse(const RatVec& v);
RatVec to_dense(const SpVec& v, std::size_t dim);

struct Element {
    RatVec coords;
};

struct IdentityWitness {
    std::vector<int> indices;         // basis indices of the first failing tuple
    std::vector<std::string> labels;  // their names
    RatVec defect;                    // the nonzero defect
    std::string relation;             // which equation failed
};

struct IdentityReport {
    bool holds = true;
    bool precondition_failed = false;
    std::string check;
    std::optional<IdentityWitness> witness;
};

// Z2-graded algebra given by structure constants over Q. Basis order is the
// even basis followed by the odd basis. Immutable after construction.
class SuperAlgebra {
public:
    SuperAlgebra(std::vector<std::string> even_names, std::vector<std::string> odd_names,
                 std::vector<RatVec> table, std::optional<RatVec> unit);

    int dim() const { return dim_; }
    int even_dim() const { return even_; }
    int odd_dim() const { return dim_ - even_; }
    int parity(int i) const { return i < even_ ? 0 : 1; }
    const std::string& name(int i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    int index_of(const std::string& n) const;  // -1 when absent

    const RatVec& entry(int i, int j) const { return table_[i * dim_ + j]; }
    const SpVec& sparse_entry(int i, int j) const { return sparse_[i * dim_ + j]; }
    const std::optional<RatVec>& unit() const { return unit_; }

    bool table_equals(const SuperAlgebra& other) const;

private:
    int dim_;
    int even_;
    std::vector<std::string> names_;
    std::vector<RatVec> table_;
    std::vector<SpVec> sparse_;
    std::optional<RatVec> unit_;
};

// Incremental table builder used by the catalog constructors and the loader.
class SuperAlgebraBuilder {
public:
    SuperAlgebraBuilder(std::vector<std::string> even_names, std::vector<std::string> odd_names);

    int index_of(const std::string& n) const;
    int dim() const { return static_cast<int>(names_.size()); }
    int parity(int i) const { return i < even_ ? 0 : 1; }

    // Sets b_i * b_j; overwrites any previous value.
    void set(const std::string& left, const std::string& right,
             const std::vector<std::pair<std::string, Rat>>& value);
    void set(int i, int j, RatVec value);
    // Sets b_i * b_j and fills b_j * b_i with the supercommutativity sign.
    void set_sym(const std::string& left, const std::string& right,
                 const std::vector<std::pair<std::string, Rat>>& value);

    void set_unit(const std::vector<std::pair<std::string, Rat>>& value);

    SuperAlgebra build() const;

private:
    int even_;
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::vector<RatVec> table_;
    std::optional<RatVec> unit_;
};

Element multiply(const SuperAlgebra& J, const Element& a, const Element& b);
RatVec multiply_vec(const SuperAlgebra& J, const RatVec& a, const RatVec& b);

bool is_homogeneous(const SuperAlgebra& J, const RatVec& v);
// parity of a homogeneous element; 0 for the zero element
int element_parity(const SuperAlgebra& J, const RatVec& v);

IdentityReport check_supercommutativity(const SuperAlgebra& J);

// Brute-force evaluation of the linearized super-Jordan identity on all
// dim^4 homogeneous basis quadruples. Requires supercommutativity; a failing
// precondition is reported with precondition_failed set.
IdentityReport check_super_jordan(const SuperAlgebra& J);

// Same identity evaluated only on the given index quadruples (used by the
// bimodule gate, which restricts to the quadruples that can be nonzero).
IdentityReport check_super_jordan_on(const SuperAlgebra& J,
                                     const std::vector<std::array<int, 4>>& quads);

// Matrix of x -> x*a in row convention: (x*a) = x * R_a, R_a[i][j] = (b_i*a)_j.
// a must be homogeneous.
RatMat right_mult_matrix(const SuperAlgebra& J, const Element& a);

// Operator form of the super-Jordan identity on all homogeneous basis triples.
IdentityReport check_operator_identity(const SuperAlgebra& J);

// J # F1: appends one even basis element acting as two-sided unit.
SuperAlgebra unital_hull(const SuperAlgebra& J);

// ---------------------------------------------------------------------------
// Subspaces

struct Subspace {
    int ambient_dim = 0;
    std::vector<RatVec> basis;        // rref-canonical, nonzero rows
    std::vector<std::size_t> pivots;  // pivot column of each basis row

    static Subspace from_spanning(int ambient_dim, const std::vector<RatVec>& spanning);
    int dim() const { return static_cast<int>(basis.size()); }
    bool contains(const RatVec& v) const;
    bool contains(const Subspace& other) const;
    // v reduced modulo the subspace (pivot coordinates eliminated)
    RatVec reduce(const RatVec& v) const;
    bool operator==(const Subspace& o) const { return ambient_dim == o.ambient_dim && basis == o.basis; }
};

Subspace subspace_sum(const Subspace& u, const Subspace& w);
Subspace subspace_product(const SuperAlgebra& J, const Subspace& u, const Subspace& w);
bool is_ideal(const SuperAlgebra& J, const Subspace& u);
bool is_graded(const SuperAlgebra& J, const Subspace& u);
std::vector<Subspace> derived_series(const SuperAlgebra& J, const Subspace& u);
bool is_solvable(const SuperAlgebra& J, const Subspace& u);

struct QuotientResult {
    SuperAlgebra algebra;
    RatMat projection;                // qdim x dim(J); quotient coords = projection * v
    std::vector<int> complement_cols; // ambient indices spanning the complement
};

// J / N for a graded ideal N. The complement is spanned by the ambient
// coordinate directions that are not pivots of N's echelon basis.
QuotientResult quotient(const SuperAlgebra& J, const Subspace& n);

RatVec mat_apply(const RatMat& m, const RatVec& v);  // column convention: (m*v)_i

// ---------------------------------------------------------------------------
// Peirce decomposition

struct PeirceResult {
    // components[{i,i}] = J_ii, components[{i,j}] (i<j) = J_ij
    std::map<std::pair<int, int>, Subspace> components;
    IdentityReport report;
};

// Requires pairwise orthogonal idempotents summing to the unit of J.
PeirceResult peirce_decomposition(const SuperAlgebra& J, const std::vector<Element>& idempotents);

// One-step lifting f = 3e^2 - 2e^3 for even e with e^2 - e in N, N^2 = 0.
Element lift_idempotent(const SuperAlgebra& J, const Element& e, const Subspace& n);

}  // namespace jsa
