#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "jsa/bimodule.hpp"

namespace jsa {

// Coordinate space of super-symmetric graded pair maps: one variable per
// (pair i <= j, module coordinate of parity |i|+|j|), odd diagonals excluded.
class PairSpace {
public:
    PairSpace(const SuperAlgebra& J, const SuperBimodule& M);

    struct Entry {
        int i, j, c;
    };
    int total() const { return static_cast<int>(entries_.size()); }
    int var(int i, int j, int c) const;  // -1 when not a variable
    const Entry& entry(int v) const { return entries_[v]; }
    std::string label(int v) const;

    RatVec flatten(const Cocycle& mu) const;
    Cocycle unflatten(const RatVec& x) const;

private:
    const SuperAlgebra* J_;
    const SuperBimodule* M_;
    std::vector<Entry> entries_;
    std::vector<int> index_;  // (pair_rank(i,j) * mdim + c) -> var
    int pair_rank(int i, int j) const { return i * J_->dim() + j; }
};

// Graded linear maps J -> M: one variable per (basis i, module coordinate of
// parity |i|). A map is stored as one module vector per basis element.
using GradedMap = std::vector<RatVec>;

class MapSpace {
public:
    MapSpace(const SuperAlgebra& J, const SuperBimodule& M);
    struct Entry {
        int i, c;
    };
    int total() const { return static_cast<int>(entries_.size()); }
    int var(int i, int c) const;
    const Entry& entry(int v) const { return entries_[v]; }
    std::string label(int v) const;
    GradedMap unflatten(const RatVec& x) const;
    RatVec flatten(const GradedMap& f) const;

private:
    const SuperAlgebra* J_;
    const SuperBimodule* M_;
    std::vector<Entry> entries_;
    std::vector<int> index_;
};

// delta f (a, b) = a.f(b) + f(a).b - f(ab), extended super-symmetrically.
Cocycle coboundary(const SuperAlgebra& J, const SuperBimodule& M, const GradedMap& f);

// Matrix of the coboundary operator: rows indexed by PairSpace, columns by
// MapSpace; the column space is B^2.
RatMat coboundary_matrix(const SuperAlgebra& J, const SuperBimodule& M);

// Basis of Z^2: kernel of the linear conditions obtained by evaluating the
// super-Jordan identity on all base-algebra quadruples inside J (+)_mu M and
// reading off the module component (terms quadratic in mu vanish, M.M = 0).
std::vector<Cocycle> cocycle_space(const SuperAlgebra& J, const SuperBimodule& M);

struct H2Dims {
    std::size_t z2 = 0, b2 = 0, h2 = 0;
};
H2Dims h2_dimensions(const SuperAlgebra& J, const SuperBimodule& M);

// rank of the Z^2 condition system (dim Z^2 = PairSpace total - this rank)
std::size_t cocycle_condition_rank(const SuperAlgebra& J, const SuperBimodule& M);

// row-echelon collector for streaming exact rank/kernel computations
class Echelon {
public:
    explicit Echelon(std::size_t cols) : cols_(cols) {}
    // reduces row against the stored basis; keeps it when nonzero remains
    void insert(RatVec row);
    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    // true iff row is a linear combination of the stored rows
    bool in_rowspace(const RatVec& row) const;
    RatMat to_matrix() const;

private:
    std::size_t cols_;
    std::vector<std::size_t> pivots_;  // increasing
    std::vector<RatVec> rows_;
};

// ---------------------------------------------------------------------------
// Splittings of square-zero extensions

struct Splitting {
    // per base basis element: the module part of its lift (parity-matched)
    std::vector<RatVec> corrections;
};

struct Obstruction {
    std::vector<std::string> row_labels;  // labels of the assembled system rows
    std::vector<std::string> col_labels;  // labels of the unknowns
    RatMat system;                        // the assembled linear system A
    RatVec rhs;                           // right-hand side b
    RatVec multipliers;                   // y with y^T A = 0 and y^T b = 1
    std::size_t inconsistent_row = 0;     // index of the inconsistent rref row
};

using SplittingResult = std::variant<Splitting, Obstruction>;

bool splitting_feasible(const SplittingResult& r);

// Decomposition of an extension E with graded square-zero ideal N into
// quotient algebra, N as a bimodule over it, a section, and the cocycle.
struct ExtensionParts {
    SuperAlgebra base;
    SuperBimodule mod;
    Cocycle mu;
    std::vector<int> complement_cols;  // ambient coordinates of the default section
    std::vector<RatVec> section;       // section[c] in E lifting base basis c
    std::vector<RatVec> nbasis;        // echelon basis of N = module basis
    RatMat to_quotient;                // qdim x dim(E)
};

ExtensionParts decompose_extension(const SuperAlgebra& E, const Subspace& N,
                                   const std::optional<std::vector<RatVec>>& section = std::nullopt);

Cocycle extract_cocycle(const SuperAlgebra& E, const Subspace& N,
                        const std::optional<std::vector<RatVec>>& section = std::nullopt);

// Global linear splitting system: find corrections c with mu + delta c = 0.
SplittingResult solve_splitting_cocycle(const SuperAlgebra& J, const SuperBimodule& M,
                                        const Cocycle& mu);
SplittingResult solve_splitting(const SuperAlgebra& E, const Subspace& N);

// Direct verification that the corrected lifts span a subalgebra of E with
// the quotient's structure constants and intersect N trivially.
IdentityReport verify_splitting(const SuperAlgebra& E, const Subspace& N, const Splitting& s);

}  // namespace jsa
