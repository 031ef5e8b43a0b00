#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jsa/rat.hpp"

namespace jsa {

// Dense row-major matrix over Q. Values are immutable once a matrix leaves
// the function that built it; all operations below return fresh matrices.
struct RatMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rat> a;  // rows*cols entries

    RatMat() = default;
    RatMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static RatMat identity(std::size_t n);
    static RatMat from_rows(const std::vector<RatVec>& rows);

    bool operator==(const RatMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
    bool is_zero() const;
};

RatMat operator*(const RatMat& x, const RatMat& y);
RatMat operator+(const RatMat& x, const RatMat& y);
RatMat operator-(const RatMat& x, const RatMat& y);
RatMat operator*(const Rat& c, const RatMat& x);

// x * m with x a row vector of length m.rows.
RatVec row_times_mat(const RatVec& x, const RatMat& m);

struct RrefResult {
    RatMat mat;
    std::vector<std::size_t> pivots;  // strictly increasing pivot columns
};

// Reduced row-echelon form with positional pivoting: scanning columns left to
// right, the first row (in order) with a nonzero entry becomes the pivot row.
RrefResult rref(const RatMat& m);

std::size_t rank(const RatMat& m);

struct SolveResult {
    std::optional<RatVec> solution;              // free variables pinned to 0
    std::optional<std::size_t> inconsistent_row; // row index in rref([A|b]) when infeasible
};

// Particular solution of a*x = b, or the index of an inconsistent reduced row.
SolveResult solve(const RatMat& a, const RatVec& b);

// Basis of {v : a*v = 0} from the rref free-column parameterization, one
// vector per free column in column order.
std::vector<RatVec> kernel_basis(const RatMat& a);

// Farkas-style infeasibility certificate: y with y^T a = 0 and y^T b = 1.
// Present exactly when a*x = b is infeasible. Computed deterministically by
// solving the transposed system, so repeated runs give identical output.
std::optional<RatVec> infeasibility_certificate(const RatMat& a, const RatVec& b);

RatVec zero_vec(std::size_t n);
bool is_zero_vec(const RatVec& v);
RatVec add(const RatVec& x, const RatVec& y);
RatVec sub(const RatVec& x, const RatVec& y);
RatVec scale(const Rat& c, const RatVec& x);
Rat dot(const RatVec& x, const RatVec& y);

}  // namespace jsa
