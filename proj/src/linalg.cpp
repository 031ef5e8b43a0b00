#include "jsa/linalg.hpp"

#include <stdexcept>

namespace jsa {

RatMat RatMat::identity(std::size_t n) {
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMat RatMat::from_rows(const std::vector<RatVec>& rows) {
    RatMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols) throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool RatMat::is_zero() const {
    for (const Rat& x : a)
        if (!jsa::is_zero(x)) return false;
    return true;
}

RatMat operator*(const RatMat& x, const RatMat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matmul: dimension mismatch");
    RatMat r(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            const Rat& c = x.at(i, k);
            if (is_zero(c)) continue;
            for (std::size_t j = 0; j < y.cols; ++j) {
                const Rat& v = y.at(k, j);
                if (!is_zero(v)) r.at(i, j) += c * v;
            }
        }
    return r;
}

RatMat operator+(const RatMat& x, const RatMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matadd: dimension mismatch");
    RatMat r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
    return r;
}

RatMat operator-(const RatMat& x, const RatMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matsub: dimension mismatch");
    RatMat r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
    return r;
}

RatMat operator*(const Rat& c, const RatMat& x) {
    RatMat r(x.rows, x.cols);
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = c * x.a[i];
    return r;
}

RatVec row_times_mat(const RatVec& x, const RatMat& m) {
    if (x.size() != m.rows) throw std::invalid_argument("row_times_mat: dimension mismatch");
    RatVec r(m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) {
        if (is_zero(x[i])) continue;
        for (std::size_t j = 0; j < m.cols; ++j) {
            const Rat& v = m.at(i, j);
            if (!is_zero(v)) r[j] += x[i] * v;
        }
    }
    return r;
}

RrefResult rref(const RatMat& m) {
    RrefResult res;
    res.mat = m;
    RatMat& r = res.mat;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols && lead < r.rows; ++col) {
        std::size_t piv = lead;
        while (piv < r.rows && is_zero(r.at(piv, col))) ++piv;
        if (piv == r.rows) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < r.cols; ++j) std::swap(r.at(piv, j), r.at(lead, j));
        Rat inv = 1 / r.at(lead, col);
        for (std::size_t j = col; j < r.cols; ++j) r.at(lead, j) *= inv;
        for (std::size_t i = 0; i < r.rows; ++i) {
            if (i == lead) continue;
            const Rat c = r.at(i, col);
            if (is_zero(c)) continue;
            for (std::size_t j = col; j < r.cols; ++j) r.at(i, j) -= c * r.at(lead, j);
        }
        res.pivots.push_back(col);
        ++lead;
    }
    return res;
}

std::size_t rank(const RatMat& m) { return rref(m).pivots.size(); }

SolveResult solve(const RatMat& a, const RatVec& b) {
    if (b.size() != a.rows) throw std::invalid_argument("solve: dimension mismatch");
    RatMat aug(a.rows, a.cols + 1);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    RrefResult rr = rref(aug);
    SolveResult out;
    for (std::size_t p = 0; p < rr.pivots.size(); ++p) {
        if (rr.pivots[p] == a.cols) {
            out.inconsistent_row = p;  // pivot in the constant column
            return out;
        }
    }
    RatVec x(a.cols);
    for (std::size_t p = 0; p < rr.pivots.size(); ++p) x[rr.pivots[p]] = rr.mat.at(p, a.cols);
    out.solution = std::move(x);
    return out;
}

std::vector<RatVec> kernel_basis(const RatMat& a) {
    RrefResult rr = rref(a);
    std::vector<bool> is_pivot(a.cols, false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < a.cols; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(a.cols);
        v[f] = 1;
        for (std::size_t p = 0; p < rr.pivots.size(); ++p) v[rr.pivots[p]] = -rr.mat.at(p, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RatVec> infeasibility_certificate(const RatMat& a, const RatVec& b) {
    if (b.size() != a.rows) throw std::invalid_argument("infeasibility_certificate: dimension mismatch");
    // y^T [A | b] = [0 | 1]  <=>  [A^T ; b^T] y = (0,...,0,1)
    RatMat t(a.cols + 1, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
        t.at(a.cols, i) = b[i];
    }
    RatVec rhs(a.cols + 1);
    rhs[a.cols] = 1;
    SolveResult s = solve(t, rhs);
    return s.solution;
}

RatVec zero_vec(std::size_t n) { return RatVec(n); }

bool is_zero_vec(const RatVec& v) {
    for (const Rat& x : v)
        if (!is_zero(x)) return false;
    return true;
}

RatVec add(const RatVec& x, const RatVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("vec add: dimension mismatch");
    RatVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

RatVec sub(const RatVec& x, const RatVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("vec sub: dimension mismatch");
    RatVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

RatVec scale(const Rat& c, const RatVec& x) {
    RatVec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = c * x[i];
    return r;
}

Rat dot(const RatVec& x, const RatVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat r = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!is_zero(x[i]) && !is_zero(y[i])) r += x[i] * y[i];
    return r;
}

}  // namespace jsa
