#include "jsa/superalgebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace jsa {

SpVec to_sparse(const RatVec& v) {
    SpVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!is_zero(v[i])) s.emplace_back(static_cast<int>(i), v[i]);
    return s;
}

RatVec to_dense(const SpVec& v, std::size_t dim) {
    RatVec d(dim);
    for (const auto& [i, c] : v) d[i] = c;
    return d;
}

namespace {

// Dense scratch accumulator with a touched-index list; avoids reallocating
// per quadruple in the identity checks.
struct Accum {
    RatVec val;
    std::vector<int> touched;
    std::vector<char> mark;

    explicit Accum(int dim) : val(dim), mark(dim, 0) {}

    void add(int i, const Rat& c) {
        if (!mark[i]) {
            mark[i] = 1;
            touched.push_back(i);
            val[i] = c;
        } else {
            val[i] += c;
        }
    }

    void clear() {
        for (int i : touched) {
            val[i] = 0;
            mark[i] = 0;
        }
        touched.clear();
    }

    bool zero() const {
        for (int i : touched)
            if (!is_zero(val[i])) return false;
        return true;
    }

    SpVec take_sparse() {
        std::sort(touched.begin(), touched.end());
        SpVec s;
        for (int i : touched)
            if (!is_zero(val[i])) s.emplace_back(i, val[i]);
        clear();
        return s;
    }

    RatVec dense_copy(std::size_t dim) const {
        RatVec d(dim);
        for (int i : touched) d[i] = val[i];
        return d;
    }
};

}  // namespace

SuperAlgebra::SuperAlgebra(std::vector<std::string> even_names, std::vector<std::string> odd_names,
                           std::vector<RatVec> table, std::optional<RatVec> unit)
    : even_(static_cast<int>(even_names.size())), unit_(std::move(unit)) {
    names_ = std::move(even_names);
    names_.insert(names_.end(), odd_names.begin(), odd_names.end());
    dim_ = static_cast<int>(names_.size());
    if (dim_ == 0) throw std::invalid_argument("SuperAlgebra: empty basis");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw std::invalid_argument("SuperAlgebra: empty basis name");
        if (!seen.insert(n).second)
            throw std::invalid_argument("SuperAlgebra: duplicate basis name '" + n + "'");
    }
    if (table.size() != static_cast<std::size_t>(dim_) * dim_)
        throw std::invalid_argument("SuperAlgebra: table size mismatch");
    table_ = std::move(table);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            const RatVec& v = table_[i * dim_ + j];
            if (v.size() != static_cast<std::size_t>(dim_))
                throw std::invalid_argument("SuperAlgebra: table entry size mismatch");
            const int p = (parity(i) + parity(j)) % 2;
            for (int k = 0; k < dim_; ++k)
                if (parity(k) != p && !is_zero(v[k]))
                    throw std::invalid_argument("SuperAlgebra: grading violated at (" + names_[i] +
                                                "," + names_[j] + ") coordinate " + names_[k]);
        }
    sparse_.resize(table_.size());
    for (std::size_t t = 0; t < table_.size(); ++t) sparse_[t] = to_sparse(table_[t]);
    if (unit_) {
        if (unit_->size() != static_cast<std::size_t>(dim_))
            throw std::invalid_argument("SuperAlgebra: unit size mismatch");
        for (int i = 0; i < dim_; ++i) {
            RatVec e(dim_);
            e[i] = 1;
            if (multiply_vec(*this, *unit_, e) != e || multiply_vec(*this, e, *unit_) != e)
                throw std::invalid_argument("SuperAlgebra: declared unit is not a unit");
        }
    }
}

int SuperAlgebra::index_of(const std::string& n) const {
    for (int i = 0; i < dim_; ++i)
        if (names_[i] == n) return i;
    return -1;
}

bool SuperAlgebra::table_equals(const SuperAlgebra& other) const {
    if (dim_ != other.dim_ || even_ != other.even_) return false;
    return table_ == other.table_;
}

SuperAlgebraBuilder::SuperAlgebraBuilder(std::vector<std::string> even_names,
                                         std::vector<std::string> odd_names)
    : even_(static_cast<int>(even_names.size())) {
    names_ = std::move(even_names);
    names_.insert(names_.end(), odd_names.begin(), odd_names.end());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], static_cast<int>(i)).second)
            throw std::invalid_argument("duplicate basis name '" + names_[i] + "'");
    }
    table_.assign(names_.size() * names_.size(), RatVec(names_.size()));
}

int SuperAlgebraBuilder::index_of(const std::string& n) const {
    auto it = index_.find(n);
    if (it == index_.end()) throw std::invalid_argument("unknown basis name '" + n + "'");
    return it->second;
}

void SuperAlgebraBuilder::set(int i, int j, RatVec value) {
    if (value.size() != names_.size()) throw std::invalid_argument("builder set: size mismatch");
    table_[i * names_.size() + j] = std::move(value);
}

void SuperAlgebraBuilder::set(const std::string& left, const std::string& right,
                              const std::vector<std::pair<std::string, Rat>>& value) {
    RatVec v(names_.size());
    for (const auto& [n, c] : value) v[index_of(n)] += c;
    set(index_of(left), index_of(right), std::move(v));
}

void SuperAlgebraBuilder::set_sym(const std::string& left, const std::string& right,
                                  const std::vector<std::pair<std::string, Rat>>& value) {
    set(left, right, value);
    const int i = index_of(left), j = index_of(right);
    if (i == j) return;
    const int sgn = sign_pow(parity(i) * parity(j));
    RatVec v(names_.size());
    for (const auto& [n, c] : value) v[index_of(n)] += sgn * c;
    set(j, i, std::move(v));
}

void SuperAlgebraBuilder::set_unit(const std::vector<std::pair<std::string, Rat>>& value) {
    RatVec v(names_.size());
    for (const auto& [n, c] : value) v[index_of(n)] += c;
    unit_ = std::move(v);
}

SuperAlgebra SuperAlgebraBuilder::build() const {
    std::vector<std::string> even(names_.begin(), names_.begin() + even_);
    std::vector<std::string> odd(names_.begin() + even_, names_.end());
    return SuperAlgebra(std::move(even), std::move(odd), table_, unit_);
}

RatVec multiply_vec(const SuperAlgebra& J, const RatVec& a, const RatVec& b) {
    const int dim = J.dim();
    if (a.size() != static_cast<std::size_t>(dim) || b.size() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("multiply: dimension mismatch");
    RatVec r(dim);
    for (int i = 0; i < dim; ++i) {
        if (is_zero(a[i])) continue;
        for (int j = 0; j < dim; ++j) {
            if (is_zero(b[j])) continue;
            const Rat c = a[i] * b[j];
            for (const auto& [k, v] : J.sparse_entry(i, j)) r[k] += c * v;
        }
    }
    return r;
}

Element multiply(const SuperAlgebra& J, const Element& a, const Element& b) {
    return Element{multiply_vec(J, a.coords, b.coords)};
}

bool is_homogeneous(const SuperAlgebra& J, const RatVec& v) {
    bool even = false, odd = false;
    for (int i = 0; i < J.dim(); ++i)
        if (!is_zero(v[i])) (J.parity(i) ? odd : even) = true;
    return !(even && odd);
}

int element_parity(const SuperAlgebra& J, const RatVec& v) {
    for (int i = 0; i < J.dim(); ++i)
        if (!is_zero(v[i])) return J.parity(i);
    return 0;
}

IdentityReport check_supercommutativity(const SuperAlgebra& J) {
    IdentityReport rep;
    rep.check = "supercommutativity";
    const int dim = J.dim();
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const int sgn = sign_pow(J.parity(i) * J.parity(j));
            const RatVec& ij = J.entry(i, j);
            const RatVec& ji = J.entry(j, i);
            RatVec defect(dim);
            bool bad = false;
            for (int k = 0; k < dim; ++k) {
                defect[k] = ji[k] - sgn * ij[k];
                if (!is_zero(defect[k])) bad = true;
            }
            if (bad) {
                rep.holds = false;
                rep.witness = IdentityWitness{{i, j}, {J.name(i), J.name(j)},
                                              std::move(defect),
                                              "b_j*b_i - (-1)^{|i||j|} b_i*b_j"};
                return rep;
            }
        }
    return rep;
}

namespace {

// s * b_k as a sparse vector, using `scratch` as workspace
SpVec sp_mult_basis(const SuperAlgebra& J, const SpVec& s, int k, Accum& scratch) {
    scratch.clear();
    for (const auto& [t, c] : s)
        for (const auto& [idx, v] : J.sparse_entry(t, k)) scratch.add(idx, c * v);
    return scratch.take_sparse();
}

// sum over entries of a,b of a_t b_u row(t,u), accumulated with weight w
void sp_mult_pair(const SuperAlgebra& J, const SpVec& a, const SpVec& b, const Rat& w, Accum& out) {
    for (const auto& [t, ca] : a)
        for (const auto& [u, cb] : b) {
            const Rat c = w * ca * cb;
            for (const auto& [idx, v] : J.sparse_entry(t, u)) out.add(idx, c * v);
        }
}

void add_sparse(const SpVec& s, int sgn, Accum& out) {
    if (sgn == 1)
        for (const auto& [i, c] : s) out.add(i, c);
    else
        for (const auto& [i, c] : s) out.add(i, -c);
}

// Defect of the linearized super-Jordan identity on basis indices (i,j,k,l),
// accumulated into `defect` (cleared on entry).
void super_jordan_defect(const SuperAlgebra& J, int i, int j, int k, int l, Accum& tmp1,
                         Accum& defect) {
    defect.clear();
    const int pi = J.parity(i), pj = J.parity(j), pk = J.parity(k), pl = J.parity(l);

    // ((a_i a_j) a_k) a_l
    SpVec t = sp_mult_basis(J, J.sparse_entry(i, j), k, tmp1);
    t = sp_mult_basis(J, t, l, tmp1);
    add_sparse(t, 1, defect);
    // ((a_i a_l) a_k) a_j
    t = sp_mult_basis(J, J.sparse_entry(i, l), k, tmp1);
    t = sp_mult_basis(J, t, j, tmp1);
    add_sparse(t, sign_pow(pl * (pk + pj) + pk * pj), defect);
    // ((a_j a_l) a_k) a_i
    t = sp_mult_basis(J, J.sparse_entry(j, l), k, tmp1);
    t = sp_mult_basis(J, t, i, tmp1);
    add_sparse(t, sign_pow(pi * (pj + pk + pl) + pk * pl), defect);
    // -(a_i a_j)(a_k a_l)
    sp_mult_pair(J, J.sparse_entry(i, j), J.sparse_entry(k, l), Rat(-1), defect);
    // -(-1)^{l(k+j)} (a_i a_l)(a_j a_k)
    sp_mult_pair(J, J.sparse_entry(i, l), J.sparse_entry(j, k), Rat(-sign_pow(pl * (pk + pj))),
                 defect);
    // -(-1)^{jk} (a_i a_k)(a_j a_l)
    sp_mult_pair(J, J.sparse_entry(i, k), J.sparse_entry(j, l), Rat(-sign_pow(pj * pk)), defect);
}

}  // namespace

IdentityReport check_super_jordan(const SuperAlgebra& J) {
    IdentityReport rep;
    rep.check = "super_jordan";
    IdentityReport pre = check_supercommutativity(J);
    if (!pre.holds) {
        rep.holds = false;
        rep.precondition_failed = true;
        rep.witness = pre.witness;
        return rep;
    }
    const int dim = J.dim();
    Accum tmp(dim), defect(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                for (int l = 0; l < dim; ++l) {
                    super_jordan_defect(J, i, j, k, l, tmp, defect);
                    if (!defect.zero()) {
                        rep.holds = false;
                        rep.witness = IdentityWitness{
                            {i, j, k, l},
                            {J.name(i), J.name(j), J.name(k), J.name(l)},
                            defect.dense_copy(dim),
                            "linearized super-Jordan identity"};
                        return rep;
                    }
                }
    return rep;
}

IdentityReport check_super_jordan_on(const SuperAlgebra& J,
                                     const std::vector<std::array<int, 4>>& quads) {
    IdentityReport rep;
    rep.check = "super_jordan";
    const int dim = J.dim();
    Accum tmp(dim), defect(dim);
    for (const auto& q : quads) {
        super_jordan_defect(J, q[0], q[1], q[2], q[3], tmp, defect);
        if (!defect.zero()) {
            rep.holds = false;
            rep.witness = IdentityWitness{{q[0], q[1], q[2], q[3]},
                                          {J.name(q[0]), J.name(q[1]), J.name(q[2]), J.name(q[3])},
                                          defect.dense_copy(dim),
                                          "linearized super-Jordan identity"};
            return rep;
        }
    }
    return rep;
}

RatMat right_mult_matrix(const SuperAlgebra& J, const Element& a) {
    const int dim = J.dim();
    if (a.coords.size() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("right_mult_matrix: dimension mismatch");
    if (!is_homogeneous(J, a.coords))
        throw std::invalid_argument("right_mult_matrix: element is not homogeneous");
    RatMat m(dim, dim);
    for (int t = 0; t < dim; ++t) {
        if (is_zero(a.coords[t])) continue;
        for (int i = 0; i < dim; ++i)
            for (const auto& [k, v] : J.sparse_entry(i, t)) m.at(i, k) += a.coords[t] * v;
    }
    return m;
}

IdentityReport check_operator_identity(const SuperAlgebra& J) {
    IdentityReport rep;
    rep.check = "operator_identity";
    IdentityReport pre = check_supercommutativity(J);
    if (!pre.holds) {
        rep.holds = false;
        rep.precondition_failed = true;
        rep.witness = pre.witness;
        return rep;
    }
    const int dim = J.dim();
    std::vector<RatMat> R(dim);
    for (int i = 0; i < dim; ++i) {
        RatVec e(dim);
        e[i] = 1;
        R[i] = right_mult_matrix(J, Element{e});
    }
    auto r_of = [&](const RatVec& v) {
        RatMat m(dim, dim);
        for (int t = 0; t < dim; ++t) {
            if (is_zero(v[t])) continue;
            for (std::size_t z = 0; z < m.a.size(); ++z) m.a[z] += v[t] * R[t].a[z];
        }
        return m;
    };
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                const int pi = J.parity(i), pj = J.parity(j), pk = J.parity(k);
                const int s1 = sign_pow(pi * pj + pi * pk + pj * pk);
                RatMat lhs = R[i] * R[j] * R[k] + Rat(s1) * (R[k] * R[j] * R[i]) +
                             Rat(sign_pow(pj * pk)) * r_of(multiply_vec(J, J.entry(i, k),
                                                                        to_dense({{j, Rat(1)}}, dim)));
                RatMat rhs = R[i] * r_of(J.entry(j, k)) + Rat(s1) * (R[k] * r_of(J.entry(j, i))) +
                             Rat(sign_pow(pi * pj)) * (R[j] * r_of(J.entry(i, k)));
                RatMat defect = lhs - rhs;
                if (!defect.is_zero()) {
                    // first nonzero row of the defect operator, as an element
                    std::size_t row = 0;
                    for (; row < defect.rows; ++row) {
                        bool nz = false;
                        for (std::size_t c = 0; c < defect.cols; ++c)
                            if (!is_zero(defect.at(row, c))) nz = true;
                        if (nz) break;
                    }
                    RatVec d(dim);
                    for (int c = 0; c < dim; ++c) d[c] = defect.at(row, c);
                    rep.holds = false;
                    rep.witness = IdentityWitness{{i, j, k},
                                                  {J.name(i), J.name(j), J.name(k)},
                                                  std::move(d),
                                                  "operator super-Jordan identity, row " +
                                                      J.name(static_cast<int>(row))};
                    return rep;
                }
            }
    return rep;
}

namespace {
std::string fresh_unit_name(const SuperAlgebra& J) {
    std::string n = "1";
    while (J.index_of(n) >= 0) n += "#";
    return n;
}
}  // namespace

SuperAlgebra unital_hull(const SuperAlgebra& J) {
    const int dim = J.dim(), even = J.even_dim();
    const int ndim = dim + 1;
    std::vector<std::string> even_names, odd_names;
    for (int i = 0; i < even; ++i) even_names.push_back(J.name(i));
    even_names.push_back(fresh_unit_name(J));
    for (int i = even; i < dim; ++i) odd_names.push_back(J.name(i));
    // old index -> new index (unit sits at position `even`)
    auto map = [&](int i) { return i < even ? i : i + 1; };
    std::vector<RatVec> table(static_cast<std::size_t>(ndim) * ndim, RatVec(ndim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const RatVec& v = J.entry(i, j);
            RatVec w(ndim);
            for (int k = 0; k < dim; ++k) w[map(k)] = v[k];
            table[map(i) * ndim + map(j)] = std::move(w);
        }
    for (int i = 0; i < ndim; ++i) {
        RatVec e(ndim);
        e[i] = 1;
        table[even * ndim + i] = e;
        table[i * ndim + even] = std::move(e);
    }
    RatVec unit(ndim);
    unit[even] = 1;
    return SuperAlgebra(std::move(even_names), std::move(odd_names), std::move(table), unit);
}

// ---------------------------------------------------------------------------

Subspace Subspace::from_spanning(int ambient_dim, const std::vector<RatVec>& spanning) {
    Subspace s;
    s.ambient_dim = ambient_dim;
    if (spanning.empty()) return s;
    RrefResult rr = rref(RatMat::from_rows(spanning));
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
        RatVec row(ambient_dim);
        for (int c = 0; c < ambient_dim; ++c) row[c] = rr.mat.at(r, c);
        s.basis.push_back(std::move(row));
        s.pivots.push_back(rr.pivots[r]);
    }
    return s;
}

RatVec Subspace::reduce(const RatVec& v) const {
    RatVec r = v;
    for (std::size_t b = 0; b < basis.size(); ++b) {
        const Rat c = r[pivots[b]];
        if (is_zero(c)) continue;
        for (int k = 0; k < ambient_dim; ++k) r[k] -= c * basis[b][k];
    }
    return r;
}

bool Subspace::contains(const RatVec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    for (const RatVec& v : other.basis)
        if (!contains(v)) return false;
    return true;
}

Subspace subspace_sum(const Subspace& u, const Subspace& w) {
    if (u.ambient_dim != w.ambient_dim) throw std::invalid_argument("subspace_sum: ambient mismatch");
    std::vector<RatVec> all = u.basis;
    all.insert(all.end(), w.basis.begin(), w.basis.end());
    return Subspace::from_spanning(u.ambient_dim, all);
}

Subspace subspace_product(const SuperAlgebra& J, const Subspace& u, const Subspace& w) {
    if (u.ambient_dim != J.dim() || w.ambient_dim != J.dim())
        throw std::invalid_argument("subspace_product: ambient mismatch");
    std::vector<RatVec> prods;
    for (const RatVec& x : u.basis)
        for (const RatVec& y : w.basis) prods.push_back(multiply_vec(J, x, y));
    return Subspace::from_spanning(J.dim(), prods);
}

bool is_ideal(const SuperAlgebra& J, const Subspace& u) {
    if (u.ambient_dim != J.dim()) throw std::invalid_argument("is_ideal: ambient mismatch");
    for (int i = 0; i < J.dim(); ++i) {
        RatVec e(J.dim());
        e[i] = 1;
        for (const RatVec& x : u.basis)
            if (!u.contains(multiply_vec(J, e, x))) return false;
    }
    return true;
}

bool is_graded(const SuperAlgebra& J, const Subspace& u) {
    for (const RatVec& v : u.basis) {
        RatVec ev(J.dim()), od(J.dim());
        for (int k = 0; k < J.dim(); ++k) (J.parity(k) ? od[k] : ev[k]) = v[k];
        if (!u.contains(ev) || !u.contains(od)) return false;
    }
    return true;
}

std::vector<Subspace> derived_series(const SuperAlgebra& J, const Subspace& u) {
    if (!is_ideal(J, u)) throw std::invalid_argument("derived_series: input is not an ideal");
    std::vector<Subspace> series{u};
    while (true) {
        const Subspace& last = series.back();
        Subspace next = subspace_product(J, last, last);
        if (next.dim() == last.dim()) break;
        series.push_back(std::move(next));
        if (series.back().dim() == 0) break;
    }
    return series;
}

bool is_solvable(const SuperAlgebra& J, const Subspace& u) {
    return derived_series(J, u).back().dim() == 0;
}

RatVec mat_apply(const RatMat& m, const RatVec& v) {
    if (v.size() != m.cols) throw std::invalid_argument("apply: dimension mismatch");
    RatVec r(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            if (!is_zero(m.at(i, j)) && !is_zero(v[j])) r[i] += m.at(i, j) * v[j];
    return r;
}

QuotientResult quotient(const SuperAlgebra& J, const Subspace& n) {
    if (n.ambient_dim != J.dim()) throw std::invalid_argument("quotient: ambient mismatch");
    if (!is_ideal(J, n)) throw std::invalid_argument("quotient: N is not an ideal");
    if (!is_graded(J, n)) throw std::invalid_argument("quotient: N is not graded");
    const int dim = J.dim();
    std::vector<bool> is_pivot(dim, false);
    for (std::size_t p : n.pivots) is_pivot[p] = true;
    std::vector<int> comp;
    for (int c = 0; c < dim; ++c)
        if (!is_pivot[c]) comp.push_back(c);
    const int qdim = static_cast<int>(comp.size());

    RatMat proj(qdim, dim);
    for (int t = 0; t < dim; ++t) {
        RatVec e(dim);
        e[t] = 1;
        RatVec r = n.reduce(e);
        for (int c = 0; c < qdim; ++c) proj.at(c, t) = r[comp[c]];
    }

    std::vector<std::string> even_names, odd_names;
    for (int c : comp) (J.parity(c) ? odd_names : even_names).push_back(J.name(c));

    std::vector<RatVec> table(static_cast<std::size_t>(qdim) * qdim);
    for (int a = 0; a < qdim; ++a)
        for (int b = 0; b < qdim; ++b) {
            RatVec ea(dim), eb(dim);
            ea[comp[a]] = 1;
            eb[comp[b]] = 1;
            table[a * qdim + b] = mat_apply(proj, multiply_vec(J, ea, eb));
        }
    std::optional<RatVec> unit;
    if (J.unit()) unit = mat_apply(proj, *J.unit());
    SuperAlgebra q(std::move(even_names), std::move(odd_names), std::move(table), std::move(unit));
    return QuotientResult{std::move(q), std::move(proj), std::move(comp)};
}

// ---------------------------------------------------------------------------

PeirceResult peirce_decomposition(const SuperAlgebra& J, const std::vector<Element>& idem) {
    const int dim = J.dim();
    if (!J.unit()) throw std::invalid_argument("peirce: algebra has no unit");
    if (idem.empty()) throw std::invalid_argument("peirce: no idempotents given");
    RatVec sum(dim);
    for (const Element& e : idem) {
        if (e.coords.size() != static_cast<std::size_t>(dim))
            throw std::invalid_argument("peirce: dimension mismatch");
        if (multiply_vec(J, e.coords, e.coords) != e.coords)
            throw std::invalid_argument("peirce: input is not idempotent");
        sum = add(sum, e.coords);
    }
    const std::size_t k = idem.size();
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (!is_zero_vec(multiply_vec(J, idem[i].coords, idem[j].coords)))
                throw std::invalid_argument("peirce: idempotents are not orthogonal");
    if (sum != *J.unit()) throw std::invalid_argument("peirce: idempotents do not sum to the unit");

    auto transpose = [&](const RatMat& m) {
        RatMat t(m.cols, m.rows);
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
        return t;
    };

    std::vector<RatMat> R;
    for (const Element& e : idem) R.push_back(right_mult_matrix(J, e));
    const Rat half(1, 2);

    PeirceResult res;
    res.report.check = "peirce";
    int total = 0;
    for (std::size_t i = 0; i < k; ++i) {
        RatMat m = R[i] - RatMat::identity(dim);  // x e_i = x
        res.components[{(int)i, (int)i}] =
            Subspace::from_spanning(dim, kernel_basis(transpose(m)));
        total += res.components[{(int)i, (int)i}].dim();
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            RatMat mi = R[i] - half * RatMat::identity(dim);
            RatMat mj = R[j] - half * RatMat::identity(dim);
            RatMat stacked(2 * dim, dim);  // rows of (mi^T) then (mj^T)
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c) {
                    stacked.at(r, c) = mi.at(c, r);
                    stacked.at(dim + r, c) = mj.at(c, r);
                }
            res.components[{(int)i, (int)j}] = Subspace::from_spanning(dim, kernel_basis(stacked));
            total += res.components[{(int)i, (int)j}].dim();
        }

    auto fail = [&](const std::string& what) {
        res.report.holds = false;
        res.report.witness = IdentityWitness{{}, {}, RatVec(dim), what};
    };
    if (total != dim) {
        fail("Peirce components do not span: dimension sum " + std::to_string(total) + " != " +
             std::to_string(dim));
        return res;
    }
    auto comp = [&](std::size_t i, std::size_t j) -> const Subspace& {
        return res.components.at({(int)std::min(i, j), (int)std::max(i, j)});
    };
    // displayed multiplication relations
    for (std::size_t i = 0; i < k && res.report.holds; ++i)
        for (std::size_t j = i; j < k && res.report.holds; ++j)
            for (std::size_t p = 0; p < k && res.report.holds; ++p)
                for (std::size_t q = p; q < k && res.report.holds; ++q) {
                    if (std::make_pair(i, j) > std::make_pair(p, q)) continue;
                    Subspace prod = subspace_product(J, comp(i, j), comp(p, q));
                    std::string lbl = "J_" + std::to_string(i) + std::to_string(j) + " * J_" +
                                      std::to_string(p) + std::to_string(q);
                    if (i == j && p == q) {
                        if (i == p) {
                            if (!comp(i, i).contains(prod)) fail(lbl + " not in J_ii");
                        } else if (prod.dim() != 0) {
                            fail(lbl + " nonzero");
                        }
                    } else if (i == j) {  // J_ii * J_pq, p<q
                        if (i == p || i == q) {
                            if (!comp(p, q).contains(prod)) fail(lbl + " not in J_pq");
                        } else if (prod.dim() != 0) {
                            fail(lbl + " nonzero");
                        }
                    } else if (p == q) {  // J_ij * J_pp
                        if (p == i || p == j) {
                            if (!comp(i, j).contains(prod)) fail(lbl + " not in J_ij");
                        } else if (prod.dim() != 0) {
                            fail(lbl + " nonzero");
                        }
                    } else if (i == p && j == q) {  // J_ij^2 in J_ii + J_jj
                        if (!subspace_sum(comp(i, i), comp(j, j)).contains(prod))
                            fail(lbl + " not in J_ii + J_jj");
                    } else {
                        // shared index -> lands in the connecting component; disjoint -> zero
                        std::vector<std::size_t> shared, rest;
                        for (std::size_t t : {i, j})
                            if (t == p || t == q) shared.push_back(t);
                        if (shared.empty()) {
                            if (prod.dim() != 0) fail(lbl + " nonzero");
                        } else {
                            std::size_t a = (i == shared[0]) ? j : i;
                            std::size_t b = (p == shared[0]) ? q : p;
                            if (!comp(a, b).contains(prod)) fail(lbl + " not in connecting component");
                        }
                    }
                }
    return res;
}

Element lift_idempotent(const SuperAlgebra& J, const Element& e, const Subspace& n) {
    const int dim = J.dim();
    if (e.coords.size() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("lift_idempotent: dimension mismatch");
    if (!is_graded(J, n) || !is_ideal(J, n))
        throw std::invalid_argument("lift_idempotent: N must be a graded ideal");
    if (subspace_product(J, n, n).dim() != 0)
        throw std::invalid_argument("lift_idempotent: N^2 != 0");
    if (element_parity(J, e.coords) != 0 || !is_homogeneous(J, e.coords))
        throw std::invalid_argument("lift_idempotent: e must be even");
    RatVec e2 = multiply_vec(J, e.coords, e.coords);
    if (!n.contains(sub(e2, e.coords)))
        throw std::invalid_argument("lift_idempotent: e^2 - e not in N");
    RatVec e3 = multiply_vec(J, e2, e.coords);
    RatVec f = sub(scale(Rat(3), e2), scale(Rat(2), e3));
    return Element{std::move(f)};
}

}  // namespace jsa
