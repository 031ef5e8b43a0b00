#include "jsa/cohomology.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace jsa {

PairSpace::PairSpace(const SuperAlgebra& J, const SuperBimodule& M) : J_(&J), M_(&M) {
    index_.assign(static_cast<std::size_t>(J.dim()) * J.dim() * M.mdim(), -1);
    for (int i = 0; i < J.dim(); ++i)
        for (int j = i; j < J.dim(); ++j) {
            if (i == j && J.parity(i) == 1) continue;  // odd squares vanish
            const int p = (J.parity(i) + J.parity(j)) % 2;
            for (int c = 0; c < M.mdim(); ++c) {
                if (M.parity(c) != p) continue;
                index_[static_cast<std::size_t>(pair_rank(i, j)) * M.mdim() + c] =
                    static_cast<int>(entries_.size());
                entries_.push_back({i, j, c});
            }
        }
}

int PairSpace::var(int i, int j, int c) const {
    if (i > j) std::swap(i, j);
    return index_[static_cast<std::size_t>(pair_rank(i, j)) * M_->mdim() + c];
}

std::string PairSpace::label(int v) const {
    const Entry& e = entries_[v];
    return "mu(" + J_->name(e.i) + "," + J_->name(e.j) + ")[" + M_->name(e.c) + "]";
}

RatVec PairSpace::flatten(const Cocycle& mu) const {
    RatVec x(total());
    for (const auto& [key, val] : mu.values())
        for (int c = 0; c < M_->mdim(); ++c) {
            if (is_zero(val[c])) continue;
            const int v = var(key.first, key.second, c);
            if (v < 0) throw std::invalid_argument("PairSpace::flatten: cocycle violates grading");
            x[v] = val[c];
        }
    return x;
}

Cocycle PairSpace::unflatten(const RatVec& x) const {
    Cocycle mu(J_->dim(), M_->mdim());
    for (int i = 0; i < J_->dim(); ++i)
        for (int j = i; j < J_->dim(); ++j) {
            RatVec val(M_->mdim());
            bool nz = false;
            for (int c = 0; c < M_->mdim(); ++c) {
                const int v = var(i, j, c);
                if (v >= 0 && !is_zero(x[v])) {
                    val[c] = x[v];
                    nz = true;
                }
            }
            if (nz) mu.set(*J_, i, j, std::move(val));
        }
    return mu;
}

MapSpace::MapSpace(const SuperAlgebra& J, const SuperBimodule& M) : J_(&J), M_(&M) {
    index_.assign(static_cast<std::size_t>(J.dim()) * M.mdim(), -1);
    for (int i = 0; i < J.dim(); ++i)
        for (int c = 0; c < M.mdim(); ++c) {
            if (M.parity(c) != J.parity(i)) continue;
            index_[static_cast<std::size_t>(i) * M.mdim() + c] = static_cast<int>(entries_.size());
            entries_.push_back({i, c});
        }
}

int MapSpace::var(int i, int c) const {
    return index_[static_cast<std::size_t>(i) * M_->mdim() + c];
}

std::string MapSpace::label(int v) const {
    const Entry& e = entries_[v];
    return "f(" + J_->name(e.i) + ")[" + M_->name(e.c) + "]";
}

GradedMap MapSpace::unflatten(const RatVec& x) const {
    GradedMap f(J_->dim(), RatVec(M_->mdim()));
    for (int v = 0; v < total(); ++v) f[entries_[v].i][entries_[v].c] = x[v];
    return f;
}

RatVec MapSpace::flatten(const GradedMap& f) const {
    RatVec x(total());
    for (int v = 0; v < total(); ++v) x[v] = f[entries_[v].i][entries_[v].c];
    return x;
}

Cocycle coboundary(const SuperAlgebra& J, const SuperBimodule& M, const GradedMap& f) {
    if (f.size() != static_cast<std::size_t>(J.dim()))
        throw std::invalid_argument("coboundary: map size mismatch");
    for (int i = 0; i < J.dim(); ++i)
        for (int c = 0; c < M.mdim(); ++c)
            if (!is_zero(f[i][c]) && M.parity(c) != J.parity(i))
                throw std::invalid_argument("coboundary: map is not parity-preserving");
    Cocycle mu(J.dim(), M.mdim());
    RatVec ei(J.dim()), ej(J.dim());
    for (int i = 0; i < J.dim(); ++i)
        for (int j = i; j < J.dim(); ++j) {
            std::fill(ei.begin(), ei.end(), Rat(0));
            std::fill(ej.begin(), ej.end(), Rat(0));
            ei[i] = 1;
            ej[j] = 1;
            RatVec val = M.act_vec(ei, f[j]);
            val = add(val, scale(Rat(sign_pow(J.parity(i) * J.parity(j))), M.act_vec(ej, f[i])));
            const RatVec& prod = J.entry(i, j);
            for (int t = 0; t < J.dim(); ++t)
                if (!is_zero(prod[t])) val = sub(val, scale(prod[t], f[t]));
            if (i == j && J.parity(i) == 1) {
                if (!is_zero_vec(val))
                    throw std::logic_error("coboundary: nonzero value on odd diagonal");
                continue;
            }
            if (!is_zero_vec(val)) mu.set(J, i, j, std::move(val));
        }
    return mu;
}

RatMat coboundary_matrix(const SuperAlgebra& J, const SuperBimodule& M) {
    PairSpace ps(J, M);
    MapSpace ms(J, M);
    RatMat A(ps.total(), ms.total());
    GradedMap f(J.dim(), RatVec(M.mdim()));
    for (int v = 0; v < ms.total(); ++v) {
        const auto& e = ms.entry(v);
        f[e.i][e.c] = 1;
        RatVec col = ps.flatten(coboundary(J, M, f));
        f[e.i][e.c] = 0;
        for (int r = 0; r < ps.total(); ++r)
            if (!is_zero(col[r])) A.at(r, v) = col[r];
    }
    return A;
}

// ---------------------------------------------------------------------------

void Echelon::insert(RatVec row) {
    if (row.size() != cols_) throw std::invalid_argument("Echelon::insert: size mismatch");
    std::size_t lead = 0;
    for (std::size_t b = 0; b < rows_.size(); ++b) {
        while (lead < cols_ && is_zero(row[lead])) ++lead;
        if (lead == cols_) return;
        if (pivots_[b] < lead) continue;
        if (pivots_[b] > lead) {
            // new pivot strictly before the remaining rows
            Rat inv = 1 / row[lead];
            for (std::size_t k = lead; k < cols_; ++k) row[k] *= inv;
            rows_.insert(rows_.begin() + b, std::move(row));
            pivots_.insert(pivots_.begin() + b, lead);
            return;
        }
        const Rat c = row[lead];
        for (std::size_t k = lead; k < cols_; ++k) row[k] -= c * rows_[b][k];
    }
    while (lead < cols_ && is_zero(row[lead])) ++lead;
    if (lead == cols_) return;
    Rat inv = 1 / row[lead];
    for (std::size_t k = lead; k < cols_; ++k) row[k] *= inv;
    rows_.push_back(std::move(row));
    pivots_.push_back(lead);
}

bool Echelon::in_rowspace(const RatVec& row) const {
    RatVec r = row;
    for (std::size_t b = 0; b < rows_.size(); ++b) {
        const Rat c = r[pivots_[b]];
        if (is_zero(c)) continue;
        for (std::size_t k = pivots_[b]; k < cols_; ++k) r[k] -= c * rows_[b][k];
    }
    return is_zero_vec(r);
}

RatMat Echelon::to_matrix() const { return RatMat::from_rows(rows_); }

// ---------------------------------------------------------------------------
// Symbolic evaluation of the super-Jordan identity with an indeterminate
// cocycle. Elements of J (+)_mu M are carried as a concrete J-part plus a
// module part whose coordinates are linear forms in the mu variables.

namespace {

using LinForm = std::vector<std::pair<int, Rat>>;  // sorted by variable

void lf_add(LinForm& dst, const LinForm& src, const Rat& w) {
    if (src.empty() || is_zero(w)) return;
    LinForm out;
    out.reserve(dst.size() + src.size());
    std::size_t a = 0, b = 0;
    while (a < dst.size() || b < src.size()) {
        if (b == src.size() || (a < dst.size() && dst[a].first < src[b].first)) {
            out.push_back(dst[a++]);
        } else if (a == dst.size() || src[b].first < dst[a].first) {
            out.emplace_back(src[b].first, w * src[b].second);
            ++b;
        } else {
            Rat c = dst[a].second + w * src[b].second;
            if (!is_zero(c)) out.emplace_back(dst[a].first, std::move(c));
            ++a;
            ++b;
        }
    }
    dst = std::move(out);
}

struct SymElem {
    RatVec j;                  // J-part
    std::vector<LinForm> m;    // module part, per coordinate
};

struct SymContext {
    const SuperAlgebra& J;
    const SuperBimodule& M;
    const PairSpace& ps;

    SymElem basis_j(int i) const {
        SymElem e{RatVec(J.dim()), std::vector<LinForm>(M.mdim())};
        e.j[i] = 1;
        return e;
    }

    SymElem mult(const SymElem& x, const SymElem& y) const {
        SymElem r{multiply_vec(J, x.j, y.j), std::vector<LinForm>(M.mdim())};
        // mu(x.j, y.j)
        for (int t = 0; t < J.dim(); ++t) {
            if (is_zero(x.j[t])) continue;
            for (int u = 0; u < J.dim(); ++u) {
                if (is_zero(y.j[u])) continue;
                if (t == u && J.parity(t) == 1) continue;
                const Rat w = x.j[t] * y.j[u];
                const int sgn = t <= u ? 1 : sign_pow(J.parity(t) * J.parity(u));
                const int p = (J.parity(t) + J.parity(u)) % 2;
                for (int c = 0; c < M.mdim(); ++c) {
                    if (M.parity(c) != p) continue;
                    const int v = ps.var(t, u, c);
                    if (v < 0) continue;
                    LinForm single{{v, Rat(sgn)}};
                    lf_add(r.m[c], single, w);
                }
            }
        }
        // x.j acting on y.m
        for (int t = 0; t < J.dim(); ++t) {
            if (is_zero(x.j[t])) continue;
            for (int c = 0; c < M.mdim(); ++c) {
                if (y.m[c].empty()) continue;
                for (const auto& [d, v] : M.act_sparse(t, c)) lf_add(r.m[d], y.m[c], x.j[t] * v);
            }
        }
        // x.m times y.j  (m.b = (-1)^{|m||b|} b.m)
        for (int u = 0; u < J.dim(); ++u) {
            if (is_zero(y.j[u])) continue;
            for (int c = 0; c < M.mdim(); ++c) {
                if (x.m[c].empty()) continue;
                const Rat w = Rat(sign_pow(M.parity(c) * J.parity(u))) * y.j[u];
                for (const auto& [d, v] : M.act_sparse(u, c)) lf_add(r.m[d], x.m[c], w * v);
            }
        }
        return r;
    }
};

}  // namespace

namespace {

// Runs fn(row) for every module-coordinate linear form produced by the
// super-Jordan defect on each base quadruple.
template <typename Fn>
void for_each_cocycle_condition(const SuperAlgebra& J, const SuperBimodule& M, const PairSpace& ps,
                                Fn&& fn) {
    SymContext ctx{J, M, ps};
    const int dim = J.dim();
    std::vector<SymElem> basis;
    for (int i = 0; i < dim; ++i) basis.push_back(ctx.basis_j(i));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            SymElem ij = ctx.mult(basis[i], basis[j]);
            for (int k = 0; k < dim; ++k) {
                SymElem ijk = ctx.mult(ij, basis[k]);
                for (int l = 0; l < dim; ++l) {
                    const int pi = J.parity(i), pj = J.parity(j), pk = J.parity(k),
                              pl = J.parity(l);
                    std::vector<LinForm> defect(M.mdim());
                    auto acc = [&](const SymElem& e, int sgn) {
                        for (int c = 0; c < M.mdim(); ++c)
                            if (!e.m[c].empty()) lf_add(defect[c], e.m[c], Rat(sgn));
                    };
                    acc(ctx.mult(ijk, basis[l]), 1);
                    acc(ctx.mult(ctx.mult(ctx.mult(basis[i], basis[l]), basis[k]), basis[j]),
                        sign_pow(pl * (pk + pj) + pk * pj));
                    acc(ctx.mult(ctx.mult(ctx.mult(basis[j], basis[l]), basis[k]), basis[i]),
                        sign_pow(pi * (pj + pk + pl) + pk * pl));
                    acc(ctx.mult(ij, ctx.mult(basis[k], basis[l])), -1);
                    acc(ctx.mult(ctx.mult(basis[i], basis[l]), ctx.mult(basis[j], basis[k])),
                        -sign_pow(pl * (pk + pj)));
                    acc(ctx.mult(ctx.mult(basis[i], basis[k]), ctx.mult(basis[j], basis[l])),
                        -sign_pow(pj * pk));
                    for (int c = 0; c < M.mdim(); ++c)
                        if (!defect[c].empty()) fn(defect[c]);
                }
            }
        }
}

std::string row_key(const LinForm& row) {
    // normalized: leading coefficient 1
    std::ostringstream os;
    const Rat inv = 1 / row.front().second;
    for (const auto& [v, c] : row) os << v << ":" << rat_to_string(inv * c) << ";";
    return os.str();
}

Echelon cocycle_condition_echelon(const SuperAlgebra& J, const SuperBimodule& M,
                                  const PairSpace& ps) {
    Echelon ech(ps.total());
    std::set<std::string> seen;
    for_each_cocycle_condition(J, M, ps, [&](const LinForm& row) {
        if (!seen.insert(row_key(row)).second) return;
        RatVec dense(ps.total());
        for (const auto& [v, c] : row) dense[v] = c;
        ech.insert(std::move(dense));
    });
    return ech;
}

}  // namespace

std::size_t cocycle_condition_rank(const SuperAlgebra& J, const SuperBimodule& M) {
    PairSpace ps(J, M);
    return cocycle_condition_echelon(J, M, ps).rank();
}

std::vector<Cocycle> cocycle_space(const SuperAlgebra& J, const SuperBimodule& M) {
    PairSpace ps(J, M);
    Echelon ech = cocycle_condition_echelon(J, M, ps);
    std::vector<Cocycle> out;
    for (const RatVec& k : kernel_basis(ech.to_matrix())) out.push_back(ps.unflatten(k));
    return out;
}

H2Dims h2_dimensions(const SuperAlgebra& J, const SuperBimodule& M) {
    PairSpace ps(J, M);
    const std::size_t z2 = ps.total() - cocycle_condition_echelon(J, M, ps).rank();
    const std::size_t b2 = rank(coboundary_matrix(J, M));
    if (b2 > z2) throw std::logic_error("h2_dimensions: B2 not contained in Z2");
    return H2Dims{z2, b2, z2 - b2};
}

// ---------------------------------------------------------------------------

bool splitting_feasible(const SplittingResult& r) { return std::holds_alternative<Splitting>(r); }

SplittingResult solve_splitting_cocycle(const SuperAlgebra& J, const SuperBimodule& M,
                                        const Cocycle& mu) {
    validate_cocycle(J, M, mu);
    PairSpace ps(J, M);
    MapSpace ms(J, M);
    RatMat A = coboundary_matrix(J, M);
    RatVec b = scale(Rat(-1), ps.flatten(mu));

    SolveResult s = solve(A, b);
    if (s.solution) {
        GradedMap f = ms.unflatten(*s.solution);
        return Splitting{std::move(f)};
    }
    std::optional<RatVec> cert = infeasibility_certificate(A, b);
    if (!cert) throw std::logic_error("solve_splitting: infeasible system without certificate");
    Obstruction obs;
    for (int r = 0; r < ps.total(); ++r) obs.row_labels.push_back(ps.label(r));
    for (int v = 0; v < ms.total(); ++v) obs.col_labels.push_back(ms.label(v));
    obs.system = std::move(A);
    obs.rhs = std::move(b);
    obs.multipliers = std::move(*cert);
    obs.inconsistent_row = *s.inconsistent_row;
    return obs;
}

ExtensionParts decompose_extension(const SuperAlgebra& E, const Subspace& N,
                                   const std::optional<std::vector<RatVec>>& user_section) {
    if (N.ambient_dim != E.dim()) throw std::invalid_argument("decompose: ambient mismatch");
    if (!is_graded(E, N)) throw std::invalid_argument("decompose: N is not graded");
    if (!is_ideal(E, N)) throw std::invalid_argument("decompose: N is not an ideal");
    if (subspace_product(E, N, N).dim() != 0)
        throw std::invalid_argument("decompose: N^2 != 0");
    IdentityReport sc = check_supercommutativity(E);
    if (!sc.holds) throw std::invalid_argument("decompose: E is not supercommutative");

    QuotientResult q = quotient(E, N);
    const int qdim = q.algebra.dim();
    const int nd = N.dim();

    std::vector<RatVec> section;
    if (user_section) {
        if (static_cast<int>(user_section->size()) != qdim)
            throw std::invalid_argument("decompose: section size mismatch");
        for (int c = 0; c < qdim; ++c) {
            const RatVec& s = (*user_section)[c];
            if (s.size() != static_cast<std::size_t>(E.dim()))
                throw std::invalid_argument("decompose: section vector size mismatch");
            RatVec img = mat_apply(q.projection, s);
            RatVec want(qdim);
            want[c] = 1;
            if (img != want)
                throw std::invalid_argument("decompose: section does not lift the quotient basis");
            if (!is_homogeneous(E, s))
                throw std::invalid_argument("decompose: section vector not homogeneous");
        }
        section = *user_section;
    } else {
        for (int c = 0; c < qdim; ++c) {
            RatVec s(E.dim());
            s[q.complement_cols[c]] = 1;
            section.push_back(std::move(s));
        }
    }

    // N in echelon coordinates: component c of v is v[pivot_c]
    auto ncoords = [&](const RatVec& v) {
        RatVec r(nd);
        for (int c = 0; c < nd; ++c) r[c] = v[N.pivots[c]];
        return r;
    };

    // module basis names n0..; parity from the pivot coordinate
    std::vector<std::string> even_names, odd_names;
    for (int c = 0; c < nd; ++c) {
        std::string nm = "n" + std::to_string(c);
        (E.parity(static_cast<int>(N.pivots[c])) ? odd_names : even_names).push_back(nm);
    }

    std::vector<RatVec> action(static_cast<std::size_t>(qdim) * nd);
    for (int i = 0; i < qdim; ++i)
        for (int c = 0; c < nd; ++c) {
            RatVec prod = multiply_vec(E, section[i], N.basis[c]);
            if (!N.contains(prod)) throw std::logic_error("decompose: N is not invariant");
            action[i * nd + c] = ncoords(prod);
        }
    SuperBimodule mod(q.algebra, std::move(even_names), std::move(odd_names), std::move(action));

    Cocycle mu(qdim, nd);
    for (int i = 0; i < qdim; ++i)
        for (int j = i; j < qdim; ++j) {
            RatVec prod = multiply_vec(E, section[i], section[j]);
            RatVec qc = mat_apply(q.projection, prod);
            RatVec lifted(E.dim());
            for (int c = 0; c < qdim; ++c)
                if (!is_zero(qc[c])) lifted = add(lifted, scale(qc[c], section[c]));
            RatVec npart = sub(prod, lifted);
            if (!N.contains(npart)) throw std::logic_error("decompose: section defect not in N");
            if (i == j && q.algebra.parity(i) == 1) continue;  // vanishes by Eq. (1)
            RatVec val = ncoords(npart);
            if (!is_zero_vec(val)) mu.set(q.algebra, i, j, std::move(val));
        }

    return ExtensionParts{std::move(q.algebra), std::move(mod),      std::move(mu),
                          std::move(q.complement_cols), std::move(section), N.basis,
                          std::move(q.projection)};
}

Cocycle extract_cocycle(const SuperAlgebra& E, const Subspace& N,
                        const std::optional<std::vector<RatVec>>& section) {
    return decompose_extension(E, N, section).mu;
}

SplittingResult solve_splitting(const SuperAlgebra& E, const Subspace& N) {
    ExtensionParts parts = decompose_extension(E, N);
    return solve_splitting_cocycle(parts.base, parts.mod, parts.mu);
}

IdentityReport verify_splitting(const SuperAlgebra& E, const Subspace& N, const Splitting& s) {
    ExtensionParts parts = decompose_extension(E, N);
    IdentityReport rep;
    rep.check = "verify_splitting";
    const SuperAlgebra& B = parts.base;
    const int qdim = B.dim();
    if (s.corrections.size() != static_cast<std::size_t>(qdim))
        throw std::invalid_argument("verify_splitting: one correction per base element required");
    std::vector<RatVec> lifted;
    for (int i = 0; i < qdim; ++i) {
        const RatVec& corr = s.corrections[i];
        if (corr.size() != static_cast<std::size_t>(parts.mod.mdim()))
            throw std::invalid_argument("verify_splitting: correction size mismatch");
        for (int c = 0; c < parts.mod.mdim(); ++c)
            if (!is_zero(corr[c]) && parts.mod.parity(c) != B.parity(i))
                throw std::invalid_argument("verify_splitting: correction parity mismatch");
        RatVec v = parts.section[i];
        for (int c = 0; c < parts.mod.mdim(); ++c)
            if (!is_zero(corr[c])) v = add(v, scale(corr[c], parts.nbasis[c]));
        lifted.push_back(std::move(v));
    }
    for (int i = 0; i < qdim && rep.holds; ++i)
        for (int j = 0; j < qdim; ++j) {
            RatVec prod = multiply_vec(E, lifted[i], lifted[j]);
            RatVec want(E.dim());
            const RatVec& sc = B.entry(i, j);
            for (int k = 0; k < qdim; ++k)
                if (!is_zero(sc[k])) want = add(want, scale(sc[k], lifted[k]));
            if (prod != want) {
                rep.holds = false;
                rep.witness = IdentityWitness{{i, j},
                                              {B.name(i), B.name(j)},
                                              sub(prod, want),
                                              "lifted product disagrees with base constants"};
                break;
            }
        }
    if (rep.holds) {
        std::vector<RatVec> stacked = lifted;
        stacked.insert(stacked.end(), parts.nbasis.begin(), parts.nbasis.end());
        if (rank(RatMat::from_rows(stacked)) != static_cast<std::size_t>(qdim + parts.mod.mdim())) {
            rep.holds = false;
            rep.witness = IdentityWitness{{}, {}, RatVec(E.dim()), "lifted span meets N"};
        }
    }
    return rep;
}

}  // namespace jsa
