#include "jsa/bimodule.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "jsa/catalog.hpp"
#include "jsa/cliffordweyl.hpp"

namespace jsa {

SuperBimodule::SuperBimodule(SuperAlgebra base, std::vector<std::string> even_names,
                             std::vector<std::string> odd_names, std::vector<RatVec> action,
                             bool validate_jordan)
    : base_(std::move(base)), even_(static_cast<int>(even_names.size())) {
    names_ = std::move(even_names);
    names_.insert(names_.end(), odd_names.begin(), odd_names.end());
    mdim_ = static_cast<int>(names_.size());
    if (mdim_ == 0) throw std::invalid_argument("SuperBimodule: empty module");
    std::set<std::string> seen;
    for (const auto& n : names_)
        if (n.empty() || !seen.insert(n).second)
            throw std::invalid_argument("SuperBimodule: bad module name '" + n + "'");
    if (action.size() != static_cast<std::size_t>(base_.dim()) * mdim_)
        throw std::invalid_argument("SuperBimodule: action size mismatch");
    action_ = std::move(action);
    for (int i = 0; i < base_.dim(); ++i)
        for (int c = 0; c < mdim_; ++c) {
            const RatVec& v = action_[i * mdim_ + c];
            if (v.size() != static_cast<std::size_t>(mdim_))
                throw std::invalid_argument("SuperBimodule: action entry size mismatch");
            const int p = (base_.parity(i) + parity(c)) % 2;
            for (int d = 0; d < mdim_; ++d)
                if (parity(d) != p && !is_zero(v[d]))
                    throw std::invalid_argument("SuperBimodule: grading violated at (" +
                                                base_.name(i) + "," + names_[c] + ")");
        }
    sparse_.resize(action_.size());
    for (std::size_t t = 0; t < action_.size(); ++t) sparse_[t] = to_sparse(action_[t]);
    if (validate_jordan) {
        IdentityReport rep = check_jordan_bimodule(base_, *this);
        if (!rep.holds) {
            std::string msg = "SuperBimodule: split null extension is not Jordan";
            if (rep.witness) {
                msg += " (witness";
                for (const auto& l : rep.witness->labels) msg += " " + l;
                msg += ")";
            }
            throw std::invalid_argument(msg);
        }
    }
}

int SuperBimodule::index_of(const std::string& n) const {
    for (int c = 0; c < mdim_; ++c)
        if (names_[c] == n) return c;
    return -1;
}

RatVec SuperBimodule::act_vec(const RatVec& a, const RatVec& m) const {
    if (a.size() != static_cast<std::size_t>(base_.dim()) ||
        m.size() != static_cast<std::size_t>(mdim_))
        throw std::invalid_argument("act_vec: dimension mismatch");
    RatVec r(mdim_);
    for (int i = 0; i < base_.dim(); ++i) {
        if (is_zero(a[i])) continue;
        for (int c = 0; c < mdim_; ++c) {
            if (is_zero(m[c])) continue;
            const Rat x = a[i] * m[c];
            for (const auto& [d, v] : act_sparse(i, c)) r[d] += x * v;
        }
    }
    return r;
}

RatMat SuperBimodule::right_action_matrix(const Element& a) const {
    if (a.coords.size() != static_cast<std::size_t>(base_.dim()))
        throw std::invalid_argument("right_action_matrix: dimension mismatch");
    if (!is_homogeneous(base_, a.coords))
        throw std::invalid_argument("right_action_matrix: element is not homogeneous");
    const int pa = element_parity(base_, a.coords);
    RatMat r(mdim_, mdim_);
    for (int i = 0; i < base_.dim(); ++i) {
        if (is_zero(a.coords[i])) continue;
        for (int c = 0; c < mdim_; ++c) {
            const Rat s = Rat(sign_pow(pa * parity(c))) * a.coords[i];
            for (const auto& [d, v] : act_sparse(i, c)) r.at(c, d) += s * v;
        }
    }
    return r;
}

bool SuperBimodule::action_equals(const SuperBimodule& o) const {
    return mdim_ == o.mdim_ && even_ == o.even_ && action_ == o.action_;
}

SuperBimodule regular_bimodule(const SuperAlgebra& J) {
    std::vector<std::string> even_names, odd_names;
    for (int i = 0; i < J.dim(); ++i)
        (J.parity(i) ? odd_names : even_names).push_back("m_" + J.name(i));
    std::vector<RatVec> action(static_cast<std::size_t>(J.dim()) * J.dim());
    for (int i = 0; i < J.dim(); ++i)
        for (int c = 0; c < J.dim(); ++c) action[i * J.dim() + c] = J.entry(i, c);
    return SuperBimodule(J, std::move(even_names), std::move(odd_names), std::move(action));
}

SuperBimodule opposite_bimodule(const SuperBimodule& M) {
    const SuperAlgebra& J = M.base();
    const int me = M.even_dim(), mo = M.odd_dim(), md = M.mdim();
    // parity swap: old odd block becomes the new even block
    auto remap = [&](int c) { return c < me ? mo + c : c - me; };
    std::vector<std::string> even_names, odd_names;
    for (int c = me; c < md; ++c) even_names.push_back(M.name(c));
    for (int c = 0; c < me; ++c) odd_names.push_back(M.name(c));
    std::vector<RatVec> action(static_cast<std::size_t>(J.dim()) * md, RatVec(md));
    for (int i = 0; i < J.dim(); ++i) {
        const int sgn = sign_pow(J.parity(i));
        for (int c = 0; c < md; ++c) {
            const RatVec& v = M.act(i, c);
            RatVec w(md);
            for (int d = 0; d < md; ++d) w[remap(d)] = sgn * v[d];
            action[i * md + remap(c)] = std::move(w);
        }
    }
    return SuperBimodule(J, std::move(even_names), std::move(odd_names), std::move(action));
}

void Cocycle::set(const SuperAlgebra& J, int i, int j, RatVec value) {
    if (value.size() != static_cast<std::size_t>(mdim_))
        throw std::invalid_argument("Cocycle::set: value size mismatch");
    if (i > j) {
        const int sgn = sign_pow(J.parity(i) * J.parity(j));
        for (Rat& c : value) c *= sgn;
        std::swap(i, j);
    }
    if (i == j && J.parity(i) == 1 && !is_zero_vec(value))
        throw std::invalid_argument("Cocycle::set: nonzero value on an odd diagonal pair");
    if (is_zero_vec(value))
        v_.erase({i, j});
    else
        v_[{i, j}] = std::move(value);
}

RatVec Cocycle::get(const SuperAlgebra& J, int i, int j) const {
    int a = i, b = j;
    int sgn = 1;
    if (a > b) {
        sgn = sign_pow(J.parity(i) * J.parity(j));
        std::swap(a, b);
    }
    auto it = v_.find({a, b});
    if (it == v_.end()) return RatVec(mdim_);
    return sgn == 1 ? it->second : scale(Rat(-1), it->second);
}

void validate_cocycle(const SuperAlgebra& J, const SuperBimodule& M, const Cocycle& mu) {
    if (mu.jdim() != J.dim() || mu.mdim() != M.mdim())
        throw std::invalid_argument("cocycle: dimension mismatch");
    for (const auto& [key, val] : mu.values()) {
        const int p = (J.parity(key.first) + J.parity(key.second)) % 2;
        for (int d = 0; d < M.mdim(); ++d)
            if (M.parity(d) != p && !is_zero(val[d]))
                throw std::invalid_argument("cocycle: graded parity violated at (" +
                                            J.name(key.first) + "," + J.name(key.second) + ")");
    }
}

namespace {

struct ExtensionLayout {
    int je, jo, me, mo;
    int dim;
    std::vector<std::string> module_names;  // possibly prefixed

    ExtensionLayout(const SuperAlgebra& J, const SuperBimodule& M)
        : je(J.even_dim()), jo(J.odd_dim()), me(M.even_dim()), mo(M.odd_dim()) {
        dim = je + jo + me + mo;
        bool clash = false;
        for (const auto& n : M.names())
            if (J.index_of(n) >= 0) clash = true;
        for (const auto& n : M.names()) module_names.push_back(clash ? "m_" + n : n);
    }
    int jmap(int i) const { return i < je ? i : i + me; }
    int mmap(int c) const { return c < me ? je + c : je + jo + c; }
};

SuperAlgebra extension_algebra(const SuperAlgebra& J, const SuperBimodule& M, const Cocycle* mu) {
    ExtensionLayout lay(J, M);
    const int dim = lay.dim;
    std::vector<std::string> even_names, odd_names;
    for (int i = 0; i < lay.je; ++i) even_names.push_back(J.name(i));
    for (int c = 0; c < lay.me; ++c) even_names.push_back(lay.module_names[c]);
    for (int i = lay.je; i < J.dim(); ++i) odd_names.push_back(J.name(i));
    for (int c = lay.me; c < M.mdim(); ++c) odd_names.push_back(lay.module_names[c]);

    std::vector<RatVec> table(static_cast<std::size_t>(dim) * dim, RatVec(dim));
    for (int i = 0; i < J.dim(); ++i)
        for (int j = 0; j < J.dim(); ++j) {
            RatVec v(dim);
            const RatVec& jj = J.entry(i, j);
            for (int k = 0; k < J.dim(); ++k) v[lay.jmap(k)] = jj[k];
            if (mu) {
                RatVec mv = mu->get(J, i, j);
                for (int d = 0; d < M.mdim(); ++d) v[lay.mmap(d)] = mv[d];
            }
            table[lay.jmap(i) * dim + lay.jmap(j)] = std::move(v);
        }
    for (int i = 0; i < J.dim(); ++i)
        for (int c = 0; c < M.mdim(); ++c) {
            const RatVec& av = M.act(i, c);
            RatVec v(dim);
            for (int d = 0; d < M.mdim(); ++d) v[lay.mmap(d)] = av[d];
            table[lay.jmap(i) * dim + lay.mmap(c)] = v;
            const int sgn = sign_pow(J.parity(i) * M.parity(c));
            if (sgn == -1)
                for (Rat& x : v) x = -x;
            table[lay.mmap(c) * dim + lay.jmap(i)] = std::move(v);
        }

    std::optional<RatVec> unit;
    if (J.unit()) {
        bool unital = true;
        for (int c = 0; c < M.mdim() && unital; ++c) {
            RatVec e(M.mdim());
            e[c] = 1;
            if (M.act_vec(*J.unit(), e) != e) unital = false;
        }
        if (mu && unital)
            for (int j = 0; j < J.dim() && unital; ++j) {
                RatVec uj(M.mdim()), ju(M.mdim());
                for (int t = 0; t < J.dim(); ++t) {
                    if (is_zero((*J.unit())[t])) continue;
                    uj = add(uj, scale((*J.unit())[t], mu->get(J, t, j)));
                }
                if (!is_zero_vec(uj)) unital = false;
            }
        if (unital) {
            RatVec u(dim);
            for (int k = 0; k < J.dim(); ++k) u[lay.jmap(k)] = (*J.unit())[k];
            unit = std::move(u);
        }
    }
    return SuperAlgebra(std::move(even_names), std::move(odd_names), std::move(table),
                        std::move(unit));
}

}  // namespace

SuperAlgebra split_null_extension(const SuperAlgebra& J, const SuperBimodule& M) {
    return extension_algebra(J, M, nullptr);
}

std::vector<int> extension_base_columns(const SuperAlgebra& J, const SuperBimodule& M) {
    ExtensionLayout lay(J, M);
    std::vector<int> cols;
    for (int i = 0; i < J.dim(); ++i) cols.push_back(lay.jmap(i));
    return cols;
}

std::vector<int> extension_module_columns(const SuperAlgebra& J, const SuperBimodule& M) {
    ExtensionLayout lay(J, M);
    std::vector<int> cols;
    for (int c = 0; c < M.mdim(); ++c) cols.push_back(lay.mmap(c));
    return cols;
}

SuperAlgebra build_extension(const SuperAlgebra& J, const SuperBimodule& M, const Cocycle& mu) {
    validate_cocycle(J, M, mu);
    return extension_algebra(J, M, &mu);
}

namespace {

IdentityReport reduced_jordan_check(const SuperAlgebra& J, const SuperBimodule& M,
                                    const Cocycle* mu) {
    IdentityReport rep;
    rep.check = "jordan_bimodule";
    SuperAlgebra E = mu ? build_extension(J, M, *mu) : split_null_extension(J, M);
    IdentityReport pre = check_supercommutativity(E);
    if (!pre.holds) {
        rep.holds = false;
        rep.precondition_failed = true;
        rep.witness = pre.witness;
        return rep;
    }
    ExtensionLayout lay(J, M);
    const int jd = J.dim();
    std::vector<std::array<int, 4>> quads;
    quads.reserve(static_cast<std::size_t>(jd) * jd * jd * (jd + 4 * M.mdim()));
    for (int i = 0; i < jd; ++i)
        for (int j = 0; j < jd; ++j)
            for (int k = 0; k < jd; ++k)
                for (int l = 0; l < jd; ++l)
                    quads.push_back({lay.jmap(i), lay.jmap(j), lay.jmap(k), lay.jmap(l)});
    for (int slot = 0; slot < 4; ++slot)
        for (int c = 0; c < M.mdim(); ++c)
            for (int i = 0; i < jd; ++i)
                for (int j = 0; j < jd; ++j)
                    for (int k = 0; k < jd; ++k) {
                        std::array<int, 4> q{lay.jmap(i), lay.jmap(j), lay.jmap(k), 0};
                        // place the module element in `slot`, shifting the rest
                        for (int s = 3; s > slot; --s) q[s] = q[s - 1];
                        q[slot] = lay.mmap(c);
                        quads.push_back(q);
                    }
    IdentityReport inner = check_super_jordan_on(E, quads);
    rep.holds = inner.holds;
    rep.witness = inner.witness;
    return rep;
}

}  // namespace

IdentityReport check_jordan_bimodule(const SuperAlgebra& J, const SuperBimodule& M) {
    return reduced_jordan_check(J, M, nullptr);
}

IdentityReport check_extension_jordan(const SuperAlgebra& J, const SuperBimodule& M,
                                      const Cocycle& mu) {
    return reduced_jordan_check(J, M, &mu);
}

IdentityReport check_sl2_relations(const SuperBimodule& M, const RatMat& X, const RatMat& Y,
                                   const std::vector<int>& labels) {
    const SuperAlgebra& J = M.base();
    const int xi = J.index_of("x"), e2i = J.index_of("e2"), e1i = J.index_of("e1");
    const int yi = J.index_of("y");
    if (xi < 0 || yi < 0 || e1i < 0 || e2i < 0)
        throw std::invalid_argument("check_sl2_relations: base is not a D_t algebra");
    const Rat t = J.entry(xi, yi)[e2i];
    if (t == Rat(-1)) throw std::invalid_argument("check_sl2_relations: t = -1");
    const std::size_t md = M.mdim();
    if (X.rows != md || X.cols != md || Y.rows != md || Y.cols != md)
        throw std::invalid_argument("check_sl2_relations: dimension mismatch");
    IdentityReport rep;
    rep.check = "sl2_relations";
    const int n = static_cast<int>(labels.size()) - 1;
    if (n < 0) throw std::invalid_argument("check_sl2_relations: no labels");

    const Rat c = (1 + t) / 2;
    RatMat XY = X * Y + Y * X;
    RatMat X2 = X * X, Y2 = Y * Y;

    auto unit_row = [&](int c0) {
        RatVec v(md);
        v[c0] = 1;
        return v;
    };
    auto fail = [&](const std::string& what, RatVec defect, int which) {
        rep.holds = false;
        rep.witness = IdentityWitness{{labels[which]}, {M.name(labels[which])}, std::move(defect), what};
    };

    for (int i = 0; i <= n && rep.holds; ++i) {
        RatVec li = unit_row(labels[i]);
        RatVec lhs = row_times_mat(li, XY);
        RatVec rhs = scale(c * Rat(n - 2 * i), li);
        if (lhs != rhs) {
            fail("l_i (XY+YX) = (1+t)/2 (n-2i) l_i", sub(lhs, rhs), i);
            break;
        }
        lhs = row_times_mat(li, X2);
        rhs = i == 0 ? RatVec(md) : scale(c * Rat(-i * n + i * (i - 1)), unit_row(labels[i - 1]));
        if (lhs != rhs) {
            fail("l_i X^2 relation", sub(lhs, rhs), i);
            break;
        }
        lhs = row_times_mat(li, Y2);
        rhs = i == n ? RatVec(md) : scale(c, unit_row(labels[i + 1]));
        if (lhs != rhs) {
            fail("l_i Y^2 relation", sub(lhs, rhs), i);
            break;
        }
    }
    if (rep.holds) {
        RatVec e1(J.dim());
        e1[e1i] = 1;
        RatMat E = M.right_action_matrix(Element{e1});
        if (!(X2 * E - E * X2).is_zero()) {
            rep.holds = false;
            rep.witness = IdentityWitness{{}, {}, RatVec(md), "[X^2, E] != 0"};
        } else if (!(Y2 * E - E * Y2).is_zero()) {
            rep.holds = false;
            rep.witness = IdentityWitness{{}, {}, RatVec(md), "[Y^2, E] != 0"};
        }
    }
    return rep;
}

namespace {

SuperBimodule window_bimodule(int n, int m, int r, bool u) {
    if (n < 2 || m < 1 || r < 1)
        throw std::invalid_argument("clifford_quotient_bimodule: need n >= 2, m >= 1, r >= 1");
    SuperAlgebra J = build_superform(n, m);

    std::vector<CWMonomial> monos = cw_monomials_of_degree(n, m, r - 1, u);
    {
        std::vector<CWMonomial> top = cw_monomials_of_degree(n, m, r, u);
        monos.insert(monos.end(), top.begin(), top.end());
    }
    std::vector<CWMonomial> ordered;  // even block, then odd block
    for (int par = 0; par < 2; ++par)
        for (const CWMonomial& mo : monos)
            if (mo.parity() == par) ordered.push_back(mo);
    const int md = static_cast<int>(ordered.size());
    std::map<CWMonomial, int> index;
    std::vector<std::string> even_names, odd_names;
    for (int c = 0; c < md; ++c) {
        index[ordered[c]] = c;
        (ordered[c].parity() ? odd_names : even_names).push_back(ordered[c].name());
    }

    std::vector<RatVec> action(static_cast<std::size_t>(J.dim()) * md, RatVec(md));
    for (int c = 0; c < md; ++c) {
        RatVec self(md);
        self[c] = 1;
        action[J.index_of("1") * md + c] = std::move(self);  // 1 is the unit of C^(+)
        for (int i = 1; i < J.dim(); ++i) {
            CWGen g;
            if (i <= n)
                g = {CWGen::V, i - 1};
            else
                g = {CWGen::W, i - n - 1};
            RatVec out(md);
            for (const CWTerm& t : symmetric_product_oracle(ordered[c], g)) {
                auto it = index.find(t.mono);
                if (it == index.end()) continue;  // outside the degree window
                out[it->second] += t.coeff;
            }
            action[i * md + c] = std::move(out);
        }
    }
    return SuperBimodule(std::move(J), std::move(even_names), std::move(odd_names),
                         std::move(action));
}

}  // namespace

SuperBimodule clifford_quotient_bimodule(int n, int m, int r) {
    return window_bimodule(n, m, r, false);
}

SuperBimodule clifford_quotient_bimodule_u(int n, int m, int r) {
    if (r % 2 != 0) throw std::invalid_argument("clifford_quotient_bimodule_u: r must be even");
    return window_bimodule(n, m, r, true);
}

}  // namespace jsa
