#include "jsa/cliffordweyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace jsa {

int CWMonomial::degree() const {
    return std::accumulate(I.begin(), I.end(), 0) + std::accumulate(K.begin(), K.end(), 0);
}

int CWMonomial::parity() const { return std::accumulate(K.begin(), K.end(), 0) % 2; }

std::string CWMonomial::name() const {
    std::string s;
    if (u) s += "u";
    for (std::size_t j = 0; j < I.size(); ++j)
        if (I[j]) s += "v" + std::to_string(j + 1);
    for (std::size_t p = 0; p < K.size(); ++p) {
        if (K[p] == 0) continue;
        s += "w" + std::to_string(p + 1);
        if (K[p] > 1) s += "^" + std::to_string(K[p]);
    }
    return s.empty() ? "1" : s;
}

bool CWMonomial::operator<(const CWMonomial& o) const {
    const int d = degree(), e = o.degree();
    if (d != e) return d < e;
    if (I != o.I) return I < o.I;
    if (K != o.K) return K < o.K;
    return u < o.u;
}

CWSum cw_combine(std::vector<CWTerm> terms) {
    std::map<CWMonomial, Rat> acc;
    for (auto& t : terms) acc[t.mono] += t.coeff;
    CWSum out;
    for (auto& [m, c] : acc)
        if (!is_zero(c)) out.push_back({c, m});
    return out;
}

namespace {

int isum(const std::vector<int>& v, std::size_t from, std::size_t to) {
    int s = 0;
    for (std::size_t t = from; t < to; ++t) s += v[t];
    return s;
}

// m * g for a single generator, appended to `out`
void rmul_gen(const CWMonomial& m, const CWGen& g, const Rat& coeff, std::vector<CWTerm>& out) {
    switch (g.kind) {
        case CWGen::V: {
            const int j = g.idx;
            const int passes = isum(m.K, 0, m.K.size()) + isum(m.I, j + 1, m.I.size());
            CWMonomial r = m;
            r.I[j] ^= 1;
            out.push_back({Rat(sign_pow(passes)) * coeff, std::move(r)});
            return;
        }
        case CWGen::W: {
            const int p = g.idx;
            CWMonomial r = m;
            r.K[p] += 1;
            out.push_back({coeff, std::move(r)});
            // incoming w_p crosses its partner only when the partner sits to
            // the right of slot p, i.e. for 1-based odd p
            if (p % 2 == 0 && m.K[p + 1] > 0) {
                CWMonomial s = m;
                s.K[p + 1] -= 1;
                out.push_back({Rat(-2 * m.K[p + 1]) * coeff, std::move(s)});
            }
            return;
        }
        case CWGen::U: {
            const int passes = isum(m.I, 0, m.I.size()) + isum(m.K, 0, m.K.size());
            CWMonomial r = m;
            r.u = !r.u;
            out.push_back({Rat(sign_pow(passes)) * coeff, std::move(r)});
            return;
        }
    }
}

// g * m for a single generator
void lmul_gen(const CWGen& g, const CWMonomial& m, const Rat& coeff, std::vector<CWTerm>& out) {
    switch (g.kind) {
        case CWGen::V: {
            const int j = g.idx;
            const int passes = (m.u ? 1 : 0) + isum(m.I, 0, j);
            CWMonomial r = m;
            r.I[j] ^= 1;
            out.push_back({Rat(sign_pow(passes)) * coeff, std::move(r)});
            return;
        }
        case CWGen::W: {
            const int p = g.idx;
            const int passes = (m.u ? 1 : 0) + isum(m.I, 0, m.I.size());
            const Rat base = Rat(sign_pow(passes)) * coeff;
            CWMonomial r = m;
            r.K[p] += 1;
            out.push_back({base, std::move(r)});
            // w_p moving right crosses its partner when the partner is to the
            // left of slot p, i.e. for 1-based even p
            if (p % 2 == 1 && m.K[p - 1] > 0) {
                CWMonomial s = m;
                s.K[p - 1] -= 1;
                out.push_back({Rat(-2 * m.K[p - 1]) * base, std::move(s)});
            }
            return;
        }
        case CWGen::U: {
            CWMonomial r = m;
            r.u = !r.u;
            out.push_back({coeff, std::move(r)});
            return;
        }
    }
}

std::vector<CWGen> generator_sequence(const CWMonomial& q) {
    std::vector<CWGen> gens;
    if (q.u) gens.push_back({CWGen::U, 0});
    for (std::size_t j = 0; j < q.I.size(); ++j)
        if (q.I[j]) gens.push_back({CWGen::V, static_cast<int>(j)});
    for (std::size_t p = 0; p < q.K.size(); ++p)
        for (int t = 0; t < q.K[p]; ++t) gens.push_back({CWGen::W, static_cast<int>(p)});
    return gens;
}

}  // namespace

CWSum cw_normal_product(const CWMonomial& p, const CWMonomial& q) {
    if (p.I.size() != q.I.size() || p.K.size() != q.K.size())
        throw std::invalid_argument("cw_normal_product: incompatible monomials");
    CWSum cur{{Rat(1), p}};
    for (const CWGen& g : generator_sequence(q)) {
        std::vector<CWTerm> next;
        for (const CWTerm& t : cur) rmul_gen(t.mono, g, t.coeff, next);
        cur = cw_combine(std::move(next));
        if (cur.empty()) break;
    }
    return cur;
}

CWSum symmetric_product_oracle(const CWMonomial& p, const CWGen& g) {
    const Rat half(1, 2);
    const int sgn = sign_pow(p.parity() * g.parity());
    std::vector<CWTerm> terms;
    for (const CWTerm& t : [&] {
             std::vector<CWTerm> pg;
             rmul_gen(p, g, half, pg);
             return pg;
         }())
        terms.push_back(t);
    lmul_gen(g, p, Rat(sgn) * half, terms);
    return cw_combine(std::move(terms));
}

CWSum symmetric_product_formula(const CWMonomial& p, const CWGen& g) {
    std::vector<CWTerm> terms;
    const int deg = p.degree();
    const Rat half(1, 2);
    if (g.kind == CWGen::V) {
        const int j = g.idx;
        const int s = isum(p.I, 0, j);
        // plain: (1/2)(-1)^s (1 + (-1)^{|eta|-i_j}); u-twisted picks up one
        // more crossing and the opposite parity factor
        int par = sign_pow(deg - p.I[j]);
        Rat c = half * sign_pow(s + (p.u ? 1 : 0)) * (1 + (p.u ? -par : par));
        if (!is_zero(c)) {
            CWMonomial r = p;
            r.I[j] ^= 1;
            terms.push_back({c, std::move(r)});
        }
    } else if (g.kind == CWGen::W) {
        const int pidx = g.idx;
        const int par = sign_pow(deg);
        Rat raise = half * (1 + (p.u ? -par : par));
        if (!is_zero(raise)) {
            CWMonomial r = p;
            r.K[pidx] += 1;
            terms.push_back({raise, std::move(r)});
        }
        if (pidx % 2 == 0) {  // 1-based odd: lowers the partner to the right
            if (p.K[pidx + 1] > 0) {
                CWMonomial r = p;
                r.K[pidx + 1] -= 1;
                terms.push_back({Rat(-p.K[pidx + 1]), std::move(r)});
            }
        } else {  // 1-based even: lowers the partner to the left
            if (p.K[pidx - 1] > 0) {
                Rat c = Rat(p.K[pidx - 1]) * par * (p.u ? 1 : -1);
                CWMonomial r = p;
                r.K[pidx - 1] -= 1;
                terms.push_back({c, std::move(r)});
            }
        }
    } else {
        throw std::invalid_argument("symmetric_product_formula: generator must be v_j or w_p");
    }
    return cw_combine(std::move(terms));
}

namespace {
void enumerate_k(int slots, int total, std::vector<int>& k, std::vector<std::vector<int>>& out) {
    if (slots == 1) {
        k.push_back(total);
        out.push_back(k);
        k.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        k.push_back(first);
        enumerate_k(slots - 1, total - first, k, out);
        k.pop_back();
    }
}
}  // namespace

std::vector<CWMonomial> cw_monomials_of_degree(int n, int m, int d, bool u) {
    std::vector<CWMonomial> out;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        std::vector<int> I(n);
        int isz = 0;
        for (int j = 0; j < n; ++j) {
            I[j] = (bits >> (n - 1 - j)) & 1;  // big-endian: I lex order
            isz += I[j];
        }
        if (isz > d) continue;
        std::vector<std::vector<int>> ks;
        std::vector<int> scratch;
        enumerate_k(2 * m, d - isz, scratch, ks);
        for (auto& K : ks) out.push_back(CWMonomial{u, I, std::move(K)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace jsa
