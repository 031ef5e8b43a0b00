#include "jsa/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace jsa {

namespace {

int popcount(std::uint32_t m) { return std::popcount(m); }

// sign of gamma_S * gamma_T as exterior monomials (0 when S and T intersect)
int grassmann_sign(std::uint32_t s, std::uint32_t t) {
    int inv = 0;
    for (std::uint32_t rest = t; rest;) {
        const int bit = std::countr_zero(rest);
        rest &= rest - 1;
        inv += popcount(s >> (bit + 1));
    }
    return sign_pow(inv);
}

struct Envelope {
    const SuperAlgebra& J;
    int dim = 0;
    std::vector<std::pair<std::uint32_t, int>> basis;  // (mask, algebra index)
    std::vector<int> lookup;                           // (mask << shift | idx) -> env index
    int shift = 0;
    std::vector<SpVec> rows;  // dim*dim product table

    Envelope(const SuperAlgebra& alg, int g) : J(alg) {
        shift = 0;
        while ((1 << shift) < J.dim()) ++shift;
        lookup.assign((std::size_t(1) << (g + shift)), -1);
        for (int i = 0; i < J.dim(); ++i)
            for (std::uint32_t m = 0; m < (1u << g); ++m)
                if (popcount(m) % 2 == J.parity(i)) {
                    lookup[(m << shift) | i] = dim;
                    basis.emplace_back(m, i);
                    ++dim;
                }
        rows.resize(static_cast<std::size_t>(dim) * dim);
        for (int a = 0; a < dim; ++a) {
            const auto [s, i] = basis[a];
            for (int b = 0; b < dim; ++b) {
                const auto [t, j] = basis[b];
                if (s & t) continue;
                const int sgn = grassmann_sign(s, t);
                SpVec& out = rows[a * dim + b];
                for (const auto& [k, c] : J.sparse_entry(i, j))
                    out.emplace_back(lookup[((s | t) << shift) | k], sgn * c);
                std::sort(out.begin(), out.end());
            }
        }
    }

    std::string label(int a) const {
        const auto [m, i] = basis[a];
        std::string s;
        for (int bit = 0; bit < 32; ++bit)
            if (m & (1u << bit)) s += "e" + std::to_string(bit + 1);
        if (s.empty()) s = "1";
        return s + "(x)" + J.name(i);
    }
};

struct EnvAccum {
    RatVec val;
    std::vector<int> touched;
    std::vector<char> mark;
    explicit EnvAccum(int dim) : val(dim), mark(dim, 0) {}
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

SpVec env_mult_basis(const Envelope& env, const SpVec& s, int b, EnvAccum& scratch) {
    scratch.clear();
    for (const auto& [t, c] : s)
        for (const auto& [k, v] : env.rows[t * env.dim + b]) scratch.add(k, c * v);
    return scratch.take_sparse();
}

void env_mult_pair(const Envelope& env, const SpVec& x, const SpVec& y, const Rat& w,
                   EnvAccum& out) {
    for (const auto& [t, cx] : x)
        for (const auto& [u, cy] : y) {
            const Rat c = w * cx * cy;
            for (const auto& [k, v] : env.rows[t * env.dim + u]) out.add(k, c * v);
        }
}

}  // namespace

IdentityReport grassmann_envelope_check(const SuperAlgebra& J, int g) {
    if (g < 2) throw std::invalid_argument("grassmann_envelope_check: need g >= 2");
    Envelope env(J, g);
    IdentityReport rep;
    rep.check = "grassmann_envelope";
    const int dim = env.dim;

    // commutativity of the envelope
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
            const SpVec& ab = env.rows[a * dim + b];
            const SpVec& ba = env.rows[b * dim + a];
            if (ab != ba) {
                RatVec defect = to_dense(ba, dim);
                for (const auto& [k, c] : ab) defect[k] -= c;
                rep.holds = false;
                rep.witness = IdentityWitness{{a, b},
                                              {env.label(a), env.label(b)},
                                              std::move(defect),
                                              "envelope commutativity"};
                return rep;
            }
        }

    // linearized Jordan identity:
    // ((ac)b)d + ((ad)b)c + ((cd)b)a = (ac)(bd) + (ad)(bc) + (cd)(ba)
    EnvAccum tmp(dim), defect(dim);
    for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b)
            for (int c = 0; c < dim; ++c)
                for (int d = 0; d < dim; ++d) {
                    defect.clear();
                    SpVec t = env_mult_basis(env, env.rows[a * dim + c], b, tmp);
                    t = env_mult_basis(env, t, d, tmp);
                    for (const auto& [k, v] : t) defect.add(k, v);
                    t = env_mult_basis(env, env.rows[a * dim + d], b, tmp);
                    t = env_mult_basis(env, t, c, tmp);
                    for (const auto& [k, v] : t) defect.add(k, v);
                    t = env_mult_basis(env, env.rows[c * dim + d], b, tmp);
                    t = env_mult_basis(env, t, a, tmp);
                    for (const auto& [k, v] : t) defect.add(k, v);
                    env_mult_pair(env, env.rows[a * dim + c], env.rows[b * dim + d], Rat(-1), defect);
                    env_mult_pair(env, env.rows[a * dim + d], env.rows[b * dim + c], Rat(-1), defect);
                    env_mult_pair(env, env.rows[c * dim + d], env.rows[b * dim + a], Rat(-1), defect);
                    if (!defect.zero()) {
                        rep.holds = false;
                        rep.witness = IdentityWitness{
                            {a, b, c, d},
                            {env.label(a), env.label(b), env.label(c), env.label(d)},
                            defect.dense_copy(dim),
                            "envelope linearized Jordan identity"};
                        return rep;
                    }
                }
    return rep;
}

}  // namespace jsa
