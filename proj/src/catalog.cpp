#include "jsa/catalog.hpp"

#include <stdexcept>

#include "jsa/bimodule.hpp"
#include "jsa/cliffordweyl.hpp"

namespace jsa {

SuperAlgebra build_K10() {
    SuperAlgebraBuilder b({"e", "v1", "v2", "v3", "v4", "f"}, {"x1", "x2", "y1", "y2"});
    const Rat half(1, 2);
    b.set_sym("e", "e", {{"e", 1}});
    b.set_sym("f", "f", {{"f", 1}});
    for (const char* v : {"v1", "v2", "v3", "v4"}) b.set_sym("e", v, {{v, 1}});
    b.set_sym("v1", "v2", {{"e", 2}});
    b.set_sym("v3", "v4", {{"e", 2}});
    for (const char* z : {"x1", "x2", "y1", "y2"}) {
        b.set_sym("e", z, {{z, half}});
        b.set_sym("f", z, {{z, half}});
    }
    b.set_sym("y1", "v1", {{"x2", 1}});
    b.set_sym("y2", "v1", {{"x1", -1}});
    b.set_sym("x1", "v2", {{"y2", -1}});
    b.set_sym("x2", "v2", {{"y1", 1}});
    b.set_sym("x2", "v3", {{"x1", 1}});
    b.set_sym("y1", "v3", {{"y2", 1}});
    b.set_sym("x1", "v4", {{"x2", 1}});
    b.set_sym("y2", "v4", {{"y1", 1}});
    b.set_sym("x1", "x2", {{"v1", 1}});
    b.set_sym("x1", "y2", {{"v3", 1}});
    b.set_sym("x2", "y1", {{"v4", 1}});
    b.set_sym("y1", "y2", {{"v2", 1}});
    b.set_sym("x1", "y1", {{"e", 1}, {"f", -3}});
    b.set_sym("x2", "y2", {{"e", 1}, {"f", -3}});
    b.set_unit({{"e", 1}, {"f", 1}});
    return b.build();
}

SuperAlgebra build_Dt(const Rat& t) {
    SuperAlgebraBuilder b({"e1", "e2"}, {"x", "y"});
    const Rat half(1, 2);
    b.set_sym("e1", "e1", {{"e1", 1}});
    b.set_sym("e2", "e2", {{"e2", 1}});
    for (const char* z : {"x", "y"}) {
        b.set_sym("e1", z, {{z, half}});
        b.set_sym("e2", z, {{z, half}});
    }
    b.set_sym("x", "y", {{"e1", 1}, {"e2", t}});
    b.set_unit({{"e1", 1}, {"e2", 1}});
    return b.build();
}

SuperAlgebra build_K3() {
    SuperAlgebraBuilder b({"e"}, {"x", "y"});
    const Rat half(1, 2);
    b.set_sym("e", "e", {{"e", 1}});
    b.set_sym("e", "x", {{"x", half}});
    b.set_sym("e", "y", {{"y", half}});
    b.set_sym("x", "y", {{"e", 1}});
    return b.build();
}

SuperAlgebra build_K3_hull() { return unital_hull(build_K3()); }

SuperAlgebra build_superform(int n, int m) {
    if (n < 2 || m < 1) throw std::invalid_argument("build_superform: need n >= 2, m >= 1");
    std::vector<std::string> even{"1"}, odd;
    for (int i = 1; i <= n; ++i) even.push_back("v" + std::to_string(i));
    for (int p = 1; p <= 2 * m; ++p) odd.push_back("w" + std::to_string(p));
    SuperAlgebraBuilder b(std::move(even), std::move(odd));
    for (int i = 1; i <= n; ++i)
        b.set_sym("v" + std::to_string(i), "v" + std::to_string(i), {{"1", 1}});
    for (int p = 1; p <= m; ++p)
        b.set_sym("w" + std::to_string(2 * p - 1), "w" + std::to_string(2 * p), {{"1", 1}});
    for (int i = 0; i < b.dim(); ++i) {
        RatVec e(b.dim());
        e[i] = 1;
        b.set(0, i, e);
        b.set(i, 0, std::move(e));
    }
    b.set_unit({{"1", 1}});
    return b.build();
}

namespace {

CounterexampleResult superform_counterexample(int n, int m, bool u_twisted) {
    SuperBimodule M = u_twisted ? clifford_quotient_bimodule_u(n, m, n)
                                : clifford_quotient_bimodule(n, m, n);
    const SuperAlgebra& J = M.base();
    // perturbation w1*w2 = 1 + (u)v1..vn
    CWMonomial top;
    top.u = u_twisted;
    top.I.assign(n, 1);
    top.K.assign(2 * m, 0);
    const int tc = M.index_of(top.name());
    if (tc < 0) throw std::logic_error("superform counterexample: top monomial not in window");
    Cocycle mu(J.dim(), M.mdim());
    RatVec val(M.mdim());
    val[tc] = 1;
    mu.set(J, J.index_of("w1"), J.index_of("w2"), std::move(val));

    IdentityReport rep = check_extension_jordan(J, M, mu);
    if (!rep.holds)
        throw std::logic_error("superform counterexample: extension is not Jordan");

    SuperAlgebra E = build_extension(J, M, mu);
    std::vector<RatVec> rad_span;
    for (int col : extension_module_columns(J, M)) {
        RatVec v(E.dim());
        v[col] = 1;
        rad_span.push_back(std::move(v));
    }
    return CounterexampleResult{std::move(E), Subspace::from_spanning(E.dim(), rad_span)};
}

}  // namespace

CounterexampleResult counterexample_superform_odd(int n, int m) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("counterexample_superform_odd: need odd n >= 3");
    if (m < 1) throw std::invalid_argument("counterexample_superform_odd: need m >= 1");
    return superform_counterexample(n, m, false);
}

CounterexampleResult counterexample_superform_even(int n, int m) {
    if (n < 2 || n % 2 == 1)
        throw std::invalid_argument("counterexample_superform_even: need even n >= 2");
    if (m < 1) throw std::invalid_argument("counterexample_superform_even: need m >= 1");
    return superform_counterexample(n, m, true);
}

CounterexampleResult counterexample_Dt(const Rat& t) {
    SuperAlgebra J = build_Dt(t);
    // regular bimodule with the section 6.3 names a1, a2 | v, w
    std::vector<RatVec> action(static_cast<std::size_t>(J.dim()) * J.dim());
    for (int i = 0; i < J.dim(); ++i)
        for (int c = 0; c < J.dim(); ++c) action[i * J.dim() + c] = J.entry(i, c);
    SuperBimodule M(J, {"a1", "a2"}, {"v", "w"}, std::move(action));

    Cocycle mu(J.dim(), M.mdim());
    RatVec val(M.mdim());
    val[M.index_of("a1")] = 1;
    val[M.index_of("a2")] = Rat(-2) - t;
    mu.set(J, J.index_of("x"), J.index_of("y"), std::move(val));

    IdentityReport rep = check_extension_jordan(J, M, mu);
    if (!rep.holds) throw std::logic_error("counterexample_Dt: extension is not Jordan");

    SuperAlgebra E = build_extension(J, M, mu);
    std::vector<RatVec> rad_span;
    for (int col : extension_module_columns(J, M)) {
        RatVec v(E.dim());
        v[col] = 1;
        rad_span.push_back(std::move(v));
    }
    return CounterexampleResult{std::move(E), Subspace::from_spanning(E.dim(), rad_span)};
}

}  // namespace jsa
