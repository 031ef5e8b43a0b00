// jsa: exact-arithmetic toolkit for finite-dimensional Jordan superalgebras.
//
// Machine-readable JSON goes to stdout, human-readable notes to stderr.
// Exit codes: 0 property holds / splitting found, 2 property fails /
// obstruction, 1 usage or format error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "jsa/catalog.hpp"
#include "jsa/cohomology.hpp"
#include "jsa/grassmann.hpp"
#include "jsa/io.hpp"

namespace {

using jsa::json;

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw jsa::FormatError("cannot open '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw jsa::FormatError("cannot parse '" + path + "': " + e.what());
    }
    return doc;
}

void write_file(const std::string& path, const json& doc) {
    std::ofstream out(path);
    if (!out) throw jsa::FormatError("cannot write '" + path + "'");
    out << doc.dump(2) << "\n";
}

json witness_json(const jsa::SuperAlgebra& J, const jsa::IdentityReport& rep) {
    if (!rep.witness) return nullptr;
    json w;
    w["check"] = rep.check;
    w["relation"] = rep.witness->relation;
    w["elements"] = rep.witness->labels;
    if (rep.witness->defect.size() == static_cast<std::size_t>(J.dim()))
        w["defect"] = jsa::rat_map(J.names(), rep.witness->defect);
    return w;
}

// "e1+e2", "e", "1/2*x + y" over basis names
jsa::RatVec parse_element(const jsa::SuperAlgebra& J, const std::string& text) {
    jsa::RatVec v(J.dim());
    std::string term;
    std::vector<std::pair<int, std::string>> terms;  // sign, body
    int sign = 1;
    auto flush = [&]() {
        if (!term.empty()) terms.emplace_back(sign, term);
        term.clear();
    };
    for (char ch : text) {
        if (ch == ' ') continue;
        if (ch == '+') {
            flush();
            sign = 1;
        } else if (ch == '-') {
            flush();
            sign = -1;
        } else {
            term += ch;
        }
    }
    flush();
    for (const auto& [sgn, body] : terms) {
        jsa::Rat coeff(sgn);
        std::string name = body;
        auto star = body.find('*');
        if (star != std::string::npos) {
            coeff *= jsa::rat_from_string(body.substr(0, star));
            name = body.substr(star + 1);
        }
        const int idx = J.index_of(name);
        if (idx < 0) throw jsa::FormatError("unknown basis element '" + name + "'");
        v[idx] += coeff;
    }
    return v;
}

int cmd_catalog(const std::string& name, const std::string& out, const std::string& radical_out,
                const jsa::Rat& t, int n, int m) {
    jsa::SuperAlgebra alg = jsa::build_K3();  // placeholder, reassigned below
    std::optional<jsa::Subspace> radical;
    if (name == "k10") {
        alg = jsa::build_K10();
    } else if (name == "k3") {
        alg = jsa::build_K3();
    } else if (name == "k3-hull") {
        alg = jsa::build_K3_hull();
    } else if (name == "dt") {
        alg = jsa::build_Dt(t);
    } else if (name == "superform") {
        alg = jsa::build_superform(n, m);
    } else if (name == "cx-superform-odd") {
        auto r = jsa::counterexample_superform_odd(n, m);
        alg = r.algebra;
        radical = r.radical;
    } else if (name == "cx-superform-even") {
        auto r = jsa::counterexample_superform_even(n, m);
        alg = r.algebra;
        radical = r.radical;
    } else if (name == "cx-dt") {
        auto r = jsa::counterexample_Dt(t);
        alg = r.algebra;
        radical = r.radical;
        if (t == jsa::Rat(-1))
            std::cerr << "note: t = -1 lies outside the obstruction hypothesis; "
                         "this extension splits\n";
    } else {
        std::cerr << "unknown catalog name '" << name << "'\n";
        return 1;
    }
    write_file(out, jsa::save_superalgebra(alg));
    std::cerr << "wrote " << out << " (dim " << alg.dim() << ")\n";
    if (radical) {
        if (radical_out.empty()) {
            std::cerr << "catalog " << name << " requires --radical FILE\n";
            return 1;
        }
        write_file(radical_out, jsa::save_subspace(alg, *radical));
        std::cerr << "wrote " << radical_out << " (dim " << radical->dim() << ")\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with finite-dimensional Jordan superalgebras"};
    app.require_subcommand(1);

    std::string cat_name, out_path, radical_path;
    std::string t_str = "0";
    int n = 3, m = 1;
    auto* cat = app.add_subcommand("catalog", "emit a catalog superalgebra as JSON");
    cat->add_option("name", cat_name,
                    "k10|k3|k3-hull|dt|superform|cx-superform-odd|cx-superform-even|cx-dt")
        ->required();
    cat->add_option("-o,--out", out_path, "output file")->required();
    cat->add_option("--radical", radical_path, "radical output file (counterexamples)");
    cat->add_option("--t", t_str, "parameter t as a rational (dt, cx-dt)");
    cat->add_option("--n", n, "superform even dimension");
    cat->add_option("--m", m, "superform odd dimension parameter (dim V1 = 2m)");

    std::string verify_file;
    int envelope_g = 0;
    auto* ver = app.add_subcommand("verify", "check the defining superidentities");
    ver->add_option("file", verify_file, "superalgebra file")->required();
    ver->add_option("--envelope", envelope_g, "also cross-check via the Grassmann envelope")
        ->check(CLI::Range(2, 8));

    std::string wpt_efile, wpt_nfile;
    auto* wpt = app.add_subcommand("wpt", "decide Wedderburn splitting of a square-zero extension");
    wpt->add_option("extension", wpt_efile, "extension algebra file")->required();
    wpt->add_option("radical", wpt_nfile, "radical subspace file")->required();

    std::string h2_jfile, h2_mfile;
    auto* h2 = app.add_subcommand("h2", "second cohomology dimensions");
    h2->add_option("algebra", h2_jfile, "base algebra file")->required();
    h2->add_option("module", h2_mfile, "bimodule file")->required();

    std::string pe_file, pe_idem;
    auto* pe = app.add_subcommand("peirce", "Peirce decomposition for orthogonal idempotents");
    pe->add_option("file", pe_file, "superalgebra file")->required();
    pe->add_option("--idempotents", pe_idem, "comma-separated idempotents, e.g. \"e,f\" or \"e1+e2\"")
        ->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cat) return cmd_catalog(cat_name, out_path, radical_path, jsa::rat_from_string(t_str), n, m);

        if (*ver) {
            jsa::LoadedAlgebra loaded = jsa::load_superalgebra(load_file(verify_file));
            const jsa::SuperAlgebra& J = loaded.algebra;
            for (const auto& [l, r] : loaded.inferred)
                std::cerr << "note: product (" << l << "," << r << ") inferred from Eq. (1)\n";
            jsa::IdentityReport sc = jsa::check_supercommutativity(J);
            jsa::IdentityReport sj = sc.holds ? jsa::check_super_jordan(J) : jsa::IdentityReport{};
            json rep;
            rep["supercommutative"] = sc.holds;
            rep["super_jordan"] = sc.holds ? json(sj.holds) : json(nullptr);
            rep["envelope"] = nullptr;
            rep["witness"] = nullptr;
            bool ok = sc.holds && sj.holds;
            if (!sc.holds)
                rep["witness"] = witness_json(J, sc);
            else if (!sj.holds)
                rep["witness"] = witness_json(J, sj);
            if (ok && envelope_g >= 2) {
                jsa::IdentityReport env = jsa::grassmann_envelope_check(J, envelope_g);
                rep["envelope"] = env.holds;
                if (!env.holds) {
                    json w;
                    w["check"] = env.check;
                    w["relation"] = env.witness ? env.witness->relation : "";
                    w["elements"] = env.witness ? json(env.witness->labels) : json::array();
                    rep["witness"] = w;
                    ok = false;
                }
            }
            std::cout << rep.dump(2) << "\n";
            std::cerr << (ok ? "identities hold" : "identities fail") << "\n";
            return ok ? 0 : 2;
        }

        if (*wpt) {
            jsa::LoadedAlgebra loaded = jsa::load_superalgebra(load_file(wpt_efile));
            const jsa::SuperAlgebra& E = loaded.algebra;
            jsa::Subspace N = jsa::load_subspace(E, load_file(wpt_nfile));
            std::optional<jsa::ExtensionParts> parts_opt;
            try {
                parts_opt = jsa::decompose_extension(E, N);
            } catch (const std::invalid_argument& e) {
                std::cerr << "precondition: " << e.what() << "\n";
                return 1;
            }
            const jsa::ExtensionParts& parts = *parts_opt;
            jsa::SplittingResult res = jsa::solve_splitting_cocycle(parts.base, parts.mod, parts.mu);
            json rep;
            rep["dims"] = nullptr;
            if (jsa::splitting_feasible(res)) {
                const auto& s = std::get<jsa::Splitting>(res);
                jsa::IdentityReport chk = jsa::verify_splitting(E, N, s);
                json corr = json::object(), lifts = json::object();
                for (int i = 0; i < parts.base.dim(); ++i) {
                    corr[parts.base.name(i)] = jsa::rat_map(parts.mod.names(), s.corrections[i]);
                    jsa::RatVec lift = parts.section[i];
                    for (int c = 0; c < parts.mod.mdim(); ++c)
                        if (!jsa::is_zero(s.corrections[i][c]))
                            lift = jsa::add(lift, jsa::scale(s.corrections[i][c], parts.nbasis[c]));
                    lifts[parts.base.name(i)] = jsa::rat_map(E.names(), lift);
                }
                rep["feasible"] = true;
                rep["corrections"] = corr;
                rep["lifts"] = lifts;
                rep["witness"] = nullptr;
                rep["verified"] = chk.holds;
                std::cout << rep.dump(2) << "\n";
                std::cerr << "splitting found" << (chk.holds ? " and verified" : ", VERIFY FAILED")
                          << "\n";
                return chk.holds ? 0 : 2;
            }
            const auto& obs = std::get<jsa::Obstruction>(res);
            json w;
            json mult = json::object();
            for (std::size_t r = 0; r < obs.multipliers.size(); ++r)
                if (!jsa::is_zero(obs.multipliers[r]))
                    mult[obs.row_labels[r]] = jsa::rat_to_string(obs.multipliers[r]);
            w["multipliers"] = mult;
            w["rhs_dot"] = jsa::rat_to_string(jsa::dot(obs.multipliers, obs.rhs));
            w["inconsistent_row"] = obs.inconsistent_row;
            rep["feasible"] = false;
            rep["corrections"] = nullptr;
            rep["witness"] = w;
            std::cout << rep.dump(2) << "\n";
            std::cerr << "obstruction: no splitting exists\n";
            return 2;
        }

        if (*h2) {
            jsa::LoadedAlgebra loaded = jsa::load_superalgebra(load_file(h2_jfile));
            const jsa::SuperAlgebra& J = loaded.algebra;
            jsa::SuperBimodule M = jsa::load_bimodule(J, load_file(h2_mfile));
            jsa::H2Dims dims = jsa::h2_dimensions(J, M);
            json rep;
            rep["feasible"] = nullptr;
            rep["corrections"] = nullptr;
            rep["witness"] = nullptr;
            rep["dims"] = {{"Z2", dims.z2}, {"B2", dims.b2}, {"H2", dims.h2}};
            std::cout << rep.dump(2) << "\n";
            std::cerr << "Z2 " << dims.z2 << ", B2 " << dims.b2 << ", H2 " << dims.h2 << "\n";
            return 0;
        }

        if (*pe) {
            jsa::LoadedAlgebra loaded = jsa::load_superalgebra(load_file(pe_file));
            const jsa::SuperAlgebra& J = loaded.algebra;
            std::vector<jsa::Element> idem;
            std::string cur;
            std::vector<std::string> parts_str;
            for (char ch : pe_idem) {
                if (ch == ',') {
                    parts_str.push_back(cur);
                    cur.clear();
                } else {
                    cur += ch;
                }
            }
            parts_str.push_back(cur);
            for (const std::string& s : parts_str) idem.push_back(jsa::Element{parse_element(J, s)});
            jsa::PeirceResult res;
            try {
                res = jsa::peirce_decomposition(J, idem);
            } catch (const std::invalid_argument& e) {
                std::cerr << "precondition: " << e.what() << "\n";
                return 1;
            }
            json comps = json::object();
            for (const auto& [key, sub] : res.components) {
                json c;
                c["dim"] = sub.dim();
                json basis = json::array();
                for (const jsa::RatVec& v : sub.basis) basis.push_back(jsa::rat_map(J.names(), v));
                c["basis"] = basis;
                comps["J_" + std::to_string(key.first + 1) + std::to_string(key.second + 1)] = c;
            }
            json rep;
            rep["components"] = comps;
            rep["relations_hold"] = res.report.holds;
            if (!res.report.holds && res.report.witness)
                rep["violation"] = res.report.witness->relation;
            std::cout << rep.dump(2) << "\n";
            std::cerr << (res.report.holds ? "Peirce relations hold" : "Peirce relations fail") << "\n";
            return res.report.holds ? 0 : 2;
        }
    } catch (const jsa::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
