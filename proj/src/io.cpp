#include "jsa/io.hpp"

#include <algorithm>
#include <map>

namespace jsa {

json rat_map(const std::vector<std::string>& names, const RatVec& v) {
    json m = json::object();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!is_zero(v[i])) m[names[i]] = rat_to_string(v[i]);
    return m;
}

RatVec parse_rat_map(const std::vector<std::string>& names, const json& value,
                     const std::string& where) {
    if (!value.is_object()) throw FormatError(where + ": value must be an object");
    RatVec v(names.size());
    for (auto it = value.begin(); it != value.end(); ++it) {
        auto pos = std::find(names.begin(), names.end(), it.key());
        if (pos == names.end()) throw FormatError(where + ": unknown basis name '" + it.key() + "'");
        if (!it.value().is_string()) throw FormatError(where + ": rationals must be strings");
        try {
            v[pos - names.begin()] = rat_from_string(it.value().get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw FormatError(where + ": " + e.what());
        }
    }
    return v;
}

namespace {
std::vector<std::string> parse_names(const json& doc, const char* key) {
    if (!doc.contains(key) || !doc[key].is_array())
        throw FormatError(std::string("missing name list '") + key + "'");
    std::vector<std::string> names;
    for (const auto& n : doc[key]) {
        if (!n.is_string()) throw FormatError(std::string(key) + ": names must be strings");
        names.push_back(n.get<std::string>());
    }
    return names;
}
}  // namespace

json save_superalgebra(const SuperAlgebra& J) {
    json doc;
    json even = json::array(), odd = json::array();
    for (int i = 0; i < J.dim(); ++i) (J.parity(i) ? odd : even).push_back(J.name(i));
    doc["even"] = even;
    doc["odd"] = odd;
    doc["unit"] = J.unit() ? rat_map(J.names(), *J.unit()) : json(nullptr);
    json products = json::array();
    for (int i = 0; i < J.dim(); ++i)
        for (int j = 0; j < J.dim(); ++j) {
            const RatVec& v = J.entry(i, j);
            bool emit;
            if (i <= j) {
                emit = !is_zero_vec(v) || !is_zero_vec(J.entry(j, i));
            } else {
                // reverse order only when Eq. (1) does not already imply it
                emit = v != scale(Rat(sign_pow(J.parity(i) * J.parity(j))), J.entry(j, i));
            }
            if (!emit) continue;
            json p;
            p["left"] = J.name(i);
            p["right"] = J.name(j);
            p["value"] = rat_map(J.names(), v);
            products.push_back(std::move(p));
        }
    doc["products"] = std::move(products);
    return doc;
}

LoadedAlgebra load_superalgebra(const json& doc) {
    if (!doc.is_object()) throw FormatError("superalgebra: document must be an object");
    std::vector<std::string> even = parse_names(doc, "even");
    std::vector<std::string> odd = parse_names(doc, "odd");
    std::vector<std::string> names = even;
    names.insert(names.end(), odd.begin(), odd.end());
    const int dim = static_cast<int>(names.size());
    const int ne = static_cast<int>(even.size());
    auto index = [&](const std::string& n, const std::string& where) {
        auto pos = std::find(names.begin(), names.end(), n);
        if (pos == names.end()) throw FormatError(where + ": unknown basis name '" + n + "'");
        return static_cast<int>(pos - names.begin());
    };
    auto parity = [&](int i) { return i < ne ? 0 : 1; };

    std::vector<RatVec> table(static_cast<std::size_t>(dim) * dim, RatVec(dim));
    std::map<std::pair<int, int>, bool> given;
    if (!doc.contains("products") || !doc["products"].is_array())
        throw FormatError("superalgebra: missing products array");
    for (const auto& p : doc["products"]) {
        if (!p.is_object() || !p.contains("left") || !p.contains("right") || !p.contains("value"))
            throw FormatError("superalgebra: product entries need left/right/value");
        const int i = index(p["left"].get<std::string>(), "product");
        const int j = index(p["right"].get<std::string>(), "product");
        if (given.count({i, j}))
            throw FormatError("superalgebra: duplicate product (" + names[i] + "," + names[j] + ")");
        given[{i, j}] = true;
        table[i * dim + j] =
            parse_rat_map(names, p["value"], "product(" + names[i] + "," + names[j] + ")");
    }
    std::vector<std::pair<std::string, std::string>> inferred;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            const bool gij = given.count({i, j}) > 0, gji = given.count({j, i}) > 0;
            const int sgn = sign_pow(parity(i) * parity(j));
            if (gij && gji) {
                if (i <= j && table[j * dim + i] != scale(Rat(sgn), table[i * dim + j]))
                    throw FormatError("superalgebra: products (" + names[i] + "," + names[j] +
                                      ") and reverse violate supercommutativity");
            } else if (gij && !gji && i != j) {
                table[j * dim + i] = scale(Rat(sgn), table[i * dim + j]);
                inferred.emplace_back(names[j], names[i]);
            }
        }
    std::optional<RatVec> unit;
    if (doc.contains("unit") && !doc["unit"].is_null())
        unit = parse_rat_map(names, doc["unit"], "unit");
    try {
        return LoadedAlgebra{SuperAlgebra(even, odd, std::move(table), std::move(unit)),
                             std::move(inferred)};
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("superalgebra: ") + e.what());
    }
}

json save_subspace(const SuperAlgebra& J, const Subspace& s) {
    json doc;
    json vecs = json::array();
    for (const RatVec& v : s.basis) vecs.push_back(rat_map(J.names(), v));
    doc["vectors"] = std::move(vecs);
    return doc;
}

Subspace load_subspace(const SuperAlgebra& J, const json& doc) {
    if (!doc.is_object() || !doc.contains("vectors") || !doc["vectors"].is_array())
        throw FormatError("subspace: missing vectors array");
    std::vector<RatVec> span;
    for (const auto& v : doc["vectors"]) span.push_back(parse_rat_map(J.names(), v, "subspace"));
    return Subspace::from_spanning(J.dim(), span);
}

json save_bimodule(const SuperBimodule& M) {
    json doc;
    json even = json::array(), odd = json::array();
    for (int c = 0; c < M.mdim(); ++c) (M.parity(c) ? odd : even).push_back(M.name(c));
    doc["module_even"] = even;
    doc["module_odd"] = odd;
    json action = json::array();
    for (int i = 0; i < M.base().dim(); ++i)
        for (int c = 0; c < M.mdim(); ++c) {
            if (is_zero_vec(M.act(i, c))) continue;
            json a;
            a["alg"] = M.base().name(i);
            a["mod"] = M.name(c);
            a["value"] = rat_map(M.names(), M.act(i, c));
            action.push_back(std::move(a));
        }
    doc["action"] = std::move(action);
    return doc;
}

SuperBimodule load_bimodule(const SuperAlgebra& J, const json& doc) {
    if (!doc.is_object()) throw FormatError("bimodule: document must be an object");
    std::vector<std::string> even = parse_names(doc, "module_even");
    std::vector<std::string> odd = parse_names(doc, "module_odd");
    std::vector<std::string> names = even;
    names.insert(names.end(), odd.begin(), odd.end());
    const int md = static_cast<int>(names.size());
    std::vector<RatVec> action(static_cast<std::size_t>(J.dim()) * md, RatVec(md));
    if (!doc.contains("action") || !doc["action"].is_array())
        throw FormatError("bimodule: missing action array");
    for (const auto& a : doc["action"]) {
        if (!a.is_object() || !a.contains("alg") || !a.contains("mod") || !a.contains("value"))
            throw FormatError("bimodule: action entries need alg/mod/value");
        const std::string an = a["alg"].get<std::string>();
        const int i = J.index_of(an);
        if (i < 0) throw FormatError("bimodule: unknown algebra basis name '" + an + "'");
        const std::string mn = a["mod"].get<std::string>();
        auto pos = std::find(names.begin(), names.end(), mn);
        if (pos == names.end()) throw FormatError("bimodule: unknown module name '" + mn + "'");
        action[i * md + (pos - names.begin())] =
            parse_rat_map(names, a["value"], "action(" + an + "," + mn + ")");
    }
    try {
        return SuperBimodule(J, std::move(even), std::move(odd), std::move(action));
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("bimodule: ") + e.what());
    }
}

json save_cocycle(const SuperAlgebra& J, const SuperBimodule& M, const Cocycle& mu) {
    json doc;
    json pairs = json::array();
    for (const auto& [key, val] : mu.values()) {
        json p;
        p["left"] = J.name(key.first);
        p["right"] = J.name(key.second);
        p["value"] = rat_map(M.names(), val);
        pairs.push_back(std::move(p));
    }
    doc["pairs"] = std::move(pairs);
    return doc;
}

Cocycle load_cocycle(const SuperAlgebra& J, const SuperBimodule& M, const json& doc) {
    if (!doc.is_object() || !doc.contains("pairs") || !doc["pairs"].is_array())
        throw FormatError("cocycle: missing pairs array");
    Cocycle mu(J.dim(), M.mdim());
    for (const auto& p : doc["pairs"]) {
        if (!p.is_object() || !p.contains("left") || !p.contains("right") || !p.contains("value"))
            throw FormatError("cocycle: pair entries need left/right/value");
        const int i = J.index_of(p["left"].get<std::string>());
        const int j = J.index_of(p["right"].get<std::string>());
        if (i < 0 || j < 0) throw FormatError("cocycle: unknown basis name");
        try {
            mu.set(J, i, j, parse_rat_map(M.names(), p["value"], "cocycle"));
        } catch (const std::invalid_argument& e) {
            throw FormatError(std::string("cocycle: ") + e.what());
        }
    }
    try {
        validate_cocycle(J, M, mu);
    } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("cocycle: ") + e.what());
    }
    return mu;
}

}  // namespace jsa
