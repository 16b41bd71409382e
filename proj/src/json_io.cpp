#include "koszul/json_io.hpp"

namespace koszul {

Json algebra_element_to_json(const Algebra& alg, const AlgebraElement& elt) {
    Json terms = Json::array();
    for (const auto& [w, coords] : elt.comps) {
        const GradedPiece& gp = alg.graded_piece(w);
        for (const auto& [pos, coeff] : coords) {
            Json term;
            term["path"] = alg.paths(w)[gp.normal[pos]].str(alg.quiver());
            term["coeff"] = coeff.str();
            terms.push_back(std::move(term));
        }
    }
    return terms;
}

AlgebraElement algebra_element_from_json(const Algebra& alg, const Json& terms) {
    if (!terms.is_array()) throw ValidationError("term list must be a JSON array");
    AlgebraElement out;
    for (const Json& term : terms) {
        if (!term.contains("path")) throw ValidationError("term needs a \"path\"");
        Path p = parse_path(alg.quiver(), term.at("path").get<std::string>());
        Scalar coeff = alg.field().one();
        if (term.contains("coeff")) {
            coeff = alg.field().parse(term.at("coeff").get<std::string>());
        }
        TensorElement t;
        t.degree = p.degree();
        t.add_term(p, coeff);
        out = ae_add(out, alg.reduce(t));
    }
    return out;
}

Json cochain_to_json(const Context& c, const Cochain& x) {
    Json j;
    j["n"] = x.degree;
    Json values = Json::array();
    for (const AlgebraElement& v : x.values) {
        values.push_back(algebra_element_to_json(c.alg, v));
    }
    j["values"] = std::move(values);
    return j;
}

Cochain cochain_from_json(const Context& c, const Json& j) {
    if (!j.contains("n") || !j.contains("values")) {
        throw ValidationError("cochain JSON needs \"n\" and \"values\"");
    }
    Cochain x;
    x.degree = j.at("n").get<int>();
    if (x.degree < 0 || x.degree > c.res.top()) {
        throw ValidationError("cochain degree outside the computed levels");
    }
    for (const Json& terms : j.at("values")) {
        x.values.push_back(algebra_element_from_json(c.alg, terms));
    }
    validate_cochain(c, x);
    return x;
}

Json class_to_json(const CohomologyClass& cls) {
    if (cls.is_zero()) return Json("zero");
    Json weights = Json::array();
    for (const auto& [w, coords] : cls.coords) {
        Json entry;
        entry["weight"] = w;
        Json cs = Json::array();
        for (const auto& [i, coeff] : coords) {
            cs.push_back(Json{{"index", i}, {"coeff", coeff.str()}});
        }
        entry["coords"] = std::move(cs);
        weights.push_back(std::move(entry));
    }
    return Json{{"weights", std::move(weights)}};
}

Json hh_dims_to_json(const HHDims& dims) {
    Json j;
    j["n"] = dims.n;
    j["weight"] = dims.weight;
    j["dim_ker"] = dims.dim_ker;
    j["dim_im"] = dims.dim_im;
    j["dim_hh"] = dims.dim_hh;
    return j;
}

Json slice_to_json(const ComultSlice& slice) {
    Json j;
    j["n"] = slice.n;
    j["r"] = slice.r;
    Json entries = Json::array();
    for (const auto& [key, coeff] : slice.coeffs) {
        const auto& [i, p, q] = key;
        entries.push_back(Json{{"i", i}, {"p", p}, {"q", q}, {"coeff", coeff.str()}});
    }
    j["entries"] = std::move(entries);
    return j;
}

Json dual_table_to_json(const Context& c, int m, int n) {
    Json j;
    j["m"] = m;
    j["n"] = n;
    const ComultSlice& slice = c.comult.slice(m + n, n);
    // sort by (i, j, l): slice keys are (l, j, i)
    std::map<std::tuple<int, int, int>, Scalar> sorted;
    for (const auto& [key, coeff] : slice.coeffs) {
        const auto& [l, p, q] = key;
        sorted.emplace(std::tuple{q, p, l}, coeff);
    }
    Json entries = Json::array();
    for (const auto& [key, coeff] : sorted) {
        const auto& [i, jj, l] = key;
        entries.push_back(Json{{"i", i}, {"j", jj}, {"l", l}, {"coeff", coeff.str()}});
    }
    j["entries"] = std::move(entries);
    return j;
}

Json ext_to_json(const ExtElement& e) {
    Json coords = Json::array();
    for (const auto& [i, coeff] : e.coords) {
        coords.push_back(Json{{"index", i}, {"coeff", coeff.str()}});
    }
    return Json{{"degree", e.degree}, {"coords", std::move(coords)}};
}

Json resolution_to_json(const Context& c, int maxn) {
    Json j;
    Json t = Json::array();
    Json gens = Json::array();
    for (int n = 0; n <= maxn; ++n) {
        const ResolutionLevel& level = c.res.level(n);
        t.push_back(level.count() - 1);
        Json here = Json::array();
        for (int i = 0; i < level.count(); ++i) {
            Json g;
            g["source"] = c.alg.quiver().vertices[level.endpoints[i].first];
            g["target"] = c.alg.quiver().vertices[level.endpoints[i].second];
            Json terms = Json::array();
            for (const auto& [path, coeff] : level.gens[i].terms) {
                terms.push_back(
                    Json{{"path", path.str(c.alg.quiver())}, {"coeff", coeff.str()}});
            }
            g["terms"] = std::move(terms);
            here.push_back(std::move(g));
        }
        gens.push_back(std::move(here));
    }
    j["t"] = std::move(t);
    j["generators"] = std::move(gens);
    return j;
}

Json centre_to_json(const Context& c, int maxn) {
    Json dims = Json::array();
    Json basis = Json::array();
    for (int n = 0; n <= maxn; ++n) {
        std::vector<ExtElement> zs = graded_centre(c, n);
        dims.push_back(static_cast<int>(zs.size()));
        Json here = Json::array();
        for (const ExtElement& z : zs) {
            Json coords = Json::array();
            for (const auto& [i, coeff] : z.coords) {
                coords.push_back(Json{{"index", i}, {"coeff", coeff.str()}});
            }
            here.push_back(std::move(coords));
        }
        basis.push_back(std::move(here));
    }
    return Json{{"dims", std::move(dims)}, {"basis", std::move(basis)}};
}

}  // namespace koszul
