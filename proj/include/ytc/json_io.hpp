#ifndef YTC_JSON_IO_HPP
#define YTC_JSON_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "ytc/complex.hpp"
#include "ytc/decomp.hpp"
#include "ytc/formulas.hpp"
#include "ytc/homology.hpp"
#include "ytc/homotopy.hpp"
#include "ytc/pathideal.hpp"

namespace ytc {

using nlohmann::json;

// {"status":"proper","facets":[[1,2],[2,3]],"universe":[1,2,3]}
inline json complex_to_json(const SimplicialComplex& c) {
    json j;
    j["status"] = status_name(c.status());
    j["facets"] = json::array();
    for (const Face& f : c.facets()) j["facets"].push_back(f);
    j["universe"] = mask_to_vertices(c.universe());
    return j;
}

inline SimplicialComplex complex_from_json(const json& j) {
    const std::string status = j.at("status").get<std::string>();
    Mask universe = vertices_to_mask(j.value("universe", std::vector<int>{}));
    if (status == "void") return SimplicialComplex::void_complex();
    if (status == "irrelevant") return SimplicialComplex::irrelevant_complex(universe);
    std::vector<Face> facets;
    for (const auto& f : j.at("facets")) facets.push_back(f.get<Face>());
    if (universe == 0) return SimplicialComplex::from_facets(facets);
    return SimplicialComplex::from_facets(facets, universe);
}

// {"type":"wedge","spheres":{"1":3,"2":1}} or {"type":"contractible"}
inline json homotopy_to_json(const HomotopyClass& h) {
    json j;
    if (h.is_contractible()) {
        j["type"] = "contractible";
        return j;
    }
    j["type"] = "wedge";
    json spheres = json::object();
    for (auto& [d, m] : h.spheres()) spheres[std::to_string(d)] = m;
    j["spheres"] = spheres;
    return j;
}

inline HomotopyClass homotopy_from_json(const json& j) {
    if (j.at("type").get<std::string>() == "contractible") return HomotopyClass::contractible();
    HomotopyClass h = HomotopyClass::contractible();
    for (auto& [key, value] : j.at("spheres").items())
        h = wedge(h, HomotopyClass::sphere(std::stoi(key), value.get<long long>()));
    return h;
}

// {"-1":0,"0":1,"1":3}: every degree from -1 to the top nonzero degree
inline json betti_to_json(const BettiVector& b) {
    json j = json::object();
    int top = std::max(b.max_nonzero_degree(), -1);
    for (int d = -1; d <= top; ++d) j[std::to_string(d)] = b.betti(d);
    return j;
}

inline BettiVector betti_from_json(const json& j) {
    BettiVector b;
    for (auto& [key, value] : j.items()) b.set(std::stoi(key), value.get<long long>());
    return b;
}

// {"entries":[{"i":1,"sigma":[1,2,3,4],"beta":1},...]}
inline json betti_table_to_json(const GradedBettiTable& t) {
    json j;
    j["universe"] = mask_to_vertices(t.universe);
    j["field"] = field_name(t.field);
    j["entries"] = json::array();
    for (auto& [key, value] : t.entries) {
        json e;
        e["i"] = key.first;
        e["sigma"] = mask_to_vertices(key.second);
        e["beta"] = value;
        j["entries"].push_back(e);
    }
    return j;
}

inline GradedBettiTable betti_table_from_json(const json& j) {
    GradedBettiTable t;
    t.universe = vertices_to_mask(j.value("universe", std::vector<int>{}));
    t.field = j.value("field", std::string("q")) == "gf2" ? Field::GF2 : Field::Rationals;
    for (const auto& e : j.at("entries")) {
        t.entries[{e.at("i").get<int>(), vertices_to_mask(e.at("sigma").get<std::vector<int>>())}] =
            e.at("beta").get<long long>();
    }
    return t;
}

// {"n":9,"t":2,"k":3,"supports":[[1,2,3,4,5,6],...]}
inline json monomial_set_to_json(const PathIdealSpec& spec, const std::vector<Face>& supports) {
    json j;
    j["n"] = spec.n;
    j["t"] = spec.t;
    j["k"] = spec.k;
    j["supports"] = json::array();
    for (const Face& s : supports) j["supports"].push_back(s);
    return j;
}

inline std::pair<PathIdealSpec, std::vector<Face>> monomial_set_from_json(const json& j) {
    PathIdealSpec spec{j.at("n").get<int>(), j.at("t").get<int>(), j.at("k").get<int>()};
    std::vector<Face> supports;
    for (const auto& s : j.at("supports")) supports.push_back(s.get<Face>());
    return {spec, supports};
}

inline json vd_tree_to_json(const VdTree& node) {
    json j;
    if (!node.base.empty()) {
        j["base"] = node.base;
        return j;
    }
    j["vertex"] = node.vertex;
    j["link"] = vd_tree_to_json(*node.link_branch);
    j["del"] = vd_tree_to_json(*node.del_branch);
    return j;
}

// {"verdict":true,"kind":"vd","tree":{"vertex":11,"link":{...},"del":{...}}}
inline json certificate_to_json(const DecompCertificate& cert) {
    json j;
    j["verdict"] = cert.verdict;
    j["kind"] = cert.kind;
    if (cert.verdict) {
        if (cert.kind == "vd" && cert.tree) j["tree"] = vd_tree_to_json(*cert.tree);
        if (cert.kind == "shelling") {
            j["order"] = json::array();
            for (const Face& f : cert.shelling_order) j["order"].push_back(f);
        }
    } else {
        j["obstruction_level"] = cert.obstruction_level;
    }
    return j;
}

// {"lemma":"monotone","range":{...},"pass":true,"counterexample":null}
inline json lemma_report_to_json(const LemmaReport& r) {
    json j;
    j["lemma"] = r.lemma;
    j["range"] = {{"max_n", r.bounds.max_n}, {"max_k", r.bounds.max_k}, {"max_t", r.bounds.max_t}};
    j["pass"] = r.pass;
    j["cases"] = r.cases;
    if (r.counterexample) {
        const auto& ce = *r.counterexample;
        j["counterexample"] = {{"n", ce[0]}, {"k", ce[1]}, {"t", ce[2]}, {"i", ce[3]}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

inline json reduction_graph_to_json(const ReductionGraph& g) {
    json j;
    j["n"] = g.n;
    j["k"] = g.k;
    j["t"] = g.t;
    j["vertices"] = json::array();
    for (const auto& v : g.vertices) j["vertices"].push_back({v.m, v.j});
    j["edges"] = json::array();
    for (const auto& e : g.edges)
        j["edges"].push_back({{"from", {e.from.m, e.from.j}},
                              {"to", {e.to.m, e.to.j}},
                              {"label", e.label}});
    j["leaves"] = json::array();
    for (const auto& v : g.leaves) j["leaves"].push_back({v.m, v.j});
    j["terminals"] = json::array();
    for (const auto& v : g.terminals) j["terminals"].push_back({v.m, v.j});
    j["path_counts"] = json::array();
    for (const auto& pc : path_label_counts(g))
        j["path_counts"].push_back(
            {{"m", pc.m}, {"j", pc.j}, {"alpha", pc.alpha}, {"count", pc.count}});
    return j;
}

}  // namespace ytc

#endif
