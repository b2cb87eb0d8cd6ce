#ifndef YTC_DECOMP_HPP
#define YTC_DECOMP_HPP

#include <algorithm>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "ytc/complex.hpp"
#include "ytc/homology.hpp"  // canonical_key

namespace ytc {

// Vertices x whose deletion only removes facets: every facet of del_Δ(x) is
// already a facet of Δ. Ascending order.
inline std::vector<int> shedding_vertices(const SimplicialComplex& c) {
    if (!c.is_proper()) throw DomainError("shedding_vertices: complex must be proper");
    std::vector<int> out;
    for (int v : c.vertices()) {
        SimplicialComplex del = deletion(c, v);
        if (!del.is_proper()) continue;  // deleting the only vertex of ⟨{v}⟩
        bool shedding = true;
        for (Mask f : del.facet_masks()) {
            if (std::find(c.facet_masks().begin(), c.facet_masks().end(), f) ==
                c.facet_masks().end()) {
                shedding = false;
                break;
            }
        }
        if (shedding) out.push_back(v);
    }
    return out;
}

// Recursion tree of a positive vertex-decomposability certificate. A node
// without children records a base case ({∅} or a simplex); otherwise it
// names the shedding vertex and certifies both branches.
struct VdTree {
    std::string base;  // "irrelevant" | "simplex" | "" for inner nodes
    int vertex = -1;
    std::shared_ptr<VdTree> link_branch;
    std::shared_ptr<VdTree> del_branch;
};

struct DecompCertificate {
    bool verdict = false;
    std::string kind;  // "vd" | "shelling"
    std::shared_ptr<VdTree> tree;          // positive vd certificates
    std::vector<Face> shelling_order;      // positive shelling certificates
    int obstruction_level = -1;            // negative verdicts: depth of the first dead end
};

constexpr int kVdVertexCap = 20;

namespace detail {

inline bool vd_verdict(const SimplicialComplex& c);

// Memoized verdicts keyed by relabel-canonical facet structure; shedding
// candidates are tried in ascending vertex order so certificates are
// deterministic.
inline bool vd_verdict_impl(const SimplicialComplex& c) {
    if (c.is_void() || c.is_irrelevant() || c.is_simplex()) return true;
    for (int v : shedding_vertices(c)) {
        if (vd_verdict(link(c, vertices_to_mask({v}))) && vd_verdict(deletion(c, v)))
            return true;
    }
    return false;
}

inline bool vd_verdict(const SimplicialComplex& c) {
    static std::mutex memo_mutex;
    static std::unordered_map<ComplexKey, bool, ComplexKeyHash> memo;
    ComplexKey key = canonical_key(c);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    bool verdict = vd_verdict_impl(c);
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::move(key), verdict);
    return verdict;
}

inline std::shared_ptr<VdTree> vd_tree(const SimplicialComplex& c) {
    auto node = std::make_shared<VdTree>();
    if (c.is_irrelevant() || c.is_void()) {
        node->base = "irrelevant";
        return node;
    }
    if (c.is_simplex()) {
        node->base = "simplex";
        return node;
    }
    for (int v : shedding_vertices(c)) {
        SimplicialComplex lk = link(c, vertices_to_mask({v}));
        SimplicialComplex del = deletion(c, v);
        if (vd_verdict(lk) && vd_verdict(del)) {
            node->vertex = v;
            node->link_branch = vd_tree(lk);
            node->del_branch = vd_tree(del);
            return node;
        }
    }
    return nullptr;  // unreachable when the verdict is positive
}

// Depth of the first subproblem (in search order) with no workable shedding
// vertex.
inline int vd_obstruction(const SimplicialComplex& c, int depth) {
    if (c.is_void() || c.is_irrelevant() || c.is_simplex()) return -1;
    for (int v : shedding_vertices(c)) {
        SimplicialComplex lk = link(c, vertices_to_mask({v}));
        SimplicialComplex del = deletion(c, v);
        if (vd_verdict(lk) && vd_verdict(del)) return -1;
        int sub = vd_obstruction(lk, depth + 1);
        if (sub >= 0) return sub;
        sub = vd_obstruction(del, depth + 1);
        if (sub >= 0) return sub;
    }
    return depth;
}

}  // namespace detail

inline DecompCertificate is_vertex_decomposable(const SimplicialComplex& c) {
    if (c.is_proper() && popcount(c.vertex_mask()) > kVdVertexCap)
        throw CapacityError("is_vertex_decomposable: more than " + std::to_string(kVdVertexCap) +
                            " vertices");
    DecompCertificate cert;
    cert.kind = "vd";
    cert.verdict = detail::vd_verdict(c);
    if (cert.verdict)
        cert.tree = detail::vd_tree(c);
    else
        cert.obstruction_level = detail::vd_obstruction(c, 0);
    return cert;
}

// Replays a positive certificate against the raw definition, with no reuse
// of the recursion: every named vertex must be shedding and both branches
// must certify down to base cases.
inline bool replay_vd_certificate(const SimplicialComplex& c, const VdTree& node) {
    if (node.base == "irrelevant") return c.is_irrelevant() || c.is_void();
    if (node.base == "simplex") return c.is_simplex();
    if (node.vertex < 0 || !node.link_branch || !node.del_branch) return false;
    if (!c.is_proper()) return false;
    std::vector<int> shed = shedding_vertices(c);
    if (std::find(shed.begin(), shed.end(), node.vertex) == shed.end()) return false;
    return replay_vd_certificate(link(c, vertices_to_mask({node.vertex})), *node.link_branch) &&
           replay_vd_certificate(deletion(c, node.vertex), *node.del_branch);
}

constexpr int kShellingFacetCap = 10;

namespace detail {

// Shelling step: the intersection of ⟨F_1..F_{i-1}⟩ with ⟨F_i⟩ must be a
// nonempty union of maximal proper faces of F_i. Equivalently each earlier
// intersection extends to one of size |F_i| - 1, with at least one of that
// size present.
inline bool shelling_step_ok(const std::vector<Mask>& prefix, Mask next) {
    const int target = popcount(next) - 1;
    bool has_ridge = false;
    for (Mask p : prefix)
        if (popcount(p & next) == target) {
            has_ridge = true;
            break;
        }
    if (!has_ridge) return false;
    for (Mask p : prefix) {
        Mask inter = p & next;
        if (popcount(inter) == target) continue;
        bool covered = false;
        for (Mask q : prefix) {
            Mask big = q & next;
            if (popcount(big) == target && subset(inter, big)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

inline bool shelling_dfs(const std::vector<Mask>& facets, std::vector<Mask>& order,
                         std::vector<bool>& used) {
    if (order.size() == facets.size()) return true;
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (used[i]) continue;
        if (!order.empty() && !shelling_step_ok(order, facets[i])) continue;
        used[i] = true;
        order.push_back(facets[i]);
        if (shelling_dfs(facets, order, used)) return true;
        order.pop_back();
        used[i] = false;
    }
    return false;
}

}  // namespace detail

// Exhaustive shelling-order search with prefix pruning. Requires a pure
// complex with at most kShellingFacetCap facets.
inline DecompCertificate is_shellable(const SimplicialComplex& c) {
    DecompCertificate cert;
    cert.kind = "shelling";
    if (c.is_void() || c.is_irrelevant()) {
        cert.verdict = true;
        return cert;
    }
    if (!c.is_pure()) throw DomainError("is_shellable: complex must be pure");
    if (c.facet_masks().size() > kShellingFacetCap)
        throw CapacityError("is_shellable: more than " + std::to_string(kShellingFacetCap) +
                            " facets");
    std::vector<Mask> order;
    std::vector<bool> used(c.facet_masks().size(), false);
    cert.verdict = detail::shelling_dfs(c.facet_masks(), order, used);
    if (cert.verdict)
        for (Mask f : order) cert.shelling_order.push_back(mask_to_vertices(f));
    else
        cert.obstruction_level = 0;
    return cert;
}

// Replays a shelling order against the definition.
inline bool replay_shelling_certificate(const SimplicialComplex& c,
                                        const std::vector<Face>& order) {
    if (!c.is_proper()) return order.empty();
    if (order.size() != c.facet_masks().size()) return false;
    std::vector<Mask> prefix;
    for (const Face& f : order) {
        Mask m = vertices_to_mask(f);
        if (std::find(c.facet_masks().begin(), c.facet_masks().end(), m) ==
            c.facet_masks().end())
            return false;
        if (!prefix.empty() && !detail::shelling_step_ok(prefix, m)) return false;
        prefix.push_back(m);
    }
    return true;
}

}  // namespace ytc

#endif
