#ifndef YTC_COMPLEX_HPP
#define YTC_COMPLEX_HPP

#include <algorithm>
#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "ytc/common.hpp"

namespace ytc {

// A face is a duplicate-free set of vertex labels; the empty face has
// dimension -1.
using Face = std::vector<int>;

enum class Status { Void, Irrelevant, Proper };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Void: return "void";
        case Status::Irrelevant: return "irrelevant";
        default: return "proper";
    }
}

// Finite abstract simplicial complex in facet representation.
//
// The three-valued status distinguishes the void complex (no faces at all)
// from the irrelevant complex {∅} (exactly the empty face); their reduced
// homology differs in degree -1, and several constructions here depend on
// that distinction.
//
// Values are immutable after construction; all operations are pure.
class SimplicialComplex {
public:
    static SimplicialComplex void_complex() { return SimplicialComplex(Status::Void, {}, 0); }

    static SimplicialComplex irrelevant_complex(Mask universe = 0) {
        return SimplicialComplex(Status::Irrelevant, {}, universe);
    }

    // Generates the complex spanned by the maximal candidates. Empty input
    // yields the void complex; input consisting only of the empty face yields
    // the irrelevant complex. Facets are stored in canonical (size, lex) order.
    static SimplicialComplex from_masks(std::vector<Mask> candidates, std::optional<Mask> universe = {}) {
        if (candidates.empty()) {
            SimplicialComplex c = void_complex();
            if (universe) c.universe_ = *universe;
            return c;
        }
        std::sort(candidates.begin(), candidates.end(), face_less);
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        std::vector<Mask> maximal;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            bool dominated = false;
            for (std::size_t j = i + 1; j < candidates.size(); ++j) {
                if (subset(candidates[i], candidates[j])) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) maximal.push_back(candidates[i]);
        }
        if (maximal.size() == 1 && maximal[0] == 0) {
            return irrelevant_complex(universe.value_or(0));
        }
#ifndef NDEBUG
        for (std::size_t i = 0; i < maximal.size(); ++i)
            for (std::size_t j = 0; j < maximal.size(); ++j)
                assert(i == j || !subset(maximal[i], maximal[j]));
#endif
        Mask verts = 0;
        for (Mask f : maximal) verts |= f;
        Mask uni = universe.value_or(verts);
        if (!subset(verts, uni)) throw DomainError("universe must contain every vertex of the complex");
        return SimplicialComplex(Status::Proper, std::move(maximal), uni);
    }

    static SimplicialComplex from_facets(const std::vector<Face>& candidates,
                                         std::optional<Mask> universe = {}) {
        std::vector<Mask> masks;
        masks.reserve(candidates.size());
        for (const Face& f : candidates) masks.push_back(vertices_to_mask(f));
        return from_masks(std::move(masks), universe);
    }

    Status status() const { return status_; }
    bool is_void() const { return status_ == Status::Void; }
    bool is_irrelevant() const { return status_ == Status::Irrelevant; }
    bool is_proper() const { return status_ == Status::Proper; }

    // Facet masks in canonical order; empty for the void and irrelevant
    // complexes (the irrelevant complex's single facet is the empty face).
    const std::vector<Mask>& facet_masks() const { return facets_; }

    std::vector<Face> facets() const {
        std::vector<Face> out;
        if (is_irrelevant()) {
            out.push_back({});
            return out;
        }
        out.reserve(facets_.size());
        for (Mask f : facets_) out.push_back(mask_to_vertices(f));
        return out;
    }

    std::size_t facet_count() const { return is_irrelevant() ? 1 : facets_.size(); }

    Mask vertex_mask() const {
        Mask m = 0;
        for (Mask f : facets_) m |= f;
        return m;
    }

    std::vector<int> vertices() const { return mask_to_vertices(vertex_mask()); }

    // dim(void) = -2 by convention here (it has no faces); dim({∅}) = -1.
    int dim() const {
        if (is_void()) return -2;
        int d = -1;
        for (Mask f : facets_) d = std::max(d, popcount(f) - 1);
        return d;
    }

    bool is_pure() const {
        if (!is_proper()) return true;
        int d = popcount(facets_.front());
        for (Mask f : facets_)
            if (popcount(f) != d) return false;
        return true;
    }

    bool is_simplex() const { return is_proper() && facets_.size() == 1; }

    bool contains(Mask face) const {
        if (is_void()) return false;
        if (face == 0) return true;
        for (Mask f : facets_)
            if (subset(face, f)) return true;
        return false;
    }

    // Explicit ambient universe (used by Alexander duality and JSON output);
    // always a superset of the vertex set, defaults to the vertex set itself.
    Mask universe() const { return universe_ | vertex_mask(); }

    SimplicialComplex with_universe(Mask uni) const {
        if (!subset(vertex_mask(), uni))
            throw DomainError("universe must contain every vertex of the complex");
        SimplicialComplex c = *this;
        c.universe_ = uni;
        return c;
    }

    // All faces grouped by dimension: result[0] holds the empty face slot
    // (dimension -1), result[d+1] the d-faces. Void complex yields {}.
    std::vector<std::vector<Mask>> faces_by_dim() const;

    bool operator==(const SimplicialComplex& o) const {
        return status_ == o.status_ && facets_ == o.facets_;
    }
    bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }

private:
    SimplicialComplex(Status s, std::vector<Mask> facets, Mask universe)
        : status_(s), facets_(std::move(facets)), universe_(universe) {}

    Status status_;
    std::vector<Mask> facets_;
    Mask universe_;
};

inline std::vector<std::vector<Mask>> SimplicialComplex::faces_by_dim() const {
    std::vector<std::vector<Mask>> out;
    if (is_void()) return out;
    out.resize(static_cast<std::size_t>(dim() + 2));
    std::vector<Mask> all;
    for (Mask f : facets_) {
        // enumerate every subset of the facet
        Mask s = f;
        while (true) {
            all.push_back(s);
            if (s == 0) break;
            s = (s - 1) & f;
        }
    }
    if (is_irrelevant()) all.push_back(0);
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (Mask s : all) out[static_cast<std::size_t>(popcount(s))].push_back(s);
    for (auto& level : out) std::sort(level.begin(), level.end(), face_less);
    return out;
}

// ---------------------------------------------------------------------------
// Core operations
// ---------------------------------------------------------------------------

// lk_Δ(σ) = {τ ∈ Δ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}. Requires σ ∈ Δ.
inline SimplicialComplex link(const SimplicialComplex& c, Mask sigma) {
    if (!c.contains(sigma)) throw DomainError("link: the face is not in the complex");
    if (sigma == 0) return c;
    std::vector<Mask> res;
    for (Mask f : c.facet_masks())
        if (subset(sigma, f)) res.push_back(f & ~sigma);
    if (res.size() == 1 && res[0] == 0) return SimplicialComplex::irrelevant_complex();
    return SimplicialComplex::from_masks(std::move(res));
}

inline SimplicialComplex link(const SimplicialComplex& c, const Face& sigma) {
    return link(c, vertices_to_mask(sigma));
}

// del_Δ(v) = {σ ∈ Δ : v ∉ σ}. Requires v ∈ V(Δ).
inline SimplicialComplex deletion(const SimplicialComplex& c, int v) {
    Mask vb = vertices_to_mask({v});
    if (!subset(vb, c.vertex_mask())) throw DomainError("deletion: vertex not in the complex");
    std::vector<Mask> res;
    for (Mask f : c.facet_masks()) res.push_back(f & ~vb);
    return SimplicialComplex::from_masks(std::move(res));
}

// st_Δ(v) = {σ ∈ Δ : σ ∪ {v} ∈ Δ}: the complex spanned by the facets
// containing v. Requires v ∈ V(Δ).
inline SimplicialComplex star(const SimplicialComplex& c, int v) {
    Mask vb = vertices_to_mask({v});
    if (!subset(vb, c.vertex_mask())) throw DomainError("star: vertex not in the complex");
    std::vector<Mask> res;
    for (Mask f : c.facet_masks())
        if (subset(vb, f)) res.push_back(f);
    return SimplicialComplex::from_masks(std::move(res));
}

// Join: faces are disjoint unions of faces of the two operands. The
// irrelevant complex is the identity; the void complex is rejected (the join
// with it is never needed and has no agreed meaning here).
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.is_void() || b.is_void()) throw DomainError("join: void operand");
    if (a.vertex_mask() & b.vertex_mask())
        throw DomainError("join: operands share vertices");
    if (a.is_irrelevant()) return b;
    if (b.is_irrelevant()) return a;
    std::vector<Mask> res;
    res.reserve(a.facet_masks().size() * b.facet_masks().size());
    for (Mask fa : a.facet_masks())
        for (Mask fb : b.facet_masks()) res.push_back(fa | fb);
    return SimplicialComplex::from_masks(std::move(res));
}

inline SimplicialComplex cone(const SimplicialComplex& c, int apex) {
    return join(c, SimplicialComplex::from_facets({{apex}}));
}

// Σ(Δ) = Δ * ⟨{v},{w}⟩ for fresh vertices v, w. Σ({∅}) is two isolated
// points (S^0).
inline SimplicialComplex suspension(const SimplicialComplex& c, int v, int w) {
    if (c.is_void()) throw DomainError("suspension: undefined for the void complex");
    if (v == w) throw DomainError("suspension: the two apexes must be distinct");
    return join(c, SimplicialComplex::from_facets({{v}, {w}}));
}

// ---------------------------------------------------------------------------
// Minimal transversals (hitting sets) of a hypergraph of edge masks.
//
// Sequential Berge multiplication with inclusion-minimal filtering. Exact
// and exponential; intended for desk-scale instances only.
// ---------------------------------------------------------------------------
inline std::vector<Mask> minimal_transversals(std::vector<Mask> edges) {
    for (Mask e : edges)
        if (e == 0) return {};  // an empty edge cannot be hit
    std::sort(edges.begin(), edges.end(),
              [](Mask a, Mask b) { return popcount(a) < popcount(b); });
    // drop edges containing another edge: their constraint is implied
    std::vector<Mask> essential;
    for (Mask e : edges) {
        bool implied = false;
        for (Mask f : essential)
            if (subset(f, e)) {
                implied = true;
                break;
            }
        if (!implied) essential.push_back(e);
    }
    std::vector<Mask> trans{0};
    for (Mask e : essential) {
        std::vector<Mask> next;
        std::vector<Mask> grown;
        for (Mask t : trans) {
            if (t & e) {
                next.push_back(t);
            } else {
                Mask rest = e;
                while (rest) {
                    int v = lowest_vertex(rest);
                    rest &= rest - 1;
                    grown.push_back(t | bit(v));
                }
            }
        }
        // keep grown candidates that are minimal against the kept set and
        // against each other
        std::sort(grown.begin(), grown.end(), face_less);
        grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
        for (Mask g : grown) {
            bool minimal = true;
            for (Mask t : next)
                if (subset(t, g)) {
                    minimal = false;
                    break;
                }
            if (!minimal) continue;
            for (Mask h : grown)
                if (h != g && subset(h, g)) {
                    minimal = false;
                    break;
                }
            if (minimal) next.push_back(g);
        }
        trans = std::move(next);
    }
    std::sort(trans.begin(), trans.end(), face_less);
    return trans;
}

// ---------------------------------------------------------------------------
// Nonfaces and Alexander duality
// ---------------------------------------------------------------------------

// Inclusion-minimal subsets of `universe` that are not faces of Δ, in
// canonical order. A set is a nonface exactly when it meets the complement
// of every facet, so the minimal nonfaces are the minimal transversals of
// the facet-complement hypergraph.
inline std::vector<Mask> minimal_nonface_masks(const SimplicialComplex& c, Mask universe) {
    if (c.is_void())
        throw DomainError("minimal_nonfaces: undefined for the void complex");
    if (!subset(c.vertex_mask(), universe))
        throw DomainError("minimal_nonfaces: universe must contain V(Δ)");
    std::vector<Mask> complements;
    if (c.is_irrelevant()) {
        complements.push_back(universe);
    } else {
        for (Mask f : c.facet_masks()) complements.push_back(universe & ~f);
    }
    return minimal_transversals(std::move(complements));
}

inline std::vector<Face> minimal_nonfaces(const SimplicialComplex& c, Mask universe) {
    std::vector<Face> out;
    for (Mask m : minimal_nonface_masks(c, universe)) out.push_back(mask_to_vertices(m));
    return out;
}

// Δ^∨ over the given universe: facets are complements of the minimal
// nonfaces of Δ. The full simplex dualizes to the void complex; a complex
// whose only minimal nonface is the whole universe dualizes to {∅}.
inline SimplicialComplex alexander_dual(const SimplicialComplex& c, Mask universe) {
    std::vector<Mask> nf = minimal_nonface_masks(c, universe);
    std::vector<Mask> res;
    res.reserve(nf.size());
    for (Mask m : nf) res.push_back(universe & ~m);
    return SimplicialComplex::from_masks(std::move(res), universe);
}

// Δ|_W = {σ ∈ Δ : σ ⊆ W}.
inline SimplicialComplex induced_subcomplex(const SimplicialComplex& c, Mask w) {
    if (c.is_void()) return SimplicialComplex::void_complex();
    std::vector<Mask> res;
    res.reserve(c.facet_masks().size());
    for (Mask f : c.facet_masks()) res.push_back(f & w);
    if (res.empty()) return SimplicialComplex::irrelevant_complex();
    return SimplicialComplex::from_masks(std::move(res));
}

}  // namespace ytc

#endif
