#ifndef YTC_PATHIDEAL_HPP
#define YTC_PATHIDEAL_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "ytc/complex.hpp"
#include "ytc/partition.hpp"
#include "ytc/young.hpp"

namespace ytc {

// Parameters of the k-th squarefree power of the t-path ideal of the path
// graph on n vertices.
struct PathIdealSpec {
    int n = 1;
    int t = 1;
    int k = 1;

    void validate() const {
        if (n < 1) throw DomainError("path ideal: n must be >= 1");
        if (t < 1) throw DomainError("path ideal: t must be >= 1");
        if (k < 0) throw DomainError("path ideal: k must be >= 0");
        if (n > kMaxVertexLabel)
            throw CapacityError("path ideal: n exceeds the 64-element universe bound");
    }

    Mask universe() const { return interval_mask(1, n); }
};

constexpr int kTransversalCap = 20;

// Generator supports of the k-th squarefree power: one support per
// k-matching of t-intervals in [n], i.e. unions of k pairwise disjoint
// blocks [b_i, b_i + t - 1] with b_i + t - 1 < b_{i+1}. Empty exactly when
// k > floor(n/t).
inline std::vector<Mask> squarefree_power_generators(const PathIdealSpec& spec) {
    spec.validate();
    if (spec.k < 1) throw DomainError("squarefree_power_generators: k must be >= 1");
    std::vector<Mask> out;
    std::vector<int> starts;
    auto rec = [&](auto&& self, int next_start, int remaining) -> void {
        if (remaining == 0) {
            Mask m = 0;
            for (int b : starts) m |= interval_mask(b, b + spec.t - 1);
            out.push_back(m);
            return;
        }
        // leave room for the remaining intervals
        for (int b = next_start; b + remaining * spec.t - 1 <= spec.n; ++b) {
            starts.push_back(b);
            self(self, b + spec.t, remaining - 1);
            starts.pop_back();
        }
    };
    rec(rec, 1, spec.k);
    std::sort(out.begin(), out.end(), face_less);
    return out;
}

inline std::vector<Face> squarefree_power_generator_supports(const PathIdealSpec& spec) {
    std::vector<Face> out;
    for (Mask m : squarefree_power_generators(spec)) out.push_back(mask_to_vertices(m));
    return out;
}

// (ν, ν0) of the t-path facet complex of P_n: ν = floor(n/t) and
// ν0 = floor((n-1)/t).
inline std::pair<int, int> matching_numbers(int n, int t) {
    if (t < 1 || n < t) throw DomainError("matching_numbers: requires n >= t >= 1");
    return {n / t, (n - 1) / t};
}

// Stanley-Reisner complex of the k-th squarefree power: the complex on [n]
// whose minimal nonfaces are exactly the generator supports. Facets are the
// complements of the minimal transversals of the support hypergraph. The
// zero ideal (k > ν) yields the full simplex.
inline SimplicialComplex stanley_reisner_complex(const PathIdealSpec& spec) {
    spec.validate();
    if (spec.k < 1) throw DomainError("stanley_reisner_complex: k must be >= 1");
    if (spec.n > kTransversalCap)
        throw CapacityError("stanley_reisner_complex: n capped at " +
                            std::to_string(kTransversalCap));
    Mask uni = spec.universe();
    std::vector<Mask> gens = squarefree_power_generators(spec);
    if (gens.empty()) return SimplicialComplex::from_masks({uni}, uni);
    std::vector<Mask> facets;
    for (Mask tr : minimal_transversals(gens)) facets.push_back(uni & ~tr);
    return SimplicialComplex::from_masks(std::move(facets), uni);
}

// Alexander dual Δ_{n,t}^{[k]} of the Stanley-Reisner complex, through the
// structural identification: void for n < kt, {∅} for n = kt, and the
// t-Young complex of the rectangular partition (n-kt)^{k+1} for n > kt.
inline SimplicialComplex dual_complex(const PathIdealSpec& spec) {
    spec.validate();
    Mask uni = spec.universe();
    long long kt = static_cast<long long>(spec.k) * spec.t;
    if (spec.k == 0) return SimplicialComplex::from_masks({uni}, uni);  // the full simplex
    if (spec.n < kt) return SimplicialComplex::void_complex();
    if (spec.n == kt) return SimplicialComplex::irrelevant_complex(uni);
    Partition lambda = rectangle_partition(spec.n - static_cast<int>(kt), spec.k + 1);
    return young_complex(lambda, spec.t).with_universe(uni);
}

// Independent route: dualize the Stanley-Reisner complex directly. Both
// routes must agree facet-for-facet.
inline SimplicialComplex dual_complex_via_alexander(const PathIdealSpec& spec) {
    return alexander_dual(stanley_reisner_complex(spec), spec.universe());
}

struct KrullResult {
    int height = 0;  // height of the ideal: minimum transversal size
    int dim = 0;     // Krull dimension of the quotient: n - height
};

// Height by exact minimum transversal of the generator supports; the Krull
// dimension of R/I is n minus the height.
inline KrullResult krull_height_oracle(const PathIdealSpec& spec) {
    spec.validate();
    if (spec.k < 1) throw DomainError("krull_height_oracle: k must be >= 1");
    if (spec.n > kTransversalCap)
        throw CapacityError("krull_height_oracle: n capped at " + std::to_string(kTransversalCap));
    if (spec.k > spec.n / spec.t)
        throw DomainError("krull_height_oracle: requires 1 <= k <= floor(n/t)");
    std::vector<Mask> gens = squarefree_power_generators(spec);
    int best = spec.n + 1;
    for (Mask tr : minimal_transversals(gens)) best = std::min(best, popcount(tr));
    KrullResult r;
    r.height = best;
    r.dim = spec.n - best;
    return r;
}

}  // namespace ytc

#endif
