#ifndef YTC_YOUNG_HPP
#define YTC_YOUNG_HPP

#include <algorithm>
#include <map>
#include <vector>

#include "ytc/complex.hpp"
#include "ytc/partition.hpp"

namespace ytc {

// Row j (1-based, top row first) of the filled Young diagram: entries
// (r-j)t + 1, ..., (r-j)t + λ_j. Entries increase by t going up a column,
// so the same integer may label cells in different rows; equal entries
// denote the same vertex.
inline std::vector<std::vector<int>> young_filling(const Partition& lambda, int t) {
    if (t < 1) throw DomainError("young_filling: t must be positive");
    int r = lambda.rows();
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(r));
    for (int j = 1; j <= r; ++j) {
        std::vector<int> row;
        for (int i = 1; i <= lambda.part(j); ++i) row.push_back((r - j) * t + i);
        rows.push_back(std::move(row));
    }
    return rows;
}

// Candidate entries per column (1-based), each sorted ascending. Column c
// collects the entries (r-j)t + c over rows j with λ_j ≥ c.
inline std::vector<std::vector<int>> young_column_candidates(const Partition& lambda, int t) {
    if (t < 1) throw DomainError("young_column_candidates: t must be positive");
    int r = lambda.rows();
    int width = lambda.part(1);
    std::vector<std::vector<int>> cols(static_cast<std::size_t>(width));
    for (int j = 1; j <= r; ++j)
        for (int c = 1; c <= lambda.part(j); ++c)
            cols[static_cast<std::size_t>(c - 1)].push_back((r - j) * t + c);
    for (auto& col : cols) {
        std::sort(col.begin(), col.end());
        col.erase(std::unique(col.begin(), col.end()), col.end());
    }
    return cols;
}

namespace detail {

inline void young_backtrack(const std::vector<std::vector<int>>& cols, std::size_t c, int last,
                            std::vector<int>& picked, std::vector<Mask>& out) {
    if (c == cols.size()) {
        out.push_back(vertices_to_mask(picked));
        return;
    }
    for (int v : cols[c]) {
        if (v <= last) continue;
        picked.push_back(v);
        young_backtrack(cols, c + 1, v, picked, out);
        picked.pop_back();
    }
}

}  // namespace detail

// The t-Young complex Δ_t^λ: the pure (λ1-1)-dimensional complex whose
// facets are the strictly increasing transversals of the diagram columns.
// The empty shape yields the irrelevant complex {∅}.
inline SimplicialComplex young_complex(const Partition& lambda, int t) {
    if (t < 1) throw DomainError("young_complex: t must be positive");
    if (lambda.empty_shape()) return SimplicialComplex::irrelevant_complex();
    int max_entry = (lambda.rows() - 1) * t + lambda.part(1);
    if (max_entry > kMaxVertexLabel)
        throw CapacityError("young_complex: diagram entries exceed the 64-element universe bound");
    auto cols = young_column_candidates(lambda, t);
    std::vector<Mask> facets;
    std::vector<int> picked;
    detail::young_backtrack(cols, 0, 0, picked, facets);
    return SimplicialComplex::from_masks(std::move(facets));
}

// Order-complex presentation for λ2 ≤ t (or r = 1): entries form a poset
// whose covers connect consecutive columns, and Δ_t^λ is the complex of its
// chains. Maximal chains of length λ1 are generated directly; the result
// must coincide facet-for-facet with young_complex.
inline SimplicialComplex order_complex_presentation(const Partition& lambda, int t) {
    if (t < 1) throw DomainError("order_complex_presentation: t must be positive");
    if (lambda.empty_shape()) return SimplicialComplex::irrelevant_complex();
    if (lambda.rows() >= 2 && lambda.part(2) > t)
        throw DomainError("order_complex_presentation: requires λ2 ≤ t (or a single row)");
    int max_entry = (lambda.rows() - 1) * t + lambda.part(1);
    if (max_entry > kMaxVertexLabel)
        throw CapacityError("order_complex_presentation: diagram entries exceed the universe bound");

    // For λ2 ≤ t every entry labels exactly one cell, so its column is
    // well-defined.
    auto cols = young_column_candidates(lambda, t);
    int width = lambda.part(1);
    std::map<int, int> column_of;
    for (int c = 0; c < width; ++c)
        for (int v : cols[static_cast<std::size_t>(c)]) column_of[v] = c;

    auto successors = [&](int v) {
        std::vector<int> out;
        int c = column_of.at(v);
        if (c + 1 < width)
            for (int w : cols[static_cast<std::size_t>(c + 1)])
                if (w > v) out.push_back(w);
        return out;
    };
    auto has_predecessor = [&](int v) {
        int c = column_of.at(v);
        if (c == 0) return false;
        for (int u : cols[static_cast<std::size_t>(c - 1)])
            if (u < v) return true;
        return false;
    };

    std::vector<Mask> facets;
    std::vector<int> chain;
    auto dfs = [&](auto&& self, int v) -> void {
        chain.push_back(v);
        auto next = successors(v);
        if (next.empty()) {
            // maximal chain; keep the full-length ones
            if (static_cast<int>(chain.size()) == width)
                facets.push_back(vertices_to_mask(chain));
        } else {
            for (int w : next) self(self, w);
        }
        chain.pop_back();
    };
    for (int c = 0; c < width; ++c)
        for (int v : cols[static_cast<std::size_t>(c)])
            if (!has_predecessor(v)) dfs(dfs, v);
    return SimplicialComplex::from_masks(std::move(facets));
}

}  // namespace ytc

#endif
