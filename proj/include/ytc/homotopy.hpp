#ifndef YTC_HOMOTOPY_HPP
#define YTC_HOMOTOPY_HPP

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ytc/common.hpp"
#include "ytc/partition.hpp"

namespace ytc {

// Symbolic homotopy type: a multiset of sphere dimensions (empty multiset =
// contractible). Dimension -1 encodes the complex {∅}; it never takes part
// in a genuine wedge, only suspension can turn it into honest spheres
// (Σ({∅}) = S^0, Σ²({∅}) = S^1).
class HomotopyClass {
public:
    static HomotopyClass contractible() { return HomotopyClass(); }

    static HomotopyClass irrelevant_point() {
        HomotopyClass h;
        h.spheres_[-1] = 1;
        return h;
    }

    static HomotopyClass sphere(int dim, long long multiplicity = 1) {
        if (dim < -1) throw DomainError("sphere dimension must be >= -1");
        if (multiplicity < 0) throw DomainError("sphere multiplicity must be >= 0");
        HomotopyClass h;
        if (multiplicity > 0) h.spheres_[dim] = multiplicity;
        h.check_invariant();
        return h;
    }

    bool is_contractible() const { return spheres_.empty(); }
    bool is_irrelevant_point() const {
        return spheres_.size() == 1 && spheres_.count(-1) && spheres_.at(-1) == 1;
    }
    const std::map<int, long long>& spheres() const { return spheres_; }

    long long multiplicity(int dim) const {
        auto it = spheres_.find(dim);
        return it == spheres_.end() ? 0 : it->second;
    }

    long long sphere_count() const {
        long long n = 0;
        for (auto& [d, m] : spheres_) n += m;
        return n;
    }

    HomotopyClass suspended(int times) const {
        if (times < 0) throw DomainError("suspension count must be >= 0");
        HomotopyClass h;
        for (auto& [d, m] : spheres_) h.spheres_[d + times] = m;
        h.check_invariant();
        return h;
    }

    // every multiplicity times `factor` (a factor-fold wedge of copies)
    HomotopyClass scaled(long long factor) const {
        if (factor < 0) throw DomainError("wedge multiplicity must be >= 0");
        HomotopyClass h;
        if (factor > 0)
            for (auto& [d, m] : spheres_) h.spheres_[d] = m * factor;
        h.check_invariant();
        return h;
    }

    friend HomotopyClass wedge(const HomotopyClass& a, const HomotopyClass& b) {
        if ((a.multiplicity(-1) && !b.is_contractible()) ||
            (b.multiplicity(-1) && !a.is_contractible()))
            throw std::logic_error("wedge: the -1 token cannot be wedged with spheres");
        HomotopyClass h = a;
        for (auto& [d, m] : b.spheres_) h.spheres_[d] += m;
        h.check_invariant();
        return h;
    }

    std::string to_string() const {
        if (is_contractible()) return "contractible";
        std::ostringstream out;
        bool first = true;
        for (auto& [d, m] : spheres_) {
            if (!first) out << " v ";
            first = false;
            if (m != 1) out << m << "*";
            out << "S^" << d;
        }
        return out.str();
    }

    bool operator==(const HomotopyClass& o) const { return spheres_ == o.spheres_; }
    bool operator!=(const HomotopyClass& o) const { return !(*this == o); }

private:
    void check_invariant() const {
        if (spheres_.count(-1) && (spheres_.size() > 1 || spheres_.at(-1) != 1))
            throw std::logic_error("homotopy class: -1 may only occur alone with multiplicity 1");
    }

    std::map<int, long long> spheres_;
};

inline HomotopyClass suspend(const HomotopyClass& h, int times) { return h.suspended(times); }

// Homotopy type of Δ_t^λ by the structural recursion on λ: simplices and
// strict-cone shapes (λ1 > λ2) are contractible; for λ1 = λ2 the complex
// splits off Δ_t^{λ'} and a suspension of Δ_t^{λ''}, plus a double
// suspension of Δ_t^{λ'''} once λ1 > t. All-zero subordinate shapes stand
// for {∅}. Memoized on (λ, t).
inline HomotopyClass young_homotopy(const Partition& lambda, int t) {
    if (t < 1) throw DomainError("young_homotopy: t must be positive");

    static std::mutex memo_mutex;
    static std::map<std::pair<std::vector<int>, int>, HomotopyClass> memo;

    auto key = std::make_pair(lambda.parts(), t);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    HomotopyClass result;
    if (lambda.empty_shape()) {
        result = HomotopyClass::irrelevant_point();
    } else if (lambda.rows() == 1 || lambda.part(1) > lambda.part(2)) {
        // simplex, or cone with apex (r-1)t + λ1
        result = HomotopyClass::contractible();
    } else {
        int r = lambda.rows();
        int top = lambda.part(1);
        Partition rest = lambda.drop_first_row();
        Partition clipped = lambda.clipped(top - 1, 2, r);
        result = wedge(young_homotopy(rest, t), young_homotopy(clipped, t).suspended(1));
        if (top > t) {
            Partition deep = lambda.clipped(top - t - 1, 1, r);
            result = wedge(result, young_homotopy(deep, t).suspended(2));
        }
    }

    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::move(key), result);
    return result;
}

// Closed form in the first regime n = kt + l with 1 ≤ l ≤ t: a wedge of
// C(k,l) spheres S^{l-1}, a point when k < l.
inline HomotopyClass binomial_wedge(int n, int k, int t) {
    if (t < 1 || k < 0) throw DomainError("binomial_wedge: need t >= 1 and k >= 0");
    long long l = static_cast<long long>(n) - static_cast<long long>(k) * t;
    if (l < 1 || l > t)
        throw DomainError("binomial_wedge: requires n = kt + l with 1 <= l <= t");
    if (k < l) return HomotopyClass::contractible();
    return HomotopyClass::sphere(static_cast<int>(l) - 1, binomial(k, l));
}

// ---------------------------------------------------------------------------
// Reduction digraph for the regime n - kt > t
// ---------------------------------------------------------------------------

struct GraphVertex {
    int m = 0, j = 0;
    bool operator==(const GraphVertex& o) const { return m == o.m && j == o.j; }
    // deterministic top-down order: larger m first, then larger j
    bool operator<(const GraphVertex& o) const {
        if (m != o.m) return m > o.m;
        return j > o.j;
    }
};

struct GraphEdge {
    GraphVertex from, to;
    int label = 0;  // 0 = type A, 1 = type B, 2 = type C
};

// Number of root-to-vertex directed paths with the given edge-label sum.
struct PathCount {
    int m = 0, j = 0;
    int alpha = 0;
    long long count = 0;
};

// Labeled digraph on pairs (m, j): a vertex with j >= 1 and slack
// m - jt > t emits the three reduction edges
//   A: (m,j) -> (m-t,   j-1)  label 0
//   B: (m,j) -> (m-t-1, j-1)  label 1
//   C: (m,j) -> (m-t-1, j)    label 2
// The vertex set is the closure reachable from the root (n, k). Vertices
// with 1 <= j and jt <= m <= jt+t are leaves; j = 0 vertices are terminal.
struct ReductionGraph {
    int n = 0, k = 0, t = 1;
    std::vector<GraphVertex> vertices;  // sorted top-down
    std::vector<GraphEdge> edges;       // sorted by (from, label)
    std::vector<GraphVertex> leaves;    // j >= 1, jt <= m <= jt+t
    std::vector<GraphVertex> terminals; // j == 0

    bool is_internal(const GraphVertex& v) const {
        return v.j >= 1 && v.m - v.j * t > t;
    }

    std::string to_dot() const {
        std::ostringstream out;
        out << "digraph G {\n";
        for (const auto& e : edges)
            out << "  \"" << e.from.m << "," << e.from.j << "\" -> \"" << e.to.m << ","
                << e.to.j << "\" [label=" << e.label << "];\n";
        out << "}\n";
        return out.str();
    }
};

inline ReductionGraph build_reduction_graph(int n, int k, int t) {
    if (t < 1 || k < 0) throw DomainError("reduction graph: need t >= 1 and k >= 0");
    if (n - k * t <= t)
        throw DomainError("reduction graph: requires n - kt > t");
    ReductionGraph g;
    g.n = n;
    g.k = k;
    g.t = t;
    std::vector<GraphVertex> frontier{{n, k}};
    std::vector<GraphVertex> seen{{n, k}};
    auto known = [&](const GraphVertex& v) {
        return std::find(seen.begin(), seen.end(), v) != seen.end();
    };
    while (!frontier.empty()) {
        GraphVertex v = frontier.back();
        frontier.pop_back();
        if (!g.is_internal(v)) continue;
        const GraphVertex targets[3] = {
            {v.m - t, v.j - 1}, {v.m - t - 1, v.j - 1}, {v.m - t - 1, v.j}};
        for (int label = 0; label < 3; ++label) {
            g.edges.push_back({v, targets[label], label});
            if (!known(targets[label])) {
                seen.push_back(targets[label]);
                frontier.push_back(targets[label]);
            }
        }
    }
    std::sort(seen.begin(), seen.end());
    g.vertices = std::move(seen);
    std::sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& a, const GraphEdge& b) {
        if (!(a.from == b.from)) return a.from < b.from;
        return a.label < b.label;
    });
    for (const auto& v : g.vertices) {
        if (v.j == 0) {
            g.terminals.push_back(v);
        } else if (v.j * t <= v.m && v.m <= v.j * t + t) {
            g.leaves.push_back(v);
        }
    }
    return g;
}

// Exact path counts N(m, j, alpha) from the root to every leaf and terminal,
// by dynamic programming over the DAG in top-down vertex order.
inline std::vector<PathCount> path_label_counts(const ReductionGraph& g) {
    std::map<std::pair<int, int>, std::map<int, long long>> table;
    table[{g.n, g.k}][0] = 1;
    // vertices are sorted with larger m first, and every edge strictly
    // decreases m, so one sweep suffices
    for (const auto& v : g.vertices) {
        auto it = table.find({v.m, v.j});
        if (it == table.end()) continue;
        for (const auto& e : g.edges) {
            if (!(e.from == v)) continue;
            for (auto& [alpha, cnt] : it->second) table[{e.to.m, e.to.j}][alpha + e.label] += cnt;
        }
    }
    std::vector<PathCount> out;
    auto emit = [&](const GraphVertex& v) {
        auto it = table.find({v.m, v.j});
        if (it == table.end()) return;
        for (auto& [alpha, cnt] : it->second) out.push_back({v.m, v.j, alpha, cnt});
    };
    for (const auto& v : g.leaves) emit(v);
    for (const auto& v : g.terminals) emit(v);
    return out;
}

// Homotopy type of the Alexander dual Δ_{n,t}^{[k]} computed along the
// parameter recursion: principal case n = kt gives {∅}; the window
// kt < n <= kt+t is the binomial wedge; beyond it the reduction digraph
// assembles suspensions of leaf classes weighted by path counts. Must agree
// with young_homotopy on the rectangular partition (n-kt)^{k+1}.
inline HomotopyClass dual_homotopy(int n, int k, int t) {
    if (t < 1) throw DomainError("dual_homotopy: t must be positive");
    if (k < 0) throw DomainError("dual_homotopy: k must be >= 0");
    if (n < k * t)
        throw DomainError("dual_homotopy: n < kt (the ideal is zero, the dual is void)");
    if (k == 0) {
        if (n < 1) throw DomainError("dual_homotopy: need n >= 1 when k = 0");
        return HomotopyClass::contractible();  // the full simplex
    }
    if (n == k * t) return HomotopyClass::irrelevant_point();
    if (n - k * t <= t) return binomial_wedge(n, k, t);

    ReductionGraph g = build_reduction_graph(n, k, t);
    HomotopyClass result = HomotopyClass::contractible();
    for (const PathCount& pc : path_label_counts(g)) {
        if (pc.j == 0) continue;  // simplex contribution, contractible
        HomotopyClass base = (pc.m == pc.j * t) ? HomotopyClass::irrelevant_point()
                                                : binomial_wedge(pc.m, pc.j, t);
        result = wedge(result, base.suspended(pc.alpha).scaled(pc.count));
    }
    return result;
}

}  // namespace ytc

#endif
