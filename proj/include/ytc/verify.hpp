#ifndef YTC_VERIFY_HPP
#define YTC_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ytc/decomp.hpp"
#include "ytc/formulas.hpp"
#include "ytc/homology.hpp"
#include "ytc/homotopy.hpp"
#include "ytc/pathideal.hpp"
#include "ytc/young.hpp"

namespace ytc {

struct VerifyBounds {
    int max_n = 10;    // path-ideal sweeps for t >= 2
    int max_t = 3;
    int max_k = 64;    // effective cap is floor(n/t)
    int max_cells = 10;
    int max_n_t1 = 10;  // Veronese (t = 1) sweeps
    int chi_max_n = 60;
    int chi_max_k = 5;
    unsigned rng_seed = 20260810;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    long long cases = 0;
    std::string detail;   // first counterexample, or informational notes
    double seconds = 0.0;
};

namespace verify_detail {

template <typename F>
CheckResult timed(const std::string& name, F&& body) {
    CheckResult r;
    r.name = name;
    auto start = std::chrono::steady_clock::now();
    body(r);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline void fail(CheckResult& r, const std::string& detail) {
    if (r.pass) {
        r.pass = false;
        r.detail = detail;
    }
}

// All partitions with 1 <= total cells <= max_cells, lexicographically.
inline std::vector<Partition> partitions_up_to_cells(int max_cells) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int budget, int cap) -> void {
        if (!parts.empty()) out.push_back(Partition(parts));
        for (int p = std::min(cap, budget); p >= 1; --p) {
            parts.push_back(p);
            self(self, budget - p, p);
            parts.pop_back();
        }
    };
    rec(rec, max_cells, max_cells);
    return out;
}

inline std::string spec_tag(int n, int t, int k) {
    std::ostringstream s;
    s << "(n=" << n << ",t=" << t << ",k=" << k << ")";
    return s.str();
}

// Seeded small random proper complex on vertices {1..nv}.
inline SimplicialComplex random_complex(std::mt19937& rng, int nv, int max_facets) {
    std::uniform_int_distribution<int> facet_count(1, max_facets);
    std::uniform_int_distribution<Mask> raw(1, (Mask{1} << nv) - 1);
    std::vector<Mask> cands;
    int count = facet_count(rng);
    for (int i = 0; i < count; ++i) cands.push_back(raw(rng) << 1);  // labels 1..nv
    return SimplicialComplex::from_masks(std::move(cands));
}

inline bool homotopy_matches_betti(const HomotopyClass& h, const BettiVector& b) {
    std::map<int, long long> expected;
    for (auto& [d, m] : h.spheres()) expected[d] = m;
    return expected == b.nonzero();
}

}  // namespace verify_detail

// --- frozen worked-example replays ------------------------------------------

inline CheckResult check_young_worked_example() {
    using namespace verify_detail;
    return timed("young-5-4-2-facet-list", [](CheckResult& r) {
        const std::vector<Face> expected = {
            {1, 2, 6, 7, 11}, {1, 2, 6, 10, 11}, {1, 2, 9, 10, 11}, {1, 5, 6, 7, 11},
            {1, 5, 6, 10, 11}, {1, 5, 9, 10, 11}, {1, 8, 9, 10, 11}, {4, 5, 6, 7, 11},
            {4, 5, 6, 10, 11}, {4, 5, 9, 10, 11}, {4, 8, 9, 10, 11}, {7, 8, 9, 10, 11}};
        SimplicialComplex c = young_complex(Partition({5, 4, 2}), 3);
        r.cases = 1;
        if (c.facets() != expected) fail(r, "facets of the (5,4,2), t=3 complex differ");
    });
}

inline CheckResult check_reduction_graph_replay() {
    using namespace verify_detail;
    return timed("reduction-graph-9-3-2", [](CheckResult& r) {
        ReductionGraph g = build_reduction_graph(9, 3, 2);
        r.cases = 1;
        if (g.vertices.size() != 10) {
            fail(r, "expected 10 vertices (root + 9), got " + std::to_string(g.vertices.size()));
            return;
        }
        if (g.edges.size() != 9) {
            fail(r, "expected 9 edges, got " + std::to_string(g.edges.size()));
            return;
        }
        auto has_edge = [&](int m1, int j1, int m2, int j2, int label) {
            for (const auto& e : g.edges)
                if (e.from.m == m1 && e.from.j == j1 && e.to.m == m2 && e.to.j == j2 &&
                    e.label == label)
                    return true;
            return false;
        };
        const int want[9][5] = {{9, 3, 7, 2, 0}, {9, 3, 6, 2, 1}, {9, 3, 6, 3, 2},
                                {7, 2, 5, 1, 0}, {7, 2, 4, 1, 1}, {7, 2, 4, 2, 2},
                                {5, 1, 3, 0, 0}, {5, 1, 2, 0, 1}, {5, 1, 2, 1, 2}};
        for (auto& e : want)
            if (!has_edge(e[0], e[1], e[2], e[3], e[4])) {
                fail(r, "missing expected labeled edge");
                return;
            }
        std::map<std::tuple<int, int, int>, long long> counts;
        for (const PathCount& pc : path_label_counts(g)) counts[{pc.m, pc.j, pc.alpha}] = pc.count;
        const int leaves[5][3] = {{6, 3, 2}, {6, 2, 1}, {4, 2, 2}, {4, 1, 1}, {2, 1, 2}};
        for (auto& l : leaves)
            if (counts[{l[0], l[1], l[2]}] != 1) {
                fail(r, "path count N(" + std::to_string(l[0]) + "," + std::to_string(l[1]) +
                            "," + std::to_string(l[2]) + ") != 1");
                return;
            }
    });
}

inline CheckResult check_pd_series() {
    using namespace verify_detail;
    return timed("pd-series-fixed-t-k", [](CheckResult& r) {
        const long long table4[] = {1, 2, 3, 4, 4, 4, 4, 5, 6, 6, 6, 6, 7, 8, 8, 8, 8, 9};
        for (int n = 12; n <= 29; ++n) {
            ++r.cases;
            if (pd_formula(n, 3, 4) != table4[n - 12])
                fail(r, "pd series for t=4, k=3 differs at n=" + std::to_string(n));
        }
        const long long table5[] = {1, 2, 3, 4, 5, 5, 5, 6, 7, 7, 7, 8, 9, 9, 9, 10};
        for (int n = 12; n <= 27; ++n) {
            ++r.cases;
            if (pd_formula(n, 4, 3) != table5[n - 12])
                fail(r, "pd series for t=3, k=4 differs at n=" + std::to_string(n));
        }
    });
}

inline CheckResult check_krull_series() {
    using namespace verify_detail;
    return timed("krull-series-fixed-t-k", [](CheckResult& r) {
        const long long table6[] = {3, 4, 4, 5, 5, 6, 6, 7, 7, 8, 8, 9, 9, 10, 10, 11};
        for (int n = 4; n <= 19; ++n) {
            ++r.cases;
            if (krull_formula(n, 2, 2) != table6[n - 4])
                fail(r, "krull series for t=2, k=2 differs at n=" + std::to_string(n));
        }
        const long long table7[] = {14, 15, 16, 17, 18, 18, 19, 20, 21, 22, 22, 23, 24, 25, 26};
        for (int n = 15; n <= 29; ++n) {
            ++r.cases;
            if (krull_formula(n, 3, 5) != table7[n - 15])
                fail(r, "krull series for t=5, k=3 differs at n=" + std::to_string(n));
        }
    });
}

// --- formula vs oracle sweeps ------------------------------------------------

inline CheckResult check_pd_formula_vs_oracle(const VerifyBounds& b) {
    using namespace verify_detail;
    return timed("pd-formula-vs-hochster", [&](CheckResult& r) {
        for (int t = 1; t <= b.max_t; ++t) {
            int n_cap = (t == 1) ? b.max_n_t1 : b.max_n;
            for (int n = t; n <= n_cap; ++n) {
                for (int k = 1; k <= std::min(n / t, b.max_k); ++k) {
                    ++r.cases;
                    SimplicialComplex sr = stanley_reisner_complex({n, t, k});
                    long long oracle = pd_oracle(sr, interval_mask(1, n));
                    long long formula = pd_formula(n, k, t);
                    if (oracle != formula) {
                        fail(r, spec_tag(n, t, k) + ": pd oracle " + std::to_string(oracle) +
                                    " != formula " + std::to_string(formula));
                        return;
                    }
                }
            }
        }
    });
}

inline CheckResult check_leray_regularity_terai(const VerifyBounds& b) {
    using namespace verify_detail;
    return timed("leray-regularity-terai", [&](CheckResult& r) {
        for (int t = 1; t <= b.max_t; ++t) {
            int n_cap = (t == 1) ? b.max_n_t1 : b.max_n;
            for (int n = t; n <= n_cap; ++n) {
                Mask uni = interval_mask(1, n);
                for (int k = 1; k <= std::min(n / t, b.max_k); ++k) {
                    ++r.cases;
                    SimplicialComplex sr = stanley_reisner_complex({n, t, k});
                    SimplicialComplex dual = dual_complex({n, t, k});
                    long long formula = leray_formula(n, k, t);
                    long long leray = leray_oracle(dual, uni);
                    long long reg = regularity_oracle(dual, uni);
                    long long pd_sr = pd_oracle(sr, uni);
                    if (leray != formula || reg != formula) {
                        fail(r, spec_tag(n, t, k) + ": leray/reg oracle (" + std::to_string(leray) +
                                    "," + std::to_string(reg) + ") != formula " +
                                    std::to_string(formula));
                        return;
                    }
                    if (pd_sr != reg + 1) {
                        fail(r, spec_tag(n, t, k) + ": pd(K[Σ]) = " + std::to_string(pd_sr) +
                                    " != reg(K[Σ^v]) + 1 = " + std::to_string(reg + 1));
                        return;
                    }
                }
            }
        }
    });
}

inline CheckResult check_krull_vs_oracle(const VerifyBounds& b) {
    using namespace verify_detail;
    return timed("krull-formula-vs-oracle", [&](CheckResult& r) {
        for (int t = 1; t <= b.max_t; ++t) {
            for (int n = t; n <= b.max_n; ++n) {
                for (int k = 1; k <= std::min(n / t, b.max_k); ++k) {
                    ++r.cases;
                    KrullResult oracle = krull_height_oracle({n, t, k});
                    if (oracle.dim != krull_formula(n, k, t)) {
                        fail(r, spec_tag(n, t, k) + ": krull oracle dim " +
                                    std::to_string(oracle.dim) + " != formula " +
                                    std::to_string(krull_formula(n, k, t)));
                        return;
                    }
                    if (oracle.height != n / t - (k - 1)) {
                        fail(r, spec_tag(n, t, k) + ": height " + std::to_string(oracle.height) +
                                    " != nu - (k-1)");
                        return;
                    }
                    SimplicialComplex sr = stanley_reisner_complex({n, t, k});
                    if (sr.dim() + 1 != n - oracle.height) {
                        fail(r, spec_tag(n, t, k) + ": dim(Σ)+1 != n - height");
                        return;
                    }
                }
            }
        }
    });
}

// --- homotopy cross-checks ----------------------------------------------------

inline CheckResult check_homotopy_vs_homology(const VerifyBounds& b) {
    using namespace verify_detail;
    return timed("young-homotopy-vs-homology", [&](CheckResult& r) {
        for (const Partition& lambda : partitions_up_to_cells(b.max_cells)) {
            for (int t = 1; t <= b.max_t; ++t) {
                ++r.cases;
                HomotopyClass h = young_homotopy(lambda, t);
                BettiVector betti = reduced_betti_cached(young_complex(lambda, t), Field::Rationals);
                if (!homotopy_matches_betti(h, betti)) {
                    fail(r, "λ=" + lambda.to_string() + ", t=" + std::to_string(t) +
                                ": homotopy " + h.to_string() + " vs betti " + betti.to_string());
                    return;
                }
            }
        }
    });
}

inline CheckResult check_two_route_homotopy(const VerifyBounds& b) {
    using namespace verify_detail;
    return timed("dual-homotopy-vs-young", [&](CheckResult& r) {
        for (int t = 1; t <= b.max_t; ++t) {
            for (int n = 1; n <= std::max(b.max_n, 14); ++n) {
                for (int k = 1; k * t <= n; ++k) {
                    ++r.cases;
                    HomotopyClass via_graph = dual_homotopy(n, k, t);
                    HomotopyClass via_young =
                        young_homotopy(rectangle_partition(n - k * t, k + 1), t);
                    if (via_graph != via_young) {
                        fail(r, spec_tag(n, t, k) + ": " + via_graph.to_string() +
                                    " != " + via_young.to_string());
                        return;
                    }
                }
            }
        }
    });
}

inline CheckResult check_binomial_wedge(const VerifyBounds& b) {
    using namespace verify_detail;
    return timed("binomial-wedge", [&](CheckResult& r) {
        for (int t = 1; t <= b.max_t; ++t) {
            for (int l = 1; l <= t; ++l) {
                for (int k = 0; k * t + l <= b.max_n; ++k) {
                    int n = k * t + l;
                    ++r.cases;
                    HomotopyClass closed = binomial_wedge(n, k, t);
                    Partition lambda = rectangle_partition(l, k + 1);
                    if (closed != young_homotopy(lambda, t)) {
                        fail(r, spec_tag(n, t, k) + ": closed form != recursion");
                        return;
                    }
                    BettiVector betti =
                        reduced_betti_cached(young_complex(lambda, t), Field::Rationals);
                    if (!homotopy_matches_betti(closed, betti)) {
                        fail(r, spec_tag(n, t, k) + ": closed form != homology oracle");
                        return;
                    }
                }
            }
        }
    });
}

// The digraph assembly against exact homology on every instance small enough
// to enumerate, independent of the partition recursion. This covers
// rectangles whose cell count exceeds the partition sweeps (the vertex count
// is what homology is bounded by).
inline CheckResult check_dual_homotopy_vs_homology(const VerifyBounds& b) {
    using namespace verify_detail;
    return timed("dual-homotopy-vs-betti", [&](CheckResult& r) {
        for (int t = 1; t <= b.max_t; ++t) {
            for (int n = 1; n <= b.max_n; ++n) {
                for (int k = 0; k * t <= n; ++k) {
                    ++r.cases;
                    HomotopyClass h = dual_homotopy(n, k, t);
                    BettiVector betti =
                        reduced_betti_cached(dual_complex({n, t, k}), Field::Rationals);
                    if (!homotopy_matches_betti(h, betti)) {
                        fail(r, spec_tag(n, t, k) + ": digraph assembly " + h.to_string() +
                                    " vs betti " + betti.to_string());
                        return;
                    }
                }
            }
        }
    });
}

// Nonvanishing witnesses: the wedge contains the sphere of the dimension the
// lower-bound argument names, in the regimes where it names one (the linear
// window and the two extreme residues); likewise the top homology in the
// window t < l <= k.
inline CheckResult check_homotopy_lower_bound(const VerifyBounds& b) {
    using namespace verify_detail;
    return timed("homotopy-lower-bound-witness", [&](CheckResult& r) {
        for (int t = 1; t <= b.max_t; ++t) {
            for (int n = t; n <= std::max(b.max_n, 14); ++n) {
                for (int k = 1; k * t <= n; ++k) {
                    long long witness = -2;
                    if (n <= static_cast<long long>(k) * (t + 1)) {
                        witness = n - static_cast<long long>(k) * t - 1;
                    } else if (n % (t + 1) == 0) {
                        witness = 2LL * n / (t + 1) - k - 1;
                    } else if (n % (t + 1) == t) {
                        witness = 2LL * (n + 1) / (t + 1) - k - 2;
                    } else {
                        continue;
                    }
                    ++r.cases;
                    HomotopyClass h = dual_homotopy(n, k, t);
                    if (h.multiplicity(static_cast<int>(witness)) <= 0) {
                        fail(r, spec_tag(n, t, k) + ": no sphere in dimension " +
                                    std::to_string(witness));
                        return;
                    }
                    if (witness >= 0 && pd_formula(n, k, t) - 2 != witness) {
                        fail(r, spec_tag(n, t, k) + ": witness dimension != pd - 2");
                        return;
                    }
                }
            }
        }
        // top homology for k > t, n = kt + l with t < l <= k
        for (int t = 1; t <= b.max_t; ++t) {
            for (int k = t + 1; k <= std::max(b.max_n, 14); ++k) {
                for (int l = t + 1; l <= k; ++l) {
                    int n = k * t + l;
                    if (n > 3 * std::max(b.max_n, 14)) continue;
                    ++r.cases;
                    if (dual_homotopy(n, k, t).multiplicity(l - 1) <= 0) {
                        fail(r, spec_tag(n, t, k) + ": top homology S^" + std::to_string(l - 1) +
                                    " missing");
                        return;
                    }
                }
            }
        }
    });
}

// --- structural checks on the Young construction ------------------------------

inline CheckResult check_young_structure(const VerifyBounds& b) {
    using namespace verify_detail;
    return timed("young-structure", [&](CheckResult& r) {
        for (const Partition& lambda : partitions_up_to_cells(b.max_cells)) {
            for (int t = 1; t <= b.max_t; ++t) {
                ++r.cases;
                SimplicialComplex c = young_complex(lambda, t);
                if (!c.is_proper() || !c.is_pure() || c.dim() != lambda.part(1) - 1) {
                    fail(r, "λ=" + lambda.to_string() + ", t=" + std::to_string(t) +
                                ": not pure of dimension λ1-1");
                    return;
                }
                if (c.facet_count() < 1) {
                    fail(r, "λ=" + lambda.to_string() + ": no facets");
                    return;
                }
                if (lambda.rows() == 1 || lambda.part(1) > lambda.part(2)) {
                    int apex = (lambda.rows() - 1) * t + lambda.part(1);
                    for (Mask f : c.facet_masks())
                        if (!subset(bit(apex), f)) {
                            fail(r, "λ=" + lambda.to_string() + ", t=" + std::to_string(t) +
                                        ": apex " + std::to_string(apex) + " not in every facet");
                            return;
                        }
                }
                if (lambda.rows() == 1 || lambda.part(2) <= t) {
                    if (order_complex_presentation(lambda, t) != c) {
                        fail(r, "λ=" + lambda.to_string() + ", t=" + std::to_string(t) +
                                    ": order-complex presentation differs");
                        return;
                    }
                }
            }
        }
    });
}

inline CheckResult check_dual_route(const VerifyBounds& b) {
    using namespace verify_detail;
    return timed("dual-complex-two-routes", [&](CheckResult& r) {
        for (int t = 1; t <= b.max_t; ++t) {
            for (int n = t; n <= b.max_n; ++n) {
                for (int k = 1; k <= std::min(n / t, b.max_k); ++k) {
                    ++r.cases;
                    if (dual_complex({n, t, k}) != dual_complex_via_alexander({n, t, k})) {
                        fail(r, spec_tag(n, t, k) + ": Young construction != Alexander dual");
                        return;
                    }
                }
            }
        }
    });
}

inline CheckResult check_helly(const VerifyBounds& b) {
    using namespace verify_detail;
    return timed("helly-number", [&](CheckResult& r) {
        for (const Partition& lambda : partitions_up_to_cells(b.max_cells)) {
            for (int t = 1; t <= b.max_t; ++t) {
                ++r.cases;
                HellyResult expected = helly_formula(lambda, t);
                int n = (lambda.rows() - 1) * t + lambda.part(1);
                Mask uni = interval_mask(1, n);
                SimplicialComplex dual = alexander_dual(young_complex(lambda, t), uni);
                if (expected.simplex) {
                    if (!dual.is_void()) {
                        fail(r, "λ=" + lambda.to_string() + ": single-row dual should be void");
                        return;
                    }
                    continue;
                }
                int max_dim = -2;
                for (Mask nf : minimal_nonface_masks(dual, uni))
                    max_dim = std::max(max_dim, popcount(nf) - 1);
                if (max_dim != expected.value) {
                    fail(r, "λ=" + lambda.to_string() + ", t=" + std::to_string(t) +
                                ": max minimal-nonface dim " + std::to_string(max_dim) +
                                " != " + std::to_string(expected.value));
                    return;
                }
            }
        }
    });
}

// --- decomposability ----------------------------------------------------------

inline CheckResult check_decomposability(const VerifyBounds& b) {
    using namespace verify_detail;
    return timed("decomposability-equivalence", [&](CheckResult& r) {
        for (const Partition& lambda : partitions_up_to_cells(b.max_cells)) {
            for (int t = 1; t <= b.max_t; ++t) {
                ++r.cases;
                SimplicialComplex c = young_complex(lambda, t);
                DecompCertificate vd = is_vertex_decomposable(c);
                bool expected = vd_characterization(lambda, t);
                if (vd.verdict != expected) {
                    fail(r, "λ=" + lambda.to_string() + ", t=" + std::to_string(t) +
                                ": vd checker " + (vd.verdict ? "true" : "false") +
                                " != characterization");
                    return;
                }
                if (vd.verdict && !replay_vd_certificate(c, *vd.tree)) {
                    fail(r, "λ=" + lambda.to_string() + ", t=" + std::to_string(t) +
                                ": vd certificate fails replay");
                    return;
                }
                bool cm_q = is_cohen_macaulay(c, Field::Rationals);
                bool cm_2 = is_cohen_macaulay(c, Field::GF2);
                if (t == 1) {
                    if (!vd.verdict || !cm_q || !cm_2) {
                        fail(r, "λ=" + lambda.to_string() + ": t=1 complex not vd/CM");
                        return;
                    }
                } else if (cm_q != expected || cm_2 != expected) {
                    fail(r, "λ=" + lambda.to_string() + ", t=" + std::to_string(t) +
                                ": CM verdicts disagree with the characterization");
                    return;
                }
                if (c.facet_count() <= kShellingFacetCap) {
                    DecompCertificate sh = is_shellable(c);
                    bool shell_expected = (t == 1) ? true : expected;
                    if (sh.verdict != shell_expected) {
                        fail(r, "λ=" + lambda.to_string() + ", t=" + std::to_string(t) +
                                    ": shellability disagrees");
                        return;
                    }
                    if (sh.verdict && !replay_shelling_certificate(c, sh.shelling_order)) {
                        fail(r, "λ=" + lambda.to_string() + ": shelling order fails replay");
                        return;
                    }
                }
            }
        }
    });
}

inline CheckResult check_cm_window(const VerifyBounds& b) {
    using namespace verify_detail;
    return timed("cm-linearity-window", [&](CheckResult& r) {
        for (int t = 2; t <= b.max_t; ++t) {
            for (int n = t; n <= b.max_n; ++n) {
                for (int k = 1; k <= std::min(n / t, b.max_k); ++k) {
                    ++r.cases;
                    SimplicialComplex dual = dual_complex({n, t, k});
                    bool window = n <= static_cast<long long>(k) * t + t;
                    bool cm_q = is_cohen_macaulay(dual, Field::Rationals);
                    bool cm_2 = is_cohen_macaulay(dual, Field::GF2);
                    LinearityFlags flags = linearity_characterization(n, k, t);
                    if (cm_q != window || cm_2 != window || flags.linear_resolution != window ||
                        flags.linear_quotients != window) {
                        fail(r, spec_tag(n, t, k) + ": CM/linearity window mismatch");
                        return;
                    }
                }
            }
        }
    });
}

// --- arithmetic and enumeration ------------------------------------------------

inline CheckResult check_chi_lemmas(const VerifyBounds& b) {
    using namespace verify_detail;
    return timed("chi-lemmas", [&](CheckResult& r) {
        ChiLemmaBounds cb{b.chi_max_n, b.chi_max_k, b.max_t};
        for (const LemmaReport& rep : chi_lemma_checks(cb)) {
            r.cases += rep.cases;
            if (!rep.pass) {
                const auto& ce = *rep.counterexample;
                fail(r, "lemma '" + rep.lemma + "' fails at n=" + std::to_string(ce[0]) +
                            ", k=" + std::to_string(ce[1]) + ", t=" + std::to_string(ce[2]));
                return;
            }
        }
    });
}

inline CheckResult check_matching_numbers(const VerifyBounds& b) {
    using namespace verify_detail;
    return timed("matching-numbers", [&](CheckResult& r) {
        for (int t = 1; t <= b.max_t; ++t) {
            for (int n = t; n <= b.max_n; ++n) {
                ++r.cases;
                auto [nu, nu0] = matching_numbers(n, t);
                if (nu != n / t || nu0 != (n - 1) / t) {
                    fail(r, "matching numbers differ at n=" + std::to_string(n) +
                                ", t=" + std::to_string(t));
                    return;
                }
                // enumeration: the largest k with a nonempty generator set
                int max_k = 0;
                for (int k = 1; k <= n; ++k)
                    if (!squarefree_power_generators({n, t, k}).empty()) max_k = k;
                if (max_k != nu) {
                    fail(r, "enumerated matching number " + std::to_string(max_k) +
                                " != " + std::to_string(nu));
                    return;
                }
            }
        }
    });
}

inline CheckResult check_generator_count(const VerifyBounds& b) {
    using namespace verify_detail;
    return timed("generator-count", [&](CheckResult& r) {
        for (int t = 1; t <= b.max_t; ++t) {
            for (int n = t; n <= b.max_n; ++n) {
                for (int k = 1; k <= n; ++k) {
                    ++r.cases;
                    auto gens = squarefree_power_generators({n, t, k});
                    long long expected =
                        (k <= n / t) ? binomial(n - static_cast<long long>(k) * (t - 1), k) : 0;
                    if (static_cast<long long>(gens.size()) != expected) {
                        fail(r, spec_tag(n, t, k) + ": generator count " +
                                    std::to_string(gens.size()) + " != " +
                                    std::to_string(expected));
                        return;
                    }
                    for (Mask g : gens)
                        if (popcount(g) != k * t) {
                            fail(r, spec_tag(n, t, k) + ": generator of wrong degree");
                            return;
                        }
                }
            }
        }
    });
}

// --- homology self-checks -------------------------------------------------------

inline CheckResult check_euler_and_fields(const VerifyBounds& b) {
    using namespace verify_detail;
    return timed("euler-poincare-and-fields", [&](CheckResult& r) {
        long long disagreements = 0;
        for (int t = 1; t <= b.max_t; ++t) {
            for (int n = t; n <= b.max_n; ++n) {
                for (int k = 1; k <= std::min(n / t, b.max_k); ++k) {
                    for (const SimplicialComplex& c :
                         {stanley_reisner_complex({n, t, k}), dual_complex({n, t, k})}) {
                        if (c.is_void()) continue;
                        ++r.cases;
                        BettiVector bq = reduced_betti_cached(c, Field::Rationals);
                        BettiVector b2 = reduced_betti_cached(c, Field::GF2);
                        long long chi_faces = reduced_euler_characteristic(c);
                        if (bq.euler_characteristic() != chi_faces ||
                            b2.euler_characteristic() != chi_faces) {
                            fail(r, spec_tag(n, t, k) + ": Euler-Poincare mismatch");
                            return;
                        }
                        if (bq != b2) ++disagreements;  // flagged, not a failure
                    }
                }
            }
        }
        if (disagreements > 0)
            r.detail = "field disagreement on " + std::to_string(disagreements) +
                       " instances (flagged only)";
    });
}

inline CheckResult check_core_properties(const VerifyBounds& b) {
    using namespace verify_detail;
    return timed("core-random-properties", [&](CheckResult& r) {
        std::mt19937 rng(b.rng_seed);
        for (int trial = 0; trial < 200; ++trial) {
            std::uniform_int_distribution<int> nv_dist(1, 7);
            int nv = nv_dist(rng);
            SimplicialComplex c = random_complex(rng, nv, 5);
            ++r.cases;

            // Alexander duality is an involution when a nonface exists
            Mask uni = interval_mask(1, nv);
            if (subset(c.vertex_mask(), uni) && !minimal_nonface_masks(c, uni).empty()) {
                if (alexander_dual(alexander_dual(c, uni), uni) != c) {
                    fail(r, "duality involution fails (trial " + std::to_string(trial) + ")");
                    return;
                }
            }

            // suspension shifts reduced homology up by one degree
            int a = nv + 1, z = nv + 2;
            BettiVector before = reduced_betti(c, Field::Rationals);
            BettiVector after = reduced_betti(suspension(c, a, z), Field::Rationals);
            for (int d = -1; d <= c.dim() + 1; ++d)
                if (before.betti(d) != after.betti(d + 1)) {
                    fail(r, "suspension shift fails (trial " + std::to_string(trial) + ")");
                    return;
                }

            // star = cone over the link; deletion + star cover the faces
            for (int v : c.vertices()) {
                SimplicialComplex st = star(c, v);
                SimplicialComplex lk = link(c, vertices_to_mask({v}));
                SimplicialComplex rebuilt =
                    lk.is_irrelevant() ? SimplicialComplex::from_facets({{v}}) : cone(lk, v);
                if (st != rebuilt) {
                    fail(r, "star != cone(link) (trial " + std::to_string(trial) + ")");
                    return;
                }
                std::size_t total = 0, del_faces = 0, star_with_v = 0;
                for (const auto& level : c.faces_by_dim()) total += level.size();
                for (const auto& level : deletion(c, v).faces_by_dim()) del_faces += level.size();
                for (const auto& level : st.faces_by_dim())
                    for (Mask f : level)
                        if (subset(bit(v), f)) ++star_with_v;
                if (total != del_faces + star_with_v) {
                    fail(r, "deletion/star face partition fails (trial " + std::to_string(trial) +
                                ")");
                    return;
                }
            }
        }
    });
}

// Every cross-check in deterministic order. A capacity violation inside one
// check (bounds beyond the documented caps) is reported on that check and
// does not abort the rest of the suite.
inline std::vector<CheckResult> verify_suite(const VerifyBounds& b) {
    std::vector<CheckResult> out;
    auto guarded = [&out](const char* name, auto&& fn) {
        try {
            out.push_back(fn());
        } catch (const CapacityError& e) {
            CheckResult r;
            r.name = name;
            r.pass = false;
            r.detail = std::string("capacity: ") + e.what();
            out.push_back(r);
        }
    };
    guarded("young-5-4-2-facet-list", [&] { return check_young_worked_example(); });
    guarded("reduction-graph-9-3-2", [&] { return check_reduction_graph_replay(); });
    guarded("pd-series-fixed-t-k", [&] { return check_pd_series(); });
    guarded("krull-series-fixed-t-k", [&] { return check_krull_series(); });
    guarded("young-structure", [&] { return check_young_structure(b); });
    guarded("dual-complex-two-routes", [&] { return check_dual_route(b); });
    guarded("young-homotopy-vs-homology", [&] { return check_homotopy_vs_homology(b); });
    guarded("dual-homotopy-vs-young", [&] { return check_two_route_homotopy(b); });
    guarded("dual-homotopy-vs-betti", [&] { return check_dual_homotopy_vs_homology(b); });
    guarded("binomial-wedge", [&] { return check_binomial_wedge(b); });
    guarded("homotopy-lower-bound-witness", [&] { return check_homotopy_lower_bound(b); });
    guarded("pd-formula-vs-hochster", [&] { return check_pd_formula_vs_oracle(b); });
    guarded("leray-regularity-terai", [&] { return check_leray_regularity_terai(b); });
    guarded("krull-formula-vs-oracle", [&] { return check_krull_vs_oracle(b); });
    guarded("helly-number", [&] { return check_helly(b); });
    guarded("decomposability-equivalence", [&] { return check_decomposability(b); });
    guarded("cm-linearity-window", [&] { return check_cm_window(b); });
    guarded("chi-lemmas", [&] { return check_chi_lemmas(b); });
    guarded("matching-numbers", [&] { return check_matching_numbers(b); });
    guarded("generator-count", [&] { return check_generator_count(b); });
    guarded("euler-poincare-and-fields", [&] { return check_euler_and_fields(b); });
    guarded("core-random-properties", [&] { return check_core_properties(b); });
    return out;
}

}  // namespace ytc

#endif
