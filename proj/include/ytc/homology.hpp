#ifndef YTC_HOMOLOGY_HPP
#define YTC_HOMOLOGY_HPP

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ytc/complex.hpp"

namespace ytc {

enum class Field { Rationals, GF2 };

inline const char* field_name(Field f) { return f == Field::Rationals ? "q" : "gf2"; }

// Reduced Betti numbers, stored sparsely (absent degree = 0). Degree -1 is 1
// exactly for the irrelevant complex; the void complex has no homology at all.
class BettiVector {
public:
    BettiVector() = default;

    void set(int degree, long long value) {
        if (value < 0) throw std::logic_error("betti numbers are non-negative");
        if (value == 0)
            nonzero_.erase(degree);
        else
            nonzero_[degree] = value;
    }

    long long betti(int degree) const {
        auto it = nonzero_.find(degree);
        return it == nonzero_.end() ? 0 : it->second;
    }

    const std::map<int, long long>& nonzero() const { return nonzero_; }
    bool all_zero() const { return nonzero_.empty(); }

    int max_nonzero_degree() const {  // -2 when trivial
        return nonzero_.empty() ? -2 : nonzero_.rbegin()->first;
    }

    long long euler_characteristic() const {  // alternating sum, degree -1 included
        long long chi = 0;
        for (auto& [d, b] : nonzero_) chi += (d % 2 == 0) ? b : -b;
        return chi;
    }

    std::string to_string() const {
        if (nonzero_.empty()) return "trivial";
        std::ostringstream out;
        bool first = true;
        for (auto& [d, b] : nonzero_) {
            if (!first) out << ", ";
            first = false;
            out << "H~_" << d << "=" << b;
        }
        return out.str();
    }

    bool operator==(const BettiVector& o) const { return nonzero_ == o.nonzero_; }
    bool operator!=(const BettiVector& o) const { return !(*this == o); }

private:
    std::map<int, long long> nonzero_;
};

// ---------------------------------------------------------------------------
// Exact rank computation
// ---------------------------------------------------------------------------
namespace detail {

struct Int64Overflow {};

// Fraction-free Bareiss elimination over the integers. Every intermediate
// entry is a minor of the input, so the arithmetic stays exact; if a value
// leaves the int64 range the caller retries with arbitrary precision.
inline int bareiss_rank_i64(std::vector<std::vector<long long>>& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    constexpr long long kMax = std::numeric_limits<long long>::max();
    long long prev = 1;
    std::size_t rank = 0;
    for (std::size_t step = 0; rank < rows && step < cols; ++step) {
        std::size_t pivot = rows;
        for (std::size_t i = rank; i < rows; ++i)
            if (m[i][step] != 0) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        const long long p = m[rank][step];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const long long head = m[i][step];
            for (std::size_t j = step; j < cols; ++j) {
                __int128 v = static_cast<__int128>(p) * m[i][j] -
                             static_cast<__int128>(head) * m[rank][j];
                v /= prev;  // exact by the Bareiss identity
                if (v > kMax || v < -kMax) throw Int64Overflow{};
                m[i][j] = static_cast<long long>(v);
            }
        }
        prev = p;
        ++rank;
    }
    return static_cast<int>(rank);
}

inline int bareiss_rank_mpz(const std::vector<std::vector<long long>>& input) {
    const std::size_t rows = input.size();
    const std::size_t cols = rows ? input[0].size() : 0;
    std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m[i][j] = static_cast<long>(input[i][j]);  // entries are tiny at this point
    mpz_class prev = 1;
    std::size_t rank = 0;
    for (std::size_t step = 0; rank < rows && step < cols; ++step) {
        std::size_t pivot = rows;
        for (std::size_t i = rank; i < rows; ++i)
            if (m[i][step] != 0) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = cols; j-- > step;) {
                m[i][j] = m[rank][step] * m[i][j] - m[i][step] * m[rank][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[rank][step];
        ++rank;
    }
    return static_cast<int>(rank);
}

inline int rank_over_q(std::vector<std::vector<long long>> m) {
    std::vector<std::vector<long long>> backup = m;
    try {
        return bareiss_rank_i64(m);
    } catch (const Int64Overflow&) {
        return bareiss_rank_mpz(backup);
    }
}

// Bit-packed Gaussian elimination over GF(2).
inline int rank_over_gf2(const std::vector<std::vector<long long>>& input) {
    const std::size_t rows = input.size();
    const std::size_t cols = rows ? input[0].size() : 0;
    const std::size_t words = (cols + 63) / 64;
    std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (input[i][j] & 1) m[i][j / 64] ^= (std::uint64_t{1} << (j % 64));
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        const std::size_t w = col / 64;
        const std::uint64_t b = std::uint64_t{1} << (col % 64);
        std::size_t pivot = rows;
        for (std::size_t i = row; i < rows; ++i)
            if (m[i][w] & b) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != row && (m[i][w] & b))
                for (std::size_t x = w; x < words; ++x) m[i][x] ^= m[row][x];
        }
        ++row;
        ++rank;
    }
    return rank;
}

inline int matrix_rank(std::vector<std::vector<long long>> m, Field field) {
    if (m.empty() || m[0].empty()) return 0;
    return field == Field::Rationals ? rank_over_q(std::move(m)) : rank_over_gf2(m);
}

}  // namespace detail

constexpr int kHomologyVertexCap = 24;

// Reduced simplicial homology ranks over the chosen field, from boundary
// matrix ranks on the reduced chain complex (the empty face is a generator
// in degree -1, so the irrelevant complex has betti(-1) = 1).
inline BettiVector reduced_betti(const SimplicialComplex& c, Field field) {
    BettiVector out;
    if (c.is_void()) return out;
    if (c.is_irrelevant()) {
        out.set(-1, 1);
        return out;
    }
    if (popcount(c.vertex_mask()) > kHomologyVertexCap)
        throw CapacityError("reduced_betti: more than " + std::to_string(kHomologyVertexCap) +
                            " vertices");

    const auto levels = c.faces_by_dim();  // levels[d+1] = d-faces
    const int top = static_cast<int>(levels.size()) - 2;  // top dimension

    // ranks[d+1] = rank of the boundary map from d-faces to (d-1)-faces
    std::vector<int> ranks(levels.size() + 1, 0);
    for (int d = 0; d <= top; ++d) {
        const auto& domain = levels[static_cast<std::size_t>(d + 1)];
        const auto& codomain = levels[static_cast<std::size_t>(d)];
        std::unordered_map<Mask, std::size_t> row_index;
        row_index.reserve(codomain.size());
        for (std::size_t i = 0; i < codomain.size(); ++i) row_index[codomain[i]] = i;
        std::vector<std::vector<long long>> m(
            codomain.size(), std::vector<long long>(domain.size(), 0));
        for (std::size_t col = 0; col < domain.size(); ++col) {
            Mask f = domain[col];
            int position = 0;
            Mask rest = f;
            while (rest) {
                int v = lowest_vertex(rest);
                rest &= rest - 1;
                Mask sub = f & ~bit(v);
                m[row_index.at(sub)][col] = (position % 2 == 0) ? 1 : -1;
                ++position;
            }
        }
        ranks[static_cast<std::size_t>(d + 1)] = detail::matrix_rank(std::move(m), field);
    }

    for (int d = -1; d <= top; ++d) {
        long long faces_d = static_cast<long long>(levels[static_cast<std::size_t>(d + 1)].size());
        long long b = faces_d - ranks[static_cast<std::size_t>(d + 1)] -
                      ranks[static_cast<std::size_t>(d + 2)];
        if (b != 0) out.set(d, b);
    }
    return out;
}

namespace detail {

// Canonical key: facets after order-preserving relabeling of the vertex set
// to 0..v-1; homology is invariant under relabeling, so structurally equal
// induced subcomplexes share one computation.
struct ComplexKey {
    Status status;
    std::vector<Mask> facets;
    bool operator==(const ComplexKey& o) const {
        return status == o.status && facets == o.facets;
    }
};

struct ComplexKeyHash {
    std::size_t operator()(const ComplexKey& k) const {
        std::size_t h = static_cast<std::size_t>(k.status) * 1099511628211ULL + 14695981039346656037ULL;
        for (Mask f : k.facets) {
            h ^= static_cast<std::size_t>(f);
            h *= 1099511628211ULL;
        }
        return h;
    }
};

inline ComplexKey canonical_key(const SimplicialComplex& c) {
    ComplexKey key{c.status(), {}};
    if (!c.is_proper()) return key;
    std::vector<int> verts = c.vertices();
    std::array<int, 64> rank{};
    for (std::size_t i = 0; i < verts.size(); ++i) rank[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
    for (Mask f : c.facet_masks()) {
        Mask remapped = 0;
        Mask rest = f;
        while (rest) {
            int v = lowest_vertex(rest);
            rest &= rest - 1;
            remapped |= bit(rank[static_cast<std::size_t>(v)]);
        }
        key.facets.push_back(remapped);
    }
    std::sort(key.facets.begin(), key.facets.end(), face_less);
    return key;
}

}  // namespace detail

// Memoized homology front end used by the subset sweeps; results are shared
// process-wide across relabel-equivalent complexes.
inline BettiVector reduced_betti_cached(const SimplicialComplex& c, Field field) {
    static std::mutex cache_mutex;
    static std::unordered_map<detail::ComplexKey,
                              std::array<std::pair<bool, BettiVector>, 2>,
                              detail::ComplexKeyHash>
        cache;
    detail::ComplexKey key = detail::canonical_key(c);
    const std::size_t slot = (field == Field::Rationals) ? 0 : 1;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end() && it->second[slot].first) return it->second[slot].second;
    }
    BettiVector b = reduced_betti(c, field);
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache[key][slot] = {true, b};
    return b;
}

constexpr int kCohenMacaulayVertexCap = 20;

// Reisner's criterion: Δ is Cohen-Macaulay over K iff every link (the link
// of ∅ included) has vanishing reduced homology below its dimension.
inline bool is_cohen_macaulay(const SimplicialComplex& c, Field field) {
    if (!c.is_proper()) return true;  // {∅} and the void complex are vacuously CM
    if (popcount(c.vertex_mask()) > kCohenMacaulayVertexCap)
        throw CapacityError("is_cohen_macaulay: more than " +
                            std::to_string(kCohenMacaulayVertexCap) + " vertices");
    for (const auto& level : c.faces_by_dim()) {
        for (Mask sigma : level) {
            SimplicialComplex lk = link(c, sigma);
            if (!lk.is_proper()) continue;  // lk = {∅} exactly when sigma is a facet
            int d = lk.dim();
            BettiVector b = reduced_betti_cached(lk, field);
            for (auto& [deg, val] : b.nonzero())
                if (deg < d && val != 0) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Hochster's formula and the derived invariants
// ---------------------------------------------------------------------------

constexpr int kHochsterUniverseCap = 14;

// Graded Betti numbers beta_{i,sigma} of the Stanley-Reisner ring K[Δ] over
// the given universe: beta_{i,sigma} = dim H~_{|sigma|-i-1}(Δ|_sigma).
struct GradedBettiTable {
    Mask universe = 0;
    Field field = Field::Rationals;
    std::map<std::pair<int, Mask>, long long> entries;  // nonzero only

    long long beta(int i, Mask sigma) const {
        auto it = entries.find({i, sigma});
        return it == entries.end() ? 0 : it->second;
    }

    // projective dimension of K[Δ]: the largest homological index
    int pd() const {
        int best = 0;
        for (auto& [key, val] : entries) best = std::max(best, key.first);
        return best;
    }

    // Castelnuovo-Mumford regularity of K[Δ]: max |sigma| - i over nonzero
    // entries
    int regularity() const {
        int best = 0;
        for (auto& [key, val] : entries)
            best = std::max(best, popcount(key.second) - key.first);
        return best;
    }
};

inline GradedBettiTable hochster_table(const SimplicialComplex& c, Mask universe,
                                       Field field = Field::Rationals) {
    if (c.is_void())
        throw DomainError("hochster_table: the void complex has no Stanley-Reisner ring");
    if (!subset(c.vertex_mask(), universe))
        throw DomainError("hochster_table: universe must contain V(Δ)");
    if (popcount(universe) > kHochsterUniverseCap)
        throw CapacityError("hochster_table: universe larger than " +
                            std::to_string(kHochsterUniverseCap) + " vertices");
    GradedBettiTable table;
    table.universe = universe;
    table.field = field;
    Mask sigma = universe;
    while (true) {
        SimplicialComplex ind = induced_subcomplex(c, sigma);
        bool cone = false;
        if (ind.is_proper()) {
            Mask common = ~Mask{0};
            for (Mask f : ind.facet_masks()) common &= f;
            cone = common != 0;  // a cone has no reduced homology
        }
        if (!cone) {
            BettiVector b = reduced_betti_cached(ind, field);
            int size = popcount(sigma);
            for (auto& [d, val] : b.nonzero()) table.entries[{size - d - 1, sigma}] = val;
        }
        if (sigma == 0) break;
        sigma = (sigma - 1) & universe;
    }
    return table;
}

inline int pd_oracle(const SimplicialComplex& c, Mask universe, Field field = Field::Rationals) {
    return hochster_table(c, universe, field).pd();
}

inline int regularity_oracle(const SimplicialComplex& c, Mask universe,
                             Field field = Field::Rationals) {
    return hochster_table(c, universe, field).regularity();
}

// Leray number: 1 + the largest degree in which some induced subcomplex has
// nonvanishing reduced homology (0 when there is none).
inline int leray_oracle(const SimplicialComplex& c, Mask universe,
                        Field field = Field::Rationals) {
    if (c.is_void())
        throw DomainError("leray_oracle: undefined for the void complex");
    if (!subset(c.vertex_mask(), universe))
        throw DomainError("leray_oracle: universe must contain V(Δ)");
    if (popcount(universe) > kHochsterUniverseCap)
        throw CapacityError("leray_oracle: universe larger than " +
                            std::to_string(kHochsterUniverseCap) + " vertices");
    int best_degree = -1;
    Mask sigma = universe;
    while (true) {
        SimplicialComplex ind = induced_subcomplex(c, sigma);
        bool cone = false;
        if (ind.is_proper()) {
            Mask common = ~Mask{0};
            for (Mask f : ind.facet_masks()) common &= f;
            cone = common != 0;
        }
        if (!cone) {
            BettiVector b = reduced_betti_cached(ind, field);
            best_degree = std::max(best_degree, b.max_nonzero_degree());
        }
        if (sigma == 0) break;
        sigma = (sigma - 1) & universe;
    }
    return best_degree < 0 ? 0 : best_degree + 1;
}

// Reduced Euler characteristic straight from the face counts (independent of
// any rank computation).
inline long long reduced_euler_characteristic(const SimplicialComplex& c) {
    if (c.is_void()) return 0;
    long long chi = 0;
    const auto levels = c.faces_by_dim();
    for (std::size_t i = 0; i < levels.size(); ++i) {
        long long count = static_cast<long long>(levels[i].size());
        // index i holds faces of dimension i-1
        chi += (i % 2 == 1) ? count : -count;
    }
    return chi;
}

}  // namespace ytc

#endif
