#ifndef YTC_COMMON_HPP
#define YTC_COMMON_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ytc {

// Domain errors: the input is mathematically outside an operation's domain.
// Capacity errors: the input is legal but exceeds a documented size cap.
// The CLI maps these to distinct exit codes (1 and 2).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Vertex sets live in a fixed 64-bit universe: vertex label v <-> bit v.
// Every construction in this library uses labels well below 64; larger
// universes are rejected with a CapacityError at construction time.
using Mask = std::uint64_t;

constexpr int kMaxVertexLabel = 63;

inline Mask bit(int v) { return Mask{1} << v; }

inline int popcount(Mask m) { return std::popcount(m); }

inline int lowest_vertex(Mask m) { return std::countr_zero(m); }

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline std::vector<int> mask_to_vertices(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(m)));
    while (m) {
        int v = lowest_vertex(m);
        out.push_back(v);
        m &= m - 1;
    }
    return out;
}

inline Mask vertices_to_mask(const std::vector<int>& vs) {
    Mask m = 0;
    for (int v : vs) {
        if (v < 0) throw DomainError("vertex labels must be non-negative");
        if (v > kMaxVertexLabel)
            throw CapacityError("vertex label " + std::to_string(v) +
                                " exceeds the 64-element universe bound");
        m |= bit(v);
    }
    return m;
}

// Mask of {lo, lo+1, ..., hi}; empty when hi < lo.
inline Mask interval_mask(int lo, int hi) {
    Mask m = 0;
    for (int v = lo; v <= hi; ++v) m |= bit(v);
    return m;
}

// Canonical face order: by cardinality, then lexicographic on the ascending
// vertex list. For equal-size masks the lexicographically smaller face is the
// one owning the lowest differing vertex.
inline bool face_less(Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    if (a == b) return false;
    Mask d = a ^ b;
    Mask low = d & (~d + 1);
    return (a & low) != 0;
}

inline long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

inline long long floor_div(long long a, long long b) {
    long long q = a / b, rem = a % b;
    return (rem != 0 && ((rem < 0) != (b < 0))) ? q - 1 : q;
}

}  // namespace ytc

#endif
