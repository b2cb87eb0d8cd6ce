#ifndef YTC_FORMULAS_HPP
#define YTC_FORMULAS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ytc/common.hpp"
#include "ytc/partition.hpp"

namespace ytc {

enum class ChiRegimeKind { Zero, Linear, ResidueD, ResidueT };

inline const char* chi_regime_name(ChiRegimeKind k) {
    switch (k) {
        case ChiRegimeKind::Zero: return "zero";
        case ChiRegimeKind::Linear: return "linear";
        case ChiRegimeKind::ResidueD: return "residue-d";
        default: return "residue-t";
    }
}

struct ChiRegime {
    ChiRegimeKind kind = ChiRegimeKind::Zero;
    long long value = 0;
    int residue = 0;  // n mod (t+1), meaningful for the two residue regimes
};

// The piecewise function χ_t(n, k):
//   0                       if n < kt
//   n - kt + 1              if kt <= n <= k(t+1)
//   2(n-d)/(t+1) - k + 1    if n ≡ d (mod t+1), 0 <= d <= t-1, n > k(t+1)
//   2(n+1)/(t+1) - k        if n ≡ t (mod t+1), n > k(t+1)
// Total in n (negative n falls in the zero regime), so the comparison lemmas
// below can be quantified without clipping.
inline ChiRegime chi(long long n, long long k, long long t) {
    if (k < 1 || t < 1) throw DomainError("chi: requires k >= 1 and t >= 1");
    ChiRegime r;
    if (n < k * t) {
        r.kind = ChiRegimeKind::Zero;
        r.value = 0;
        return r;
    }
    if (n <= k * (t + 1)) {
        r.kind = ChiRegimeKind::Linear;
        r.value = n - k * t + 1;
        return r;
    }
    long long d = n % (t + 1);
    r.residue = static_cast<int>(d);
    if (d == t) {
        r.kind = ChiRegimeKind::ResidueT;
        r.value = 2 * (n + 1) / (t + 1) - k;
    } else {
        r.kind = ChiRegimeKind::ResidueD;
        r.value = 2 * (n - d) / (t + 1) - k + 1;
    }
    return r;
}

inline long long chi_value(long long n, long long k, long long t) { return chi(n, k, t).value; }

// pd(R/I_{n,t}^{[k]}): equals χ_t(n,k) on its domain; the t = 1
// power is the squarefree Veronese ideal of degree k, with pd = n - k + 1.
inline long long pd_formula(int n, int k, int t) {
    if (t < 1) throw DomainError("pd_formula: t must be >= 1");
    if (k < 1 || k > n / t)
        throw DomainError("pd_formula: requires 1 <= k <= floor(n/t)");
    if (t == 1) return static_cast<long long>(n) - k + 1;
    return chi_value(n, k, t);
}

// dim(R/I_{n,t}^{[k]}) = n - floor(n/t) + k - 1.
inline long long krull_formula(int n, int k, int t) {
    if (t < 1) throw DomainError("krull_formula: t must be >= 1");
    if (k < 1 || k > n / t)
        throw DomainError("krull_formula: requires 1 <= k <= floor(n/t)");
    return static_cast<long long>(n) - n / t + k - 1;
}

// Helly number of the Alexander dual of Δ_t^λ: (r-1)t - 1. For r = 1 the
// dual has no nonfaces at all (the marker case).
struct HellyResult {
    bool simplex = false;  // r = 1: no minimal nonfaces
    long long value = -1;
};

inline HellyResult helly_formula(const Partition& lambda, int t) {
    if (t < 1) throw DomainError("helly_formula: t must be >= 1");
    if (lambda.empty_shape()) throw DomainError("helly_formula: empty partition");
    HellyResult r;
    r.value = static_cast<long long>(lambda.rows() - 1) * t - 1;
    r.simplex = lambda.rows() == 1;
    return r;
}

// Leray number of Δ_{n,t}^{[k]}: pd_formula - 1 piecewise.
inline long long leray_formula(int n, int k, int t) {
    return pd_formula(n, k, t) - 1;
}

// Δ_t^λ is vertex-decomposable iff t = 1, or r = 1, or λ2 <= t.
inline bool vd_characterization(const Partition& lambda, int t) {
    if (t < 1) throw DomainError("vd_characterization: t must be >= 1");
    if (lambda.empty_shape()) return true;  // {∅}
    return t == 1 || lambda.rows() == 1 || lambda.part(2) <= t;
}

struct LinearityFlags {
    bool linear_quotients = false;
    bool linear_resolution = false;
};

// Linear quotients / linear resolution of I_{n,t}^{[k]}: for t >= 2 both
// hold exactly on the window kt <= n <= kt + t (k = ν or k = ν0); for t = 1
// the power always has linear quotients.
inline LinearityFlags linearity_characterization(int n, int k, int t) {
    if (t < 1) throw DomainError("linearity_characterization: t must be >= 1");
    if (k < 1 || k > n / t)
        throw DomainError("linearity_characterization: requires 1 <= k <= floor(n/t)");
    if (t == 1) return {true, true};
    bool linear = n <= static_cast<long long>(k) * t + t;  // kt <= n holds by the domain
    return {linear, linear};
}

// ---------------------------------------------------------------------------
// Exhaustive checks of the four χ comparison lemmas
// ---------------------------------------------------------------------------

struct ChiLemmaBounds {
    int max_n = 60;
    int max_k = 5;
    int max_t = 4;
};

struct LemmaReport {
    std::string lemma;
    ChiLemmaBounds bounds;
    bool pass = true;
    long long cases = 0;
    std::optional<std::array<long long, 4>> counterexample;  // (n, k, t, i)
    std::string detail;
};

// Evaluates each lemma's inequality over the whole bounded range and reports
// the first counterexample, if any.
inline std::vector<LemmaReport> chi_lemma_checks(const ChiLemmaBounds& b) {
    std::vector<LemmaReport> reports;

    {  // χ_t(n - it, k+1-i) <= χ_t(n, k+1) for 1 <= i <= k
        LemmaReport r;
        r.lemma = "shift";
        r.bounds = b;
        for (int t = 1; t <= b.max_t && r.pass; ++t)
            for (int k = 1; k <= b.max_k && r.pass; ++k)
                for (int n = 0; n <= b.max_n && r.pass; ++n)
                    for (int i = 1; i <= k; ++i) {
                        ++r.cases;
                        if (chi_value(n - static_cast<long long>(i) * t, k + 1 - i, t) >
                            chi_value(n, k + 1, t)) {
                            r.pass = false;
                            r.counterexample = {{n, k, t, i}};
                            break;
                        }
                    }
        reports.push_back(std::move(r));
    }

    {  // monotone in n; χ_t(n-t,k) < χ_t(n,k) and χ_t(n-(t+1),k) <= χ_t(n,k)-2 for n > kt
        LemmaReport r;
        r.lemma = "monotone";
        r.bounds = b;
        for (int t = 1; t <= b.max_t && r.pass; ++t)
            for (int k = 1; k <= b.max_k && r.pass; ++k)
                for (int n = 0; n <= b.max_n; ++n) {
                    ++r.cases;
                    bool ok = chi_value(n, k, t) >= chi_value(n - 1, k, t);
                    if (ok && n > static_cast<long long>(k) * t) {
                        ok = chi_value(n - t, k, t) < chi_value(n, k, t) &&
                             chi_value(n - t - 1, k, t) <= chi_value(n, k, t) - 2;
                    }
                    if (!ok) {
                        r.pass = false;
                        r.counterexample = {{n, k, t, 0}};
                        break;
                    }
                }
        reports.push_back(std::move(r));
    }

    {  // χ_t(n-(t+1), k) <= χ_t(n, k+1) - 1 for t >= 2, n >= (k+1)t
        LemmaReport r;
        r.lemma = "drop-k";
        r.bounds = b;
        for (int t = 2; t <= b.max_t && r.pass; ++t)
            for (int k = 1; k <= b.max_k && r.pass; ++k)
                for (int n = (k + 1) * t; n <= b.max_n; ++n) {
                    ++r.cases;
                    if (chi_value(n - t - 1, k, t) > chi_value(n, k + 1, t) - 1) {
                        r.pass = false;
                        r.counterexample = {{n, k, t, 0}};
                        break;
                    }
                }
        reports.push_back(std::move(r));
    }

    {   // χ_t(n-i, k) + χ_t(i-1, 1) <= χ_t(n, k) for t >= 2, on the domain the
        // upper-bound argument instantiates: n >= kt and 0 <= i <= n - kt + 1.
        // Outside that window the inequality genuinely fails (already at
        // χ_2(0,2) + χ_2(6,1) > χ_2(7,2)), so the unrestricted quantifier is
        // not testable.
        LemmaReport r;
        r.lemma = "subadditive";
        r.bounds = b;
        for (int t = 2; t <= b.max_t && r.pass; ++t)
            for (int k = 1; k <= b.max_k && r.pass; ++k)
                for (int n = k * t; n <= b.max_n && r.pass; ++n)
                    for (int i = 0; i <= std::min(n, n - k * t + 1); ++i) {
                        ++r.cases;
                        if (chi_value(n - i, k, t) + chi_value(i - 1, 1, t) >
                            chi_value(n, k, t)) {
                            r.pass = false;
                            r.counterexample = {{n, k, t, i}};
                            break;
                        }
                    }
        reports.push_back(std::move(r));
    }

    return reports;
}

}  // namespace ytc

#endif
