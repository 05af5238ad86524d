#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rankone/construction.hpp"
#include "rankone/factor_index.hpp"

namespace rankone {

// Exact p(q) for 1 <= q <= Q plus the increments delta(q) = p(q+1) - p(q).
struct ComplexityTable {
    int64_t Q = 0;
    std::vector<int64_t> p;  // p[q], 1-based; p[0] unused

    int64_t at(int64_t q) const { return p[static_cast<size_t>(q)]; }
    int64_t delta(int64_t q) const { return at(q + 1) - at(q); }  // 1 <= q < Q
};

enum class RsFamily { SuffixOfBNext, Middle, Third, Unclassified };

struct RSRecord {
    Word word;
    int64_t length = 0;
    RsFamily family = RsFamily::Unclassified;
    int64_t stage = 0;  // filled by classification
};

// B_M together with its index, where M is the stabilization depth for Q:
// M = min{m : h_m >= Q} + 2, rechecked against M+1.
struct StabilizedIndex {
    Word word;
    FactorIndex index;
    int64_t depth;
};

StabilizedIndex stabilized_index(const RankOneSpec& spec, int64_t Q, uint64_t cap = kDefaultCap);

ComplexityTable subshift_complexity(const RankOneSpec& spec, int64_t Q,
                                    uint64_t cap = kDefaultCap);

// Right-special counts per length, 1 <= q < Q.
std::vector<int64_t> rs_census(const RankOneSpec& spec, int64_t Q, uint64_t cap = kDefaultCap);

// The right-special words themselves, grouped by length (index q, 1 <= q < Q).
std::vector<std::vector<RSRecord>> right_special(const RankOneSpec& spec, int64_t Q,
                                                 uint64_t cap = kDefaultCap);

// p(q) = p(m) + sum_{l=m}^{q-1} rs_counts[l] for all m < q <= Q.  rs_counts is
// indexed by length (entry [l] is the census at length l, as rs_census emits).
bool cassaigne_check(const ComplexityTable& table, std::span<const int64_t> rs_counts,
                     int64_t m = 1);

// The constant c when p(q) - q is constant on [window_start, Q]; finite-horizon
// detector only.
std::optional<int64_t> detect_quasi_sturmian(const ComplexityTable& table, int64_t window_start);

struct RatioProfile {
    Rational max_ratio;  // max p(q)/q over the window
    int64_t max_ratio_q = 0;
    Rational min_ratio;
    int64_t min_ratio_q = 0;
    Rational max_excess;  // max p(q) - (3/2) q
    int64_t max_excess_q = 0;
};

RatioProfile ratio_profile(const ComplexityTable& table, int64_t lo, int64_t hi);

// Smallest q in [h_n, h_{n+1}] with p(q) >= 1.5 q + (p(h_n) - h_n) - C.
std::optional<int64_t> lower_bound_witness(const RankOneSpec& spec, int64_t n, int64_t C,
                                           uint64_t cap = kDefaultCap);

// Minimal c >= 1 such that 0 1^{c-1} is a suffix of B_N.
int64_t split_constant(const RankOneSpec& spec, int64_t N, uint64_t cap = kDefaultCap);

// p(h_n)/h_n at the requested stages; requires at least three distinct
// interior spacer values across the examined window.
std::vector<Rational> three_value_ratio_witness(const RankOneSpec& spec,
                                                std::span<const int64_t> stages,
                                                uint64_t cap = kDefaultCap);

}  // namespace rankone
