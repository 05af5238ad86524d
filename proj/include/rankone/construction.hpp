#pragma once

#include <optional>
#include <vector>

#include "rankone/spec.hpp"
#include "rankone/word.hpp"

namespace rankone {

// Stage-n snapshot.  The word is present only when h_n fits the cap; height
// and zero count are exact regardless.
struct BuildState {
    int64_t n = 0;
    std::optional<Word> word;
    BigInt height;
    BigInt zero_count;
};

// One expansion step: b 1^{s_0} b 1^{s_1} ... b 1^{s_r}.
Word expand_stage(const Word& b, const SpacerRow& row, uint64_t cap = kDefaultCap);

// h_1..h_N via h_{n+1} = (r_n+1) h_n + sum_i s_{n,i}; element [0] is unused (0).
std::vector<BigInt> heights(const RankOneSpec& spec, int64_t N);

BuildState build_word(const RankOneSpec& spec, int64_t n, uint64_t cap = kDefaultCap);

RankOneSpec make_the_ts(SequenceRule gammas, SequenceRule Ls);
RankOneSpec make_named(const std::string& family);  // "ferenczi" | "chacon"

// Finite-window test for the odometer spacer pattern of stages [N, N+W):
// s_{n,i} = c for i < r_n and s_{n,r_n} = 0.  Says nothing about the tail.
bool odometer_window_check(const RankOneSpec& spec, int64_t N, int64_t W);

}  // namespace rankone
