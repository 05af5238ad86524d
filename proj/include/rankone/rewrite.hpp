#pragma once

#include <vector>

#include "rankone/spec.hpp"

namespace rankone {

// Strictly increasing stage indices with n_1 = 1; merged stage t spans base
// stages [n_t, n_{t+1}); past the last entry the identity continues.
struct MergeSchedule {
    std::vector<int64_t> stages;

    void validate() const;
};

// Run-length view of a two-valued row: B_{n+1} = (prod_{j<z} B^{a_j} 1^d) B^{a_z}.
struct RunDecomposition {
    int64_t d = 0;
    std::vector<int64_t> a;

    int64_t z() const { return static_cast<int64_t>(a.size()); }
};

// Collapse of stages N and N+1 into one; the tail shifts down by one stage.
// The result generates the same language: B~_n = B_n for n <= N, B_{n+1} after.
RankOneSpec merge_stage(const RankOneSpec& spec, int64_t N);

// Simultaneous block merge along the schedule: B~_t = B_{n_t}.
RankOneSpec merge_stages(const RankOneSpec& spec, MergeSchedule sched);

// Mixed-radix composition of two consecutive rows (the single-merge arithmetic).
SpacerRow merge_rows(const SpacerRow& lo, const SpacerRow& hi, uint64_t row_cap = kDefaultCap);

// Pull a constant c out of two-valued rows {c, d}: result rows use {0, d-c}
// and B~_n = B_n 1^c for n > N.
RankOneSpec shift_constant(const RankOneSpec& spec, int64_t N, int64_t c, int64_t d);

// Greedy schedule whose merge makes every stage within the horizon carry a
// nonconstant interior spacer row with a zero top entry.
MergeSchedule nonconstant_schedule(const RankOneSpec& spec, int64_t horizon,
                                   uint64_t row_cap = kDefaultCap);

RunDecomposition run_decomposition(const RankOneSpec& spec, int64_t n, int64_t d);

// Factor sets of length <= Q coincide (both sides at stabilization depth).
bool verify_same_language(const RankOneSpec& a, const RankOneSpec& b, int64_t Q,
                          uint64_t cap = kDefaultCap);

}  // namespace rankone
