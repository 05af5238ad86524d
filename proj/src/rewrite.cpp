#include "rankone/rewrite.hpp"

#include <algorithm>

#include "rankone/complexity.hpp"

namespace rankone {

void MergeSchedule::validate() const {
    if (stages.empty() || stages.front() != 1)
        throw PreconditionError("merge schedule must start at stage 1");
    for (size_t i = 1; i < stages.size(); ++i)
        if (stages[i] <= stages[i - 1])
            throw PreconditionError("merge schedule must be strictly increasing");
}

SpacerRow merge_rows(const SpacerRow& lo, const SpacerRow& hi, uint64_t row_cap) {
    lo.validate();
    hi.validate();
    BigInt size = (BigInt(lo.r()) + 1) * (BigInt(hi.r()) + 1);
    if (size > row_cap) throw CapacityError(size, row_cap);
    SpacerRow out;
    out.s.reserve(static_cast<size_t>(to_i64(size)));
    // s~_{a(r+1)+b} = s_{lo,b} for b < r; the top slot absorbs s_{hi,a}
    for (int64_t a = 0; a <= hi.r(); ++a) {
        for (int64_t b = 0; b < lo.r(); ++b) out.s.push_back(lo.s[static_cast<size_t>(b)]);
        out.s.push_back(lo.s.back() + hi.s[static_cast<size_t>(a)]);
    }
    return out;
}

RankOneSpec merge_stage(const RankOneSpec& spec, int64_t N) {
    if (N < 1) throw std::invalid_argument("stages are 1-based");
    return RankOneSpec::custom([spec, N](int64_t n) {
        if (n < N) return spec.row(n);
        if (n == N) return merge_rows(spec.row(N), spec.row(N + 1));
        return spec.row(n + 1);
    });
}

RankOneSpec merge_stages(const RankOneSpec& spec, MergeSchedule sched) {
    sched.validate();
    return RankOneSpec::custom([spec, sched = std::move(sched)](int64_t t) {
        int64_t T = static_cast<int64_t>(sched.stages.size());
        int64_t first, last;  // base stages [first, last] fold into stage t
        if (t < T) {
            first = sched.stages[static_cast<size_t>(t) - 1];
            last = sched.stages[static_cast<size_t>(t)] - 1;
        } else {
            first = last = sched.stages.back() + (t - T);
        }
        SpacerRow row = spec.row(first);
        for (int64_t n = first + 1; n <= last; ++n) row = merge_rows(row, spec.row(n));
        return row;
    });
}

RankOneSpec shift_constant(const RankOneSpec& spec, int64_t N, int64_t c, int64_t d) {
    if (N < 1) throw std::invalid_argument("stages are 1-based");
    if (c < 0 || c >= d) throw PreconditionError("need 0 <= c < d");
    auto check = [c, d](const SpacerRow& row, int64_t n) {
        for (size_t i = 0; i + 1 < row.s.size(); ++i)
            if (row.s[i] != c && row.s[i] != d)
                throw PreconditionError("spacer value outside {c, d}", n,
                                        static_cast<int64_t>(i));
        if (row.s.back() != 0) throw PreconditionError("top spacer must be 0", n, row.r());
    };
    return RankOneSpec::custom([spec, N, c, check](int64_t n) {
        SpacerRow row = spec.row(n);
        if (n < N) return row;
        check(row, n);
        if (n == N) {
            row.s.back() = c;
            return row;
        }
        for (size_t i = 0; i + 1 < row.s.size(); ++i) row.s[i] -= c;
        return row;
    });
}

MergeSchedule nonconstant_schedule(const RankOneSpec& spec, int64_t horizon,
                                   uint64_t row_cap) {
    if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
    MergeSchedule sched;
    int64_t n = 1;
    while (n <= horizon) {
        SpacerRow row = spec.row(n);
        if (row.s.back() != 0)
            throw PreconditionError("schedule requires s_{n,r_n} = 0", n, row.r());
        int64_t m = n;
        bool closed = true;
        while (row.interior_constant()) {
            ++m;
            if (m > horizon) {
                closed = false;  // block cannot qualify within the horizon
                break;
            }
            SpacerRow next = spec.row(m);
            if (next.s.back() != 0)
                throw PreconditionError("schedule requires s_{n,r_n} = 0", m, next.r());
            row = merge_rows(row, next, row_cap);
        }
        if (!closed) break;
        sched.stages.push_back(n);
        n = m + 1;
    }
    if (sched.stages.empty())
        throw PreconditionError("window contains no qualifying stages");
    // terminal entry: certified blocks end at stage n-1, identity afterwards
    sched.stages.push_back(n);
    return sched;
}

RunDecomposition run_decomposition(const RankOneSpec& spec, int64_t n, int64_t d) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    SpacerRow row = spec.row(n);
    if (row.s.back() != 0) throw PreconditionError("run decomposition needs s_{n,r_n} = 0", n);
    bool saw_d = false, saw_zero_interior = false;
    RunDecomposition out;
    out.d = d;
    int64_t run = 0;
    for (size_t i = 0; i < row.s.size(); ++i) {
        ++run;
        int64_t v = row.s[i];
        if (v == d && i + 1 < row.s.size()) {
            out.a.push_back(run);
            run = 0;
            saw_d = true;
        } else if (v == 0) {
            if (i + 1 < row.s.size()) saw_zero_interior = true;
        } else {
            throw PreconditionError("spacer value outside {0, d}", n, static_cast<int64_t>(i));
        }
    }
    out.a.push_back(run);
    if (!saw_d || !saw_zero_interior)
        throw PreconditionError("both spacer values must occur below the top", n);
    return out;
}

bool verify_same_language(const RankOneSpec& a, const RankOneSpec& b, int64_t Q, uint64_t cap) {
    StabilizedIndex ia = stabilized_index(a, Q, cap);
    StabilizedIndex ib = stabilized_index(b, Q, cap);
    if (ia.index.counts_per_length(Q) != ib.index.counts_per_length(Q)) return false;
    // equal counts per length, so one inclusion gives set equality
    return ia.index.covers_all_windows(ib.word, Q);
}

}  // namespace rankone
