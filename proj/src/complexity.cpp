#include "rankone/complexity.hpp"

#include <algorithm>
#include <set>

namespace rankone {

namespace {

int64_t stabilization_base(const RankOneSpec& spec, int64_t Q, uint64_t cap) {
    BigInt h = 1;
    for (int64_t m = 1;; ++m) {
        if (h >= Q) return m;
        if (h > cap) throw CapacityError(h, cap);
        RowSummary sum = spec.row_summary(m);
        h = sum.branches * h + sum.spacer_total;
    }
}

}  // namespace

StabilizedIndex stabilized_index(const RankOneSpec& spec, int64_t Q, uint64_t cap) {
    if (Q < 1) throw std::invalid_argument("Q must be >= 1");
    int64_t M = stabilization_base(spec, Q, cap) + 2;

    BuildState a = build_word(spec, M, cap);
    if (!a.word) throw CapacityError(a.height, cap);
    BuildState b = build_word(spec, M + 1, cap);
    if (!b.word) throw CapacityError(b.height, cap);

    FactorIndex ia(*a.word);
    FactorIndex ib(*b.word);
    if (ia.counts_per_length(Q) != ib.counts_per_length(Q) ||
        ia.rs_counts(Q) != ib.rs_counts(Q))
        throw StabilizationError("factor counts for q <= " + std::to_string(Q) +
                                 " still changing between depths " + std::to_string(M) + " and " +
                                 std::to_string(M + 1));
    return StabilizedIndex{std::move(*a.word), std::move(ia), M};
}

ComplexityTable subshift_complexity(const RankOneSpec& spec, int64_t Q, uint64_t cap) {
    StabilizedIndex si = stabilized_index(spec, Q, cap);
    ComplexityTable table;
    table.Q = Q;
    table.p = si.index.counts_per_length(Q);
    return table;
}

std::vector<int64_t> rs_census(const RankOneSpec& spec, int64_t Q, uint64_t cap) {
    return stabilized_index(spec, Q, cap).index.rs_counts(Q);
}

std::vector<std::vector<RSRecord>> right_special(const RankOneSpec& spec, int64_t Q,
                                                 uint64_t cap) {
    StabilizedIndex si = stabilized_index(spec, Q, cap);
    std::vector<std::vector<RSRecord>> out(static_cast<size_t>(Q));
    for (int64_t q = 1; q < Q; ++q) {
        for (Word& w : si.index.rs_words(q, si.word)) {
            RSRecord rec;
            rec.length = q;
            rec.word = std::move(w);
            out[static_cast<size_t>(q)].push_back(std::move(rec));
        }
    }
    return out;
}

bool cassaigne_check(const ComplexityTable& table, std::span<const int64_t> rs_counts,
                     int64_t m) {
    if (m < 1 || m > table.Q) return false;
    if (static_cast<int64_t>(rs_counts.size()) < table.Q) return false;
    int64_t acc = table.at(m);
    for (int64_t q = m + 1; q <= table.Q; ++q) {
        acc += rs_counts[static_cast<size_t>(q - 1)];
        if (table.at(q) != acc) return false;
    }
    return true;
}

std::optional<int64_t> detect_quasi_sturmian(const ComplexityTable& table,
                                             int64_t window_start) {
    if (window_start < 1 || window_start > table.Q)
        throw std::invalid_argument("window start outside table");
    int64_t c = table.at(window_start) - window_start;
    for (int64_t q = window_start; q <= table.Q; ++q)
        if (table.at(q) - q != c) return std::nullopt;
    return c;
}

RatioProfile ratio_profile(const ComplexityTable& table, int64_t lo, int64_t hi) {
    if (lo < 1 || hi > table.Q || lo > hi) throw std::invalid_argument("window outside table");
    RatioProfile prof;
    for (int64_t q = lo; q <= hi; ++q) {
        Rational ratio(table.at(q), q);
        Rational excess = Rational(table.at(q)) - Rational(3 * q, 2);
        if (prof.max_ratio_q == 0 || ratio > prof.max_ratio) {
            prof.max_ratio = ratio;
            prof.max_ratio_q = q;
        }
        if (prof.min_ratio_q == 0 || ratio < prof.min_ratio) {
            prof.min_ratio = ratio;
            prof.min_ratio_q = q;
        }
        if (prof.max_excess_q == 0 || excess > prof.max_excess) {
            prof.max_excess = excess;
            prof.max_excess_q = q;
        }
    }
    return prof;
}

std::optional<int64_t> lower_bound_witness(const RankOneSpec& spec, int64_t n, int64_t C,
                                           uint64_t cap) {
    std::vector<BigInt> h = heights(spec, n + 1);
    int64_t hn = to_i64(h[static_cast<size_t>(n)], "h_n");
    int64_t hn1 = to_i64(h[static_cast<size_t>(n) + 1], "h_{n+1}");
    ComplexityTable table = subshift_complexity(spec, hn1, cap);
    int64_t fn = table.at(hn) - hn;
    for (int64_t q = hn; q <= hn1; ++q) {
        // p(q) >= 1.5 q + f_n - C, kept in integers as 2 p(q) >= 3 q + 2(f_n - C)
        if (2 * table.at(q) >= 3 * q + 2 * (fn - C)) return q;
    }
    return std::nullopt;
}

int64_t split_constant(const RankOneSpec& spec, int64_t N, uint64_t cap) {
    BuildState st = build_word(spec, N, cap);
    if (!st.word) throw CapacityError(st.height, cap);
    if (st.word->count_zeros() == 0)
        throw PreconditionError("split_constant needs a 0 in B_N", N);
    return static_cast<int64_t>(st.word->trailing_ones()) + 1;
}

std::vector<Rational> three_value_ratio_witness(const RankOneSpec& spec,
                                                std::span<const int64_t> stages,
                                                uint64_t cap) {
    if (stages.empty()) throw std::invalid_argument("no target stages");
    int64_t max_stage = *std::max_element(stages.begin(), stages.end());
    std::set<int64_t> values;
    for (int64_t n = 1; n <= max_stage; ++n) {
        SpacerRow row = spec.row(n);
        for (size_t i = 0; i + 1 < row.s.size(); ++i) values.insert(row.s[i]);
    }
    if (values.size() < 3)
        throw PreconditionError("window carries fewer than three distinct spacer values");
    std::vector<BigInt> h = heights(spec, max_stage);
    std::vector<Rational> out;
    for (int64_t n : stages) {
        int64_t hn = to_i64(h[static_cast<size_t>(n)], "h_n");
        ComplexityTable table = subshift_complexity(spec, hn, cap);
        out.emplace_back(table.at(hn), hn);
    }
    return out;
}

}  // namespace rankone
