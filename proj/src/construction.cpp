#include "rankone/construction.hpp"

namespace rankone {

Word expand_stage(const Word& b, const SpacerRow& row, uint64_t cap) {
    row.validate();
    BigInt required = (BigInt(row.r()) + 1) * b.size() + row.spacer_total();
    if (required > cap) throw CapacityError(required, cap);
    Word out;
    out.reserve(static_cast<size_t>(to_i64(required)));
    for (int64_t v : row.s) {
        out.append(b);
        out.append_ones(static_cast<size_t>(v));
    }
    return out;
}

std::vector<BigInt> heights(const RankOneSpec& spec, int64_t N) {
    std::vector<BigInt> h(static_cast<size_t>(N) + 1);
    h[0] = 0;
    if (N >= 1) h[1] = 1;
    for (int64_t n = 1; n < N; ++n) {
        RowSummary sum = spec.row_summary(n);
        h[static_cast<size_t>(n) + 1] = sum.branches * h[static_cast<size_t>(n)] + sum.spacer_total;
    }
    return h;
}

BuildState build_word(const RankOneSpec& spec, int64_t n, uint64_t cap) {
    if (n < 1) throw std::invalid_argument("stages are 1-based");
    BuildState st;
    st.n = n;
    st.height = 1;
    st.zero_count = 1;
    Word w = Word::from_string("0");
    bool materialized = true;
    for (int64_t k = 1; k < n; ++k) {
        RowSummary sum = spec.row_summary(k);
        BigInt next_h = sum.branches * st.height + sum.spacer_total;
        if (materialized && next_h <= cap) {
            w = expand_stage(w, spec.row(k), cap);
        } else {
            materialized = false;
        }
        st.height = next_h;
        st.zero_count *= sum.branches;
    }
    if (materialized) st.word = std::move(w);
    return st;
}

RankOneSpec make_the_ts(SequenceRule gammas, SequenceRule Ls) {
    return RankOneSpec::the_ts(TheTsParams{std::move(gammas), std::move(Ls)});
}

RankOneSpec make_named(const std::string& family) {
    if (family == "ferenczi") return RankOneSpec::ferenczi();
    if (family == "chacon") return RankOneSpec::chacon();
    throw std::invalid_argument("unknown named family: " + family);
}

bool odometer_window_check(const RankOneSpec& spec, int64_t N, int64_t W) {
    if (N < 1 || W < 1) throw std::invalid_argument("N, W must be >= 1");
    // theTs rows always mix spacer values 0 and 1 before the last entry.
    if (spec.family() == FamilyTag::TheTs || spec.family() == FamilyTag::Ferenczi ||
        spec.family() == FamilyTag::Chacon)
        return false;
    for (int64_t n = N; n < N + W; ++n) {
        SpacerRow row = spec.row(n);
        if (row.s.back() != 0) return false;
        if (!row.interior_constant()) return false;
    }
    return true;
}

}  // namespace rankone
