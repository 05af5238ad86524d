#include "rankone/tower.hpp"

#include <algorithm>

#include "rankone/construction.hpp"
#include "rankone/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rankone {

Tower::Tower(RankOneSpec spec, int64_t max_depth) : spec_(std::move(spec)) {
    if (max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");
    rows_.resize(static_cast<size_t>(max_depth) + 1);
    heights_.assign(static_cast<size_t>(max_depth) + 1, 0);
    starts_.resize(static_cast<size_t>(max_depth) + 1);
    heights_[1] = 1;
    for (int64_t n = 1; n < max_depth; ++n) {
        SpacerRow row = spec_.row(n);
        auto& st = starts_[static_cast<size_t>(n)];
        st.reserve(row.s.size());
        BigInt off = 0;
        for (size_t i = 0; i < row.s.size(); ++i) {
            st.push_back(to_i64(off, "column offset"));
            off += heights_[static_cast<size_t>(n)] + row.s[i];
        }
        heights_[static_cast<size_t>(n) + 1] = to_i64(off, "column height");
        rows_[static_cast<size_t>(n)] = std::move(row);
    }
}

Rational Tower::level_width(int64_t n) const {
    if (n < 1 || n > max_depth()) throw std::invalid_argument("depth outside cache");
    BigInt den = 1;
    for (int64_t k = 1; k < n; ++k) den *= static_cast<int64_t>(rows_[static_cast<size_t>(k)].s.size());
    return Rational(1, den);
}

ColumnView Tower::column(int64_t n) const {
    Rational w = level_width(n);
    return ColumnView{n, height(n), w, Rational(height(n)) * w};
}

std::vector<int64_t> Tower::refine(int64_t n, int64_t j, int64_t m) const {
    if (j < 0 || j >= height(n)) throw std::invalid_argument("level index outside column");
    if (m < n || m > max_depth()) throw std::invalid_argument("bad refinement depth");
    std::vector<int64_t> idxs{j};
    for (int64_t k = n; k < m; ++k) {
        std::vector<int64_t> next;
        next.reserve(idxs.size() * starts_[static_cast<size_t>(k)].size());
        for (int64_t s : starts_[static_cast<size_t>(k)])
            for (int64_t x : idxs) next.push_back(s + x);
        std::sort(next.begin(), next.end());
        idxs = std::move(next);
    }
    return idxs;
}

LevelSet Tower::refine(const LevelSet& set, int64_t m) const {
    if (m < set.depth || m > max_depth()) throw std::invalid_argument("bad refinement depth");
    std::vector<int64_t> idxs = set.indices;
    for (int64_t k = set.depth; k < m; ++k) {
        std::vector<int64_t> next;
        next.reserve(idxs.size() * starts_[static_cast<size_t>(k)].size());
        for (int64_t s : starts_[static_cast<size_t>(k)])
            for (int64_t x : idxs) next.push_back(s + x);
        std::sort(next.begin(), next.end());
        idxs = std::move(next);
    }
    return LevelSet{m, std::move(idxs)};
}

ImageResult Tower::apply_T_power(const LevelSet& A, int64_t t, int64_t depth_cap) const {
    if (t < 0) throw std::invalid_argument("t must be nonnegative");
    if (depth_cap < A.depth || depth_cap > max_depth())
        throw std::invalid_argument("depth cap outside cache");
    // Per depth, indices with j + t inside the column shift; the rest refine
    // one level deeper and try again.
    std::vector<std::pair<int64_t, std::vector<int64_t>>> shifted;  // (depth, indices)
    std::vector<int64_t> pending = A.indices;
    int64_t depth = A.depth;
    int64_t final_depth = A.depth;
    int64_t unresolved = 0;
    while (true) {
        std::vector<int64_t> ok, bad;
        for (int64_t j : pending) (j + t < height(depth) ? ok : bad).push_back(j);
        if (!ok.empty()) {
            for (int64_t& j : ok) j += t;
            shifted.emplace_back(depth, std::move(ok));
            final_depth = depth;
        }
        if (bad.empty()) break;
        if (depth == depth_cap) {
            unresolved = static_cast<int64_t>(bad.size());
            final_depth = depth;
            break;
        }
        std::vector<int64_t> next;
        next.reserve(bad.size() * starts_[static_cast<size_t>(depth)].size());
        for (int64_t s : starts_[static_cast<size_t>(depth)])
            for (int64_t x : bad) next.push_back(s + x);
        pending = std::move(next);
        ++depth;
    }
    ImageResult out;
    out.unresolved_mass = Rational(unresolved) * level_width(depth);
    std::vector<int64_t> merged;
    for (auto& [d, idxs] : shifted) {
        LevelSet part = refine(LevelSet{d, std::move(idxs)}, final_depth);
        merged.insert(merged.end(), part.indices.begin(), part.indices.end());
    }
    std::sort(merged.begin(), merged.end());
    out.resolved = LevelSet{final_depth, std::move(merged)};
    return out;
}

MeasureInterval Tower::measure_intersection(const LevelSet& A, const LevelSet& B, int64_t t,
                                            int64_t depth_cap) const {
    ImageResult img = apply_T_power(A, t, depth_cap);
    int64_t d = std::max(img.resolved.depth, B.depth);
    LevelSet ia = refine(img.resolved, d);
    LevelSet ib = refine(B, d);
    std::vector<int64_t> common;
    std::set_intersection(ia.indices.begin(), ia.indices.end(), ib.indices.begin(),
                          ib.indices.end(), std::back_inserter(common));
    Rational lo = Rational(static_cast<int64_t>(common.size())) * level_width(d);
    return MeasureInterval{lo, lo + img.unresolved_mass};
}

KappaReport Tower::kappa_check(int64_t n, int64_t ell, int64_t j, int64_t depth_cap) const {
    if (ell < 0 || j < ell) throw std::invalid_argument("need j >= ell >= 0");
    KappaReport rep;
    bool first = true;
    for (int64_t k = n; k < n + ell; ++k) {
        const SpacerRow& row = rows_[static_cast<size_t>(k)];
        int64_t rp1 = row.r() + 1;
        Rational zero(row.count_interior(0), rp1);
        Rational one(row.count_interior(1), rp1);
        Rational m = std::min(zero, one);
        if (first || m < rep.kappa) rep.kappa = m;
        first = false;
    }
    if (first) rep.kappa = 1;  // ell = 0
    Rational mu = level_width(n);
    rep.bound = mu;
    for (int64_t k = 0; k < ell; ++k) rep.bound *= rep.kappa;
    int64_t t = 0;
    for (int64_t k = 0; k < ell; ++k) t += height(n + k);
    rep.self = measure_intersection(LevelSet::single(n, j), LevelSet::single(n, j), t, depth_cap);
    rep.below =
        measure_intersection(LevelSet::single(n, j), LevelSet::single(n, j - ell), t, depth_cap);
    if (rep.self.lo >= rep.bound && rep.below.lo >= rep.bound)
        rep.status = KappaStatus::Holds;
    else if (rep.self.hi < rep.bound || rep.below.hi < rep.bound)
        rep.status = KappaStatus::Violated;
    else
        rep.status = KappaStatus::Indeterminate;
    return rep;
}

FiniteMeasureReport Tower::finite_measure_report(int64_t N) const {
    if (N < 1 || N >= max_depth()) throw std::invalid_argument("N outside cache");
    FiniteMeasureReport rep;
    Rational acc = 0;
    for (int64_t n = 1; n <= N; ++n) {
        rep.column_measures.push_back(column(n).column_measure);
        const SpacerRow& row = rows_[static_cast<size_t>(n)];
        acc += Rational(row.spacer_total(), row.r() * height(n));
        rep.partial_sums.push_back(acc);
    }
    if (spec_.spacer_bound()) {
        // mu(C_N) <= mu(C_1) prod_{n=1}^{N-1} (1 + k/2^{n-1})
        Rational prod = 1;
        for (int64_t n = 1; n < N; ++n)
            prod *= Rational(1) + Rational(*spec_.spacer_bound(), BigInt(1) << (n - 1));
        rep.bounded = rep.column_measures.back() <= prod;
    }
    return rep;
}

Rational Tower::empirical_measure(const Word& w, int64_t n, uint64_t cap) const {
    if (w.empty()) throw std::invalid_argument("empty word");
    BuildState st = build_word(spec_, n, cap);
    if (!st.word) throw CapacityError(st.height, cap);
    if (st.height <= static_cast<int64_t>(w.size()))
        throw PreconditionError("need h_n > len(w)", n);
    int64_t count = count_occurrences(*st.word, w);
    return Rational(count, st.height - static_cast<int64_t>(w.size()));
}

CylinderCheck Tower::cylinder_cross_check(const Word& w, int64_t n, uint64_t cap) const {
    BuildState st = build_word(spec_, n, cap);
    if (!st.word) throw CapacityError(st.height, cap);
    if (st.height <= static_cast<int64_t>(w.size()))
        throw PreconditionError("need h_n > len(w)", n);
    int64_t count = count_occurrences(*st.word, w);
    CylinderCheck chk;
    chk.empirical = Rational(count, st.height - static_cast<int64_t>(w.size()));
    // count * mu(I_n) / mu(C_n) = count / h_n
    chk.tower = Rational(count, st.height);
    chk.gap = chk.empirical >= chk.tower ? chk.empirical - chk.tower : chk.tower - chk.empirical;
    chk.bound = Rational(static_cast<int64_t>(w.size()), st.height);
    chk.within = chk.gap <= chk.bound;
    return chk;
}

WmDiagnostic Tower::wm_diagnostic(const LevelSet& A, const LevelSet& B, int64_t t_max,
                                  int64_t depth_cap, bool parallel) const {
    if (t_max < 1) throw std::invalid_argument("t_max must be >= 1");
    WmDiagnostic diag;
    Rational muA = Rational(static_cast<int64_t>(A.indices.size())) * level_width(A.depth);
    Rational muB = Rational(static_cast<int64_t>(B.indices.size())) * level_width(B.depth);
    diag.target = muA * muB / column(depth_cap).column_measure;
    diag.intervals.resize(static_cast<size_t>(t_max));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int64_t t = 1; t <= t_max; ++t)
        diag.intervals[static_cast<size_t>(t - 1)] = measure_intersection(A, B, t, depth_cap);
    (void)parallel;
    diag.cesaro.reserve(static_cast<size_t>(t_max));
    Rational acc = 0;
    for (int64_t t = 1; t <= t_max; ++t) {
        const MeasureInterval& iv = diag.intervals[static_cast<size_t>(t - 1)];
        Rational mid = (iv.lo + iv.hi) / 2;
        Rational dev = mid >= diag.target ? mid - diag.target : diag.target - mid;
        acc += dev;
        diag.cesaro.push_back(acc / t);
    }
    return diag;
}

}  // namespace rankone
