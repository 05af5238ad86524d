#pragma once

#include <optional>
#include <vector>

#include "rankone/spec.hpp"
#include "rankone/word.hpp"

namespace rankone {

// Geometry of column C_n.
struct ColumnView {
    int64_t n = 0;
    int64_t height = 0;        // h_n
    Rational level_width;      // mu(I_n) = prod_{k<n} 1/(r_k+1); mu(I_1) = 1
    Rational column_measure;   // h_n * mu(I_n)
};

// Union of levels of one column: indices within [0, h_depth).
struct LevelSet {
    int64_t depth = 0;
    std::vector<int64_t> indices;  // sorted, unique

    static LevelSet single(int64_t depth, int64_t j) { return LevelSet{depth, {j}}; }
};

struct ImageResult {
    LevelSet resolved;
    Rational unresolved_mass;
};

struct MeasureInterval {
    Rational lo;
    Rational hi;
};

enum class KappaStatus { Holds, Indeterminate, Violated };

struct KappaReport {
    Rational kappa;
    Rational bound;  // kappa^ell * mu(I_n)
    MeasureInterval self;
    MeasureInterval below;
    KappaStatus status = KappaStatus::Indeterminate;
    bool holds() const { return status == KappaStatus::Holds; }
};

struct FiniteMeasureReport {
    std::vector<Rational> partial_sums;     // sum_{k<=n} (1/(r_k h_k)) sum_i s_{k,i}
    std::vector<Rational> column_measures;  // mu(C_n), n = 1..N
    std::optional<bool> bounded;            // only with a declared spacer bound
};

struct CylinderCheck {
    Rational empirical;
    Rational tower;
    Rational gap;
    Rational bound;  // len(w)/h_n
    bool within = false;
};

struct WmDiagnostic {
    std::vector<MeasureInterval> intervals;  // mu(T^t A cap B), t = 1..T_max
    std::vector<Rational> cesaro;            // c_T, T = 1..T_max
    Rational target;                         // mu(A) mu(B) / mu(C_depth_cap)
};

// Exact cutting-and-stacking simulator.  Column geometry is computed once up
// to max_depth at construction; all queries afterwards are read-only, so
// independent evaluations may run concurrently.
class Tower {
public:
    Tower(RankOneSpec spec, int64_t max_depth);

    const RankOneSpec& spec() const { return spec_; }
    int64_t max_depth() const { return static_cast<int64_t>(heights_.size()) - 1; }
    int64_t height(int64_t n) const { return heights_[static_cast<size_t>(n)]; }
    Rational level_width(int64_t n) const;
    ColumnView column(int64_t n) const;

    // Heights in C_m occupied by copies of level (n, j).
    std::vector<int64_t> refine(int64_t n, int64_t j, int64_t m) const;
    LevelSet refine(const LevelSet& set, int64_t m) const;

    ImageResult apply_T_power(const LevelSet& A, int64_t t, int64_t depth_cap) const;
    MeasureInterval measure_intersection(const LevelSet& A, const LevelSet& B, int64_t t,
                                         int64_t depth_cap) const;

    // Intersection lower-bound check at t = h_n + ... + h_{n+ell-1}, I = I_{n,j},
    // J = I_{n,j-ell}.  kappa is the window minimum of the 0- and 1-count
    // ratios over interior spacers.
    KappaReport kappa_check(int64_t n, int64_t ell, int64_t j, int64_t depth_cap) const;

    FiniteMeasureReport finite_measure_report(int64_t N) const;

    Rational empirical_measure(const Word& w, int64_t n, uint64_t cap = kDefaultCap) const;
    CylinderCheck cylinder_cross_check(const Word& w, int64_t n,
                                       uint64_t cap = kDefaultCap) const;

    WmDiagnostic wm_diagnostic(const LevelSet& A, const LevelSet& B, int64_t t_max,
                               int64_t depth_cap, bool parallel = true) const;

private:
    RankOneSpec spec_;
    std::vector<SpacerRow> rows_;                 // rows_[n], 1-based
    std::vector<int64_t> heights_;                // heights_[n], 1-based
    std::vector<std::vector<int64_t>> starts_;    // starts_[n][i]: subcolumn offsets in C_{n+1}
};

}  // namespace rankone
