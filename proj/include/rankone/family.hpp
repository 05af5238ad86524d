#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rankone/complexity.hpp"
#include "rankone/spec.hpp"

namespace rankone {

// Growth function f(q) -> infinity, given as a named family or a finite
// nondecreasing table of (q, f(q)) points read as a left-continuous step
// function.  Evaluation past the table horizon is unavailable.
class GrowthFn {
public:
    static GrowthFn identity();
    static GrowthFn ceil_log2();
    static GrowthFn ceil_sqrt();
    static GrowthFn table(std::vector<std::pair<BigInt, BigInt>> points);

    std::optional<BigInt> eval(const BigInt& q) const;
    // f*(q) = inf { f(q') : q' >= q }, a running minimum from the right over
    // the table horizon; equals f for the named monotone families.
    std::optional<BigInt> fstar(const BigInt& q) const;

    static GrowthFn from_json(const nlohmann::json& j);
    static GrowthFn load(const std::string& path);

private:
    enum class Kind { Identity, CeilLog2, CeilSqrt, Table } kind_ = Kind::Identity;
    std::vector<std::pair<BigInt, BigInt>> points_;
    std::vector<BigInt> suffix_min_;
};

// Exact p(q) for the family, integrated from the piecewise increments.
BigInt predicted_complexity(const TheTsParams& params, const BigInt& q);

// Band structure of stage n: thresholds t_0 < t_1 < ... and the increment
// delta(q) on each band (t_{k-1}, t_k].  Bands tile (t_0, h_{n+1}].
struct BreakpointProfile {
    int64_t n = 0;
    std::vector<BigInt> thresholds;
    std::vector<int> increments;

    int increment_at(const BigInt& q) const;  // q in (thresholds.front(), thresholds.back()]
};

BreakpointProfile breakpoints(const TheTsParams& params, int64_t n);

struct PredictedLimits {
    Rational liminf;
    Rational limsup;
};

// Exact liminf/limsup of p(q)/q for eventually-constant or divergent rules.
PredictedLimits predicted_limits(const TheTsParams& params);

struct Certificate {
    std::string name;
    BigInt lhs;
    BigInt rhs;  // certified relation: lhs < rhs
    bool holds() const { return lhs < rhs; }
};

struct ParamRecipe {
    TheTsParams params;
    int64_t horizon = 0;  // stages the certificates cover
    std::vector<Certificate> certificates;
};

ParamRecipe choose_params_minimal(const Rational& epsilon, const GrowthFn& f,
                                  int64_t max_stages = 6);
ParamRecipe choose_params_totally_ergodic(const GrowthFn& f, int64_t max_stages = 3);
ParamRecipe choose_params_msj(const Rational& epsilon);

struct RsClass {
    RsFamily family = RsFamily::Unclassified;
    int64_t stage = 0;
};

// The unique (family, stage) suffix classification of a right-special word.
RsClass classify_rs(const Word& w, const TheTsParams& params, uint64_t cap = kDefaultCap);

struct WmCondition {
    Rational kappa;      // min over the window of the two count ratios
    bool holds = false;  // kappa > 0 and gamma not divergent
    std::vector<std::pair<Rational, Rational>> ratios;  // (zero, one) per stage
};

// Fraction of interior spacer entries equal to 0 and to 1, per stage of the
// window [n_lo, n_hi]; the common lower bound kappa drives the intersection
// estimates.
WmCondition wm_condition_check(const TheTsParams& params, int64_t n_lo, int64_t n_hi);

}  // namespace rankone
