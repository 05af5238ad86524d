#include "rankone/family.hpp"

#include <algorithm>
#include <fstream>

#include "rankone/construction.hpp"

namespace rankone {

GrowthFn GrowthFn::identity() { return GrowthFn{}; }

GrowthFn GrowthFn::ceil_log2() {
    GrowthFn f;
    f.kind_ = Kind::CeilLog2;
    return f;
}

GrowthFn GrowthFn::ceil_sqrt() {
    GrowthFn f;
    f.kind_ = Kind::CeilSqrt;
    return f;
}

GrowthFn GrowthFn::table(std::vector<std::pair<BigInt, BigInt>> points) {
    if (points.empty()) throw std::invalid_argument("growth table must be nonempty");
    std::sort(points.begin(), points.end());
    GrowthFn f;
    f.kind_ = Kind::Table;
    f.points_ = std::move(points);
    f.suffix_min_.resize(f.points_.size());
    BigInt run = f.points_.back().second;
    for (size_t i = f.points_.size(); i-- > 0;) {
        run = std::min(run, f.points_[i].second);
        f.suffix_min_[i] = run;
    }
    return f;
}

std::optional<BigInt> GrowthFn::eval(const BigInt& q) const {
    switch (kind_) {
        case Kind::Identity:
            return q;
        case Kind::CeilLog2: {
            if (q < 1) return std::nullopt;
            BigInt v = 0, pow = 1;
            while (pow < q) {
                pow <<= 1;
                ++v;
            }
            return v;
        }
        case Kind::CeilSqrt: {
            if (q < 0) return std::nullopt;
            BigInt r = boost::multiprecision::sqrt(q);
            if (r * r < q) ++r;
            return r;
        }
        case Kind::Table: {
            if (q < points_.front().first || q > points_.back().first) return std::nullopt;
            auto it = std::upper_bound(points_.begin(), points_.end(), q,
                                       [](const BigInt& v, const auto& p) { return v < p.first; });
            return std::prev(it)->second;
        }
    }
    return std::nullopt;
}

std::optional<BigInt> GrowthFn::fstar(const BigInt& q) const {
    if (kind_ != Kind::Table) return eval(q);  // named families are nondecreasing
    if (q > points_.back().first) return std::nullopt;
    if (q < points_.front().first) return suffix_min_.front();
    auto it = std::upper_bound(points_.begin(), points_.end(), q,
                               [](const BigInt& v, const auto& p) { return v < p.first; });
    return suffix_min_[static_cast<size_t>(std::prev(it) - points_.begin())];
}

GrowthFn GrowthFn::from_json(const nlohmann::json& j) {
    if (j.is_string() || (j.is_object() && j.contains("name"))) {
        std::string name = j.is_string() ? j.get<std::string>() : j.at("name").get<std::string>();
        if (name == "identity") return identity();
        if (name == "ceil_log2") return ceil_log2();
        if (name == "ceil_sqrt") return ceil_sqrt();
        throw std::invalid_argument("unknown growth function: " + name);
    }
    std::vector<std::pair<BigInt, BigInt>> pts;
    for (const auto& e : j.at("table"))
        pts.emplace_back(BigInt(e.at(0).get<int64_t>()), BigInt(e.at(1).get<int64_t>()));
    return table(std::move(pts));
}

GrowthFn GrowthFn::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open growth function file: " + path);
    nlohmann::json j;
    in >> j;
    return from_json(j);
}

namespace {

// h_1..h_n for the family, h_{k+1} = L_k ((gamma_k + 1) h_k + gamma_k).
std::vector<BigInt> ts_heights(const TheTsParams& params, int64_t N) {
    std::vector<BigInt> h(static_cast<size_t>(N) + 1);
    h[0] = 0;
    h[1] = 1;
    for (int64_t k = 1; k < N; ++k)
        h[static_cast<size_t>(k) + 1] =
            params.L_at(k) * ((params.gamma_at(k) + 1) * h[static_cast<size_t>(k)] + params.gamma_at(k));
    return h;
}

}  // namespace

BreakpointProfile breakpoints(const TheTsParams& params, int64_t n) {
    BreakpointProfile prof;
    prof.n = n;
    if (n == 1) {
        BigInt g = params.gamma_at(1);
        BigInt h2 = params.L_at(1) * (2 * g + 1);
        prof.thresholds = {1, 2 * g + 1, 4 * g + 1, h2};
        prof.increments = {1, 2, 1};
        return prof;
    }
    std::vector<BigInt> h = ts_heights(params, n + 1);
    const BigInt& hn = h[static_cast<size_t>(n)];
    BigInt g = params.gamma_at(n);
    BigInt l_prev = params.L_at(n - 1);
    prof.thresholds = {hn, 2 * hn - hn / l_prev, (g + 1) * hn + g, (2 * g + 1) * hn + 2 * g,
                       h[static_cast<size_t>(n) + 1]};
    prof.increments = {2, 1, 2, 1};
    return prof;
}

int BreakpointProfile::increment_at(const BigInt& q) const {
    for (size_t k = 1; k < thresholds.size(); ++k)
        if (q <= thresholds[k]) return increments[k - 1];
    throw std::invalid_argument("q outside the stage bands");
}

BigInt predicted_complexity(const TheTsParams& params, const BigInt& q) {
    if (q < 2) throw std::invalid_argument("predicted_complexity needs q >= 2");
    // locate the stage with h_n < q <= h_{n+1}
    int64_t n = 1;
    {
        BigInt h = 1, hn1;
        for (;; ++n) {
            hn1 = params.L_at(n) * ((params.gamma_at(n) + 1) * h + params.gamma_at(n));
            if (h < q && q <= hn1) break;
            h = hn1;
        }
    }
    BreakpointProfile prof = breakpoints(params, n);
    // anchor: p(2) = 3 at stage 1, p(h_n + 1) = 1 + (1 + 1/L_{n-1}) h_n above
    BigInt anchor_q, p;
    if (n == 1) {
        anchor_q = 2;
        p = 3;
    } else {
        std::vector<BigInt> h = ts_heights(params, n);
        const BigInt& hn = h[static_cast<size_t>(n)];
        anchor_q = hn + 1;
        p = 1 + hn + hn / params.L_at(n - 1);
        if (q == anchor_q) return p;
    }
    // integrate increments over (anchor_q - 1, q - 1]
    for (size_t k = 1; k < prof.thresholds.size(); ++k) {
        BigInt band_lo = std::max(prof.thresholds[k - 1], BigInt(anchor_q - 1));
        BigInt band_hi = std::min(prof.thresholds[k], BigInt(q - 1));
        if (band_hi > band_lo) p += prof.increments[k - 1] * (band_hi - band_lo);
    }
    return p;
}

PredictedLimits predicted_limits(const TheTsParams& params) {
    // liminf = 1 + liminf 1/max(L_{n-1}, gamma_n + 1)
    // limsup = 3/2 + limsup 1/(4 min(L_{n-1}, gamma_n + 1) - 2)
    auto gc = params.gamma.tail_constant();
    auto lc = params.L.tail_constant();
    bool gd = params.gamma.divergent();
    bool ld = params.L.divergent();
    if ((!gc && !gd) || (!lc && !ld))
        throw std::invalid_argument("limits undetermined for this rule shape");
    if (gd && ld) return PredictedLimits{Rational(1), Rational(3, 2)};
    if (gd) {
        // min(L, gamma+1) -> L eventually, max -> gamma+1 -> infinity
        return PredictedLimits{Rational(1), Rational(3, 2) + Rational(1, 4 * *lc - 2)};
    }
    if (ld) {
        BigInt g = *gc;
        return PredictedLimits{Rational(1), Rational(3, 2) + Rational(1, 4 * (g + 1) - 2)};
    }
    BigInt g1 = *gc + 1;
    BigInt mx = std::max(*lc, g1), mn = std::min(*lc, g1);
    return PredictedLimits{Rational(1) + Rational(1, mx), Rational(3, 2) + Rational(1, 4 * mn - 2)};
}

ParamRecipe choose_params_minimal(const Rational& epsilon, const GrowthFn& f,
                                  int64_t max_stages) {
    if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
    // smallest gamma > 1 with 1/(4 gamma + 2) < epsilon
    BigInt g = 2;
    while (Rational(1, 4 * g + 2) >= epsilon) ++g;

    ParamRecipe out;
    out.certificates.push_back({"den(eps) < (4*gamma+2)*num(eps)", denominator(epsilon),
                                (4 * g + 2) * numerator(epsilon)});

    std::vector<BigInt> L_values;
    BigInt h = 1;
    BigInt prev_L = 1;
    for (int64_t n = 1; n <= max_stages; ++n) {
        BigInt unit = (g + 1) * h + g;  // (gamma+1) h_n + gamma
        // smallest q_n with f(q) > unit for all q >= q_n; for nondecreasing f
        // that is the first table point exceeding unit
        std::optional<BigInt> qn;
        {
            // exponential-then-binary search over f* using fstar monotonicity
            BigInt lo = 1, hi = 1;
            bool found = false;
            for (int it = 0; it < 256; ++it) {
                auto v = f.fstar(hi);
                if (!v) break;  // table exhausted
                if (*v > unit) {
                    found = true;
                    break;
                }
                lo = hi + 1;
                hi *= 2;
            }
            if (found) {
                while (lo < hi) {
                    BigInt mid = (lo + hi) / 2;
                    auto v = f.fstar(mid);
                    if (v && *v > unit)
                        hi = mid;
                    else
                        lo = mid + 1;
                }
                qn = lo;
            }
        }
        if (!qn) {
            if (n == 1) throw PreconditionError("growth table exhausted before any valid L_n");
            break;
        }
        // smallest L_n with L_n * unit >= q_n, L_n > 1, and L_n > L_{n-1}
        // (the sequence must diverge for the limsup bound to engage)
        BigInt l = std::max(BigInt(2), BigInt((*qn + unit - 1) / unit));
        l = std::max(l, BigInt(prev_L + 1));
        prev_L = l;
        L_values.push_back(l);
        BigInt h_next = l * unit;
        auto fh = f.eval(h_next);
        if (fh)
            out.certificates.push_back(
                {"p(h_" + std::to_string(n + 1) + ") - h_" + std::to_string(n + 1) + " < f(h_" +
                     std::to_string(n + 1) + ")",
                 unit, *fh});
        h = h_next;
        out.horizon = n;
    }
    out.params = TheTsParams{SequenceRule::constant(g), SequenceRule::list(std::move(L_values))};
    return out;
}

ParamRecipe choose_params_totally_ergodic(const GrowthFn& f, int64_t max_stages) {
    ParamRecipe out;
    std::vector<BigInt> gammas{2}, Ls{2};
    BigInt h = 2 * (BigInt(3) * 1 + 2);  // h_2 with gamma_1 = L_1 = 2 fixed
    out.horizon = 1;
    for (int64_t n = 2; n <= max_stages; ++n) {
        // gamma_n minimal with h_n / 2 < f*(gamma_n)
        std::optional<BigInt> g;
        {
            BigInt lo = 2, hi = 2;
            bool found = false;
            for (int it = 0; it < 512; ++it) {
                auto v = f.fstar(hi);
                if (!v) break;
                if (2 * *v > h) {
                    found = true;
                    break;
                }
                lo = hi + 1;
                hi *= 2;
            }
            if (found) {
                while (lo < hi) {
                    BigInt mid = (lo + hi) / 2;
                    auto v = f.fstar(mid);
                    if (v && 2 * *v > h)
                        hi = mid;
                    else
                        lo = mid + 1;
                }
                g = std::max(BigInt(2), lo);
            }
        }
        if (!g) break;
        // L_n = m_n! minimal with m_n > n and (gamma_n+1) h_n + gamma_n < f*(L_n)
        BigInt unit = (*g + 1) * h + *g;
        std::optional<BigInt> l;
        BigInt m = n + 1, fact = 1;
        for (BigInt i = 2; i <= m; ++i) fact *= i;
        for (int it = 0; it < 512; ++it) {
            auto v = f.fstar(fact);
            if (!v) break;
            if (*v > unit) {
                l = fact;
                break;
            }
            ++m;
            fact *= m;
        }
        if (!l) break;
        out.certificates.push_back({"h_" + std::to_string(n) + "/2 < f*(gamma_" +
                                        std::to_string(n) + ")",
                                    h, 2 * *f.fstar(*g)});
        out.certificates.push_back({"(gamma+1)h_" + std::to_string(n) + "+gamma < f*(L_" +
                                        std::to_string(n) + ")",
                                    unit, *f.fstar(*l)});
        gammas.push_back(*g);
        Ls.push_back(*l);
        h = *l * unit;
        out.horizon = n;
    }
    out.params = TheTsParams{SequenceRule::list(std::move(gammas)), SequenceRule::list(std::move(Ls))};
    return out;
}

ParamRecipe choose_params_msj(const Rational& epsilon) {
    if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
    BigInt g = 2;
    while (Rational(1, g + 1) >= epsilon) ++g;
    ParamRecipe out;
    out.params = TheTsParams{SequenceRule::constant(g), SequenceRule::constant(g + 1)};
    out.horizon = -1;  // constant rules, every stage certified
    out.certificates.push_back({"den(eps) < (gamma+1)*num(eps)", denominator(epsilon),
                                (g + 1) * numerator(epsilon)});
    return out;
}

RsClass classify_rs(const Word& w, const TheTsParams& params, uint64_t cap) {
    if (w.size() <= 1) throw std::invalid_argument("classify_rs needs len(w) > 1");
    RankOneSpec spec = RankOneSpec::the_ts(params);
    BigInt len(static_cast<int64_t>(w.size()));
    int64_t n = 1;
    {
        BigInt h = 1, hn1;
        for (;; ++n) {
            RowSummary sum = spec.row_summary(n);
            hn1 = sum.branches * h + sum.spacer_total;
            if (h < len && len <= hn1) break;
            h = hn1;
        }
    }
    std::vector<BigInt> h = heights(spec, n + 1);
    const BigInt& hn = h[static_cast<size_t>(n)];
    BigInt g = params.gamma_at(n);

    BuildState bn_state = build_word(spec, n, cap);
    if (!bn_state.word) throw CapacityError(bn_state.height, cap);
    const Word& Bn = *bn_state.word;

    int hits = 0;
    RsClass cls;

    {  // suffix of B_{n+1}
        Word Bn1 = expand_stage(Bn, spec.row(n), cap);
        if (w.is_suffix_of(Bn1)) {
            ++hits;
            cls = RsClass{RsFamily::SuffixOfBNext, n};
        }
    }
    if (len > (g + 1) * hn + g && len <= (2 * g + 1) * hn + 2 * g) {
        // suffix of (B_n 1)^{2 gamma_n} B_n
        Word mid;
        for (BigInt i = 0; i < 2 * g; ++i) {
            mid.append(Bn);
            mid.append_ones(1);
        }
        mid.append(Bn);
        if (w.is_suffix_of(mid)) {
            ++hits;
            cls = RsClass{RsFamily::Middle, n};
        }
    }
    if (n > 1) {
        BigInt l_prev = params.L_at(n - 1);
        if (len > hn && len <= 2 * hn - hn / l_prev) {
            // suffix of ((B_{n-1} 1)^{gamma_{n-1}} B_{n-1})^{L_{n-1}-1} B_n
            BuildState prev = build_word(spec, n - 1, cap);
            if (!prev.word) throw CapacityError(prev.height, cap);
            BigInt g_prev = params.gamma_at(n - 1);
            Word third;
            for (BigInt b = 0; b < l_prev - 1; ++b) {
                for (BigInt i = 0; i < g_prev; ++i) {
                    third.append(*prev.word);
                    third.append_ones(1);
                }
                third.append(*prev.word);
            }
            third.append(Bn);
            if (w.is_suffix_of(third)) {
                ++hits;
                cls = RsClass{RsFamily::Third, n};
            }
        }
    }
    if (hits != 1)
        throw ClassificationError("right-special word matched " + std::to_string(hits) +
                                  " families at stage " + std::to_string(n));
    return cls;
}

WmCondition wm_condition_check(const TheTsParams& params, int64_t n_lo, int64_t n_hi) {
    if (n_lo < 1 || n_hi < n_lo) throw std::invalid_argument("empty window");
    WmCondition cond;
    bool first = true;
    for (int64_t n = n_lo; n <= n_hi; ++n) {
        BigInt g = params.gamma_at(n);
        BigInt l = params.L_at(n);
        Rational zero(l - 1, l * (g + 1));  // |{i < r : s_i = 0}| / (r+1)
        Rational one(g, g + 1);             // |{i < r : s_i = 1}| / (r+1)
        cond.ratios.emplace_back(zero, one);
        Rational m = std::min(zero, one);
        if (first || m < cond.kappa) cond.kappa = m;
        first = false;
    }
    cond.holds = cond.kappa > 0 && !params.gamma.divergent();
    return cond;
}

}  // namespace rankone
