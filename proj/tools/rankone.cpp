// Command line front end: build, complexity, right-special, predict,
// select-params, transform, tower, verify.
//
// Exit codes: 0 all checks pass, 1 check failure, 2 usage error, 3 capacity.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rankone/complexity.hpp"
#include "rankone/family.hpp"
#include "rankone/kernels.hpp"
#include "rankone/rewrite.hpp"
#include "rankone/tower.hpp"

using namespace rankone;

namespace {

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    return out;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

void cmd_build(const std::string& spec_path, int64_t n, uint64_t cap,
               const std::string& out_path) {
    RankOneSpec spec = RankOneSpec::load(spec_path);
    std::vector<BigInt> h = heights(spec, n);
    std::ostringstream body;
    for (int64_t k = 1; k <= n; ++k) body << k << '\t' << h[static_cast<size_t>(k)].str() << '\n';
    BuildState st = build_word(spec, n, cap);
    body << "zero_count\t" << st.zero_count.str() << '\n';
    if (st.word)
        body << "word\t" << st.word->str() << '\n';
    else
        body << "word\t(above cap)" << '\n';
    if (out_path.empty())
        std::cout << body.str();
    else
        open_out(out_path) << body.str();
}

void cmd_complexity(const std::string& spec_path, int64_t max_q, uint64_t cap,
                    const std::string& out_path, bool with_float) {
    RankOneSpec spec = RankOneSpec::load(spec_path);
    ComplexityTable t = subshift_complexity(spec, max_q, cap);
    std::ofstream out = open_out(out_path);
    out << "q,p,delta,ratio_num,ratio_den" << (with_float ? ",ratio_float" : "") << '\n';
    for (int64_t q = 1; q <= max_q; ++q) {
        Rational ratio(t.at(q), q);
        out << q << ',' << t.at(q) << ',';
        if (q < max_q) out << t.delta(q);
        out << ',' << numerator(ratio).str() << ',' << denominator(ratio).str();
        if (with_float)
            out << ',' << static_cast<double>(t.at(q)) / static_cast<double>(q);
        out << '\n';
    }
}

void cmd_right_special(const std::string& spec_path, int64_t max_q, uint64_t cap,
                       const std::string& out_path, bool with_words) {
    RankOneSpec spec = RankOneSpec::load(spec_path);
    std::ofstream out = open_out(out_path);
    if (with_words) {
        auto groups = right_special(spec, max_q, cap);
        out << "q,count,words\n";
        for (int64_t q = 1; q < max_q; ++q) {
            const auto& recs = groups[static_cast<size_t>(q)];
            out << q << ',' << recs.size() << ',';
            for (size_t i = 0; i < recs.size(); ++i)
                out << (i ? " " : "") << recs[i].word.str();
            out << '\n';
        }
    } else {
        auto census = rs_census(spec, max_q, cap);
        out << "q,count\n";
        for (int64_t q = 1; q < max_q; ++q)
            out << q << ',' << census[static_cast<size_t>(q)] << '\n';
    }
}

void cmd_predict(const std::string& spec_path, int64_t q) {
    RankOneSpec spec = RankOneSpec::load(spec_path);
    if (!spec.the_ts_params())
        throw std::invalid_argument("predict requires a the_ts family spec");
    std::cout << "p(" << q << ")\t" << predicted_complexity(*spec.the_ts_params(), BigInt(q)).str()
              << '\n';
}

void cmd_select_params(const std::string& mode, const std::string& epsilon,
                       const std::string& f_path, int64_t stages, const std::string& out_path) {
    GrowthFn f = f_path.empty() ? GrowthFn::identity() : GrowthFn::load(f_path);
    ParamRecipe recipe;
    if (mode == "minimal") {
        recipe = choose_params_minimal(parse_rational(epsilon), f, stages);
    } else if (mode == "dreal") {
        recipe = choose_params_totally_ergodic(f, stages);
    } else if (mode == "msj") {
        recipe = choose_params_msj(parse_rational(epsilon));
    } else {
        throw std::invalid_argument("unknown mode: " + mode);
    }
    nlohmann::json j = RankOneSpec::the_ts(recipe.params).to_json();
    if (out_path.empty())
        std::cout << j.dump(2) << '\n';
    else
        open_out(out_path) << j.dump(2) << '\n';
    bool all_hold = true;
    for (const auto& c : recipe.certificates) {
        std::cout << "cert\t" << c.name << '\t' << c.lhs.str() << '\t' << c.rhs.str() << '\t'
                  << (c.holds() ? "holds" : "VIOLATED") << '\n';
        if (!c.holds()) all_hold = false;
    }
    std::cout << "horizon\t" << recipe.horizon << '\n';
    if (!all_hold) throw CheckFailure("certificate violated");
}

void cmd_transform(const std::string& spec_path, const std::string& op, int64_t n,
                   const std::string& schedule, int64_t c, int64_t d, int64_t verify_q,
                   int64_t horizon, const std::string& out_path, uint64_t cap) {
    RankOneSpec spec = RankOneSpec::load(spec_path);
    RankOneSpec result;
    if (op == "merge") {
        result = merge_stage(spec, n);
    } else if (op == "merge-multi") {
        MergeSchedule sched;
        std::stringstream ss(schedule);
        std::string item;
        while (std::getline(ss, item, ',')) sched.stages.push_back(std::stoll(item));
        result = merge_stages(spec, sched);
    } else if (op == "shift-c") {
        result = shift_constant(spec, n, c, d);
    } else {
        throw std::invalid_argument("unknown op: " + op);
    }
    nlohmann::json j = result.to_json(horizon);
    if (out_path.empty())
        std::cout << j.dump(2) << '\n';
    else
        open_out(out_path) << j.dump(2) << '\n';
    if (verify_q > 0) {
        bool same = verify_same_language(spec, result, verify_q, cap);
        std::cout << "same_language_q" << verify_q << '\t' << (same ? "true" : "false") << '\n';
        if (!same) throw CheckFailure("language changed under transform");
    }
}

void cmd_tower(const std::string& spec_path, const std::string& check, int64_t n, int64_t ell,
               int64_t j, int64_t t_max, int64_t depth_cap, const std::string& out_path) {
    RankOneSpec spec = RankOneSpec::load(spec_path);
    if (check == "kappa") {
        Tower tw(spec, depth_cap + 2);
        KappaReport rep = tw.kappa_check(n, ell, j, depth_cap);
        const char* status = rep.status == KappaStatus::Holds          ? "holds"
                             : rep.status == KappaStatus::Indeterminate ? "indeterminate"
                                                                        : "violated";
        std::cout << "kappa\t" << ratio_str(rep.kappa) << "\nbound\t" << ratio_str(rep.bound)
                  << "\nlo_self\t" << ratio_str(rep.self.lo) << "\nlo_below\t"
                  << ratio_str(rep.below.lo) << "\nstatus\t" << status << '\n';
        if (rep.status == KappaStatus::Violated) throw CheckFailure("kappa bound violated");
    } else if (check == "finite-measure") {
        Tower tw(spec, n + 1);
        FiniteMeasureReport rep = tw.finite_measure_report(n);
        std::ofstream out = open_out(out_path);
        out << "n,mu_num,mu_den,psum_num,psum_den\n";
        for (size_t k = 0; k < rep.column_measures.size(); ++k)
            out << (k + 1) << ',' << numerator(rep.column_measures[k]).str() << ','
                << denominator(rep.column_measures[k]).str() << ','
                << numerator(rep.partial_sums[k]).str() << ','
                << denominator(rep.partial_sums[k]).str() << '\n';
        if (rep.bounded)
            std::cout << "bounded\t" << (*rep.bounded ? "true" : "false") << '\n';
    } else if (check == "wm") {
        Tower tw(spec, depth_cap + 2);
        WmDiagnostic diag =
            tw.wm_diagnostic(LevelSet::single(n, j), LevelSet::single(n, j), t_max, depth_cap);
        std::ofstream out = open_out(out_path);
        out << "t,lo_num,lo_den,hi_num,hi_den\n";
        for (int64_t t = 1; t <= t_max; ++t) {
            const auto& iv = diag.intervals[static_cast<size_t>(t - 1)];
            out << t << ',' << numerator(iv.lo).str() << ',' << denominator(iv.lo).str() << ','
                << numerator(iv.hi).str() << ',' << denominator(iv.hi).str() << '\n';
        }
        std::cout << "c_" << t_max << '\t' << ratio_str(diag.cesaro.back()) << '\n';
    } else {
        throw std::invalid_argument("unknown check: " + check);
    }
}

int cmd_verify(const std::string& spec_path, const std::string& profile) {
    RankOneSpec spec = RankOneSpec::load(spec_path);
    int fails = 0;
    auto line = [&fails](const std::string& name, bool ok, const std::string& expected,
                         const std::string& measured) {
        std::cout << name << '\t' << (ok ? "PASS" : "FAIL") << '\t' << expected << '\t' << measured
                  << '\n';
        if (!ok) ++fails;
    };
    if (profile == "comp") {
        if (!spec.the_ts_params())
            throw std::invalid_argument("profile comp requires a the_ts spec");
        const TheTsParams& params = *spec.the_ts_params();
        std::vector<BigInt> h = heights(spec, 5);
        for (int64_t n : {2, 3, 4}) {
            int64_t hn = to_i64(h[static_cast<size_t>(n)]);
            ComplexityTable t = subshift_complexity(spec, hn);
            BigInt expect = hn + hn / params.L_at(n - 1);
            line("comp_h" + std::to_string(n), BigInt(t.at(hn)) == expect,
                 "p(" + std::to_string(hn) + ")=" + expect.str(), std::to_string(t.at(hn)));
        }
    } else if (profile == "kappa") {
        Tower tw(spec, 11);
        for (int64_t n : {3, 4, 5}) {
            for (int64_t ell : {1, 2}) {
                KappaReport rep = tw.kappa_check(n, ell, ell, n + 4);
                line("kappa_n" + std::to_string(n) + "_l" + std::to_string(ell), rep.holds(),
                     "lo >= " + ratio_str(rep.bound),
                     ratio_str(rep.self.lo) + " and " + ratio_str(rep.below.lo));
            }
        }
    } else if (profile == "complexity") {
        ComplexityTable t = subshift_complexity(spec, 256);
        auto qs = detect_quasi_sturmian(t, 128);
        bool constant_tail = true;
        for (int64_t q = 128; q < 256; ++q)
            if (t.delta(q) != 0) constant_tail = false;
        line("low_complexity_tail", qs.has_value() || constant_tail,
             "p(q) - q eventually constant or p eventually constant",
             qs ? ("quasi-sturmian c=" + std::to_string(*qs))
                : (constant_tail ? "constant tail" : "neither"));
    } else if (profile == "finite-measure") {
        Tower tw(spec, 9);
        FiniteMeasureReport rep = tw.finite_measure_report(8);
        bool mono = true;
        for (size_t k = 1; k < rep.column_measures.size(); ++k)
            if (rep.column_measures[k] < rep.column_measures[k - 1]) mono = false;
        line("column_measures_nondecreasing", mono, "mu(C_n) nondecreasing",
             ratio_str(rep.column_measures.back()));
        if (rep.bounded)
            line("bounded_by_spacer_bound", *rep.bounded, "mu(C_N) within the product bound",
                 *rep.bounded ? "true" : "false");
    } else {
        throw std::invalid_argument("unknown profile: " + profile);
    }
    return fails == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-one subshift toolkit"};
    app.require_subcommand(1);

    std::string spec_path, out_path, profile, mode, epsilon = "1/10", f_path, op, schedule, check;
    int64_t n = 1, max_q = 64, q = 10, stages = 4, c = 0, d = 1, verify_q = 0, horizon = 12,
            ell = 1, jlevel = 1, t_max = 100, depth_cap = 6;
    uint64_t cap = kDefaultCap;
    bool with_float = false, with_words = false;

    auto* b = app.add_subcommand("build", "materialize B_n and heights");
    b->add_option("--spec", spec_path)->required();
    b->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    b->add_option("--cap", cap)->check(CLI::PositiveNumber);
    b->add_option("--out", out_path);

    auto* cx = app.add_subcommand("complexity", "exact word complexity table");
    cx->add_option("--spec", spec_path)->required();
    cx->add_option("--max-q", max_q)->required()->check(CLI::PositiveNumber);
    cx->add_option("--out", out_path)->required();
    cx->add_option("--cap", cap)->check(CLI::PositiveNumber);
    cx->add_flag("--float", with_float);

    auto* rs = app.add_subcommand("right-special", "right-special census");
    rs->add_option("--spec", spec_path)->required();
    rs->add_option("--max-q", max_q)->required()->check(CLI::PositiveNumber);
    rs->add_option("--out", out_path)->required();
    rs->add_option("--cap", cap)->check(CLI::PositiveNumber);
    rs->add_flag("--words", with_words);

    auto* pr = app.add_subcommand("predict", "closed-form p(q) for the_ts specs");
    pr->add_option("--spec", spec_path)->required();
    pr->add_option("--q", q)->required()->check(CLI::PositiveNumber);

    auto* sp = app.add_subcommand("select-params", "parameter selection recipes");
    sp->add_option("--mode", mode)->required()->check(CLI::IsMember({"minimal", "dreal", "msj"}));
    sp->add_option("--epsilon", epsilon);
    sp->add_option("--f", f_path);
    sp->add_option("--stages", stages);
    sp->add_option("--out", out_path);

    auto* tr = app.add_subcommand("transform", "language-preserving rewrites");
    tr->add_option("--spec", spec_path)->required();
    tr->add_option("--op", op)->required()->check(CLI::IsMember({"merge", "merge-multi", "shift-c"}));
    tr->add_option("--n", n);
    tr->add_option("--schedule", schedule);
    tr->add_option("--c", c);
    tr->add_option("--d", d);
    tr->add_option("--verify-q", verify_q);
    tr->add_option("--horizon", horizon);
    tr->add_option("--out", out_path);
    tr->add_option("--cap", cap);

    auto* tw = app.add_subcommand("tower", "cutting-and-stacking checks");
    tw->add_option("--spec", spec_path)->required();
    tw->add_option("--check", check)
        ->required()
        ->check(CLI::IsMember({"kappa", "finite-measure", "wm"}));
    tw->add_option("--n", n);
    tw->add_option("--ell", ell);
    tw->add_option("--j", jlevel);
    tw->add_option("--t-max", t_max);
    tw->add_option("--depth-cap", depth_cap);
    tw->add_option("--out", out_path);

    auto* vf = app.add_subcommand("verify", "named check profiles");
    vf->add_option("--spec", spec_path)->required();
    vf->add_option("--profile", profile)
        ->required()
        ->check(CLI::IsMember({"comp", "kappa", "complexity", "finite-measure"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (b->parsed()) cmd_build(spec_path, n, cap, out_path);
        if (cx->parsed()) cmd_complexity(spec_path, max_q, cap, out_path, with_float);
        if (rs->parsed()) cmd_right_special(spec_path, max_q, cap, out_path, with_words);
        if (pr->parsed()) cmd_predict(spec_path, q);
        if (sp->parsed()) cmd_select_params(mode, epsilon, f_path, stages, out_path);
        if (tr->parsed())
            cmd_transform(spec_path, op, n, schedule, c, d, verify_q, horizon, out_path, cap);
        if (tw->parsed()) cmd_tower(spec_path, check, n, ell, jlevel, t_max, depth_cap, out_path);
        if (vf->parsed()) return cmd_verify(spec_path, profile);
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return 3;
    } catch (const CheckFailure& e) {
        std::cerr << "check failure: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
