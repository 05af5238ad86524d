#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rankone/construction.hpp"
#include "rankone/rewrite.hpp"

using namespace rankone;

namespace {

RankOneSpec ts22() { return make_the_ts(SequenceRule::constant(2), SequenceRule::constant(2)); }

std::string word_at(const RankOneSpec& spec, int64_t n) {
    return build_word(spec, n).word->str();
}

std::mt19937_64 rng(424242);

RankOneSpec random_spec(int max_value = 2) {
    std::vector<SpacerRow> rows;
    int stages = 3 + static_cast<int>(rng() % 3);
    for (int i = 0; i < stages; ++i) {
        SpacerRow row;
        int64_t r = 1 + static_cast<int64_t>(rng() % 3);
        for (int64_t j = 0; j <= r; ++j)
            row.s.push_back(static_cast<int64_t>(rng() % (max_value + 1)));
        rows.push_back(std::move(row));
    }
    return RankOneSpec::explicit_rows(std::move(rows),
                                      (rng() & 1) ? TailRule::RepeatLast : TailRule::RepeatCycle);
}

MergeSchedule random_schedule(int64_t max_stage) {
    MergeSchedule sched;
    int64_t n = 1;
    while (n <= max_stage) {
        sched.stages.push_back(n);
        n += 1 + static_cast<int64_t>(rng() % 3);
    }
    return sched;
}

}  // namespace

TEST_CASE("merge_rows arithmetic") {
    SpacerRow merged = merge_rows(SpacerRow{{1, 0}}, SpacerRow{{2, 0}});
    CHECK(merged.s == std::vector<int64_t>{1, 2, 1, 0});
    SpacerRow alt = merge_rows(SpacerRow{{2, 2, 0}}, SpacerRow{{3, 3, 0}});
    CHECK(alt.s == std::vector<int64_t>{2, 2, 3, 2, 2, 3, 2, 2, 0});
}

TEST_CASE("merge_stage examples") {
    RankOneSpec two = RankOneSpec::explicit_rows({SpacerRow{{1, 0}}, SpacerRow{{2, 0}}},
                                                 TailRule::RepeatLast);
    RankOneSpec merged = merge_stage(two, 1);
    CHECK(merged.row(1).s == std::vector<int64_t>{1, 2, 1, 0});
    CHECK(word_at(merged, 2) == "01011010");
    CHECK(word_at(merged, 2) == word_at(two, 3));

    RankOneSpec zeros = RankOneSpec::explicit_rows({SpacerRow{{0, 0}}}, TailRule::RepeatLast);
    RankOneSpec mz = merge_stage(zeros, 1);
    CHECK(mz.row(1).s == std::vector<int64_t>{0, 0, 0, 0});
    CHECK(word_at(mz, 2) == "0000");

    RankOneSpec mc = merge_stage(make_named("chacon"), 1);
    CHECK(word_at(mc, 2) == "0010001010010");
    CHECK(word_at(mc, 2).size() == 13);
}

TEST_CASE("merge_stages with schedules") {
    MergeSchedule identity{{1, 2, 3, 4, 5}};
    RankOneSpec mi = merge_stages(make_named("chacon"), identity);
    for (int64_t t = 1; t <= 6; ++t) CHECK(mi.row(t).s == make_named("chacon").row(t).s);
    CHECK(word_at(mi, 4) == word_at(make_named("chacon"), 4));

    MergeSchedule odd{{1, 3, 5}};
    RankOneSpec mo = merge_stages(make_named("chacon"), odd);
    CHECK(word_at(mo, 2) == word_at(make_named("chacon"), 3));
    CHECK(word_at(mo, 3) == word_at(make_named("chacon"), 5));

    MergeSchedule sched{{1, 2, 4}};
    RankOneSpec mt = merge_stages(ts22(), sched);
    CHECK(word_at(mt, 3) == word_at(ts22(), 4));
    CHECK(word_at(mt, 3).size() == 388);

    CHECK_THROWS_AS(merge_stages(ts22(), MergeSchedule{{2, 3}}).row(1), PreconditionError);
    CHECK_THROWS_AS(merge_stages(ts22(), MergeSchedule{{1, 1}}).row(1), PreconditionError);
}

TEST_CASE("merges preserve words and heights on random specs") {
    int cases = 0;
    while (cases < 120) {
        RankOneSpec spec = random_spec();
        MergeSchedule sched = random_schedule(5 + static_cast<int64_t>(rng() % 3));
        RankOneSpec merged = merge_stages(spec, sched);
        std::vector<BigInt> h = heights(spec, 10);
        std::vector<BigInt> hm = heights(merged, static_cast<int64_t>(sched.stages.size()));
        bool checked = false;
        for (size_t t = 1; t <= sched.stages.size(); ++t) {
            int64_t nt = sched.stages[t - 1];
            REQUIRE(hm[t] == h[static_cast<size_t>(nt)]);
            if (h[static_cast<size_t>(nt)] <= 50000) {
                REQUIRE(word_at(merged, static_cast<int64_t>(t)) == word_at(spec, nt));
                checked = true;
            }
        }
        if (checked) ++cases;
    }
}

TEST_CASE("shift_constant examples") {
    RankOneSpec base = RankOneSpec::explicit_rows({SpacerRow{{1, 2, 0}}}, TailRule::RepeatLast);
    RankOneSpec shifted = shift_constant(base, 1, 1, 2);
    CHECK(word_at(base, 2) == "010110");
    CHECK(word_at(shifted, 2) == "0101101");
    CHECK(word_at(shifted, 2) == word_at(base, 2) + "1");
    CHECK(word_at(shifted, 3) == word_at(base, 3) + "1");
    CHECK(word_at(shifted, 4) == word_at(base, 4) + "1");

    // c = 0 keeps every word
    RankOneSpec zero_shift = shift_constant(make_named("chacon"), 1, 0, 1);
    CHECK(word_at(zero_shift, 4) == word_at(make_named("chacon"), 4));

    RankOneSpec b13 = RankOneSpec::explicit_rows({SpacerRow{{1, 3, 0}}}, TailRule::RepeatLast);
    RankOneSpec s13 = shift_constant(b13, 1, 1, 3);
    CHECK(word_at(s13, 3) == word_at(b13, 3) + "1");

    // value outside {c, d} reported with the offending stage
    RankOneSpec bad = RankOneSpec::explicit_rows({SpacerRow{{0, 1, 0}}}, TailRule::RepeatLast);
    RankOneSpec sbad = shift_constant(bad, 1, 1, 2);
    CHECK_THROWS_AS(sbad.row(1), PreconditionError);
}

TEST_CASE("shift_constant on random two-valued specs") {
    for (int trial = 0; trial < 120; ++trial) {
        int64_t c = static_cast<int64_t>(rng() % 3);
        int64_t d = c + 1 + static_cast<int64_t>(rng() % 2);
        std::vector<SpacerRow> rows;
        int stages = 3 + static_cast<int>(rng() % 2);
        for (int i = 0; i < stages; ++i) {
            SpacerRow row;
            int64_t r = 1 + static_cast<int64_t>(rng() % 3);
            for (int64_t j = 0; j < r; ++j) row.s.push_back((rng() & 1) ? c : d);
            row.s.push_back(0);
            rows.push_back(std::move(row));
        }
        RankOneSpec spec = RankOneSpec::explicit_rows(std::move(rows), TailRule::RepeatLast);
        int64_t N = 1 + static_cast<int64_t>(rng() % 2);
        RankOneSpec shifted = shift_constant(spec, N, c, d);
        std::string suffix(static_cast<size_t>(c), '1');
        for (int64_t n = N + 1; n <= 6; ++n)
            REQUIRE(word_at(shifted, n) == word_at(spec, n) + suffix);
        for (int64_t n = 1; n <= N; ++n) REQUIRE(word_at(shifted, n) == word_at(spec, n));
    }
}

TEST_CASE("nonconstant_schedule") {
    RankOneSpec alternating = RankOneSpec::explicit_rows(
        {SpacerRow{{2, 2, 0}}, SpacerRow{{3, 3, 0}}}, TailRule::RepeatCycle);
    MergeSchedule sched = nonconstant_schedule(alternating, 8);
    CHECK(sched.stages == std::vector<int64_t>{1, 3, 5, 7, 9});
    RankOneSpec merged = merge_stages(alternating, sched);
    for (int64_t t = 1; t <= 4; ++t) {
        SpacerRow row = merged.row(t);
        CHECK_FALSE(row.interior_constant());
        CHECK(row.s.back() == 0);
    }
    // an incomplete trailing block is dropped from the certified range
    CHECK(nonconstant_schedule(alternating, 7).stages == std::vector<int64_t>{1, 3, 5, 7});

    // already nonconstant everywhere: identity schedule
    MergeSchedule id = nonconstant_schedule(ts22(), 5);
    CHECK(id.stages == std::vector<int64_t>{1, 2, 3, 4, 5, 6});

    RankOneSpec constant = RankOneSpec::explicit_rows({SpacerRow{{2, 2, 0}}},
                                                      TailRule::RepeatLast);
    CHECK_THROWS_AS(nonconstant_schedule(constant, 8), PreconditionError);

    // constant stages with equal values followed by a differing one merge as a block
    RankOneSpec late = RankOneSpec::explicit_rows(
        {SpacerRow{{2, 2, 0}}, SpacerRow{{2, 2, 0}}, SpacerRow{{1, 2, 0}}},
        TailRule::RepeatCycle);
    MergeSchedule ls = nonconstant_schedule(late, 6);
    CHECK(ls.stages.front() == 1);
    RankOneSpec lm = merge_stages(late, ls);
    CHECK_FALSE(lm.row(1).interior_constant());
}

TEST_CASE("run decompositions") {
    RunDecomposition rd = run_decomposition(ts22(), 1, 1);
    CHECK(rd.a == std::vector<int64_t>{1, 1, 2, 1, 1});
    CHECK(rd.z() == 5);
    CHECK(run_decomposition(make_named("ferenczi"), 1, 1).a == std::vector<int64_t>{2, 2});
    CHECK(run_decomposition(make_named("chacon"), 1, 1).a == std::vector<int64_t>{2, 1});

    // sum of runs is r+1, and reassembly reproduces B_{n+1}
    for (auto spec : {ts22(), make_named("ferenczi"), make_named("chacon")}) {
        for (int64_t n : {1, 2, 3}) {
            RunDecomposition d = run_decomposition(spec, n, 1);
            int64_t total = 0;
            for (int64_t a : d.a) total += a;
            CHECK(total == spec.row(n).r() + 1);
            Word b = *build_word(spec, n).word;
            Word rebuilt;
            for (size_t j = 0; j < d.a.size(); ++j) {
                for (int64_t k = 0; k < d.a[j]; ++k) rebuilt.append(b);
                if (j + 1 < d.a.size()) rebuilt.append_ones(static_cast<size_t>(d.d));
            }
            CHECK(rebuilt == *build_word(spec, n + 1).word);
        }
    }

    RankOneSpec wrongd = RankOneSpec::explicit_rows({SpacerRow{{0, 2, 0}}}, TailRule::RepeatLast);
    CHECK_THROWS_AS(run_decomposition(wrongd, 1, 1), PreconditionError);
    RankOneSpec topd = RankOneSpec::explicit_rows({SpacerRow{{0, 1}}}, TailRule::RepeatLast);
    CHECK_THROWS_AS(run_decomposition(topd, 1, 1), PreconditionError);
    RankOneSpec allzero = RankOneSpec::explicit_rows({SpacerRow{{0, 0, 0}}}, TailRule::RepeatLast);
    CHECK_THROWS_AS(run_decomposition(allzero, 1, 1), PreconditionError);
}

TEST_CASE("verify_same_language") {
    CHECK(verify_same_language(ts22(), merge_stage(ts22(), 2), 100));
    RankOneSpec base = RankOneSpec::explicit_rows({SpacerRow{{1, 2, 0}}}, TailRule::RepeatLast);
    CHECK(verify_same_language(base, shift_constant(base, 1, 1, 2), 60));
    CHECK_FALSE(verify_same_language(make_named("chacon"), make_named("ferenczi"), 30));
    CHECK(verify_same_language(make_named("chacon"), make_named("chacon"), 80));
    // symmetric on a tested pair
    RankOneSpec m = merge_stages(make_named("ferenczi"), MergeSchedule{{1, 3}});
    CHECK(verify_same_language(make_named("ferenczi"), m, 64));
    CHECK(verify_same_language(m, make_named("ferenczi"), 64));
}
