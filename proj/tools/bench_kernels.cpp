// Timing comparison of the serial reference kernels against the OpenMP ones.

#include <chrono>
#include <cstdio>

#include "rankone/construction.hpp"
#include "rankone/kernels.hpp"
#include "rankone/tower.hpp"

using namespace rankone;

namespace {

double wall_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <class F>
double timed(F&& fn, int reps) {
    double best = 1e99;
    for (int i = 0; i < reps; ++i) {
        double t0 = wall_seconds();
        fn();
        double dt = wall_seconds() - t0;
        if (dt < best) best = dt;
    }
    return best;
}

}  // namespace

int main() {
    std::printf("openmp: %s\n\n", openmp_enabled() ? "enabled" : "disabled (serial fallback)");

    RankOneSpec ts = make_the_ts(SequenceRule::constant(2), SequenceRule::constant(2));
    Word text = *build_word(ts, 9).word;  // ~3.0M symbols
    std::printf("occurrence counting, text length %zu\n", text.size());
    for (Word pat : {Word::from_string("01"), Word::from_string("0101001010"),
                     text.substr(1000, 30), text.substr(1000, 200)}) {
        volatile int64_t sink = 0;
        double ts_serial = timed([&] { sink = count_occurrences_serial(text, pat); }, 3);
        double ts_par = timed([&] { sink = count_occurrences_parallel(text, pat); }, 3);
        std::printf("  pat len %2zu: serial %8.4fs  parallel %8.4fs  speedup %.2fx  (count %lld)\n",
                    pat.size(), ts_serial, ts_par, ts_serial / ts_par,
                    static_cast<long long>(count_occurrences_serial(text, pat)));
        (void)sink;
    }

    RankOneSpec ts23 = make_the_ts(SequenceRule::constant(2), SequenceRule::constant(3));
    Tower tower(ts23, 8);
    std::printf("\ncorrelation sweep, T = 150, depth cap 6\n");
    double sweep_serial = timed(
        [&] { tower.wm_diagnostic(LevelSet::single(2, 0), LevelSet::single(2, 0), 150, 6, false); },
        2);
    double sweep_par = timed(
        [&] { tower.wm_diagnostic(LevelSet::single(2, 0), LevelSet::single(2, 0), 150, 6, true); },
        2);
    std::printf("  serial %8.4fs  parallel %8.4fs  speedup %.2fx\n", sweep_serial, sweep_par,
                sweep_serial / sweep_par);
    return 0;
}
