#include "rankone/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rankone {

namespace {

inline bool match_at(const Word& text, const Word& pat, size_t pos) {
    size_t m = pat.size();
    size_t done = 0;
    while (done < m) {
        size_t chunk = m - done < 64 ? m - done : 64;
        uint64_t a = pat.window64(done);
        uint64_t b = text.window64(pos + done);
        if (chunk < 64) b &= (1ull << chunk) - 1;
        if (a != b) return false;
        done += chunk;
    }
    return true;
}

}  // namespace

int64_t count_occurrences_serial(const Word& text, const Word& pat) {
    if (pat.empty() || pat.size() > text.size()) return 0;
    int64_t count = 0;
    size_t last = text.size() - pat.size();
    for (size_t i = 0; i <= last; ++i)
        if (match_at(text, pat, i)) ++count;
    return count;
}

int64_t count_occurrences_parallel(const Word& text, const Word& pat) {
    if (pat.empty() || pat.size() > text.size()) return 0;
    int64_t count = 0;
    int64_t last = static_cast<int64_t>(text.size() - pat.size());
#ifdef _OPENMP
#pragma omp parallel for reduction(+ : count) schedule(static)
#endif
    for (int64_t i = 0; i <= last; ++i)
        if (match_at(text, pat, static_cast<size_t>(i))) ++count;
    return count;
}

int64_t count_occurrences(const Word& text, const Word& pat) {
#ifdef _OPENMP
    if (text.size() >= 1u << 16) return count_occurrences_parallel(text, pat);
#endif
    return count_occurrences_serial(text, pat);
}

bool openmp_enabled() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

}  // namespace rankone
