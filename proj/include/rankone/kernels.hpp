#pragma once

#include <cstdint>

#include "rankone/word.hpp"

namespace rankone {

// Number of start positions where pat occurs in text (all starts counted).
// The serial version is the reference; the parallel one must agree exactly.
int64_t count_occurrences_serial(const Word& text, const Word& pat);
int64_t count_occurrences_parallel(const Word& text, const Word& pat);
int64_t count_occurrences(const Word& text, const Word& pat);

bool openmp_enabled();

}  // namespace rankone
