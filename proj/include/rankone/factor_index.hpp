#pragma once

#include <cstdint>
#include <vector>

#include "rankone/word.hpp"

namespace rankone {

// Index over the factor set of a fixed word: the automaton whose states
// partition factors by their end-position sets, each state covering the
// contiguous length range (len(link), len].  Construction is online and
// linear; a completed index is immutable and safe for concurrent queries.
class FactorIndex {
public:
    explicit FactorIndex(const Word& w);

    size_t word_length() const { return n_; }

    // counts[q] = number of distinct length-q factors, for 1 <= q <= Q.
    std::vector<int64_t> counts_per_length(int64_t Q) const;
    int64_t distinct_factors() const;

    bool contains(const Word& f) const;

    struct Extensions {
        bool zero = false;
        bool one = false;
    };
    // Which of f0, f1 are factors (f itself must be a factor).
    Extensions right_extensions(const Word& f) const;

    // True when every window of text of length <= Q is a factor of the
    // indexed word (rolling longest-match walk).
    bool covers_all_windows(const Word& text, int64_t Q) const;

    // rs[q] = number of right-special factors of length q, for 1 <= q < Q.
    std::vector<int64_t> rs_counts(int64_t Q) const;
    // The right-special factors of length q, sorted lexicographically.
    std::vector<Word> rs_words(int64_t q, const Word& source) const;

private:
    struct State {
        int32_t next[2] = {-1, -1};
        int32_t link = -1;
        int32_t len = 0;
        int32_t first_end = -1;  // end position (inclusive) of first occurrence
    };

    int32_t walk(const Word& f) const;  // state reached by f, or -1

    std::vector<State> st_;
    size_t n_ = 0;
};

}  // namespace rankone
