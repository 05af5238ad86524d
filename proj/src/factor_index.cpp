#include "rankone/factor_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace rankone {

FactorIndex::FactorIndex(const Word& w) : n_(w.size()) {
    if (n_ == 0) throw std::invalid_argument("cannot index the empty word");
    st_.reserve(2 * n_ + 2);
    st_.emplace_back();  // root
    int32_t last = 0;
    for (size_t pos = 0; pos < n_; ++pos) {
        int c = w[pos];
        int32_t cur = static_cast<int32_t>(st_.size());
        st_.emplace_back();
        st_[cur].len = st_[last].len + 1;
        st_[cur].first_end = static_cast<int32_t>(pos);
        int32_t p = last;
        while (p != -1 && st_[p].next[c] == -1) {
            st_[p].next[c] = cur;
            p = st_[p].link;
        }
        if (p == -1) {
            st_[cur].link = 0;
        } else {
            int32_t q = st_[p].next[c];
            if (st_[p].len + 1 == st_[q].len) {
                st_[cur].link = q;
            } else {
                int32_t clone = static_cast<int32_t>(st_.size());
                st_.push_back(st_[q]);
                st_[clone].len = st_[p].len + 1;
                while (p != -1 && st_[p].next[c] == q) {
                    st_[p].next[c] = clone;
                    p = st_[p].link;
                }
                st_[q].link = clone;
                st_[cur].link = clone;
            }
        }
        last = cur;
    }
}

std::vector<int64_t> FactorIndex::counts_per_length(int64_t Q) const {
    std::vector<int64_t> diff(static_cast<size_t>(Q) + 2, 0);
    for (size_t v = 1; v < st_.size(); ++v) {
        int64_t lo = st_[st_[v].link].len + 1;
        int64_t hi = std::min<int64_t>(st_[v].len, Q);
        if (lo > hi) continue;
        ++diff[static_cast<size_t>(lo)];
        --diff[static_cast<size_t>(hi) + 1];
    }
    std::vector<int64_t> counts(static_cast<size_t>(Q) + 1, 0);
    int64_t run = 0;
    for (int64_t q = 1; q <= Q; ++q) {
        run += diff[static_cast<size_t>(q)];
        counts[static_cast<size_t>(q)] = run;
    }
    return counts;
}

int64_t FactorIndex::distinct_factors() const {
    int64_t total = 0;
    for (size_t v = 1; v < st_.size(); ++v) total += st_[v].len - st_[st_[v].link].len;
    return total;
}

int32_t FactorIndex::walk(const Word& f) const {
    int32_t s = 0;
    for (size_t i = 0; i < f.size(); ++i) {
        s = st_[static_cast<size_t>(s)].next[f[i]];
        if (s == -1) return -1;
    }
    return s;
}

bool FactorIndex::contains(const Word& f) const { return walk(f) != -1; }

bool FactorIndex::covers_all_windows(const Word& text, int64_t Q) const {
    int32_t s = 0;
    int64_t matched = 0;  // longest suffix of text[0..j] that is a factor
    for (size_t j = 0; j < text.size(); ++j) {
        int c = text[j];
        while (s != 0 && st_[static_cast<size_t>(s)].next[c] == -1) {
            s = st_[static_cast<size_t>(s)].link;
            matched = st_[static_cast<size_t>(s)].len;
        }
        if (st_[static_cast<size_t>(s)].next[c] != -1) {
            s = st_[static_cast<size_t>(s)].next[c];
            ++matched;
        } else {
            matched = 0;
        }
        if (matched < std::min<int64_t>(static_cast<int64_t>(j) + 1, Q)) return false;
    }
    return true;
}

FactorIndex::Extensions FactorIndex::right_extensions(const Word& f) const {
    int32_t s = walk(f);
    if (s == -1) throw std::invalid_argument("right_extensions: not a factor");
    return Extensions{st_[static_cast<size_t>(s)].next[0] != -1,
                      st_[static_cast<size_t>(s)].next[1] != -1};
}

std::vector<int64_t> FactorIndex::rs_counts(int64_t Q) const {
    std::vector<int64_t> diff(static_cast<size_t>(Q) + 1, 0);
    for (size_t v = 1; v < st_.size(); ++v) {
        if (st_[v].next[0] == -1 || st_[v].next[1] == -1) continue;
        int64_t lo = st_[st_[v].link].len + 1;
        int64_t hi = std::min<int64_t>(st_[v].len, Q - 1);
        if (lo > hi) continue;
        ++diff[static_cast<size_t>(lo)];
        --diff[static_cast<size_t>(hi) + 1];
    }
    std::vector<int64_t> counts(static_cast<size_t>(Q), 0);
    int64_t run = 0;
    for (int64_t q = 1; q < Q; ++q) {
        run += diff[static_cast<size_t>(q)];
        counts[static_cast<size_t>(q)] = run;
    }
    return counts;
}

std::vector<Word> FactorIndex::rs_words(int64_t q, const Word& source) const {
    if (source.size() != n_) throw std::invalid_argument("rs_words: wrong source word");
    std::vector<Word> out;
    for (size_t v = 1; v < st_.size(); ++v) {
        if (st_[v].next[0] == -1 || st_[v].next[1] == -1) continue;
        int64_t lo = st_[st_[v].link].len + 1;
        if (q < lo || q > st_[v].len) continue;
        size_t end = static_cast<size_t>(st_[v].first_end);
        out.push_back(source.substr(end + 1 - static_cast<size_t>(q), static_cast<size_t>(q)));
    }
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    return out;
}

}  // namespace rankone
