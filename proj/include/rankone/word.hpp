#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rankone {

// Finite binary word, bit-packed.  Symbol values are 0 and 1.
class Word {
public:
    Word() = default;

    static Word from_string(std::string_view s);
    static Word zeros(size_t n);
    static Word ones(size_t n);

    size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    int operator[](size_t i) const {
        return static_cast<int>((bits_[i >> 6] >> (i & 63)) & 1u);
    }

    void push_back(int symbol);
    void append(const Word& other);
    void append_ones(size_t n);
    void reserve(size_t n) { bits_.reserve((n + 63) / 64); }

    Word substr(size_t pos, size_t count) const;
    Word prefix(size_t count) const { return substr(0, count); }
    Word suffix(size_t count) const { return substr(len_ - count, count); }

    bool is_prefix_of(const Word& w) const;
    bool is_suffix_of(const Word& w) const;
    // True when this word appears in w starting at position pos.
    bool matches_at(const Word& w, size_t pos) const;

    size_t count_zeros() const;
    size_t count_ones() const { return len_ - count_zeros(); }
    size_t trailing_ones() const;

    bool operator==(const Word& other) const;
    bool operator!=(const Word& other) const { return !(*this == other); }

    std::string str() const;

    // 64 bits starting at pos (unused high bits zero near the end).
    uint64_t window64(size_t pos) const;

private:
    std::vector<uint64_t> bits_;
    size_t len_ = 0;
};

}  // namespace rankone
