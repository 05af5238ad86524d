#include "rankone/word.hpp"

#include <bit>
#include <stdexcept>

namespace rankone {

Word Word::from_string(std::string_view s) {
    Word w;
    w.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("word symbols must be 0 or 1");
        w.push_back(c - '0');
    }
    return w;
}

Word Word::zeros(size_t n) {
    Word w;
    w.bits_.assign((n + 63) / 64, 0);
    w.len_ = n;
    return w;
}

Word Word::ones(size_t n) {
    Word w;
    w.bits_.assign((n + 63) / 64, ~0ull);
    w.len_ = n;
    if (n & 63) w.bits_.back() &= (1ull << (n & 63)) - 1;
    return w;
}

void Word::push_back(int symbol) {
    if ((len_ & 63) == 0) bits_.push_back(0);
    if (symbol) bits_[len_ >> 6] |= 1ull << (len_ & 63);
    ++len_;
}

void Word::append(const Word& other) {
    size_t shift = len_ & 63;
    size_t need = (len_ + other.len_ + 63) / 64;
    bits_.resize(need, 0);
    size_t base = len_ >> 6;
    size_t oblocks = (other.len_ + 63) / 64;
    if (shift == 0) {
        for (size_t i = 0; i < oblocks; ++i) bits_[base + i] = other.bits_[i];
    } else {
        for (size_t i = 0; i < oblocks; ++i) {
            uint64_t v = other.bits_[i];
            bits_[base + i] |= v << shift;
            if (base + i + 1 < need) bits_[base + i + 1] |= v >> (64 - shift);
        }
    }
    len_ += other.len_;
    if (len_ & 63) bits_.back() &= (1ull << (len_ & 63)) - 1;
    bits_.resize((len_ + 63) / 64);
}

void Word::append_ones(size_t n) {
    for (size_t i = 0; i < n; ++i) push_back(1);
}

Word Word::substr(size_t pos, size_t count) const {
    if (pos + count > len_) throw std::out_of_range("Word::substr");
    Word out;
    out.bits_.assign((count + 63) / 64, 0);
    out.len_ = count;
    size_t shift = pos & 63;
    size_t base = pos >> 6;
    size_t blocks = (count + 63) / 64;
    for (size_t i = 0; i < blocks; ++i) {
        uint64_t v = bits_[base + i] >> shift;
        if (shift && base + i + 1 < bits_.size()) v |= bits_[base + i + 1] << (64 - shift);
        out.bits_[i] = v;
    }
    if (count & 63) out.bits_.back() &= (1ull << (count & 63)) - 1;
    return out;
}

uint64_t Word::window64(size_t pos) const {
    size_t base = pos >> 6, shift = pos & 63;
    uint64_t v = base < bits_.size() ? bits_[base] >> shift : 0;
    if (shift && base + 1 < bits_.size()) v |= bits_[base + 1] << (64 - shift);
    size_t avail = len_ - pos;
    if (avail < 64) v &= avail ? (1ull << avail) - 1 : 0;
    return v;
}

bool Word::matches_at(const Word& w, size_t pos) const {
    if (pos + len_ > w.len_) return false;
    size_t done = 0;
    while (done < len_) {
        size_t chunk = std::min<size_t>(64, len_ - done);
        uint64_t mine = window64(done);
        uint64_t theirs = w.window64(pos + done);
        if (chunk < 64) theirs &= (1ull << chunk) - 1;
        if (mine != theirs) return false;
        done += chunk;
    }
    return true;
}

bool Word::is_prefix_of(const Word& w) const {
    return len_ <= w.len_ && matches_at(w, 0);
}

bool Word::is_suffix_of(const Word& w) const {
    return len_ <= w.len_ && matches_at(w, w.len_ - len_);
}

size_t Word::count_zeros() const {
    size_t ones = 0;
    for (uint64_t b : bits_) ones += std::popcount(b);
    return len_ - ones;
}

size_t Word::trailing_ones() const {
    size_t n = 0;
    for (size_t i = len_; i > 0 && (*this)[i - 1] == 1; --i) ++n;
    return n;
}

bool Word::operator==(const Word& other) const {
    return len_ == other.len_ && bits_ == other.bits_;
}

std::string Word::str() const {
    std::string s(len_, '0');
    for (size_t i = 0; i < len_; ++i)
        if ((*this)[i]) s[i] = '1';
    return s;
}

}  // namespace rankone
