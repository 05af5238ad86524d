#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rankone/word.hpp"

using rankone::Word;

namespace {

std::string random_bits(std::mt19937_64& rng, size_t n) {
    std::string s(n, '0');
    for (auto& c : s) c = (rng() & 1) ? '1' : '0';
    return s;
}

}  // namespace

TEST_CASE("string round trip") {
    CHECK(Word::from_string("0101001010").str() == "0101001010");
    CHECK(Word::from_string("").size() == 0);
    CHECK(Word::zeros(5).str() == "00000");
    CHECK(Word::ones(3).str() == "111");
    CHECK_THROWS_AS(Word::from_string("012"), std::invalid_argument);
}

TEST_CASE("packed ops agree with std::string ops") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 300; ++trial) {
        size_t n = 1 + rng() % 200;
        std::string s = random_bits(rng, n);
        Word w = Word::from_string(s);
        REQUIRE(w.size() == n);
        CHECK(w.str() == s);
        CHECK(w.count_zeros() == static_cast<size_t>(std::count(s.begin(), s.end(), '0')));
        size_t last_zero = s.find_last_of('0');
        CHECK(w.trailing_ones() == (last_zero == std::string::npos ? n : n - last_zero - 1));

        size_t pos = rng() % n;
        size_t len = rng() % (n - pos + 1);
        CHECK(w.substr(pos, len).str() == s.substr(pos, len));

        std::string t = random_bits(rng, 1 + rng() % 80);
        Word u = Word::from_string(t);
        Word cat = w;
        cat.append(u);
        CHECK(cat.str() == s + t);
        size_t ones = rng() % 70;
        Word cat2 = w;
        cat2.append_ones(ones);
        CHECK(cat2.str() == s + std::string(ones, '1'));

        // suffix/prefix/match
        Word pre = w.prefix(len);
        CHECK(pre.is_prefix_of(w));
        Word suf = w.suffix(len);
        CHECK(suf.is_suffix_of(w));
        if (len > 0 && pos + len <= n)
            CHECK(w.substr(pos, len).matches_at(w, pos));
    }
}

TEST_CASE("trailing ones on all-ones word") {
    Word w = Word::ones(70);
    CHECK(w.trailing_ones() == 70);
    CHECK(w.count_zeros() == 0);
}

TEST_CASE("equality is structural") {
    Word a = Word::from_string("0110");
    Word b = Word::from_string("0110");
    Word c = Word::from_string("01100");
    CHECK(a == b);
    CHECK(a != c);
}
