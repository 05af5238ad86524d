#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rankone {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int64_t to_i64(const BigInt& v, const char* what = "value") {
    if (v < std::numeric_limits<int64_t>::min() || v > std::numeric_limits<int64_t>::max())
        throw std::overflow_error(std::string(what) + " exceeds 64-bit range: " + v.str());
    return static_cast<int64_t>(v);
}

inline Rational make_ratio(const BigInt& num, const BigInt& den) {
    return Rational(num, den);
}

inline std::string ratio_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace rankone
