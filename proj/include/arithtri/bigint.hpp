// Copyright 2026 The arithtri Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ARITHTRI_BIGINT_HPP
#define ARITHTRI_BIGINT_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace arithtri {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(std::size_t e) {
    BigInt r = 1;
    r <<= e;
    return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

namespace detail {

// Round-to-nearest-even mantissa of `v` with `digits` significant bits;
// `v` ~= mantissa * 2^exponent.
struct RoundedMantissa {
    std::uint64_t mantissa;
    long exponent;
};

inline RoundedMantissa round_mantissa(const BigInt& v, int digits) {
    using boost::multiprecision::bit_test;
    using boost::multiprecision::msb;
    const auto top = static_cast<long>(msb(v));
    if (top < digits) {
        return {v.convert_to<std::uint64_t>(), 0};
    }
    const long shift = top - (digits - 1);
    BigInt mant = v >> shift;
    const bool half = bit_test(v, static_cast<unsigned>(shift - 1));
    bool sticky = false;
    if (half && shift > 1) {
        const BigInt low = v & (pow2(static_cast<std::size_t>(shift - 1)) - 1);
        sticky = !low.is_zero();
    }
    if (half && (sticky || bit_test(mant, 0))) {
        ++mant;
    }
    if (static_cast<long>(msb(mant)) >= digits) {
        return {(mant >> 1).convert_to<std::uint64_t>(), shift + 1};
    }
    return {mant.convert_to<std::uint64_t>(), shift};
}

}  // namespace detail

/// `num * 2^-e` as a binary floating-point scalar, rounded once
/// (round-to-nearest-even on the integer, the power of two is exact).
template <typename Scalar>
Scalar ratio_pow2(const BigInt& num, long e) {
    static_assert(std::numeric_limits<Scalar>::radix == 2 &&
                      std::numeric_limits<Scalar>::digits <= 64,
                  "binary floating-point scalar with <= 64 mantissa bits required");
    if (num.sign() < 0) {
        throw std::domain_error("ratio_pow2: negative numerator");
    }
    if (num.is_zero()) {
        return Scalar(0);
    }
    const auto r = detail::round_mantissa(num, std::numeric_limits<Scalar>::digits);
    return std::ldexp(static_cast<Scalar>(r.mantissa), static_cast<int>(r.exponent - e));
}

template <typename Scalar>
Scalar to_scalar(const BigInt& v) {
    return ratio_pow2<Scalar>(v, 0);
}

}  // namespace arithtri

#endif  // ARITHTRI_BIGINT_HPP
