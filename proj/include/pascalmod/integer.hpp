#pragma once

/**
 * @file integer.hpp
 * @brief Integer vocabulary shared by every header of the library.
 *
 * Rows of Pascal's triangle mod p turn into integers with n+1 base-p
 * digits, so the default integer type is arbitrary precision. Most digit
 * algorithms are templates and also accept built-in unsigned types for
 * fast sweeps over small ranges.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <string>
#include <type_traits>

namespace pascalmod {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A single base-p digit or residue mod p.
using Digit = std::uint32_t;

template <class T>
concept DigitInteger =
    (std::unsigned_integral<T> && !std::same_as<T, bool>) || std::same_as<T, BigInt>;

template <DigitInteger Int>
inline bool is_zero(const Int& v) {
    if constexpr (std::same_as<Int, BigInt>) {
        return v.is_zero();
    } else {
        return v == 0;
    }
}

/// Remainder of a non-negative integer by a small modulus.
template <DigitInteger Int>
inline Digit small_mod(const Int& v, Digit m) {
    if constexpr (std::same_as<Int, BigInt>) {
        return static_cast<Digit>(static_cast<std::uint64_t>(v % m));
    } else {
        return static_cast<Digit>(v % m);
    }
}

inline BigInt pow_big(std::uint64_t base, std::uint64_t exp) {
    return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

template <DigitInteger Int>
inline std::string to_decimal(const Int& v) {
    if constexpr (std::same_as<Int, BigInt>) {
        return v.str();
    } else {
        return std::to_string(v);
    }
}

}  // namespace pascalmod
