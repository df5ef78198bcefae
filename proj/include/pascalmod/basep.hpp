#pragma once

/**
 * @file basep.hpp
 * @brief Base-p digit words, Nim-sum and the digit permutations mu_{a,b}.
 *
 * Digits are stored least-significant first so that digit i carries weight
 * p^i. Display helpers render the usual most-significant-first form.
 * The integer 0 is represented by the empty word.
 */

#include "integer.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pascalmod {

class Prime {
public:
    explicit Prime(std::uint64_t v) : value_(static_cast<Digit>(v)) {
        if (v < 2 || v > UINT32_MAX || !is_prime(v)) {
            throw std::invalid_argument("not a prime: " + std::to_string(v));
        }
    }

    Digit value() const noexcept { return value_; }
    operator Digit() const noexcept { return value_; }

    friend bool operator==(const Prime&, const Prime&) = default;

    static bool is_prime(std::uint64_t v) noexcept {
        if (v < 2) return false;
        for (std::uint64_t d = 2; d * d <= v; ++d) {
            if (v % d == 0) return false;
        }
        return true;
    }

private:
    Digit value_;
};

/// (a*b) mod m without overflow for 32-bit residues.
inline Digit mul_mod(Digit a, Digit b, Digit m) {
    return static_cast<Digit>(static_cast<std::uint64_t>(a) * b % m);
}

inline Digit pow_mod(Digit base, std::uint64_t exp, Digit m) {
    std::uint64_t result = 1 % m;
    std::uint64_t b = base % m;
    while (exp > 0) {
        if (exp & 1U) result = result * b % m;
        b = b * b % m;
        exp >>= 1U;
    }
    return static_cast<Digit>(result);
}

/// Inverse of a nonzero residue modulo a prime (Fermat's little theorem).
inline Digit inverse_mod(Digit x, Prime p) {
    if (x % p == 0) throw std::domain_error("zero residue has no inverse");
    return pow_mod(x, p.value() - 2, p);
}

/// binom(a, b) mod p for single digits 0 <= a, b < p; zero when b > a.
inline Digit digit_binom(Digit a, Digit b, Prime p) {
    if (a >= p || b >= p) throw std::out_of_range("digit_binom: digit out of range");
    if (b > a) return 0;
    Digit num = 1;
    Digit den = 1;
    for (Digit i = 0; i < b; ++i) {
        num = mul_mod(num, a - i, p);
        den = mul_mod(den, i + 1, p);
    }
    return mul_mod(num, inverse_mod(den, p), p);
}

class DigitWord {
public:
    explicit DigitWord(Prime base) : base_(base) {}

    /// Digits least-significant first; leading (high) zeros are kept as given.
    DigitWord(std::vector<Digit> lsd_first, Prime base) : digits_(std::move(lsd_first)), base_(base) {
        for (Digit d : digits_) {
            if (d >= base_) {
                throw std::out_of_range("digit " + std::to_string(d) + " out of range for base " +
                                        std::to_string(base_.value()));
            }
        }
    }

    /// Parses the most-significant-first display form. Bases above 10 need
    /// dot-separated digits, e.g. "12.0.3".
    static DigitWord from_msd_string(std::string_view text, Prime base) {
        std::vector<Digit> msd;
        if (text.find('.') != std::string_view::npos || base > 10) {
            std::size_t start = 0;
            while (start <= text.size() && !text.empty()) {
                auto end = text.find('.', start);
                if (end == std::string_view::npos) end = text.size();
                msd.push_back(parse_digit_run(text.substr(start, end - start)));
                start = end + 1;
            }
        } else {
            for (char c : text) msd.push_back(parse_digit_run(std::string_view(&c, 1)));
        }
        std::reverse(msd.begin(), msd.end());
        return DigitWord(std::move(msd), base);
    }

    Prime base() const noexcept { return base_; }
    std::size_t size() const noexcept { return digits_.size(); }
    bool empty() const noexcept { return digits_.empty(); }
    Digit operator[](std::size_t i) const { return digits_[i]; }
    std::span<const Digit> digits() const noexcept { return digits_; }

    /// Drops most-significant zeros.
    DigitWord canonical() const {
        auto d = digits_;
        while (!d.empty() && d.back() == 0) d.pop_back();
        return DigitWord(std::move(d), base_);
    }

    bool is_canonical() const noexcept { return digits_.empty() || digits_.back() != 0; }

    std::string to_string() const {
        std::string out;
        const bool dotted = base_ > 10;
        for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
            if (dotted && it != digits_.rbegin()) out += '.';
            out += std::to_string(*it);
        }
        return out;
    }

    friend bool operator==(const DigitWord&, const DigitWord&) = default;

private:
    static Digit parse_digit_run(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("empty digit");
        Digit v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') throw std::invalid_argument("bad digit character");
            v = v * 10 + static_cast<Digit>(c - '0');
        }
        return v;
    }

    std::vector<Digit> digits_;
    Prime base_;
};

template <DigitInteger Int>
DigitWord rep(Int n, Prime p) {
    std::vector<Digit> d;
    while (!is_zero(n)) {
        d.push_back(small_mod(n, p));
        n /= p.value();
    }
    return DigitWord(std::move(d), p);
}

template <DigitInteger Int = BigInt>
Int val(const DigitWord& w) {
    Int acc = 0;
    const auto digits = w.digits();
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        acc *= w.base().value();
        acc += *it;
    }
    return acc;
}

/// Digit-wise addition mod p without carries.
template <DigitInteger Int>
Int nim_add(Int m, Int n, Prime p) {
    Int result = 0;
    Int weight = 1;
    while (!is_zero(m) || !is_zero(n)) {
        const Digit d = (small_mod(m, p) + small_mod(n, p)) % p;
        if (d != 0) result += weight * d;
        m /= p.value();
        n /= p.value();
        weight *= p.value();
    }
    return result;
}

template <DigitInteger Int>
std::uint64_t digit_sum(Int n, Prime p) {
    std::uint64_t s = 0;
    while (!is_zero(n)) {
        s += small_mod(n, p);
        n /= p.value();
    }
    return s;
}

/// (e_0 - e_1 + e_2 - ...) mod p, e_0 being the least significant digit.
template <DigitInteger Int>
Digit alt_digit_sum(Int n, Prime p) {
    std::uint64_t acc = 0;
    bool plus = true;
    while (!is_zero(n)) {
        const Digit d = small_mod(n, p);
        acc = (acc + (plus ? d : p - d)) % p;
        plus = !plus;
        n /= p.value();
    }
    return static_cast<Digit>(acc);
}

/// The multiplier binom(a,b) mod p of mu_{a,b}; throws unless it is a unit.
inline Digit mu_multiplier(Digit a, Digit b, Prime p) {
    if (a >= p || b > a) {
        throw std::invalid_argument("mu_{a,b} needs 0 <= b <= a < p");
    }
    const Digit c = digit_binom(a, b, p);
    if (c == 0) throw std::invalid_argument("mu_{a,b} is not a permutation: binom(a,b) = 0 mod p");
    return c;
}

namespace detail {
inline DigitWord scale_word(const DigitWord& w, Digit c) {
    const Prime p = w.base();
    std::vector<Digit> out;
    out.reserve(w.size());
    for (Digit d : w.digits()) out.push_back(mul_mod(d, c, p));
    return DigitWord(std::move(out), p);
}
}  // namespace detail

/// Letter-wise x -> binom(a,b) x mod p.
inline DigitWord mu_apply(Digit a, Digit b, const DigitWord& w) {
    return detail::scale_word(w, mu_multiplier(a, b, w.base()));
}

inline DigitWord mu_inverse(Digit a, Digit b, const DigitWord& w) {
    return detail::scale_word(w, inverse_mod(mu_multiplier(a, b, w.base()), w.base()));
}

/// Single-residue forms used by the pyramid code.
inline Digit mu_apply(Digit a, Digit b, Digit x, Prime p) { return mul_mod(x, mu_multiplier(a, b, p), p); }
inline Digit mu_inverse(Digit a, Digit b, Digit x, Prime p) {
    return mul_mod(x, inverse_mod(mu_multiplier(a, b, p), p), p);
}

/// Digit of weight p^j (epsilon_j), leading zeros allowed.
template <DigitInteger Int>
Digit digit_at(Int n, std::size_t j, Prime p) {
    for (std::size_t i = 0; i < j && !is_zero(n); ++i) n /= p.value();
    return small_mod(n, p);
}

}  // namespace pascalmod
