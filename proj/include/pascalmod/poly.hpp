#pragma once

/**
 * @file poly.hpp
 * @brief Integer polynomials attached to rows of Pascal's triangle mod p.
 *
 *   P_n(X) = sum_j [binom(n,j) mod p] X^j
 *   Q_n(X) = prod_i (1 + X^{p^i})^{n_i}        (n_i the base-p digits of n)
 *   kappa_{p,n}(X) = Q_n(X) - P_n(X)
 *
 * Both sides agree mod p; they agree over Z exactly when every product
 * prod_i binom(n_i, d_i) stays below p.
 */

#include "basep.hpp"
#include "pascal.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pascalmod {

class IntPolynomial {
public:
    IntPolynomial() = default;

    /// coeffs[i] is the coefficient of X^i.
    explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPolynomial monomial(BigInt c, std::size_t degree) {
        std::vector<BigInt> v(degree + 1);
        v[degree] = std::move(c);
        return IntPolynomial(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Degree of the polynomial; -1 for the zero polynomial.
    std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }

    BigInt coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    /// Schoolbook product.
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return IntPolynomial(std::move(out));
    }

    /// In-place multiplication by (1 + X^shift).
    void mul_one_plus_power(std::size_t shift) {
        if (is_zero()) return;
        const std::size_t old = coeffs_.size();
        coeffs_.resize(old + shift);
        for (std::size_t i = old; i-- > 0;) coeffs_[i + shift] += coeffs_[i];
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const BigInt& c = coeffs_[i];
            if (c.is_zero()) continue;
            const bool neg = c < 0;
            const BigInt mag = neg ? BigInt(-c) : c;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            if (i == 0 || mag != 1) out += mag.str();
            if (i >= 1) out += "X";
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

/// P_n(X). Coefficients come from Lucas' theorem directly.
inline IntPolynomial p_poly(std::uint64_t n, Prime p) {
    std::vector<BigInt> c;
    c.reserve(n + 1);
    for (std::uint64_t j = 0; j <= n; ++j) c.emplace_back(binom_mod(n, j, p));
    return IntPolynomial(std::move(c));
}

/// Q_n(X) = prod_i (1 + X^{p^i})^{n_i}, expanded exactly.
inline IntPolynomial q_poly(std::uint64_t n, Prime p) {
    IntPolynomial q(std::vector<BigInt>{1});
    std::size_t power = 1;
    for (std::uint64_t rest = n; rest != 0; rest /= p, power *= p) {
        for (Digit e = 0; e < rest % p; ++e) q.mul_one_plus_power(power);
    }
    return q;
}

/// True iff prod_i binom(n_i, d_i) < p for every choice d_i <= n_i.
/// The maximum of a product of independent factors is the product of the
/// per-digit maxima binom(n_i, floor(n_i/2)).
inline bool digit_condition(std::uint64_t n, Prime p) {
    BigInt product = 1;
    for (std::uint64_t rest = n; rest != 0; rest /= p) {
        const std::uint64_t d = rest % p;
        BigInt central = 1;
        for (std::uint64_t i = 0; i < d / 2; ++i) central = central * (d - i) / (i + 1);
        product *= central;
        if (product >= p.value()) return false;
    }
    return true;
}

inline IntPolynomial kappa(std::uint64_t n, Prime p) { return q_poly(n, p) - p_poly(n, p); }

/// Exact Horner evaluation.
inline BigInt eval_at(const IntPolynomial& poly, const BigInt& x) {
    BigInt acc = 0;
    const auto& c = poly.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace pascalmod
