#pragma once

/**
 * @file pascal.hpp
 * @brief Pascal's triangle modulo a prime and the integers t_{p,n}.
 *
 * t_{p,n} is the integer whose base-p digits (least significant first) are
 * the residues binom(n,i) mod p, i = 0..n. Three independent routes are
 * provided: direct evaluation of the row, the leading-digit recursion
 * t_{p, n_k p^k + s} = sum_m p^{m p^k} val(mu_{n_k,m}(rep t_{p,s})), and
 * (for p = 2) the product of Fermat numbers over the set bits of n.
 */

#include "basep.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pascalmod {

/// binom(n,k) mod p by Lucas' theorem; zero when k > n.
template <DigitInteger Int>
Digit binom_mod(Int n, Int k, Prime p) {
    Digit acc = 1;
    while (!is_zero(k)) {
        const Digit nd = small_mod(n, p);
        const Digit kd = small_mod(k, p);
        if (kd > nd) return 0;
        acc = mul_mod(acc, digit_binom(nd, kd, p), p);
        n /= p.value();
        k /= p.value();
    }
    return acc;
}

inline Digit binom_mod(std::uint64_t n, std::uint64_t k, Prime p) {
    return binom_mod<std::uint64_t>(n, k, p);
}

/// Row n of Pascal's triangle mod p; coeffs[i] = binom(n,i) mod p.
struct ResidueRow {
    std::uint64_t n = 0;
    Prime p{2};
    std::vector<Digit> coeffs;

    /// The word P_n (digit i = coeffs[i]); coincides with rep_p(t_{p,n}).
    DigitWord word() const { return DigitWord(coeffs, p); }

    /// Q_n: the row padded with trailing zeros up to `length` letters.
    DigitWord padded(std::size_t length) const {
        auto d = coeffs;
        if (d.size() < length) d.resize(length, 0);
        return DigitWord(std::move(d), p);
    }

    friend bool operator==(const ResidueRow&, const ResidueRow&) = default;
};

/// Steps through successive rows with the additive rule mod p, keeping a
/// single buffer.
class RowSweep {
public:
    explicit RowSweep(Prime p) : p_(p), row_{0, p, {1}} {}

    const ResidueRow& current() const noexcept { return row_; }

    const ResidueRow& next() {
        auto& c = row_.coeffs;
        c.push_back(1);
        for (std::size_t i = c.size() - 2; i >= 1; --i) {
            c[i] = (c[i] + c[i - 1]) % p_;
        }
        ++row_.n;
        return row_;
    }

    const ResidueRow& advance_to(std::uint64_t n) {
        if (n < row_.n) *this = RowSweep(p_);
        while (row_.n < n) next();
        return row_;
    }

private:
    Prime p_;
    ResidueRow row_;
};

inline ResidueRow row(std::uint64_t n, Prime p) {
    RowSweep sweep(p);
    return sweep.advance_to(n);
}

/// p-evaluation of a row.
inline BigInt row_value(const ResidueRow& r) { return val<BigInt>(r.word()); }

inline BigInt t(std::uint64_t n, Prime p) { return row_value(row(n, p)); }

/// Leading-digit decomposition n = lead * p^k + rest with 0 < lead < p.
struct LeadingSplit {
    std::uint64_t power = 1;  // p^k
    std::size_t k = 0;
    Digit lead = 0;
    std::uint64_t rest = 0;
};

inline LeadingSplit leading_split(std::uint64_t n, Prime p) {
    LeadingSplit s;
    if (n == 0) return s;
    while (n / s.power >= p) {
        s.power *= p;
        ++s.k;
    }
    s.lead = static_cast<Digit>(n / s.power);
    s.rest = n % s.power;
    return s;
}

namespace detail {
inline std::map<std::pair<Digit, std::uint64_t>, BigInt>& t_memo() {
    thread_local std::map<std::pair<Digit, std::uint64_t>, BigInt> memo;
    return memo;
}
}  // namespace detail

/// t_{p,n} through the leading-digit recursion. Memoized per thread.
inline BigInt t_recursive(std::uint64_t n, Prime p) {
    if (n == 0) return 1;
    auto& memo = detail::t_memo();
    const auto key = std::make_pair(p.value(), n);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const auto split = leading_split(n, p);
    const DigitWord tail = rep(t_recursive(split.rest, p), p);
    BigInt result = 0;
    for (Digit m = 0; m <= split.lead; ++m) {
        const BigInt block = val<BigInt>(mu_apply(split.lead, m, tail));
        result += block * pow_big(p, static_cast<std::uint64_t>(m) * split.power);
    }
    memo.emplace(key, result);
    return result;
}

/// table[a][b] = binom(a, b) mod p for 0 <= b <= a < p.
using MuTable = std::vector<std::vector<Digit>>;

inline MuTable mu_table(Prime p) {
    MuTable t(p);
    for (Digit a = 0; a < p; ++a) {
        for (Digit b = 0; b <= a; ++b) t[a].push_back(mu_multiplier(a, b, p));
    }
    return t;
}

/// P_n assembled from permuted copies of P_s separated by zero blocks, the
/// permutations taken from `table`.
inline ResidueRow row_concat(std::uint64_t n, Prime p, const MuTable& table) {
    if (n == 0) return ResidueRow{0, p, {1}};
    const auto split = leading_split(n, p);
    const ResidueRow tail = row_concat(split.rest, p, table);

    ResidueRow out{n, p, {}};
    out.coeffs.reserve(n + 1);
    for (Digit m = 0; m <= split.lead; ++m) {
        const Digit c = table.at(split.lead).at(m);
        for (Digit d : tail.coeffs) out.coeffs.push_back(mul_mod(d, c, p));
        if (m < split.lead) {
            out.coeffs.insert(out.coeffs.end(), split.power - split.rest - 1, Digit{0});
        }
    }
    return out;
}

inline ResidueRow row_concat(std::uint64_t n, Prime p) { return row_concat(n, p, mu_table(p)); }

/// F_j = 2^{2^j} + 1, cached per thread.
inline const BigInt& fermat_number(std::size_t j) {
    thread_local std::vector<BigInt> cache;
    while (cache.size() <= j) {
        const std::size_t i = cache.size();
        cache.push_back((BigInt(1) << (std::size_t{1} << i)) + 1);
    }
    return cache[j];
}

/// Product of F_j over the set bits j of n (empty product 1).
inline BigInt fermat_product(std::uint64_t n) {
    BigInt acc = 1;
    for (std::size_t j = 0; n != 0; ++j, n >>= 1U) {
        if (n & 1U) acc *= fermat_number(j);
    }
    return acc;
}

/// sum_i sgn(binom(n,i) mod p) 2^i.
inline BigInt t_prime(std::uint64_t n, Prime p) {
    const auto r = row(n, p);
    BigInt acc = 0;
    for (auto it = r.coeffs.rbegin(); it != r.coeffs.rend(); ++it) {
        acc <<= 1;
        if (*it != 0) acc += 1;
    }
    return acc;
}

/// t'_{p,n} = t'_{p,s} * sum_{m=0}^{n_k} 2^{m p^k}.
inline BigInt t_prime_product(std::uint64_t n, Prime p) {
    if (n == 0) return 1;
    const auto split = leading_split(n, p);
    BigInt factor = 0;
    for (Digit m = 0; m <= split.lead; ++m) {
        factor += BigInt(1) << static_cast<std::size_t>(m * split.power);
    }
    return t_prime_product(split.rest, p) * factor;
}

struct GrowthReport {
    bool ok = true;
    std::uint64_t step_comparisons = 0;   // t(n+2p) vs (p+1)^2 t(n)
    std::uint64_t bound_comparisons = 0;  // t(n) vs (p+1)^floor(n/p)
    std::optional<std::uint64_t> first_violation;
    std::string detail;
};

/// Checks t_{p,n+2p} >= (p+1)^2 t_{p,n} and t_{p,n} >= (p+1)^{floor(n/p)}
/// for all n <= n_max (the first family only while n + 2p <= n_max).
inline GrowthReport growth_witness(Prime p, std::uint64_t n_max) {
    GrowthReport report;
    std::vector<BigInt> values;
    values.reserve(n_max + 1);
    RowSweep sweep(p);
    values.push_back(row_value(sweep.current()));
    for (std::uint64_t n = 1; n <= n_max; ++n) values.push_back(row_value(sweep.next()));

    const BigInt step = BigInt(p.value() + 1) * (p.value() + 1);
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        if (n + 2 * p.value() <= n_max) {
            ++report.step_comparisons;
            if (values[n + 2 * p.value()] < step * values[n]) {
                report.ok = false;
                report.first_violation = n;
                report.detail = "t(n+2p) < (p+1)^2 t(n)";
                return report;
            }
        }
        ++report.bound_comparisons;
        if (values[n] < pow_big(p.value() + 1, n / p.value())) {
            report.ok = false;
            report.first_violation = n;
            report.detail = "t(n) < (p+1)^floor(n/p)";
            return report;
        }
    }
    return report;
}

}  // namespace pascalmod
