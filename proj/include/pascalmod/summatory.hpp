#pragma once

/**
 * @file summatory.hpp
 * @brief Summatory functions of the evil numbers and of N = N_2.
 *
 *   S_e(M) = e(1) + ... + e(M)      S_N(M) = N(1) + ... + N(M)
 *
 * On [2^k, 2^{k+1}) the difference S_N - S_e is driven by the Gray-code
 * permutation alpha:
 *   S_N(M) = S_e(M) + 2 sum_{j=2^k}^M alpha(j) - (M - 2^k + 1)(2^k + M) + R,
 * where R = 0 for odd M and R is the single unpaired term otherwise.
 */

#include "basep.hpp"
#include "nim.hpp"
#include "report.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace pascalmod {

inline std::size_t floor_log2(std::uint64_t m) {
    std::size_t k = 0;
    while (m >>= 1U) ++k;
    return k;
}

/// Closed form for sum_{i=1}^M e(i).
inline BigInt S_e_closed(std::uint64_t M) {
    const std::uint64_t r = M % 2;
    const std::uint64_t s = digit_sum<std::uint64_t>(M / 2, Prime(2)) % 2;
    BigInt v = BigInt(M) * (M + 1);
    v += M / 2;
    v -= r * (r + 1) / 2;
    v += s * (r + 1);
    if (r > s) v += 2 * (r - s);
    return v;
}

inline BigInt S_N_brute(std::uint64_t M, Prime p) {
    BigInt acc = 0;
    for (std::uint64_t i = 1; i <= M; ++i) acc += N<BigInt>(BigInt(i), p);
    return acc;
}

/// sum_{j=2^k}^{2^k+ell} alpha(j), by halving the interval: pairs (2j, 2j+1)
/// contribute 4 alpha(j) + 1 and a trailing even index contributes alone.
inline BigInt alpha_range_sum(std::size_t k, std::uint64_t ell) {
    if (k < 1 || k > 62) throw std::domain_error("alpha_range_sum: k out of range");
    const std::uint64_t base = std::uint64_t{1} << k;
    if (ell >= base) throw std::domain_error("alpha_range_sum: ell must be < 2^k");
    const Prime two(2);
    const std::uint64_t M = base + ell;
    if (k == 1) {
        BigInt acc = 0;
        for (std::uint64_t j = base; j <= M; ++j) acc += alpha<std::uint64_t>(j, two);
        return acc;
    }
    BigInt acc = 0;
    if (ell >= 1) {
        const std::uint64_t half = (ell - 1) / 2;
        acc += 4 * alpha_range_sum(k - 1, half);
        acc += half + 1;
    }
    if ((ell + 1) % 2 == 1) acc += alpha<std::uint64_t>(M, two);
    return acc;
}

/// Term j of the decomposition: N(j) - e(j) - 2(alpha(j) - j).
inline std::int64_t unpaired_term(std::uint64_t j) {
    const Prime two(2);
    return static_cast<std::int64_t>(N<std::uint64_t>(j, two)) - static_cast<std::int64_t>(evil_nth<std::uint64_t>(j)) -
           2 * (static_cast<std::int64_t>(alpha<std::uint64_t>(j, two)) - static_cast<std::int64_t>(j));
}

/// S_e(M) + 2 sum alpha - (M - 2^k + 1)(2^k + M), without R. Needs M >= 2.
inline BigInt S_N_main_part(std::uint64_t M) {
    if (M < 2) throw std::domain_error("S_N_main_part: M must be >= 2");
    const std::size_t k = floor_log2(M);
    const std::uint64_t base = std::uint64_t{1} << k;
    return S_e_closed(M) + 2 * alpha_range_sum(k, M - base) - BigInt(M - base + 1) * (base + M);
}

/// The residual R: zero for odd M, the unpaired last term for even M.
inline std::int64_t S_N_residual(std::uint64_t M) { return M % 2 == 1 ? 0 : unpaired_term(M); }

inline BigInt S_N_via_alpha(std::uint64_t M) {
    if (M == 0) return 0;
    if (M == 1) return 3;
    return S_N_main_part(M) + S_N_residual(M);
}

/// -2M^2 + 6 * 2^k M - 4 * 2^{2k}.
inline BigInt parabola(std::size_t k, std::uint64_t M) {
    const BigInt two_k = BigInt(1) << k;
    const BigInt m = M;
    return -2 * m * m + 6 * two_k * m - 4 * two_k * two_k;
}

struct DyadicSample {
    std::uint64_t M;
    BigInt difference;
    BigInt parabola;
};

struct DyadicIntervalReport {
    std::size_t k = 0;
    BigInt max_difference;
    std::uint64_t argmax = 0;
    BigInt closed_form_max;  // S_e(2^{k+1}-1) - 2 S_e(2^k+2^{k-1}-1) + S_e(2^k-1)
    bool argmax_ok = false;
    bool max_ok = false;
    bool endpoints_zero = false;
    std::vector<DyadicSample> parabola_samples;

    bool ok() const { return argmax_ok && max_ok && endpoints_zero; }
};

/// Sweeps S_N - S_e over [2^k, 2^{k+1}); every M is sampled up to k = 14,
/// above that one sample in 2^{k-14}.
inline DyadicIntervalReport dyadic_report(std::size_t k) {
    if (k < 2 || k > 40) throw std::domain_error("dyadic_report: k must lie in [2, 40]");
    DyadicIntervalReport rep;
    rep.k = k;
    const std::uint64_t lo = std::uint64_t{1} << k;
    const std::uint64_t hi = lo << 1U;
    const std::uint64_t stride = k <= 14 ? 1 : std::uint64_t{1} << (k - 14);
    const Prime two(2);

    // S_N(2^k - 1) = S_e(2^k - 1) is checked at the lower endpoint.
    const BigInt start_gap = S_N_via_alpha(lo - 1) - S_e_closed(lo - 1);
    BigInt diff = start_gap;
    bool have_max = false;
    for (std::uint64_t M = lo; M < hi; ++M) {
        diff += BigInt(N<std::uint64_t>(M, two)) - BigInt(evil_nth<std::uint64_t>(M));
        if (!have_max || diff > rep.max_difference) {
            rep.max_difference = diff;
            rep.argmax = M;
            have_max = true;
        }
        if ((M - lo) % stride == 0 || M == hi - 1) rep.parabola_samples.push_back({M, diff, parabola(k, M)});
    }
    const std::uint64_t mid = lo + lo / 2 - 1;
    rep.closed_form_max = S_e_closed(hi - 1) - 2 * S_e_closed(mid) + S_e_closed(lo - 1);
    rep.argmax_ok = rep.argmax == mid;
    rep.max_ok = rep.max_difference == rep.closed_form_max;
    rep.endpoints_zero = start_gap == 0 && diff == 0;
    return rep;
}

inline std::string dyadic_csv(const DyadicIntervalReport& rep) {
    std::ostringstream os;
    os << "M,diff,parabola\n";
    for (const auto& s : rep.parabola_samples) os << s.M << ',' << s.difference << ',' << s.parabola << '\n';
    return os.str();
}

/// Both parts of the pairing lemma for 1 <= j <= limit: each term lies in
/// {-1, 0, 1}, consecutive terms 2j, 2j+1 cancel, and
/// N(2j) = 2 alpha(2j), N(2j+1) = 2 alpha(2j+1) + 1.
inline CheckReport lemma_tec_check(std::uint64_t limit) {
    CheckReport rep;
    const Prime two(2);
    for (std::uint64_t j = 1; j <= limit; ++j) {
        const std::int64_t d = unpaired_term(j);
        ++rep.checked;
        if (d < -1 || d > 1) rep.fail("term out of {-1,0,1} at j = " + std::to_string(j));
        const std::uint64_t a = 2 * j;
        const std::uint64_t b = 2 * j + 1;
        if (unpaired_term(a) + unpaired_term(b) != 0) rep.fail("pair does not cancel at j = " + std::to_string(j));
        if (N<std::uint64_t>(a, two) != 2 * alpha<std::uint64_t>(a, two) ||
            N<std::uint64_t>(b, two) != 2 * alpha<std::uint64_t>(b, two) + 1) {
            rep.fail("N versus 2 alpha fails at j = " + std::to_string(j));
        }
        if (!rep.ok) break;
    }
    return rep;
}

}  // namespace pascalmod
