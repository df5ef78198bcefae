#pragma once

/**
 * @file nim.hpp
 * @brief The map N_p(m) = m (+)_p p m, its image E_p, and the Gray-code
 *        permutation alpha_p(m) = m (+)_p floor(m/p).
 *
 * For p = 2 the image of N is the set of evil numbers and iterating N from
 * the odious numbers partitions it into disjoint chains.
 */

#include "basep.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pascalmod {

template <DigitInteger Int>
Int N(const Int& m, Prime p) {
    return nim_add<Int>(m, m * p.value(), p);
}

/// The unique m with N_p(m) = e, or nothing when e lies outside E_p.
/// Digit sweep from the low end: m_0 = e_0, m_i = (e_i - m_{i-1}) mod p.
template <DigitInteger Int>
std::optional<Int> N_inverse(Int e, Prime p) {
    if (alt_digit_sum(e, p) != 0) return std::nullopt;
    Int m = 0;
    Int weight = 1;
    Digit prev = 0;
    while (!is_zero(e)) {
        const Digit ed = small_mod(e, p);
        e /= p.value();
        const Digit md = (ed + p - prev) % p;
        if (is_zero(e)) {
            // Top digit of e must be produced by the carry-free shift alone.
            if (md != 0) return std::nullopt;
            break;
        }
        if (md != 0) m += weight * md;
        weight *= p.value();
        prev = md;
    }
    return m;
}

template <DigitInteger Int>
bool is_evil(const Int& n) {
    return digit_sum(n, Prime(2)) % 2 == 0;
}

template <DigitInteger Int>
bool is_odious(const Int& n) {
    return !is_evil(n);
}

/// Membership in E_p: the alternating digit sum vanishes mod p.
template <DigitInteger Int>
bool in_Ep(const Int& n, Prime p) {
    return alt_digit_sum(n, p) == 0;
}

/// The m-th element of E_p in increasing order: rep_p(m) followed by the
/// unique digit that cancels the alternating sum.
template <DigitInteger Int>
Int Ep_nth(const Int& m, Prime p) {
    return m * p.value() + alt_digit_sum(m, p);
}

/// The m-th evil number, e(0) = 0.
template <DigitInteger Int>
Int evil_nth(const Int& m) {
    return Ep_nth(m, Prime(2));
}

template <DigitInteger Int>
Int alpha(const Int& m, Prime p) {
    return nim_add<Int>(m, m / p.value(), p);
}

/// (E_p(alpha_p(m)), N_p(m)); both components agree.
template <DigitInteger Int>
std::pair<Int, Int> gray_link(const Int& m, Prime p) {
    return {Ep_nth(alpha(m, p), p), N(m, p)};
}

template <DigitInteger Int>
struct ChainRecord {
    Int root;
    std::vector<Int> iterates;  // N^1(root), ..., N^m(root)
};

template <DigitInteger Int>
ChainRecord<Int> sub_chain(const Int& i, std::size_t m, Prime p) {
    if (is_zero(i)) throw std::domain_error("sub_chain: root must be >= 1");
    ChainRecord<Int> rec{i, {}};
    rec.iterates.reserve(m);
    Int x = i;
    for (std::size_t j = 0; j < m; ++j) {
        x = N(x, p);
        rec.iterates.push_back(x);
    }
    return rec;
}

/// Walks N^{-1} back from an evil e until an odious number is reached.
/// Returns (root, depth) with N^depth(root) = e.
template <DigitInteger Int>
std::pair<Int, std::size_t> odious_root(Int e) {
    if (is_zero(e) || is_odious(e)) throw std::domain_error("odious_root: argument must be a positive evil number");
    const Prime two(2);
    std::size_t depth = 0;
    while (is_evil(e) && !is_zero(e)) {
        auto prev = N_inverse(e, two);
        if (!prev) throw std::logic_error("odious_root: evil number without preimage");
        e = *prev;
        ++depth;
    }
    return {e, depth};
}

struct PartitionReport {
    bool ok = true;
    std::string failure;
    std::uint64_t evil_count = 0;
    /// Odious root -> members N^1(root), N^2(root), ... up to the limit.
    std::map<std::uint64_t, std::vector<std::uint64_t>> chains;
};

/// Checks on [1, limit] that the image of N is the set of evil numbers and
/// that the chains grown from odious roots cover it without overlap, with
/// odious_root agreeing on every member.
inline PartitionReport partition_check(std::uint64_t limit) {
    PartitionReport rep;
    const Prime two(2);

    std::set<std::uint64_t> image;
    for (std::uint64_t m = 1; m <= limit; ++m) {
        const std::uint64_t v = N<std::uint64_t>(m, two);
        if (v <= limit) image.insert(v);
    }
    std::set<std::uint64_t> evil;
    for (std::uint64_t e = 1; e <= limit; ++e) {
        if (is_evil(e)) evil.insert(e);
    }
    rep.evil_count = evil.size();
    if (image != evil) {
        rep.ok = false;
        rep.failure = "image of N differs from the evil numbers";
        return rep;
    }

    std::map<std::uint64_t, std::uint64_t> owner;
    for (std::uint64_t root = 1; root <= limit; ++root) {
        if (!is_odious(root)) continue;
        auto& members = rep.chains[root];
        for (std::uint64_t x = N<std::uint64_t>(root, two); x <= limit; x = N<std::uint64_t>(x, two)) {
            if (!owner.emplace(x, root).second) {
                rep.ok = false;
                rep.failure = std::to_string(x) + " lies on two chains";
                return rep;
            }
            members.push_back(x);
        }
        if (members.empty()) rep.chains.erase(root);
    }
    if (owner.size() != evil.size()) {
        rep.ok = false;
        rep.failure = "chains do not cover every evil number";
        return rep;
    }
    for (const auto& [e, root] : owner) {
        if (odious_root<std::uint64_t>(e).first != root) {
            rep.ok = false;
            rep.failure = "odious_root disagrees with the forward chain for " + std::to_string(e);
            return rep;
        }
    }
    return rep;
}

}  // namespace pascalmod
