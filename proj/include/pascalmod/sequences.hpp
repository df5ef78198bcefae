#pragma once

/**
 * @file sequences.hpp
 * @brief Named integer sequences and their OEIS cross-references.
 */

#include "basep.hpp"
#include "nim.hpp"
#include "pascal.hpp"
#include "poly.hpp"
#include "pyramid.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pascalmod {

inline constexpr std::array<std::string_view, 11> sequence_names = {
    "t", "tprime", "N", "alpha", "evil", "Ep", "sub", "fermat-product", "fermat-prime", "poly-eval", "t-pyramid"};

struct SequenceDescriptor {
    std::string name;
    Prime p{2};
    std::uint64_t root = 1;  // sub: chain root i
    BigInt x = 3;            // poly-eval: evaluation point
    std::uint64_t line = 0;  // t-pyramid: line k, terms run over planes n >= k
};

/// Index of the first term.
inline std::int64_t sequence_offset(const SequenceDescriptor& d) {
    if (d.name == "evil" || d.name == "sub") return 1;
    if (d.name == "t-pyramid") return static_cast<std::int64_t>(d.line);
    return 0;
}

/// Fermat numbers known to be prime.
inline constexpr std::size_t known_fermat_primes = 5;

inline std::vector<BigInt> emit_sequence(const SequenceDescriptor& d, std::size_t count) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    if (std::find(sequence_names.begin(), sequence_names.end(), d.name) == sequence_names.end()) {
        throw std::invalid_argument("unknown sequence: " + d.name);
    }
    const Prime p = d.p;
    std::vector<BigInt> out;
    out.reserve(count);

    if (d.name == "t" || d.name == "tprime") {
        RowSweep sweep(p);
        for (std::size_t n = 0; n < count; ++n) {
            const auto& r = n == 0 ? sweep.current() : sweep.next();
            if (d.name == "t") {
                out.push_back(row_value(r));
            } else {
                BigInt acc = 0;
                for (auto it = r.coeffs.rbegin(); it != r.coeffs.rend(); ++it) acc = 2 * acc + (*it != 0 ? 1 : 0);
                out.push_back(acc);
            }
        }
    } else if (d.name == "N") {
        for (std::size_t m = 0; m < count; ++m) out.push_back(N<BigInt>(BigInt(m), p));
    } else if (d.name == "alpha") {
        for (std::size_t m = 0; m < count; ++m) out.push_back(alpha<BigInt>(BigInt(m), p));
    } else if (d.name == "evil") {
        for (std::size_t m = 0; m < count; ++m) out.push_back(evil_nth<BigInt>(BigInt(m)));
    } else if (d.name == "Ep") {
        for (std::size_t m = 0; m < count; ++m) out.push_back(Ep_nth<BigInt>(BigInt(m), p));
    } else if (d.name == "sub") {
        if (d.root == 0) throw std::invalid_argument("sub: root must be >= 1");
        for (const auto& v : sub_chain<BigInt>(BigInt(d.root), count, p).iterates) out.push_back(v);
    } else if (d.name == "fermat-product") {
        for (std::size_t n = 0; n < count; ++n) out.push_back(fermat_product(n));
    } else if (d.name == "fermat-prime") {
        if (count > known_fermat_primes) {
            throw std::invalid_argument("fermat-prime: only " + std::to_string(known_fermat_primes) + " terms are known");
        }
        for (std::size_t j = 0; j < count; ++j) out.push_back(fermat_number(j));
    } else if (d.name == "poly-eval") {
        for (std::size_t n = 0; n < count; ++n) out.push_back(eval_at(p_poly(n, p), d.x));
    } else {  // t-pyramid
        for (std::size_t i = 0; i < count; ++i) out.push_back(t_pyramid(d.line + i, d.line, p));
    }
    return out;
}

struct OeisBinding {
    std::string_view id;
    std::string_view sequence;
    Digit p;
    std::int64_t offset;
    std::size_t max_terms;  // 0: unbounded
};

/// The cited entries and the sequences that reproduce them.
inline constexpr std::array<OeisBinding, 8> oeis_bindings = {{
    {"A001317", "t", 2, 0, 0},
    {"A001969", "evil", 2, 1, 0},
    {"A003188", "alpha", 2, 0, 0},
    {"A019434", "fermat-prime", 2, 0, known_fermat_primes},
    {"A048724", "N", 2, 0, 0},
    {"A071770", "alpha", 3, 0, 0},
    {"A173019", "t", 3, 0, 0},
    {"A242399", "N", 3, 0, 0},
}};

inline std::optional<OeisBinding> find_binding(std::string_view id) {
    for (const auto& b : oeis_bindings) {
        if (b.id == id) return b;
    }
    return std::nullopt;
}

}  // namespace pascalmod
