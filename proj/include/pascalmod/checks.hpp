#pragma once

/**
 * @file checks.hpp
 * @brief Property suite over every module, run at a quick or a full bound.
 */

#include "automata.hpp"
#include "basep.hpp"
#include "nim.hpp"
#include "oeis.hpp"
#include "pascal.hpp"
#include "poly.hpp"
#include "pyramid.hpp"
#include "sequences.hpp"
#include "summatory.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace pascalmod {

enum class CheckLevel { Quick, Full };

struct CheckOptions {
    CheckLevel level = CheckLevel::Quick;
    /// Replaces one multiplier of the mu table (negative control).
    bool inject_mu_fault = false;
    std::optional<std::filesystem::path> fixture_dir;
};

struct LawResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

namespace detail {

inline LawResult law(std::string name, const CheckReport& r) {
    return {std::move(name), r.ok, r.ok ? std::to_string(r.checked) + " cases" : r.failure};
}

struct Bounds {
    std::uint64_t rows;       // Pascal rows
    std::uint64_t poly;       // polynomial rows
    std::uint64_t nim;        // N_inverse round trip
    std::uint64_t gray;       // gray_link
    std::uint64_t dfa;        // automaton membership
    std::uint64_t linrep;     // linear representation
    std::uint64_t summatory;  // S_e, S_N
    std::size_t dyadic_k;     // dyadic intervals 2..k
    std::uint64_t pyramid;    // x + y + z bound
    std::uint64_t cube_cells; // sigma cubes
};

inline Bounds bounds_for(CheckLevel level) {
    if (level == CheckLevel::Full) return {512, 256, 100000, 10000, 100000, 10000, 100000, 14, 64, 1U << 21};
    return {64, 48, 1000, 1000, 1000, 1000, 1000, 8, 16, 1U << 12};
}

}  // namespace detail

/// Runs every law in a fixed order, printing one line per law.
inline std::vector<LawResult> run_checks(const CheckOptions& opt, std::ostream& out) {
    const auto B = detail::bounds_for(opt.level);
    const std::vector<Digit> primes = {2, 3, 5};
    std::vector<std::pair<std::string, std::function<LawResult()>>> laws;

    laws.emplace_back("lucas-vs-additive-rule", [&] {
        CheckReport r;
        for (Digit pv : {2U, 3U, 5U, 7U}) {
            const Prime p(pv);
            RowSweep sweep(p);
            for (std::uint64_t n = 0; n <= B.rows && r.ok; ++n) {
                const auto& row_n = n == 0 ? sweep.current() : sweep.next();
                for (std::uint64_t k = 0; k <= n; ++k) {
                    ++r.checked;
                    if (row_n.coeffs[k] != binom_mod(n, k, p)) r.fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
                }
            }
        }
        return detail::law("lucas-vs-additive-rule", r);
    });

    laws.emplace_back("t-recursion", [&] {
        CheckReport r;
        for (Digit pv : {2U, 3U, 5U, 7U}) {
            const Prime p(pv);
            for (std::uint64_t n = 0; n <= B.rows && r.ok; ++n) {
                ++r.checked;
                if (t(n, p) != t_recursive(n, p)) r.fail("p=" + std::to_string(pv) + " n=" + std::to_string(n));
            }
        }
        return detail::law("t-recursion", r);
    });

    laws.emplace_back("t-fermat-product", [&] {
        CheckReport r;
        for (std::uint64_t n = 0; n <= B.rows && r.ok; ++n) {
            ++r.checked;
            if (t(n, Prime(2)) != fermat_product(n)) r.fail("n=" + std::to_string(n));
        }
        return detail::law("t-fermat-product", r);
    });

    laws.emplace_back("t-step-multiplier", [&] {
        CheckReport r;
        for (Digit pv : {2U, 3U, 5U, 7U}) {
            const Prime p(pv);
            for (std::uint64_t n = 0; p * n + 1 <= B.rows * pv && r.ok; ++n) {
                ++r.checked;
                if (t_recursive(pv * n + 1, p) != (pv + 1) * t_recursive(pv * n, p)) {
                    r.fail("p=" + std::to_string(pv) + " n=" + std::to_string(n));
                }
            }
        }
        return detail::law("t-step-multiplier", r);
    });

    laws.emplace_back("row-concatenation", [&] {
        CheckReport r;
        for (Digit pv : {2U, 3U, 5U}) {
            const Prime p(pv);
            MuTable table = mu_table(p);
            if (opt.inject_mu_fault && pv == 3) table[2][1] = 1;  // binom(2,1) = 2 replaced by 1
            RowSweep sweep(p);
            for (std::uint64_t n = 0; n <= B.rows && r.ok; ++n) {
                const auto& expect = n == 0 ? sweep.current() : sweep.next();
                ++r.checked;
                if (row_concat(n, p, table) != expect) r.fail("p=" + std::to_string(pv) + " n=" + std::to_string(n));
            }
        }
        return detail::law("row-concatenation", r);
    });

    laws.emplace_back("tprime-product", [&] {
        CheckReport r;
        for (Digit pv : {2U, 3U, 5U}) {
            for (std::uint64_t n = 0; n <= B.rows && r.ok; ++n) {
                ++r.checked;
                if (t_prime(n, Prime(pv)) != t_prime_product(n, Prime(pv))) r.fail("n=" + std::to_string(n));
            }
        }
        return detail::law("tprime-product", r);
    });

    laws.emplace_back("growth-witness", [&] {
        CheckReport r;
        for (Digit pv : primes) {
            const auto g = growth_witness(Prime(pv), B.rows + 2 * pv);
            r.checked += g.step_comparisons + g.bound_comparisons;
            if (!g.ok) r.fail("p=" + std::to_string(pv) + ": " + g.detail);
        }
        return detail::law("growth-witness", r);
    });

    laws.emplace_back("kappa-vanishing", [&] {
        CheckReport r;
        for (Digit pv : primes) {
            for (std::uint64_t n = 0; n <= B.poly && r.ok; ++n) {
                ++r.checked;
                if (kappa(n, Prime(pv)).is_zero() != digit_condition(n, Prime(pv))) {
                    r.fail("p=" + std::to_string(pv) + " n=" + std::to_string(n));
                }
            }
        }
        return detail::law("kappa-vanishing", r);
    });

    laws.emplace_back("kappa-shift", [&] {
        CheckReport r;
        const IntPolynomial one_plus_x(std::vector<BigInt>{1, 1});
        for (Digit pv : primes) {
            for (std::uint64_t n = 0; n <= B.poly && r.ok; ++n) {
                ++r.checked;
                if (kappa(pv * n + 1, Prime(pv)) != one_plus_x * kappa(pv * n, Prime(pv))) {
                    r.fail("p=" + std::to_string(pv) + " n=" + std::to_string(n));
                }
            }
        }
        return detail::law("kappa-shift", r);
    });

    laws.emplace_back("N-inverse", [&] {
        CheckReport r;
        for (Digit pv : primes) {
            const Prime p(pv);
            for (std::uint64_t m = 0; m < B.nim && r.ok; ++m) {
                ++r.checked;
                const auto back = N_inverse<std::uint64_t>(N<std::uint64_t>(m, p), p);
                if (!back || *back != m) r.fail("p=" + std::to_string(pv) + " m=" + std::to_string(m));
            }
        }
        return detail::law("N-inverse", r);
    });

    laws.emplace_back("evil-partition", [&] {
        const auto rep = partition_check(opt.level == CheckLevel::Full ? 2056 : 512);
        return LawResult{"evil-partition", rep.ok,
                         rep.ok ? std::to_string(rep.evil_count) + " evil numbers, " + std::to_string(rep.chains.size()) +
                                      " chains"
                                : rep.failure};
    });

    laws.emplace_back("gray-link", [&] {
        CheckReport r;
        for (Digit pv : primes) {
            for (std::uint64_t m = 0; m < B.gray && r.ok; ++m) {
                ++r.checked;
                const auto [a, b] = gray_link<std::uint64_t>(m, Prime(pv));
                if (a != b) r.fail("p=" + std::to_string(pv) + " m=" + std::to_string(m));
            }
        }
        return detail::law("gray-link", r);
    });

    laws.emplace_back("pair-dfa", [&] {
        CheckReport r;
        for (Digit pv : primes) {
            const Prime p(pv);
            const Dfa d = pair_dfa_N(p);
            for (std::uint64_t m = 0; m < B.dfa && r.ok; ++m) {
                const std::uint64_t n = N<std::uint64_t>(m, p);
                ++r.checked;
                if (!accepts_pair<std::uint64_t>(d, m, n) || accepts_pair<std::uint64_t>(d, m, n + 1)) {
                    r.fail("p=" + std::to_string(pv) + " m=" + std::to_string(m));
                }
            }
        }
        return detail::law("pair-dfa", r);
    });

    laws.emplace_back("pair-dfa-composition", [&] {
        CheckReport r;
        for (Digit pv : primes) {
            ++r.checked;
            if (!equivalent(minimize(pair_dfa_N(Prime(pv))), pair_dfa_N_by_composition(Prime(pv)))) {
                r.fail("p=" + std::to_string(pv));
            }
        }
        return detail::law("pair-dfa-composition", r);
    });

    laws.emplace_back("altsum-minimal", [&] {
        CheckReport r;
        for (Digit pv : primes) {
            const Prime p(pv);
            const Dfa full = altsum_dfa(p);
            const Dfa small = minimize(full);
            if (small.state_count() != pv) r.fail("p=" + std::to_string(pv) + ": minimal size differs from p");
            for (std::uint64_t n = 0; n < B.dfa && r.ok; ++n) {
                const std::uint64_t v[1] = {n};
                ++r.checked;
                const bool in = in_Ep(n, p);
                if (accepts_values<std::uint64_t>(full, v) != in || accepts_values<std::uint64_t>(small, v) != in) {
                    r.fail("p=" + std::to_string(pv) + " n=" + std::to_string(n));
                }
            }
        }
        return detail::law("altsum-minimal", r);
    });

    laws.emplace_back("cobham-fixed-point", [&] {
        CheckReport r;
        for (Digit pv : {2U, 3U}) {
            const Prime p(pv);
            const auto m = cobham_morphism(p);
            const std::size_t len = pv == 2 ? (opt.level == CheckLevel::Full ? 1U << 14 : 1U << 10)
                                            : (opt.level == CheckLevel::Full ? 19683 : 729);
            const auto w = fixed_point_prefix(m, len);
            for (std::size_t n = 0; n < len && r.ok; ++n) {
                ++r.checked;
                if ((m.coding[w[n]] == 1) != in_Ep<std::uint64_t>(n, p)) r.fail("p=" + std::to_string(pv) + " n=" + std::to_string(n));
            }
        }
        return detail::law("cobham-fixed-point", r);
    });

    laws.emplace_back("linear-representation", [&] {
        CheckReport r;
        const auto rep = linear_rep_N();
        for (std::uint64_t m = 0; m < B.linrep && r.ok; ++m) {
            ++r.checked;
            const BigInt expect = N<std::uint64_t>(m, Prime(2));
            if (eval_linear_rep<std::uint64_t>(rep, m) != expect || eval_N_scaled<std::uint64_t>(m) != expect) {
                r.fail("m=" + std::to_string(m));
            }
        }
        return detail::law("linear-representation", r);
    });

    laws.emplace_back("S_e-closed-form", [&] {
        CheckReport r;
        BigInt acc = 0;
        for (std::uint64_t M = 0; M <= B.summatory && r.ok; ++M) {
            if (M > 0) acc += evil_nth<std::uint64_t>(M);
            ++r.checked;
            if (S_e_closed(M) != acc) r.fail("M=" + std::to_string(M));
        }
        return detail::law("S_e-closed-form", r);
    });

    laws.emplace_back("S_N-via-alpha", [&] {
        CheckReport r;
        BigInt acc = 0;
        for (std::uint64_t M = 0; M <= B.summatory && r.ok; ++M) {
            if (M > 0) acc += N<std::uint64_t>(M, Prime(2));
            ++r.checked;
            if (S_N_via_alpha(M) != acc) r.fail("M=" + std::to_string(M));
            if (M >= 2 && M % 2 == 1 && S_N_main_part(M) != acc) r.fail("nonzero residual at odd M=" + std::to_string(M));
        }
        return detail::law("S_N-via-alpha", r);
    });

    laws.emplace_back("pairing-lemma", [&] { return detail::law("pairing-lemma", lemma_tec_check(B.summatory / 10)); });

    laws.emplace_back("dyadic-maximum", [&] {
        CheckReport r;
        for (std::size_t k = 2; k <= B.dyadic_k; ++k) {
            ++r.checked;
            if (!dyadic_report(k).ok()) r.fail("k=" + std::to_string(k));
        }
        return detail::law("dyadic-maximum", r);
    });

    laws.emplace_back("pyramid-block-relation", [&] {
        CheckReport r;
        for (Digit pv : primes) {
            const Prime p(pv);
            for (std::uint64_t X = 0; X <= B.pyramid && r.ok; ++X) {
                for (std::uint64_t Y = 0; X + Y <= B.pyramid; ++Y) {
                    for (std::uint64_t Z = 0; X + Y + Z <= B.pyramid; ++Z) {
                        ++r.checked;
                        const Digit lhs = trinomial_mod(X + Y + Z, X, Y, Z, p);
                        const Digit rhs = block_relation(X / pv, Y / pv, Z / pv, X % pv, Y % pv, Z % pv, p);
                        if (lhs != rhs) r.fail("p=" + std::to_string(pv));
                    }
                }
            }
        }
        return detail::law("pyramid-block-relation", r);
    });

    laws.emplace_back("sigma-iteration", [&] {
        CheckReport r;
        for (Digit pv : primes) {
            const Prime p(pv);
            std::size_t k = 0;
            std::uint64_t cells = 1;
            while (cells * pv * pv * pv <= B.cube_cells) {
                cells *= std::uint64_t{pv} * pv * pv;
                ++k;
            }
            const auto cube = iterate_sigma(p, k);
            for (std::size_t z = 0; z < cube.side && r.ok; ++z) {
                for (std::size_t y = 0; y < cube.side; ++y) {
                    for (std::size_t x = 0; x < cube.side; ++x) {
                        ++r.checked;
                        if (cube.at(x, y, z) != trinomial_mod(x + y + z, x, y, z, p)) r.fail("p=" + std::to_string(pv));
                    }
                }
            }
        }
        return detail::law("sigma-iteration", r);
    });

    laws.emplace_back("pascal-rule-3d", [&] {
        CheckReport r;
        for (Digit pv : primes) {
            const auto one = pascal_rule_3d_check(opt.level == CheckLevel::Full ? 32 : 12, Prime(pv));
            r.checked += one.checked;
            if (!one.ok) r.fail(one.failure);
        }
        return detail::law("pascal-rule-3d", r);
    });

    laws.emplace_back("nim-recurrence-2d",
                      [&] { return detail::law("nim-recurrence-2d", nim_recurrence_2d_check(B.pyramid)); });

    laws.emplace_back("pyramid-diagonal", [&] {
        CheckReport r;
        for (Digit pv : primes) {
            for (std::uint64_t n = 0; n <= B.pyramid && r.ok; ++n) {
                ++r.checked;
                if (t_pyramid(n, n, Prime(pv)) != t(n, Prime(pv))) r.fail("p=" + std::to_string(pv) + " n=" + std::to_string(n));
            }
        }
        return detail::law("pyramid-diagonal", r);
    });

    laws.emplace_back("translation-identity", [&] {
        CheckReport r;
        for (Axis src : {Axis::X, Axis::Y, Axis::Z}) {
            for (Axis dst : {Axis::X, Axis::Y, Axis::Z}) {
                if (src == dst) continue;
                const auto rep = translation_identity_check(23, 1, Prime(5), src, dst);
                r.checked += rep.cells.size();
                if (!rep.ok) r.fail(rep.failure);
            }
        }
        return detail::law("translation-identity", r);
    });

    if (opt.fixture_dir) {
        laws.emplace_back("oeis-fixtures", [&] {
            CheckReport r;
            const oeis::Source src{opt.fixture_dir, std::nullopt, {}};
            for (const auto& b : oeis_bindings) {
                try {
                    const auto file = src.load(std::string(b.id));
                    SequenceDescriptor d{std::string(b.sequence), Prime(b.p)};
                    const std::size_t want = b.max_terms ? std::min(b.max_terms, file.entries.size()) : file.entries.size();
                    const auto cmp = oeis::compare(file, emit_sequence(d, want), sequence_offset(d));
                    r.checked += cmp.compared;
                    if (!cmp.match) r.fail(cmp.message);
                } catch (const std::exception& e) {
                    r.fail(e.what());
                }
            }
            return detail::law("oeis-fixtures", r);
        });
    }

    std::vector<LawResult> results;
    for (auto& [name, fn] : laws) {
        const auto t0 = std::chrono::steady_clock::now();
        LawResult res;
        try {
            res = fn();
        } catch (const std::exception& e) {
            res = {name, false, std::string("exception: ") + e.what()};
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        out << (res.ok ? "PASS " : "FAIL ") << res.name << " (" << res.detail << ", " << ms << " ms)\n";
        out.flush();
        results.push_back(std::move(res));
    }
    return results;
}

inline bool all_passed(const std::vector<LawResult>& rs) {
    for (const auto& r : rs) {
        if (!r.ok) return false;
    }
    return true;
}

}  // namespace pascalmod
