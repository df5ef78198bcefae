#include <pascalmod/automata.hpp>

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace pascalmod;

namespace {
template <class... V>
bool accepts(const Dfa& d, V... values) {
    const std::uint64_t v[] = {static_cast<std::uint64_t>(values)...};
    return accepts_values<std::uint64_t>(d, std::span<const std::uint64_t>(v, sizeof...(V)));
}

/// Pairwise distinguishability: no two states of `d` accept the same language.
bool all_states_distinct(const Dfa& d) {
    for (State s = 0; s < d.state_count(); ++s) {
        for (State t = s + 1; t < d.state_count(); ++t) {
            Dfa a = d;
            Dfa b = d;
            a.set_initial(s);
            b.set_initial(t);
            if (equivalent(a, b)) return false;
        }
    }
    return true;
}
}  // namespace

TEST(PadPair, Examples) {
    EXPECT_EQ(pad_pair<std::uint64_t>(1, 3, Prime(2)).to_string(), "(01,11)");
    EXPECT_EQ(pad_pair<std::uint64_t>(4, 12, Prime(2)).to_string(), "(0100,1100)");
    EXPECT_EQ(pad_pair<std::uint64_t>(0, 0, Prime(2)).length(), 0U);
}

TEST(PairDfa, BinaryMachine) {
    const Dfa d = pair_dfa_N(Prime(2));
    const auto path = d.trace(encode_word(d, pad_pair<std::uint64_t>(4, 12, Prime(2))));
    EXPECT_EQ(path, (std::vector<State>{0, 1, 0, 0, 0}));
    EXPECT_TRUE(accepts(d, 5, 15));
    EXPECT_FALSE(accepts(d, 1, 1));
    for (auto [m, n] : std::vector<std::pair<int, int>>{{0, 0}, {1, 3}, {2, 6}, {3, 5}, {4, 12}, {5, 15}}) {
        EXPECT_TRUE(accepts(d, m, n));
    }

    // Minimal form: two live states, 0 -(0/0)-> 0, 0 -(0/1)-> 1, 1 -(1/0)-> 1, 1 -(1/1)-> 0.
    const Dfa m = minimize(d);
    EXPECT_EQ(m.live_state_count(), 2U);
    auto sym = [&](Digit a, Digit b) {
        const Digit t[2] = {a, b};
        return m.encode(t);
    };
    EXPECT_EQ(m.next(0, sym(0, 0)), 0U);
    const State one = m.next(0, sym(0, 1));
    EXPECT_NE(one, 0U);
    EXPECT_EQ(m.next(one, sym(1, 0)), one);
    EXPECT_EQ(m.next(one, sym(1, 1)), 0U);
    EXPECT_TRUE(m.accepting(0));
    EXPECT_FALSE(m.accepting(one));
}

TEST(PairDfa, MembershipForSeveralPrimes) {
    for (unsigned p : {2U, 3U, 5U}) {
        const Dfa d = pair_dfa_N(Prime(p));
        for (std::uint64_t m = 0; m < 5000; ++m) {
            const std::uint64_t n = oracle::N(m, p);
            ASSERT_TRUE(accepts(d, m, n));
            ASSERT_FALSE(accepts(d, m, n + 1));
        }
        EXPECT_TRUE(is_functional(d));
    }
}

TEST(AffineDfa, CarryAutomaton) {
    const Dfa id = affine_dfa(1, 0, Prime(3));
    for (std::uint64_t x = 0; x < 60; ++x) {
        for (std::uint64_t y = 0; y < 60; ++y) ASSERT_EQ(accepts(id, x, y), x == y);
    }
    const Dfa twice = affine_dfa(2, 0, Prime(2));
    for (std::uint64_t m = 0; m < 1000; ++m) {
        ASSERT_TRUE(accepts(twice, m, 2 * m));
        ASSERT_FALSE(accepts(twice, m, 2 * m + 1));
    }
    const Dfa aff = affine_dfa(3, 1, Prime(3));
    EXPECT_TRUE(accepts(aff, 5, 16));
    EXPECT_FALSE(accepts(aff, 5, 15));
    EXPECT_EQ(aff.direction(), ReadDirection::LsdFirst);
    for (std::uint64_t m = 0; m < 300; ++m) {
        for (std::uint64_t y = 0; y < 950; y += 1) ASSERT_EQ(accepts(aff, m, y), y == 3 * m + 1);
    }
}

TEST(NimTriple, Acceptance) {
    const Dfa d = nim_triple_dfa(Prime(2));
    EXPECT_TRUE(accepts(d, 5, 12, 9));
    EXPECT_FALSE(accepts(d, 1, 1, 1));
    for (std::uint64_t m = 0; m < 100; ++m) EXPECT_TRUE(accepts(d, m, 0, m));
    const Dfa d5 = nim_triple_dfa(Prime(5));
    for (std::uint64_t a = 0; a < 40; ++a) {
        for (std::uint64_t b = 0; b < 40; ++b) {
            for (std::uint64_t c = 0; c < 60; ++c) ASSERT_EQ(accepts(d5, a, b, c), c == oracle::nim_sum(a, b, 5));
        }
    }
}

TEST(Composition, ReproducesPairMachine) {
    for (unsigned p : {2U, 3U, 5U}) {
        const Dfa composed = pair_dfa_N_by_composition(Prime(p));
        EXPECT_TRUE(equivalent(composed, minimize(pair_dfa_N(Prime(p)))));
        EXPECT_TRUE(isomorphic(composed, pair_dfa_N(Prime(p))));
        for (std::uint64_t m = 0; m < 2000; ++m) {
            ASSERT_TRUE(accepts(composed, m, oracle::N(m, p)));
            ASSERT_FALSE(accepts(composed, m, oracle::N(m, p) + 1));
        }
    }
    const Dfa c3 = pair_dfa_N_by_composition(Prime(3));
    EXPECT_TRUE(accepts(c3, 1, 4));
}

TEST(Composition, GenericOperator) {
    // (m, 2m) composed with (y, 2y) is (m, 4m); direction is unified by reversal.
    const Dfa twice = affine_dfa(2, 0, Prime(3));
    const Dfa four = compose_synchronized(twice, twice);
    for (std::uint64_t m = 0; m < 200; ++m) {
        for (std::uint64_t y = 0; y < 900; y += 1) ASSERT_EQ(accepts(four, m, y), y == 4 * m);
    }
    const Dfa identity = affine_dfa(1, 0, Prime(3));
    const Dfa R = affine_dfa(3, 1, Prime(3));
    EXPECT_TRUE(equivalent(minimize(compose_synchronized(identity, R)), minimize(R)));
    EXPECT_THROW(compose_synchronized(twice, nim_triple_dfa(Prime(3))), std::invalid_argument);
    EXPECT_THROW(compose_synchronized(twice, affine_dfa(2, 0, Prime(2))), std::invalid_argument);
}

TEST(Reversal, FlipsDirectionAndLanguage) {
    const Dfa aff = affine_dfa(3, 1, Prime(3));
    const Dfa rev = reversed(aff);
    EXPECT_EQ(rev.direction(), ReadDirection::MsdFirst);
    for (std::uint64_t m = 0; m < 200; ++m) {
        for (std::uint64_t y = 0; y < 650; ++y) ASSERT_EQ(accepts(rev, m, y), accepts(aff, m, y));
    }
}

TEST(Altsum, AcceptorAndMinimalForm) {
    const Dfa d3 = altsum_dfa(Prime(3));
    EXPECT_EQ(d3.state_count(), 6U);
    EXPECT_TRUE(d3.accepts(encode_word(d3, TupleWord{{{1, 0, 2}}})));
    EXPECT_TRUE(d3.accepts(std::vector<Symbol>{}));
    const Dfa d2 = altsum_dfa(Prime(2));
    EXPECT_FALSE(d2.accepts(encode_word(d2, TupleWord{{{1}}})));

    EXPECT_EQ(minimize(altsum_dfa(Prime(2))).state_count(), 2U);
    EXPECT_EQ(minimize(altsum_dfa(Prime(3))).state_count(), 3U);
    for (unsigned p : {2U, 3U, 5U, 7U}) {
        const Dfa full = altsum_dfa(Prime(p));
        const Dfa m = minimize(full);
        EXPECT_EQ(m.state_count(), p);
        EXPECT_TRUE(all_states_distinct(m));
        EXPECT_TRUE(identical(minimize(m), m));
        for (std::uint64_t n = 0; n < 20000; ++n) {
            const bool in = oracle::alt_sum(n, p) == 0;
            ASSERT_EQ(accepts(full, n), in);
            ASSERT_EQ(accepts(m, n), in);
        }
    }
}

TEST(Altsum, NerodeClassesPairPlusAndMinus) {
    for (unsigned p : {2U, 3U, 5U}) {
        const Prime P(p);
        const auto res = minimize_with_map(altsum_dfa(P));
        for (Digit i = 0; i < p; ++i) {
            const auto cls = res.class_of[altsum_state(i, true, P)];
            ASSERT_TRUE(cls.has_value());
            EXPECT_EQ(cls, res.class_of[altsum_state((p - i) % p, false, P)]);
        }
    }
}

TEST(Minimize, PreservesLanguageOnRandomWords) {
    std::mt19937_64 rng(20240611);
    const std::vector<Dfa> machines = {pair_dfa_N(Prime(3)), altsum_dfa(Prime(5)), nim_triple_dfa(Prime(2)),
                                       affine_dfa(3, 1, Prime(3)), join(pair_dfa_N(Prime(2)), {0, 1}, pair_dfa_N(Prime(2)), {1, 2}, 3)};
    for (const auto& d : machines) {
        const Dfa m = minimize(d);
        EXPECT_LE(m.state_count(), d.state_count());
        std::uniform_int_distribution<std::size_t> len(0, 12);
        std::uniform_int_distribution<Symbol> sym(0, d.alphabet_size() - 1);
        for (int i = 0; i < 10000; ++i) {
            std::vector<Symbol> w(len(rng));
            for (auto& s : w) s = sym(rng);
            ASSERT_EQ(d.accepts(w), m.accepts(w));
        }
    }
}

TEST(Cobham, MorphismImages) {
    const auto m2 = cobham_morphism(Prime(2));
    EXPECT_EQ(m2.images, (std::vector<std::vector<Digit>>{{0, 1}, {1, 0}}));
    const auto m3 = cobham_morphism(Prime(3));
    EXPECT_EQ(m3.images, (std::vector<std::vector<Digit>>{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}));
    EXPECT_EQ(m3.coding, (std::vector<Digit>{1, 0, 0}));
}

TEST(Cobham, ConsistentWithMinimalAcceptor) {
    // Class j of the minimal machine is [(j,+)]; digit d leads to class (p - j - d) mod p.
    for (unsigned p : {2U, 3U, 5U, 7U}) {
        const Prime P(p);
        const auto res = minimize_with_map(altsum_dfa(P));
        const auto morph = cobham_morphism(P);
        for (Digit j = 0; j < p; ++j) {
            const State from = *res.class_of[altsum_state(j, true, P)];
            for (Digit d = 0; d < p; ++d) {
                const Digit t[1] = {d};
                const State to = res.dfa.next(from, res.dfa.encode(t));
                EXPECT_EQ(to, *res.class_of[altsum_state(morph.images[j][d], true, P)]);
            }
            EXPECT_EQ(res.dfa.accepting(from), morph.coding[j] == 1);
        }
    }
}

TEST(Cobham, FixedPoints) {
    const auto w3 = fixed_point_prefix(cobham_morphism(Prime(3)), 9);
    EXPECT_EQ(w3, (std::vector<Digit>{0, 2, 1, 1, 0, 2, 2, 1, 0}));
    const auto w2 = fixed_point_prefix(cobham_morphism(Prime(2)), 8);
    EXPECT_EQ(w2, (std::vector<Digit>{0, 1, 1, 0, 1, 0, 0, 1}));
    EXPECT_EQ(fixed_point_prefix(cobham_morphism(Prime(5)), 1), (std::vector<Digit>{0}));

    for (unsigned p : {2U, 3U, 5U}) {
        const auto m = cobham_morphism(Prime(p));
        const auto w = fixed_point_prefix(m, 5000);
        for (std::uint64_t n = 0; n < w.size(); ++n) {
            ASSERT_EQ(m.coding[w[n]] == 1, oracle::alt_sum(n, p) == 0);
        }
    }
}

TEST(Cobham, MorphismReadOffTheMachine) {
    // The minimal machine's own morphism yields the same coded sequence.
    const auto d = minimize(altsum_dfa(Prime(3)));
    const auto m = morphism_from_dfa(d);
    const auto w = fixed_point_prefix(m, 729);
    for (std::uint64_t n = 0; n < w.size(); ++n) ASSERT_EQ(m.coding[w[n]] == 1, oracle::alt_sum(n, 3) == 0);
}

TEST(LinearRep, ValuesOfN) {
    const auto r = linear_rep_N();
    EXPECT_EQ(eval_linear_rep<std::uint64_t>(r, 4), 12);
    EXPECT_EQ(eval_linear_rep<std::uint64_t>(r, 0), 0);
    EXPECT_EQ(eval_linear_rep<std::uint64_t>(r, 17), 51);
    for (std::uint64_t m = 0; m < 4000; ++m) {
        ASSERT_EQ(eval_linear_rep<std::uint64_t>(r, m), oracle::N2(m));
        ASSERT_EQ(eval_N_scaled<std::uint64_t>(m), oracle::N2(m));
    }
    EXPECT_EQ(eval_linear_rep<BigInt>(r, pow_big(2, 80) + 5), N<BigInt>(pow_big(2, 80) + 5, Prime(2)));
}

TEST(LinearRep, CorruptionIsDetected) {
    auto r = linear_rep_N();
    r.mats[1][0][1] = Rational(1, 2);
    EXPECT_THROW(eval_linear_rep<std::uint64_t>(r, 1), std::logic_error);
    r.nu.pop_back();
    EXPECT_THROW(r.validate(), std::invalid_argument);
}

TEST(Dot, ExportShape) {
    const std::string dot = to_dot(minimize(pair_dfa_N(Prime(2))));
    EXPECT_NE(dot.find("digraph"), std::string::npos);
    EXPECT_NE(dot.find("// reading direction: msd-first"), std::string::npos);
    EXPECT_NE(dot.find("doublecircle"), std::string::npos);
    EXPECT_NE(dot.find("label=\"0/1\""), std::string::npos);
    std::size_t edges = 0;
    for (std::size_t pos = dot.find(" -> s"); pos != std::string::npos; pos = dot.find(" -> s", pos + 1)) ++edges;
    EXPECT_EQ(edges, 5U);  // four labelled transitions plus the entry arrow
}
