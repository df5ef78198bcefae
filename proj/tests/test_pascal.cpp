#include <pascalmod/pascal.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace pascalmod;

namespace {
std::vector<BigInt> first_t(std::size_t count, Digit p) {
    std::vector<BigInt> v;
    for (std::uint64_t n = 0; n < count; ++n) v.push_back(t(n, Prime(p)));
    return v;
}
}  // namespace

TEST(BinomMod, LucasAgreesWithExactBinomials) {
    for (unsigned p : {2U, 3U, 5U, 7U}) {
        for (std::uint64_t n = 0; n <= 80; ++n) {
            for (std::uint64_t k = 0; k <= n + 2; ++k) {
                ASSERT_EQ(binom_mod(n, k, Prime(p)), oracle::binom_mod(n, k, p)) << n << " " << k;
            }
        }
    }
    EXPECT_EQ(binom_mod<BigInt>(pow_big(2, 100), 3, Prime(2)), 0U);
}

TEST(Rows, FirstRowsModFive) {
    EXPECT_EQ(row(3, Prime(5)).coeffs, (std::vector<Digit>{1, 3, 3, 1}));
    EXPECT_EQ(row(4, Prime(5)).coeffs, (std::vector<Digit>{1, 4, 1, 4, 1}));
    EXPECT_EQ(row(0, Prime(5)).coeffs, (std::vector<Digit>{1}));
}

TEST(Rows, Row23ModFive) {
    EXPECT_EQ(row(23, Prime(5)).word(), DigitWord::from_msd_string("133104224013310422401331", Prime(5)).canonical());
    std::string letters;
    for (Digit d : row(23, Prime(5)).coeffs) letters += std::to_string(d);
    EXPECT_EQ(letters, "133104224013310422401331");
}

TEST(Rows, SweepMatchesExactBinomials) {
    for (unsigned p : {2U, 3U, 5U}) {
        RowSweep sweep{Prime(p)};
        for (std::uint64_t n = 0; n <= 100; ++n) {
            const auto& r = n == 0 ? sweep.current() : sweep.next();
            for (std::uint64_t k = 0; k <= n; ++k) ASSERT_EQ(r.coeffs[k], oracle::binom_mod(n, k, p));
        }
    }
}

TEST(T, BinaryListing) {
    const std::vector<BigInt> expect = {1, 3, 5, 15, 17, 51, 85, 255, 257, 771, 1285, 3855, 4369, 13107, 21845, 65535, 65537};
    EXPECT_EQ(first_t(17, 2), expect);
}

TEST(T, TernaryListing) {
    const std::vector<BigInt> expect = {1, 4, 16, 28, 112, 448, 784, 3136, 12301, 19684, 78736, 314944};
    EXPECT_EQ(first_t(12, 3), expect);
}

TEST(T, AgreesWithOracle) {
    for (unsigned p : {2U, 3U, 5U, 7U}) {
        for (std::uint64_t n = 0; n <= 60; ++n) ASSERT_EQ(t(n, Prime(p)), oracle::t(n, p));
    }
}

TEST(T, LeadingSplit) {
    const auto s = leading_split(23, Prime(5));
    EXPECT_EQ(s.power, 5U);
    EXPECT_EQ(s.k, 1U);
    EXPECT_EQ(s.lead, 4U);
    EXPECT_EQ(s.rest, 3U);
    const auto z = leading_split(0, Prime(3));
    EXPECT_EQ(z.lead, 0U);
}

TEST(T, RecursionAndConcatenation) {
    for (unsigned p : {2U, 3U, 5U, 7U}) {
        for (std::uint64_t n = 0; n <= 200; ++n) {
            ASSERT_EQ(t_recursive(n, Prime(p)), t(n, Prime(p)));
            ASSERT_EQ(row_concat(n, Prime(p)), row(n, Prime(p)));
        }
    }
}

TEST(T, FaultyMuTableBreaksConcatenation) {
    MuTable bad = mu_table(Prime(3));
    bad[2][1] = 1;
    EXPECT_NE(row_concat(6, Prime(3), bad), row(6, Prime(3)));
    EXPECT_EQ(row_concat(6, Prime(3), mu_table(Prime(3))), row(6, Prime(3)));
}

TEST(T, FermatProducts) {
    EXPECT_EQ(fermat_number(0), 3);
    EXPECT_EQ(fermat_number(4), 65537);
    EXPECT_EQ(fermat_product(6), 85);  // F_1 F_2 = 5 * 17
    for (std::uint64_t n = 0; n <= 200; ++n) ASSERT_EQ(fermat_product(n), t(n, Prime(2)));
}

TEST(T, StepMultiplier) {
    for (unsigned p : {2U, 3U, 5U, 7U}) {
        for (std::uint64_t n = 0; n <= 60; ++n) {
            ASSERT_EQ(t(p * n + 1, Prime(p)), (p + 1) * t(p * n, Prime(p)));
        }
    }
}

TEST(TPrime, TernaryListing) {
    const std::vector<BigInt> expect = {1, 3, 7, 9, 27, 63, 73, 219, 511, 513, 1539, 3591, 4617};
    for (std::uint64_t n = 0; n < expect.size(); ++n) {
        EXPECT_EQ(t_prime(n, Prime(3)), expect[n]);
        EXPECT_EQ(t_prime_product(n, Prime(3)), expect[n]);
    }
}

TEST(TPrime, ProductLaw) {
    for (unsigned p : {2U, 3U, 5U}) {
        for (std::uint64_t n = 0; n <= 150; ++n) ASSERT_EQ(t_prime(n, Prime(p)), t_prime_product(n, Prime(p)));
    }
}

TEST(Growth, WitnessHolds) {
    for (unsigned p : {2U, 3U, 5U}) {
        const auto g = growth_witness(Prime(p), 100 + 2 * p);
        EXPECT_TRUE(g.ok) << g.detail;
        EXPECT_EQ(g.step_comparisons, 101U);
        EXPECT_EQ(g.bound_comparisons, 101U + 2 * p);
    }
}
