#include <cstdlib>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "setwise/characters.hpp"

using namespace setwise;

TEST(Kostka, SpotValues)
{
    using P = Partition;
    EXPECT_EQ(kostka(P{2, 1}, P{1, 1, 1}), 2);
    EXPECT_EQ(kostka(P{3, 2}, P{2, 2, 1}), 2);
    EXPECT_EQ(kostka(P{2, 2}, P{3, 1}), 0);
    EXPECT_EQ(kostka(P{3, 1}, std::vector<int>{1, 0, 3}), kostka(P{3, 1}, P{3, 1}));
    EXPECT_THROW(kostka(P{3}, P{2}), InputError);
    EXPECT_THROW(kostka(P{3, 1}, std::vector<int>{-1, 5}), InputError);
}

TEST(Kostka, MatchesTableauEnumeration)
{
    for (int n = 1; n <= 7; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& mu : partitions_of(n)) {
                const Integer k = kostka(lam, mu);
                ASSERT_EQ(k, oracle::ssyt_count(lam, mu)) << lam << mu;
                if (!dominates(lam, mu)) { ASSERT_EQ(k, 0) << lam << mu; }
            }
    for (int n = 1; n <= 8; ++n)
        for (const auto& lam : partitions_of(n)) {
            EXPECT_EQ(kostka(lam, lam), 1);
            EXPECT_EQ(kostka({n}, lam), 1);
        }
    for (int n = 4; n <= 10; ++n)
        for (int t = 0; 2 * t <= n; ++t)
            for (int s = 0; s <= t; ++s) EXPECT_EQ(kostka(two_row(n, s), two_row(n, t)), 1);
}

TEST(PermutationCharacter, MatchesTabloidEnumeration)
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& mu : partitions_of(n)) ASSERT_EQ(perm_character(lam, mu), oracle::fixed_tabloids(lam, mu)) << lam << mu;
    EXPECT_EQ(perm_character({3, 2}, {2, 2, 1}), 2);
}

TEST(PermutationCharacter, ClosedForms)
{
    for (int n = 1; n <= 9; ++n)
        for (const auto& lam : partitions_of(n)) {
            EXPECT_EQ(perm_character({n}, lam), 1);
            Integer denom = 1;
            for (int p : lam.parts()) denom *= factorial(p);
            EXPECT_EQ(perm_character(lam, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))), factorial(n) / denom);
        }
}

// Upper triangular in decreasing lex order; the diagonal entry xi_lam(lam)
// is prod_j m_j(lam)!, so it is 1 exactly when lam has distinct parts.
TEST(PermutationCharacter, TableTriangularWithMultiplicityDiagonal)
{
    for (int n = 1; n <= 8; ++n) {
        const CharacterTable table = character_table(n, Flavor::permutation);
        for (std::size_t r = 0; r < table.order.size(); ++r) {
            const Partition& lam = table.order[r];
            for (std::size_t c = 0; c < r; ++c) EXPECT_EQ(table.values[r][c], 0) << lam << table.order[c];
            Integer diag = 1;
            for (int j = 1; j <= n; ++j) diag *= factorial(lam.multiplicity(j));
            EXPECT_EQ(table.values[r][r], diag) << lam;
        }
    }
    EXPECT_EQ(perm_character({2, 2}, {2, 2}), 2);
    EXPECT_EQ(perm_character({1, 1}, {1, 1}), 2);
}

TEST(IrreducibleCharacter, MatchesMurnaghanNakayama)
{
    for (int n = 1; n <= 9; ++n) {
        const CharacterTable table = character_table(n, Flavor::irreducible);
        for (std::size_t r = 0; r < table.order.size(); ++r)
            for (std::size_t c = 0; c < table.order.size(); ++c)
                ASSERT_EQ(table.values[r][c], oracle::mn_character(table.order[r], table.order[c])) << table.order[r] << table.order[c];
    }
}

TEST(IrreducibleCharacter, SpotValues)
{
    const CharacterTable s3 = character_table(3, Flavor::irreducible);
    const std::vector<std::vector<Integer>> expected = {{1, 1, 1}, {-1, 0, 2}, {1, -1, 1}};
    EXPECT_EQ(s3.values, expected);
    EXPECT_EQ(irreducible_character({3, 2}, {5}), 0);
    EXPECT_EQ(irreducible_character({3, 1}, {2, 1, 1}), 1);
    for (int n = 1; n <= 8; ++n)
        for (const auto& mu : partitions_of(n)) {
            EXPECT_EQ(irreducible_character({n}, mu), 1);
            EXPECT_EQ(irreducible_character(transpose(Partition{n}), mu), class_sign(mu));
        }
}

TEST(CharacterTable, OrthogonalityYoungAndTransposeSign)
{
    for (int n = 1; n <= 8; ++n) {
        const CharacterTable irr = character_table(n, Flavor::irreducible);
        const CharacterTable perm = character_table(n, Flavor::permutation);
        const auto& order = irr.order;
        const std::size_t k = order.size();
        for (std::size_t a = 0; a < k; ++a) {
            EXPECT_EQ(irr.values[a].back(), hook_dimension(order[a]));
            for (std::size_t b = 0; b < k; ++b) {
                Integer rows = 0, cols = 0;
                for (std::size_t c = 0; c < k; ++c) {
                    rows += class_size(order[c]) * irr.values[a][c] * irr.values[b][c];
                    cols += irr.values[c][a] * irr.values[c][b];
                }
                EXPECT_EQ(rows, a == b ? factorial(n) : Integer(0));
                // column orthogonality: sum_chi chi(a) chi(b) = |centralizer| delta
                EXPECT_EQ(cols, a == b ? Integer(factorial(n) / class_size(order[a])) : Integer(0));
            }
            const std::size_t ta = irr.index_of(transpose(order[a]));
            for (std::size_t c = 0; c < k; ++c) {
                EXPECT_EQ(irr.values[ta][c], class_sign(order[c]) * irr.values[a][c]);
                Integer young = 0;
                for (std::size_t m = 0; m < k; ++m) young += kostka(order[m], order[a]) * irr.values[m][c];
                EXPECT_EQ(young, perm.values[a][c]) << order[a] << order[c];
            }
        }
    }
}

TEST(CharacterTable, CeilingsAndThreadIndependence)
{
    EXPECT_THROW(character_table(10, Flavor::irreducible), ResourceError);
    EXPECT_THROW(character_table(0, Flavor::irreducible), InputError);
    EXPECT_THROW(irreducible_character(Partition{21}, Partition{21}), ResourceError);
    const CharacterTable ext = character_table(10, Flavor::irreducible, kExtendedTableCeiling);
    EXPECT_EQ(ext.order.size(), 42u);

    ::setenv("SETWISE_THREADS", "1", 1);
    const CharacterTable one = character_table(8, Flavor::irreducible);
    ::setenv("SETWISE_THREADS", "4", 1);
    const CharacterTable four = character_table(8, Flavor::irreducible);
    ::unsetenv("SETWISE_THREADS");
    EXPECT_EQ(one.values, four.values);
}

TEST(CharacterTable, TwoRowDecomposition)
{
    for (int n = 2; n <= 9; ++n)
        for (int t = 0; t <= 4 && 2 * t <= n; ++t) {
            EXPECT_EQ(hook_dimension(two_row(n, t)), binomial(n, t) - binomial(n, t - 1)) << n << "," << t;
            for (const auto& mu : partitions_of(n)) {
                Integer sum = 0;
                for (int s = 0; s <= t; ++s) sum += irreducible_character(two_row(n, s), mu);
                EXPECT_EQ(perm_character(two_row(n, t), mu), sum) << n << "," << t << mu;
            }
        }
}

TEST(Minors, UnitTriangularKostkaAndStableAcrossN)
{
    for (int k = 0; k <= 3; ++k) {
        const KostkaMinor kref = kostka_minor(2 * k + 1, k);
        const KostkaMinor nref = perm_char_minor(2 * k + 1, k);
        std::size_t q = 0;
        for (int s = 0; s <= k; ++s) q += static_cast<std::size_t>(partition_count(s));
        EXPECT_EQ(kref.index.size(), q);
        for (std::size_t i = 0; i < q; ++i) {
            EXPECT_EQ(kref.values[i][i], 1);
            for (std::size_t j = 0; j < i; ++j) {
                EXPECT_EQ(kref.values[i][j], 0);
                EXPECT_EQ(nref.values[i][j], 0);
            }
        }
        for (int n = 2 * k + 2; n <= 9; ++n) {
            EXPECT_EQ(kostka_minor(n, k).values, kref.values) << n << "," << k;
            EXPECT_EQ(perm_char_minor(n, k).values, nref.values) << n << "," << k;
        }
    }
    EXPECT_THROW(kostka_minor(2, 2), DomainError);
    EXPECT_THROW(perm_char_minor(3, 3), DomainError);
}

namespace {
// Leibniz-style expansion over S_{t+1} written independently of the library.
std::int64_t vanishing_sum_reference(const Partition& alpha, int t)
{
    std::int64_t total = 0;
    for (const auto& pi : all_permutations(t + 1)) {
        if (pi(1) == 1) continue;
        bool ok = true;
        for (int j = 2; j <= t + 1; ++j) ok = ok && alpha[static_cast<std::size_t>(j - 1)] - j + pi(j) >= 0;
        if (ok) total += pi.sign();
    }
    return total;
}
} // namespace

TEST(Minors, DeterminantVanishing)
{
    for (int t = 1; t <= 4; ++t)
        for (int n = t + 1; n <= 12; ++n)
            for (const auto& alpha : partitions_of(n)) {
                if (alpha.first() != n - t) continue;
                if (alpha.length() == 2 && alpha[1] == t) {
                    EXPECT_THROW(determinant_vanishing_sum(alpha, t), InputError);
                    EXPECT_NE(vanishing_sum_reference(alpha, t), 0) << alpha;
                    continue;
                }
                EXPECT_EQ(determinant_vanishing_sum(alpha, t), 0) << alpha;
                EXPECT_EQ(vanishing_sum_reference(alpha, t), 0) << alpha;
            }
    EXPECT_THROW(determinant_vanishing_sum({4, 1}, 2), InputError);
}

TEST(Dimensions, LongFirstRowDimensionBound)
{
    // f^alpha * e^t > C(n,t) via a truncated series S < e^t: f * S >= C(n,t) suffices
    for (int t = 1; t <= 4; ++t) {
        Rational series = 0, term = 1;
        for (int k = 0; k <= 30; ++k) {
            series += term;
            term = term * t / (k + 1);
        }
        for (int n = t + 1; n <= 12; ++n)
            for (const auto& alpha : partitions_of(n))
                if (alpha.first() == n - t) { EXPECT_GE(Rational(hook_dimension(alpha)) * series, Rational(binomial(n, t))) << alpha; }
    }
}
