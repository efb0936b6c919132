#include <gtest/gtest.h>

#include "nhrmt/quaternion.hpp"
#include "test_util.hpp"

using namespace nhrmt;

namespace {

Quaternion random_quaternion(std::mt19937_64& rng, bool real)
{
    std::normal_distribution<double> g;
    auto c = [&] { return real ? cd(g(rng), 0.0) : cd(g(rng), g(rng)); };
    return {c(), c(), c(), c()};
}

ComplexMatrix real_block(cd z, cd w) { return ComplexMatrix{{z, w}, {-std::conj(w), std::conj(z)}}; }

} // namespace

TEST(Quaternion, BasisRelations)
{
    const auto one = Quaternion::one(), e1 = Quaternion::e1(), e2 = Quaternion::e2(), e3 = Quaternion::e3();
    const Quaternion minus_one{-1.0, 0.0, 0.0, 0.0};
    EXPECT_EQ(distance(e1 * e1, minus_one), 0.0);
    EXPECT_EQ(distance(e2 * e2, minus_one), 0.0);
    EXPECT_EQ(distance(e3 * e3, minus_one), 0.0);
    EXPECT_EQ(distance(e1 * e2 * e3, minus_one), 0.0);
    std::mt19937_64 rng(1);
    const Quaternion q = random_quaternion(rng, false);
    EXPECT_EQ(distance(one * q, q), 0.0);
}

TEST(Quaternion, ProductMatchesEmbedding)
{
    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t) {
        const Quaternion a = random_quaternion(rng, false), b = random_quaternion(rng, false);
        EXPECT_LT(max_abs_diff(embed_2x2(a * b), embed_2x2(a) * embed_2x2(b)), 1e-12);
    }
}

TEST(Quaternion, Conjugations)
{
    EXPECT_EQ(distance(dual(Quaternion::one()), Quaternion::one()), 0.0);
    EXPECT_EQ(distance(dual(Quaternion::e1()), Quaternion{0.0, -1.0, 0.0, 0.0}), 0.0);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        const Quaternion r = random_quaternion(rng, true);
        EXPECT_LT(distance(herm_conj(r), dual(r)), 1e-15);
        const Quaternion q = random_quaternion(rng, false);
        EXPECT_LT(distance(herm_conj(q), conj(dual(q))), 1e-15);
        EXPECT_LT(distance(herm_conj(q), dual(conj(q))), 1e-15);
    }
}

TEST(Quaternion, DualIsAntiAutomorphism)
{
    std::mt19937_64 rng(4);
    for (int t = 0; t < 50; ++t) {
        const Quaternion a = random_quaternion(rng, false), b = random_quaternion(rng, false);
        EXPECT_LT(distance(dual(a * b), dual(b) * dual(a)), 1e-12);
    }
}

TEST(Quaternion, EmbeddingOfUnits)
{
    EXPECT_EQ(embed_2x2(Quaternion::one()), ComplexMatrix::identity(2));
    // e1 = -i sigma_2
    EXPECT_EQ(embed_2x2(Quaternion::e1()), (ComplexMatrix{{0.0, -1.0}, {1.0, 0.0}}));
    EXPECT_EQ(embed_2x2(Quaternion::e2()), (ComplexMatrix{{0.0, -I_unit}, {-I_unit, 0.0}}));
    EXPECT_EQ(embed_2x2(Quaternion::e3()), (ComplexMatrix{{I_unit, 0.0}, {0.0, -I_unit}}));
}

TEST(Quaternion, EmbedExtractRoundTrip)
{
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const Quaternion q = random_quaternion(rng, false);
        EXPECT_LT(distance(extract_2x2(embed_2x2(q)), q), 1e-15);
    }
    EXPECT_THROW(extract_2x2(ComplexMatrix(3, 3)), ContractViolation);
}

TEST(Quaternion, RealQuaternionsGiveRealForm)
{
    std::mt19937_64 rng(6);
    const ComplexMatrix m = embed_2x2(random_quaternion(rng, true));
    EXPECT_LT(std::abs(m(1, 0) + std::conj(m(0, 1))), 1e-15);
    EXPECT_LT(std::abs(m(1, 1) - std::conj(m(0, 0))), 1e-15);
}

TEST(Quaternion, DualIdentityWithE1)
{
    std::mt19937_64 rng(7);
    const ComplexMatrix e1 = embed_2x2(Quaternion::e1());
    for (int t = 0; t < 20; ++t) {
        const Quaternion q = random_quaternion(rng, false);
        EXPECT_LT(max_abs_diff(-(e1 * transpose(embed_2x2(q)) * e1), embed_2x2(dual(q))), 1e-12);
    }
}

TEST(IsQuaternionReal, Examples)
{
    const ComplexMatrix m = block_diag({real_block(cd(1.0, 2.0), cd(-0.5, 0.3)), real_block(cd(0.2, 0.0), cd(0.0, 1.0))});
    EXPECT_TRUE(is_quaternion_real(m));
    EXPECT_TRUE(is_quaternion_real(ComplexMatrix::identity(4)));
    EXPECT_FALSE(is_quaternion_real(testutil::diag({1.0, 2.0})));
    EXPECT_THROW(is_quaternion_real(ComplexMatrix::identity(3)), ContractViolation);
}

TEST(QuaternionMatrix, RealMatrixSatisfiesAdjointEqualsDual)
{
    std::mt19937_64 rng(8);
    QuaternionMatrix a(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            a(i, j) = random_quaternion(rng, true);
    ASSERT_TRUE(a.is_real());
    const ComplexMatrix m = a.to_complex();
    EXPECT_TRUE(is_quaternion_real(m));
    EXPECT_LT(max_abs_diff(adjoint(m), a.dual().to_complex()), 1e-10);
    EXPECT_LT(max_abs_diff(adjoint(m), matrix_dual(m)), 1e-10);
    const QuaternionMatrix back = QuaternionMatrix::from_complex(m);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            EXPECT_LT(distance(back(i, j), a(i, j)), 1e-15);
}

TEST(QuaternionMatrix, ComplexEntriesAreNotReal)
{
    QuaternionMatrix a(1);
    a(0, 0) = {cd(1.0, 1.0), 0.0, 0.0, 0.0};
    EXPECT_FALSE(a.is_real());
    EXPECT_FALSE(is_quaternion_real(a.to_complex()));
}
