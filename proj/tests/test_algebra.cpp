#include "support.hpp"

#include <hnambu/fixtures.hpp>
#include <hnambu/identities.hpp>

#include <gtest/gtest.h>


using namespace hnambu;
namespace fx = hnambu::fixtures;

TEST(MultiLinearMap, EvaluatesLeib2Bracket) {
    const auto alg = fx::leib2();
    const Vector e1{1, 0}, e2{0, 1}, s{1, 1};
    const Vector a[] = {e2, e2}, b[] = {s, e2}, c[] = {e2, s};
    EXPECT_EQ(bracket_apply(alg, a), e1);
    EXPECT_EQ(bracket_apply(alg, b), e1);
    EXPECT_EQ(bracket_apply(alg, c), e1);
    const Vector too_few[] = {e1};
    EXPECT_THROW(bracket_apply(alg, too_few), ArityMismatch);
}

TEST(MultiLinearMap, SparseStorageDropsZeros) {
    auto m = MultiLinearMap::uniform(2, 2);
    const std::size_t t[] = {0, 1};
    m.set(t, 1, 3);
    EXPECT_EQ(m.nonzero_count(), 1u);
    m.set(t, 1, 0);
    EXPECT_TRUE(m.is_zero());
    EXPECT_THROW(m.set(t, 2, 1), IndexOutOfRange);
}

TEST(HomNambuAlgebra, ValidatesShape) {
    EXPECT_THROW(HomNambuAlgebra("x", BracketTensor::uniform(2, 1), {}), ArityMismatch);
    EXPECT_THROW(HomNambuAlgebra("x", BracketTensor::uniform(2, 3), {Matrix::identity(2)}), ArityMismatch);
    EXPECT_THROW(HomNambuAlgebra("x", BracketTensor::uniform(2, 2), {Matrix::identity(3)}), DimMismatch);
    EXPECT_THROW(HomNambuAlgebra("x", MultiLinearMap({2, 3}, 2), {Matrix::identity(2)}), DimMismatch);
}

TEST(VerifyHomNambu, CatalogAgreesWithOracle) {
    for (const auto& alg : fx::catalog()) {
        const auto r = verify_hom_nambu(alg);
        EXPECT_EQ(r.holds, oracle::hom_nambu_holds(support::to_alg(alg))) << alg.name();
        EXPECT_TRUE(r.holds) << alg.name();
        EXPECT_EQ(r.instances, checked_pow(alg.dim(), 2 * alg.arity() - 1)) << alg.name();
    }
}

TEST(VerifyHomNambu, InstanceCountsForSmallFixtures) {
    EXPECT_EQ(verify_leibniz(fx::leib2()).instances, 8u);
    EXPECT_EQ(verify_hom_nambu(fx::nambu4()).instances, 1024u);
}

TEST(VerifyHomNambu, CorruptedLeib2FailsWithOracleWitness) {
    const auto alg = fx::leib2_corrupt();
    const auto r = verify_hom_nambu(alg);
    EXPECT_FALSE(r.holds);
    EXPECT_FALSE(oracle::hom_nambu_holds(support::to_alg(alg)));
    ASSERT_FALSE(r.witnesses.empty());
    EXPECT_EQ(r.witnesses.front().tuple, oracle::first_failure(support::to_alg(alg)));
    const auto all = oracle::all_failures(support::to_alg(alg));
    EXPECT_EQ(r.failures, all.size());
    for (std::size_t i = 0; i < r.witnesses.size(); ++i) EXPECT_EQ(r.witnesses[i].tuple, all[i]);
}

TEST(VerifyHomNambu, WitnessCapIsRespected) {
    const auto r = verify_hom_nambu(fx::leib2_corrupt(), {2});
    EXPECT_EQ(r.witnesses.size(), 2u);
    EXPECT_EQ(r.failures, oracle::all_failures(support::to_alg(fx::leib2_corrupt())).size());
}

TEST(VerifyHomNambu, IdentityTwistsMatchLeibnizPath) {
    for (const auto& alg : fx::catalog()) {
        if (!alg.has_identity_twists()) continue;
        EXPECT_EQ(verify_hom_nambu(alg).holds, verify_leibniz(alg).holds) << alg.name();
    }
    EXPECT_EQ(verify_hom_nambu(fx::leib2_corrupt()).holds, verify_leibniz(fx::leib2_corrupt()).holds);
}

TEST(VerifyHomNambu, MultiplicativePathAgrees) {
    auto algs = fx::catalog();
    algs.push_back(fx::leib2_corrupt());
    for (const auto& alg : algs) {
        const auto a = verify_hom_nambu(alg);
        const auto b = verify_hom_nambu_multiplicative(alg);
        EXPECT_EQ(a.holds, b.holds) << alg.name();
        EXPECT_EQ(a.witnesses, b.witnesses) << alg.name();
    }
}

TEST(VerifyHomNambu, DistinctTwistFamiliesAgreeWithOracle) {
    const auto base = fx::nambu4();
    const Matrix id = Matrix::identity(4);
    const Matrix stretch = Matrix::diagonal(std::vector<Rational>{2, 1, 1, 1});
    const std::vector<TwistFamily> families{{id, id * Rational(-1)}, {id * Rational(2), id}, {stretch, id}, {id, stretch}};
    for (const auto& fam : families) {
        const HomNambuAlgebra alg("family", base.bracket(), fam);
        std::vector<oracle::Mat> tw;
        for (const auto& t : fam) tw.push_back(support::to_mat(t));
        EXPECT_EQ(verify_hom_nambu(alg).holds, oracle::hom_nambu_family_holds(support::to_alg(alg), tw));
    }
}

TEST(VerifyMultiplicative, TwistByDiag42Holds) {
    const auto twisted = fx::leib2_twist();
    EXPECT_TRUE(verify_multiplicative(twisted).holds);
    EXPECT_TRUE(twisted.is_multiplicative());
    EXPECT_TRUE(verify_hom_nambu(twisted).holds);
}

TEST(VerifyMultiplicative, Diag12OnUntouchedBracketFails) {
    const auto alg = HomNambuAlgebra::with_twist("t", fx::leib2().bracket(), Matrix{{1, 0}, {0, 2}});
    const auto r = verify_multiplicative(alg);
    EXPECT_FALSE(r.holds);
    ASSERT_EQ(r.witnesses.size(), 1u);
    EXPECT_EQ(r.witnesses[0].tuple, (std::vector<std::size_t>{1, 1}));
    EXPECT_EQ(r.witnesses[0].lhs, (Vector{1, 0}));
    EXPECT_EQ(r.witnesses[0].rhs, (Vector{4, 0}));
    EXPECT_THROW(verify_hom_nambu_multiplicative(alg), NotMultiplicative);
}

TEST(VerifyMultiplicative, DistinctTwistsAreNotMultiplicative) {
    const auto n = fx::nambu4();
    const HomNambuAlgebra alg("x", n.bracket(), {Matrix::identity(4), Matrix::identity(4) * Rational(2)});
    EXPECT_FALSE(alg.is_multiplicative());
    const auto r = verify_multiplicative(alg);
    EXPECT_FALSE(r.holds);
    EXPECT_EQ(r.witnesses.front().tuple, (std::vector<std::size_t>{1}));
}

TEST(VerifyHomLie, Leib2FailsAntisymmetry) {
    const auto r = verify_hom_lie(fx::leib2());
    EXPECT_FALSE(r.holds);
    EXPECT_EQ(r.witnesses.front().tuple, (std::vector<std::size_t>{1, 1}));
}

TEST(VerifyHomLie, Lie2AndAbelianHold) {
    EXPECT_TRUE(verify_hom_lie(fx::lie2()).holds);
    EXPECT_TRUE(verify_hom_lie(abelian(3, 2)).holds);
    EXPECT_THROW(verify_hom_lie(fx::nambu4()), ArityMismatch);
}

TEST(VerifyHomIdeal, SpanOfE1InLeib2) {
    const std::vector<Vector> e1{{1, 0}}, e2{{0, 1}};
    EXPECT_TRUE(verify_hom_ideal(e1, fx::leib2()));
    EXPECT_FALSE(verify_hom_ideal(e2, fx::leib2()));
    EXPECT_TRUE(verify_hom_ideal(e1, fx::leib2_twist()));
}

TEST(VerifyMorphism, ShippedEndomorphismsOfLeib2) {
    const auto leib = fx::leib2();
    std::size_t rejected = 0;
    for (const auto& [name, f] : fx::leib2_endomorphisms()) {
        // [a, b] = a_2 b_2 e1, so f is a morphism iff f e1 = f_22^2 e1.
        const bool by_hand = f.column(0) == scaled(Vector{1, 0}, f(1, 1) * f(1, 1));
        const auto r = verify_morphism(f, leib, leib);
        EXPECT_EQ(r.holds, by_hand) << name;
        if (!r.holds) ++rejected;
    }
    EXPECT_GE(rejected, 1u);
    EXPECT_FALSE(verify_morphism(Matrix{{1, 0}, {0, 2}}, leib, leib).holds);
    EXPECT_TRUE(verify_morphism(fx::rho(), leib, leib).holds);
}

TEST(VerifyMorphism, ReportsDimensionErrors) {
    EXPECT_THROW(verify_morphism(Matrix::identity(3), fx::leib2(), fx::leib2()), DimMismatch);
    EXPECT_THROW(verify_morphism(Matrix(4, 2), fx::leib2(), fx::nambu4()), ArityMismatch);
}
