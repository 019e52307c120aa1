#include "support.hpp"

#include <hnambu/constructions.hpp>
#include <hnambu/derivations.hpp>
#include <hnambu/fixtures.hpp>

#include <gtest/gtest.h>

using namespace hnambu;
namespace fx = hnambu::fixtures;

namespace {

MultiLinearMap identity_map(std::size_t d) {
    MultiLinearMap m({d}, d);
    for (std::size_t i = 0; i < d; ++i) {
        const std::size_t t[] = {i};
        m.set(t, i, 1);
    }
    return m;
}

Matrix combine(const GradedDerivationAlgebra& g, const Vector& coords) {
    Matrix out(g.space_dim, g.space_dim);
    for (std::size_t a = 0; a < coords.size(); ++a)
        if (!coords[a].is_zero()) out += g.element(a) * coords[a];
    return out;
}

bool all_zero(const oracle::Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

TEST(DerivationSpace, DimensionsMatchOracle) {
    for (const auto& alg : fx::catalog()) {
        const auto o = support::to_alg(alg);
        for (std::size_t k = 0; k <= 3; ++k) {
            const auto space = derivation_space(alg, k);
            EXPECT_EQ(space.size(), oracle::derivation_dim(o, k)) << alg.name() << " k=" << k;
            for (const auto& d : space.basis) {
                EXPECT_TRUE(is_derivation(alg, d, k)) << alg.name();
                EXPECT_TRUE(all_zero(oracle::derivation_residual(o, support::to_mat(d), k))) << alg.name();
            }
        }
    }
}

TEST(DerivationSpace, Leib2ClosedForm) {
    // D e1 = D[e2, e2] = 2 D_22 e1 and [e1, -] = 0 force D = [[2t, s], [0, t]].
    const auto space = derivation_space(fx::leib2(), 0);
    ASSERT_EQ(space.size(), 2u);
    for (const auto& d : space.basis) {
        EXPECT_TRUE(d(1, 0).is_zero());
        EXPECT_EQ(d(0, 0), d(1, 1) * Rational(2));
    }
    EXPECT_TRUE(is_derivation(fx::leib2(), Matrix{{2, 0}, {0, 1}}, 0));
    EXPECT_TRUE(is_derivation(fx::leib2(), Matrix{{0, 1}, {0, 0}}, 0));
    EXPECT_FALSE(is_derivation(fx::leib2(), Matrix::identity(2), 0));
}

TEST(DerivationSpace, TwistedLeib2ClosedForm) {
    // D commutes with diag(4, 2), so D = diag(a, b) and 4a = 2 * 4 * 2^k b.
    const auto alg = fx::leib2_twist();
    for (std::size_t k = 0; k <= 4; ++k) {
        const auto space = derivation_space(alg, k);
        ASSERT_EQ(space.size(), 1u);
        const Matrix& d = space.basis[0];
        EXPECT_EQ(d, Matrix::diagonal(std::vector<Rational>{d(1, 1) * Rational(1 << (k + 1)), d(1, 1)}));
        EXPECT_FALSE(d(1, 1).is_zero());
    }
    EXPECT_EQ(derivation_space(alg, 0).basis[0], (Matrix{{2, 0}, {0, 1}}));
}

TEST(DerivationSpace, ConstraintRowsAreNonzero) {
    const auto alg = fx::nambu4();
    const Matrix c = derivation_constraints(alg.bracket(), alg.alpha(), 0);
    EXPECT_EQ(c.cols(), 16u);
    for (std::size_t r = 0; r < c.rows(); ++r) {
        const auto row = c.row(r);
        EXPECT_FALSE(is_zero(row));
    }
    EXPECT_EQ(16 - rank(c), derivation_space(alg, 0).size());
}

TEST(DerivationSpace, RequiresMultiplicative) {
    const HomNambuAlgebra mixed("m", fx::nambu4().bracket(), {Matrix::identity(4), Matrix::identity(4) * Rational(2)});
    EXPECT_THROW(derivation_space(mixed, 0), NotMultiplicative);
}

TEST(Commutator, DegreesAdd) {
    const GradedMap d{Matrix{{2, 0}, {0, 1}}, 0};
    const GradedMap e{Matrix{{0, 1}, {0, 0}}, 2};
    const auto c = commutator(d, e);
    EXPECT_EQ(c.degree, 2u);
    EXPECT_EQ(c.map, (Matrix{{0, 1}, {0, 0}}));
    EXPECT_THROW(commutator(d, GradedMap{Matrix::identity(3), 0}), DimMismatch);
}

TEST(DerAlgebra, CommutatorsLandInTheSumDegree) {
    for (const auto& alg : fx::catalog()) {
        const auto g = assemble_der_algebra(alg, 3);
        EXPECT_TRUE(g.closure.holds) << alg.name();
        EXPECT_TRUE(g.hom_lie.holds) << alg.name();
        for (std::size_t a = 0; a < g.total_dim; ++a)
            for (std::size_t b = 0; b < g.total_dim; ++b) {
                const auto& entry = g.bracket_table[a * g.total_dim + b];
                const bool in_range = g.degree_of(a) + g.degree_of(b) <= 3;
                ASSERT_EQ(entry.has_value(), in_range) << alg.name();
                if (!entry) continue;
                EXPECT_EQ(combine(g, *entry), commutator(g.element(a), g.element(b))) << alg.name();
            }
    }
}

TEST(DerAlgebra, TwistImagesComposeWithAlpha) {
    for (const auto& alg : fx::catalog()) {
        const auto g = assemble_der_algebra(alg, 2);
        for (std::size_t a = 0; a < g.total_dim; ++a) {
            const auto& img = g.twist_images[a];
            ASSERT_EQ(img.has_value(), g.degree_of(a) < 2) << alg.name();
            if (img) {
                EXPECT_EQ(combine(g, *img), g.element(a) * alg.alpha()) << alg.name();
            }
        }
    }
}

TEST(DerAlgebra, TwistedLeib2Layout) {
    const auto g = assemble_der_algebra(fx::leib2_twist(), 2);
    EXPECT_EQ(g.total_dim, 3u);
    EXPECT_EQ(g.offsets, (std::vector<std::size_t>{0, 1, 2}));
    ASSERT_TRUE(g.twist_images[0].has_value());
    EXPECT_EQ(combine(g, *g.twist_images[0]), (Matrix{{8, 0}, {0, 2}}));
    EXPECT_GT(g.hom_lie.out_of_truncation, 0u);
}

TEST(InnerDerivation, Leib2AdjointOfE2) {
    const Vector e2[] = {{0, 1}};
    EXPECT_EQ(inner_derivation(fx::leib2(), 0, e2), (Matrix{{0, 1}, {0, 0}}));
    const Vector e1[] = {{1, 0}};
    EXPECT_TRUE(inner_derivation(fx::leib2(), 0, e1).is_zero());
}

TEST(InnerDerivation, RejectsNonFixedArguments) {
    const Vector e1[] = {{1, 0}};
    EXPECT_THROW(inner_derivation(fx::leib2_twist(), 0, e1), NotFixedPoint);
    const Vector two[] = {{1, 0}, {0, 1}};
    EXPECT_THROW(inner_derivation(fx::leib2(), 0, two), ArityMismatch);
}

TEST(InnerDerivation, MatchesDirectEvaluation) {
    for (const auto& alg : fx::catalog()) {
        for (std::size_t k = 0; k <= 2; ++k) {
            const auto inn = inner_space(alg, k);
            const Matrix ak = alg.alpha().pow(k);
            for (std::size_t g = 0; g < inn.generators.size(); ++g) {
                const Matrix& ad = inn.generators[g];
                EXPECT_TRUE(is_derivation(alg, ad, k + 1)) << alg.name();
                for (std::size_t c = 0; c < alg.dim(); ++c) {
                    std::vector<Vector> call{ak.column(c)};
                    for (auto idx : inn.generator_args[g]) call.push_back(inn.fixed_basis[idx]);
                    EXPECT_EQ(ad.column(c), bracket_apply(alg, call)) << alg.name();
                }
            }
            EXPECT_EQ(inn.span.size(), span_dimension(std::vector<Vector>(inn.span), alg.dim() * alg.dim()));
        }
    }
}

TEST(InnerDerivation, SpanDimensions) {
    EXPECT_EQ(inner_space(fx::leib2(), 0).span.size(), 1u);
    EXPECT_EQ(inner_space(fx::lie2(), 0).span.size(), 2u);
    EXPECT_TRUE(inner_space(fx::leib2_twist(), 0).fixed_basis.empty());
    EXPECT_TRUE(inner_space(fx::nambu4_neg(), 0).span.empty());
    EXPECT_EQ(inner_space(fx::nambu4(), 0).span.size(), derivation_space(fx::nambu4(), 1).size());
}

TEST(InnerIdeal, HoldsOnCatalog) {
    for (const auto& alg : fx::catalog()) {
        const auto r = check_inn_ideal(alg, 2);
        EXPECT_TRUE(r.holds) << alg.name();
        if (!inner_space(alg, 0).generators.empty()) {
            EXPECT_GT(r.instances, 0u) << alg.name();
        }
    }
}

TEST(OmegaDerivation, IntersectionIsClosedUnderSums) {
    // omega: [e2, e2] = e1 and sigma: [e3, e3] = e1 on a 3-dimensional space.
    MultiLinearMap omega = MultiLinearMap::uniform(3, 2), sigma = MultiLinearMap::uniform(3, 2);
    const std::size_t t22[] = {1, 1}, t33[] = {2, 2};
    omega.set(t22, 0, 1);
    sigma.set(t33, 0, 1);
    const Matrix id = Matrix::identity(3);
    const Matrix a = derivation_constraints(omega, id, 0);
    const Matrix b = derivation_constraints(sigma, id, 0);
    std::vector<Vector> rows;
    for (const Matrix* m : {&a, &b})
        for (std::size_t r = 0; r < m->rows(); ++r) {
            const auto row = m->row(r);
            rows.emplace_back(row.begin(), row.end());
        }
    const auto both = nullspace(Matrix::from_rows(9, rows));
    ASSERT_FALSE(both.empty());
    for (const auto& v : both) {
        const Matrix f = Matrix::from_flat(3, 3, v);
        EXPECT_TRUE(is_omega_derivation(f, omega, id, 0));
        EXPECT_TRUE(is_omega_derivation(f, sigma, id, 0));
        EXPECT_TRUE(sum_closure_check(f, omega, sigma, id, 0));
    }
    EXPECT_TRUE(sum_closure_check(Matrix::diagonal(std::vector<Rational>{2, 1, 1}), omega, sigma, id, 0));
    const auto sum_space = omega_derivation_space(3, omega + sigma, id, 0);
    for (const auto& v : both) EXPECT_TRUE(in_span(v, sum_space.flattened()));
    // The rotation e2 -> e3 -> -e2 preserves the sum but neither summand.
    const Matrix rot{{0, 0, 0}, {0, 0, -1}, {0, 1, 0}};
    EXPECT_TRUE(sum_closure_check(rot, omega, sigma, id, 0));
    EXPECT_FALSE(is_omega_derivation(rot, omega, id, 0));
    EXPECT_FALSE(is_omega_derivation(rot, sigma, id, 0));
}

TEST(OmegaDerivation, NestedBracketInheritsDerivations) {
    for (const auto& alg : {fx::leib2(), fx::lie2(), abelian(2, 2)}) {
        const MultiLinearMap parts[] = {alg.bracket(), identity_map(alg.dim())};
        const auto sigma = compose_omega(alg.bracket(), parts);
        const auto nested = omega_derivation_space(alg.dim(), sigma, alg.alpha(), 0);
        for (const auto& d : derivation_space(alg, 0).basis) {
            EXPECT_TRUE(is_omega_derivation(d, sigma, alg.alpha(), 0)) << alg.name();
            EXPECT_TRUE(in_span(d.flattened(), nested.flattened())) << alg.name();
        }
    }
}

TEST(OmegaDerivation, LiftToTensorSquare) {
    for (const auto& alg : {fx::nambu4(), fx::nambu4_neg()}) {
        const std::size_t n = alg.arity() - 1;
        auto mu = mu_map(alg.bracket(), 1, 0, alg.alpha());
        for (std::size_t i = 2; i <= n; ++i) mu = mu + mu_map(alg.bracket(), i, 0, alg.alpha());
        const Matrix twist = kron_power(alg.alpha(), n);
        oracle::Alg o = oracle::tensor_square_bracket(support::to_alg(alg), 0);
        o.alpha = support::to_mat(twist);
        for (const auto& f : derivation_space(alg, 0).basis) {
            const Matrix phi = lift_phi(f, n);
            EXPECT_TRUE(is_omega_derivation(phi, mu, twist, 0)) << alg.name();
            EXPECT_TRUE(all_zero(oracle::derivation_residual(o, support::to_mat(phi), 0))) << alg.name();
        }
    }
}
