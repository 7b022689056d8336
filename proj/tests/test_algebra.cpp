#include <gtest/gtest.h>

#include "algnorm/algebra.hpp"
#include "oracles.hpp"

using namespace algnorm;

namespace {

Element e(Index k) { return Element::basis(k); }

std::vector<AlgebraSpec> families() {
    return {AlgebraSpec::masked_pointwise(IndexSet::all()),
            AlgebraSpec::masked_pointwise(IndexSet::evens()),
            AlgebraSpec::masked_pointwise(IndexSet::residue(3, 2)),
            AlgebraSpec::zero_product(),
            AlgebraSpec::truncated_poly_ideal(2, 9),
            AlgebraSpec::trivial_extension(AlgebraSpec::masked_pointwise(IndexSet::all())),
            AlgebraSpec::trivial_extension(oracle::truncated_polynomials(3)),
            AlgebraSpec::trivial_extension(AlgebraSpec::trivial_extension(AlgebraSpec::zero_product())),
            oracle::truncated_polynomials(4),
            oracle::matrix_algebra_2x2()};
}

}  // namespace

TEST(Element, NormalForm) {
    const Element a = Element::from_terms({{3, GaussianRational(2)}, {1, GaussianRational(1)}, {3, GaussianRational(-2)}});
    EXPECT_EQ(a, e(1));
    EXPECT_EQ(a.support_size(), 1u);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(Element().to_string(), "0");
    const Element b = Element::from_terms({{2, GaussianRational(3)}, {5, GaussianRational(Rational(1), Rational(1))}});
    EXPECT_EQ(b.to_string(), "3*e2 + (1+1i)*e5");
    EXPECT_EQ(b.coefficient(4), GaussianRational());
}

TEST(Multiply, SpecExamples) {
    const auto evens = AlgebraSpec::masked_pointwise(IndexSet::evens());
    EXPECT_EQ(multiply(evens, e(2) + e(3), e(2) + e(3)), e(2));

    const auto te = AlgebraSpec::trivial_extension(AlgebraSpec::masked_pointwise(IndexSet::all()));
    EXPECT_TRUE(multiply(te, Element(), Element()).is_zero());
    const Index u = te.adjoined_indices().back();
    EXPECT_TRUE(multiply(te, e(u), e(u)).is_zero());
    EXPECT_EQ(multiply(te, e(4) + e(u), e(4) + e(u)), e(4));

    const auto tpi = AlgebraSpec::truncated_poly_ideal(2, 5);
    // Index 1 is x^2, index 2 is x^3, index 4 is x^5.
    EXPECT_EQ(multiply(tpi, e(1), e(2)), e(4));
    EXPECT_TRUE(multiply(tpi, e(2), e(2)).is_zero());
    EXPECT_EQ(tpi.basis_label(1), "x^2");
}

TEST(Multiply, TruncatedPolyIdealMatchesPolynomialProduct) {
    oracle::Random rnd(3);
    for (const auto& [n, N] : std::vector<std::pair<Index, Index>>{{1, 4}, {2, 8}, {3, 12}, {2, 5}}) {
        const auto tpi = AlgebraSpec::truncated_poly_ideal(n, N);
        const auto window = oracle::window(tpi);
        for (int t = 0; t < 200; ++t) {
            const Element a = rnd.element(window);
            const Element b = rnd.element(window);
            std::vector<GaussianRational> pa(N + 1), pb(N + 1);
            for (const auto& [k, c] : a.terms()) pa[n + k - 1] = c;
            for (const auto& [k, c] : b.terms()) pb[n + k - 1] = c;
            const auto prod = oracle::poly_mul(pa, pb, N);
            std::vector<Element::Term> terms;
            for (Index d = 0; d <= N; ++d) {
                if (prod[d].is_zero()) continue;
                ASSERT_GE(d, n);
                terms.emplace_back(d - n + 1, prod[d]);
            }
            ASSERT_EQ(multiply(tpi, a, b), Element::from_terms(terms));
        }
    }
}

TEST(Multiply, MaskedMatchesCoordinatewise) {
    oracle::Random rnd(5);
    const auto mask = IndexSet::residue(3, 1);
    const auto alg = AlgebraSpec::masked_pointwise(mask);
    const auto window = oracle::window(alg);
    for (int t = 0; t < 300; ++t) {
        const Element a = rnd.element(window, 10);
        const Element b = rnd.element(window, 10);
        std::vector<Element::Term> terms;
        for (Index k : window) {
            if (mask.contains(k)) terms.emplace_back(k, a.coefficient(k) * b.coefficient(k));
        }
        ASSERT_EQ(multiply(alg, a, b), Element::from_terms(terms));
    }
}

TEST(Multiply, BilinearAndAssociativeOnRandomElements) {
    oracle::Random rnd(9);
    for (const auto& alg : families()) {
        const auto window = oracle::window(alg, 20);
        for (int t = 0; t < 150; ++t) {
            const Element a = rnd.element(window);
            const Element a2 = rnd.element(window);
            const Element b = rnd.element(window);
            const Element c = rnd.element(window);
            const GaussianRational s = rnd.gaussian();
            ASSERT_EQ(multiply(alg, a + a2, b), multiply(alg, a, b) + multiply(alg, a2, b)) << alg.describe();
            ASSERT_EQ(multiply(alg, b, a + a2), multiply(alg, b, a) + multiply(alg, b, a2)) << alg.describe();
            ASSERT_EQ(multiply(alg, s * a, b), s * multiply(alg, a, b)) << alg.describe();
            ASSERT_EQ(multiply(alg, a, s * b), s * multiply(alg, a, b)) << alg.describe();
            ASSERT_EQ(multiply(alg, multiply(alg, a, b), c), multiply(alg, a, multiply(alg, b, c))) << alg.describe();
        }
    }
}

TEST(Multiply, TrivialExtensionAndZeroProductAnnihilate) {
    oracle::Random rnd(13);
    const auto zero = AlgebraSpec::zero_product();
    const auto te = AlgebraSpec::trivial_extension(AlgebraSpec::masked_pointwise(IndexSet::odds()));
    const Index u = te.adjoined_indices().back();
    EXPECT_GE(u, kSequenceLimit);
    for (int t = 0; t < 200; ++t) {
        ASSERT_TRUE(multiply(zero, rnd.element(oracle::window(zero)), rnd.element(oracle::window(zero))).is_zero());
        const Element p = multiply(te, rnd.element(oracle::window(te)), rnd.element(oracle::window(te)));
        ASSERT_TRUE(p.coefficient(u).is_zero());
    }
}

TEST(Multiply, IndexOutOfRange) {
    const auto c3 = oracle::truncated_polynomials(3);
    try {
        multiply(c3, e(4), e(1));
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::IndexOutOfRange);
    }
    EXPECT_THROW(multiply(AlgebraSpec::truncated_poly_ideal(2, 5), e(5), e(1)), Error);
}

TEST(CanonicalBasis, Examples) {
    EXPECT_EQ(canonical_basis_element(AlgebraSpec::masked_pointwise(IndexSet::all()), 5), e(5));
    const auto tpi = AlgebraSpec::truncated_poly_ideal(2, 5);
    EXPECT_EQ(tpi.render(canonical_basis_element(tpi, 1)), "x^2");
    try {
        canonical_basis_element(oracle::truncated_polynomials(3), 4);
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::IndexOutOfRange);
    }
    EXPECT_THROW(canonical_basis_element(AlgebraSpec::zero_product(), 0), Error);
}

TEST(Validate, ExhaustiveForStructureConstants) {
    const auto report = validate(oracle::truncated_polynomials(3));
    EXPECT_TRUE(report.exhaustive);
    EXPECT_EQ(report.triples_checked, 27u);
    EXPECT_NO_THROW(validate(oracle::matrix_algebra_2x2()));
    EXPECT_NO_THROW(validate(AlgebraSpec::zero_product()));
    EXPECT_FALSE(validate(AlgebraSpec::zero_product()).exhaustive);
}

TEST(Validate, NotAssociativeWitness) {
    // e1 e1 = e2, e1 e2 = e1, e2 e1 = 0.
    const auto bad = AlgebraSpec::structure_constants(
        2, {{1, 1, 2, GaussianRational(1)}, {1, 2, 1, GaussianRational(1)}});
    try {
        validate(bad);
        FAIL();
    } catch (const NotAssociativeError& err) {
        EXPECT_EQ(err.kind(), ErrorKind::NotAssociative);
        EXPECT_EQ(err.i, 1u);
        EXPECT_EQ(err.j, 1u);
        EXPECT_EQ(err.l, 1u);
    }
}

TEST(StructureConstants, MalformedTables) {
    auto kind_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& err) {
            return err.kind();
        }
        return ErrorKind::InternalInconsistency;
    };
    EXPECT_EQ(kind_of([] { AlgebraSpec::structure_constants(0, {}); }), ErrorKind::MalformedTable);
    EXPECT_EQ(kind_of([] { AlgebraSpec::structure_constants(2, {{1, 3, 1, GaussianRational(1)}}); }),
              ErrorKind::MalformedTable);
    EXPECT_EQ(kind_of([] {
                  AlgebraSpec::structure_constants(2, {{1, 1, 1, GaussianRational(1)}, {1, 1, 1, GaussianRational(2)}});
              }),
              ErrorKind::MalformedTable);
    EXPECT_EQ(kind_of([] { AlgebraSpec::truncated_poly_ideal(3, 5); }), ErrorKind::InvalidParameter);
    EXPECT_EQ(kind_of([] { AlgebraSpec::truncated_poly_ideal(0, 5); }), ErrorKind::InvalidParameter);
}
