#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "algnorm/span.hpp"
#include "oracles.hpp"

using namespace algnorm;

namespace {

Element e(Index k) { return Element::basis(k); }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& err) {
        return err.kind();
    }
    return ErrorKind::InternalInconsistency;
}

// Dense rows over an arbitrary list of column indices.
oracle::Matrix dense_rows(const std::vector<Element>& rows, const std::vector<Index>& columns) {
    std::map<Index, std::size_t> col;
    for (std::size_t c = 0; c < columns.size(); ++c) col[columns[c]] = c;
    oracle::Matrix m;
    for (const Element& r : rows) {
        std::vector<GaussianRational> row(columns.size());
        for (const auto& [k, c] : r.terms()) row.at(col.at(k)) = c;
        m.push_back(std::move(row));
    }
    return m;
}

std::vector<Element> window_products(const AlgebraSpec& alg, const std::vector<Index>& w) {
    std::vector<Element> out;
    for (Index i : w) {
        for (Index j : w) {
            Element p = multiply(alg, e(i), e(j));
            // Dropping zeros and repeats keeps the dense eliminations small.
            if (!p.is_zero() && std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
        }
    }
    return out;
}

std::vector<AlgebraSpec> sequence_fixtures() {
    return {AlgebraSpec::masked_pointwise(IndexSet::all()),
            AlgebraSpec::masked_pointwise(IndexSet::evens()),
            AlgebraSpec::masked_pointwise(IndexSet::odds()),
            AlgebraSpec::masked_pointwise(IndexSet::residue(5, 2)),
            AlgebraSpec::masked_pointwise(IndexSet::complement_of({1, 2, 7})),
            AlgebraSpec::masked_pointwise(IndexSet::finite_list({3, 4})),
            AlgebraSpec::zero_product(),
            AlgebraSpec::trivial_extension(AlgebraSpec::masked_pointwise(IndexSet::all())),
            AlgebraSpec::trivial_extension(AlgebraSpec::zero_product())};
}

}  // namespace

TEST(Codimension, StructureConstantsMatchDenseRank) {
    const std::vector<AlgebraSpec> fixtures = {
        oracle::truncated_polynomials(2), oracle::truncated_polynomials(4), oracle::matrix_algebra_2x2(),
        // Strictly upper triangular 3x3 matrices: E12 E23 = E13, everything else 0.
        AlgebraSpec::structure_constants(3, {{1, 2, 3, GaussianRational(1)}}),
        AlgebraSpec::structure_constants(2, {})};
    for (const auto& alg : fixtures) {
        const Index dim = *alg.dimension();
        EXPECT_EQ(codimension(alg), Codimension::finite(dim - oracle::product_rank(alg, dim))) << alg.describe();
        EXPECT_EQ(quotient_basis(alg).size(), dim - oracle::product_rank(alg, dim));
    }
    EXPECT_EQ(codimension(AlgebraSpec::structure_constants(3, {{1, 2, 3, GaussianRational(1)}})),
              Codimension::finite(2));
}

TEST(Codimension, TruncatedPolyIdeal) {
    for (Index n : {1, 2, 3, 5}) {
        const auto alg = AlgebraSpec::truncated_poly_ideal(n, 4 * n);
        const Index dim = *alg.dimension();
        EXPECT_EQ(codimension(alg), Codimension::finite(n));
        EXPECT_EQ(dim - oracle::product_rank(alg, dim), n);
        const auto q = quotient_basis(alg);
        ASSERT_EQ(q.size(), n);
        for (Index i = 0; i < n; ++i) EXPECT_EQ(alg.render(q[i]), "x^" + std::to_string(n + i));
        // The quotient basis together with all products spans the whole algebra.
        auto rows = window_products(alg, oracle::window(alg));
        rows.insert(rows.end(), q.begin(), q.end());
        EXPECT_EQ(oracle::rank(dense_rows(rows, oracle::window(alg))), dim);
    }
    const auto ex4 = AlgebraSpec::truncated_poly_ideal(3, 12);
    std::vector<std::string> labels;
    for (const auto& b : quotient_basis(ex4)) labels.push_back(ex4.render(b));
    EXPECT_EQ(labels, (std::vector<std::string>{"x^3", "x^4", "x^5"}));
}

TEST(Codimension, SequenceFamilies) {
    EXPECT_EQ(codimension(AlgebraSpec::masked_pointwise(IndexSet::odds())), Codimension::countably_infinite());
    EXPECT_EQ(codimension(AlgebraSpec::masked_pointwise(IndexSet::all())), Codimension::finite(0));
    EXPECT_EQ(codimension(AlgebraSpec::zero_product()).to_string(), "∞");
    const auto c12 = AlgebraSpec::masked_pointwise(IndexSet::complement_of({1, 2}));
    EXPECT_EQ(codimension(c12), Codimension::finite(2));
    EXPECT_EQ(quotient_basis(c12), (std::vector<Element>{e(1), e(2)}));
    EXPECT_EQ(kind_of([] { quotient_basis(AlgebraSpec::zero_product()); }), ErrorKind::InfiniteCodimension);
    EXPECT_EQ(kind_of([] { quotient_basis(AlgebraSpec::masked_pointwise(IndexSet::evens())); }),
              ErrorKind::InfiniteCodimension);
}

TEST(Codimension, TrivialExtensionAddsOne) {
    const std::vector<AlgebraSpec> inners = {AlgebraSpec::masked_pointwise(IndexSet::all()),
                                             AlgebraSpec::masked_pointwise(IndexSet::complement_of({4})),
                                             oracle::truncated_polynomials(3), AlgebraSpec::truncated_poly_ideal(2, 8)};
    for (const auto& inner : inners) {
        const auto te = AlgebraSpec::trivial_extension(inner);
        EXPECT_EQ(codimension(te), Codimension::finite(codimension(inner).value() + 1)) << te.describe();
        const auto q = quotient_basis(te);
        EXPECT_EQ(q.back(), e(te.adjoined_indices().back()));
    }
    EXPECT_FALSE(codimension(AlgebraSpec::trivial_extension(AlgebraSpec::zero_product())).is_finite());
    // A finite inner algebra gets the adjoined coordinate at dim + 1.
    EXPECT_EQ(AlgebraSpec::trivial_extension(oracle::truncated_polynomials(3)).adjoined_indices().back(), 4u);
}

// The analytic span agrees with the dense rank of every basis product inside
// windows of several sizes, and contains exactly the same window vectors.
TEST(SquareSpan, MatchesBruteForceWindows) {
    for (const auto& alg : sequence_fixtures()) {
        const auto span = square_span(alg, SpanOptions{0});
        for (Index T : {10, 25, 50}) {
            const auto w = truncation_window(alg, T);
            const auto products = window_products(alg, w);
            const std::size_t oracle_rank = oracle::rank(dense_rows(products, w));
            std::size_t unit_count = 0;
            for (Index k : w) {
                if (span.contains_basis(k)) ++unit_count;
            }
            ASSERT_EQ(unit_count, oracle_rank) << alg.describe() << " T=" << T;
            for (Index k : w) {
                auto with_k = products;
                with_k.push_back(e(k));
                const bool in_oracle = oracle::rank(dense_rows(with_k, w)) == oracle_rank;
                ASSERT_EQ(span.contains(e(k)), in_oracle) << alg.describe() << " k=" << k;
            }
            ASSERT_EQ(window_span(alg, span, T), brute_force_span(alg, T)) << alg.describe() << " T=" << T;
        }
        EXPECT_NO_THROW(square_span(alg, SpanOptions{50}));
    }
}

TEST(SquareSpan, ContainsAndResidual) {
    const auto evens = AlgebraSpec::masked_pointwise(IndexSet::evens());
    const auto span = square_span(evens);
    EXPECT_TRUE(span.contains(e(2) + e(4)));
    EXPECT_FALSE(span.contains(e(2) + e(3)));
    EXPECT_EQ(span.residual(e(2) + GaussianRational(5) * e(3)), GaussianRational(5) * e(3));

    const auto ex4 = AlgebraSpec::truncated_poly_ideal(3, 12);
    const auto s4 = square_span(ex4);
    EXPECT_TRUE(s4.contains(e(4)));   // x^6
    EXPECT_FALSE(s4.contains(e(3)));  // x^5

    // A non-diagonal span: in C[x]/(x^3), A^2 = A and any residual is zero.
    const auto c3 = oracle::truncated_polynomials(3);
    oracle::Random rnd(4);
    for (int t = 0; t < 50; ++t) {
        EXPECT_TRUE(square_span(c3).residual(rnd.element(oracle::window(c3))).is_zero());
    }
}

TEST(SquareSpan, ResidualIsCongruentModuloSpan) {
    oracle::Random rnd(21);
    const std::vector<AlgebraSpec> fixtures = {
        AlgebraSpec::structure_constants(3, {{1, 2, 3, GaussianRational(1)}, {1, 1, 3, GaussianRational(2)}}),
        AlgebraSpec::truncated_poly_ideal(2, 8), AlgebraSpec::masked_pointwise(IndexSet::residue(3, 0)),
        AlgebraSpec::trivial_extension(AlgebraSpec::truncated_poly_ideal(1, 4))};
    for (const auto& alg : fixtures) {
        const auto span = square_span(alg);
        const auto w = oracle::window(alg, 30);
        for (int t = 0; t < 100; ++t) {
            const Element a = rnd.element(w);
            const Element r = span.residual(a);
            ASSERT_TRUE(span.contains(a - r)) << alg.describe();
            for (const auto& [k, c] : r.terms()) ASSERT_FALSE(span.contains_basis(k)) << alg.describe();
        }
    }
}

TEST(Identity, UnitalFixtures) {
    for (Index k = 2; k <= 4; ++k) {
        const auto id = find_identity(oracle::truncated_polynomials(k));
        ASSERT_TRUE(id);
        EXPECT_EQ(id->element, e(1));
        EXPECT_EQ(id->side, Side::TwoSided);
    }
    const auto m2 = find_identity(oracle::matrix_algebra_2x2());
    ASSERT_TRUE(m2);
    EXPECT_EQ(m2->element, e(1) + e(4));
    EXPECT_EQ(m2->side, Side::TwoSided);

    // Left zero semigroup algebra: e_i e_j = e_i. Every e_j is a right identity.
    const auto left_zero = AlgebraSpec::structure_constants(
        2, {{1, 1, 1, GaussianRational(1)}, {1, 2, 1, GaussianRational(1)},
            {2, 1, 2, GaussianRational(1)}, {2, 2, 2, GaussianRational(1)}});
    const auto side = find_identity(left_zero);
    ASSERT_TRUE(side);
    EXPECT_EQ(side->side, Side::Right);
    EXPECT_EQ(multiply(left_zero, e(2), side->element), e(2));

    EXPECT_FALSE(find_identity(AlgebraSpec::masked_pointwise(IndexSet::all())));
    EXPECT_FALSE(find_identity(AlgebraSpec::structure_constants(3, {{1, 2, 3, GaussianRational(1)}})));
}

TEST(Proposition, Outcomes) {
    EXPECT_EQ(check_proposition(oracle::truncated_polynomials(3)).outcome, PropositionReport::Outcome::Pass);
    EXPECT_EQ(check_proposition(oracle::matrix_algebra_2x2()).outcome, PropositionReport::Outcome::Pass);
    const auto all = check_proposition(AlgebraSpec::masked_pointwise(IndexSet::all()));
    EXPECT_EQ(all.outcome, PropositionReport::Outcome::ConverseFails);
    EXPECT_EQ(all.codimension, Codimension::finite(0));
    EXPECT_FALSE(all.identity);
    EXPECT_EQ(check_proposition(AlgebraSpec::zero_product()).outcome, PropositionReport::Outcome::NotApplicable);
    EXPECT_EQ(check_proposition(AlgebraSpec::truncated_poly_ideal(3, 12)).outcome,
              PropositionReport::Outcome::NotApplicable);
}
