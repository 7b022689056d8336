#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "algnorm/functionals.hpp"
#include "oracles.hpp"

using namespace algnorm;

namespace {

Element e(Index k) { return Element::basis(k); }

// Piece and position by repeated halving.
std::pair<Index, Index> halving(Index m) {
    Index piece = 1;
    while (m % 2 == 0) {
        m /= 2;
        ++piece;
    }
    return {piece, (m + 1) / 2};
}

// Reference value of a functional on the zero-product algebra, where every
// e_k is enumerated and l_k = k.
GaussianRational zero_product_value(const Element& a, std::optional<Index> corollary) {
    GaussianRational v;
    for (const auto& [k, c] : a.terms()) {
        if (!corollary) {
            v += c * GaussianRational(static_cast<long long>(k));
            continue;
        }
        const auto [piece, j] = halving(k);
        long long w = 1;
        if (piece == *corollary) w = j >= 2 ? static_cast<long long>(j) : 0;
        v += c * GaussianRational(w);
    }
    return v;
}

std::vector<AlgebraSpec> kernel_fixtures() {
    return {AlgebraSpec::masked_pointwise(IndexSet::evens()), AlgebraSpec::zero_product(),
            AlgebraSpec::trivial_extension(AlgebraSpec::masked_pointwise(IndexSet::all())),
            AlgebraSpec::truncated_poly_ideal(3, 12),
            AlgebraSpec::structure_constants(3, {{1, 2, 3, GaussianRational(1)}, {1, 1, 3, GaussianRational(1)}})};
}

}  // namespace

TEST(Partition, Examples) {
    EXPECT_EQ(partition_position(1), (PiecePosition{1, 1}));
    EXPECT_EQ(partition_position(12), (PiecePosition{3, 2}));
    EXPECT_EQ(partition_position(7), (PiecePosition{1, 4}));
    EXPECT_EQ(partition_index(3, 2), 12u);
    EXPECT_THROW(partition_position(0), Error);
    EXPECT_THROW(partition_index(0, 1), Error);
    EXPECT_THROW(partition_index(64, 2), Error);
    EXPECT_EQ(partition_index(64, 1), Index{1} << 63);
}

TEST(Partition, MatchesHalvingAndRoundTrips) {
    for (Index m = 1; m <= 100000; ++m) {
        const auto [piece, position] = halving(m);
        const auto p = partition_position(m);
        ASSERT_EQ(p.piece, piece);
        ASSERT_EQ(p.position, position);
        ASSERT_EQ(partition_index(p.piece, p.position), m);
    }
}

TEST(Partition, PiecesAreDisjoint) {
    std::set<Index> seen;
    for (Index piece = 1; piece <= 6; ++piece) {
        for (Index j = 1; j <= 2000; ++j) ASSERT_TRUE(seen.insert(partition_index(piece, j)).second);
    }
}

TEST(Enumeration, Examples) {
    const auto evens = ComplementEnumeration::build(AlgebraSpec::masked_pointwise(IndexSet::evens()));
    EXPECT_EQ(evens.prefix(3), (std::vector<Index>{1, 3, 5}));
    EXPECT_FALSE(evens.finite());
    EXPECT_EQ(evens.position(5), 3u);
    EXPECT_FALSE(evens.position(4));

    const auto ex4 = ComplementEnumeration::build(AlgebraSpec::truncated_poly_ideal(3, 12));
    EXPECT_EQ(ex4.size(), 3u);
    EXPECT_EQ(ex4.prefix(10), (std::vector<Index>{1, 2, 3}));
    EXPECT_THROW(ex4.at(4), Error);

    const auto te = ComplementEnumeration::build(
        AlgebraSpec::trivial_extension(AlgebraSpec::masked_pointwise(IndexSet::all())));
    EXPECT_EQ(te.size(), 0u);
    ASSERT_EQ(te.leftovers().size(), 1u);

    try {
        ComplementEnumeration::build(AlgebraSpec::masked_pointwise(IndexSet::all()));
        FAIL();
    } catch (const Error& err) {
        EXPECT_EQ(err.kind(), ErrorKind::EmptyComplement);
    }
}

TEST(Functional, TableExamples) {
    const auto evens = ComplementEnumeration::build(AlgebraSpec::masked_pointwise(IndexSet::evens()));
    EXPECT_EQ(eval_phi(FunctionalSpec::theorem(evens), e(5)), GaussianRational(3));
    EXPECT_EQ(eval_phi(FunctionalSpec::theorem(evens), e(4)), GaussianRational(0));

    const auto zero = ComplementEnumeration::build(AlgebraSpec::zero_product());
    const auto phi2 = FunctionalSpec::corollary(zero, 2);
    EXPECT_EQ(eval_phi(phi2, e(2)), GaussianRational(0));   // a_21
    EXPECT_EQ(eval_phi(phi2, e(6)), GaussianRational(2));   // a_22
    EXPECT_EQ(eval_phi(phi2, e(3)), GaussianRational(1));   // a_12, another piece
    EXPECT_EQ(phi2.label(), "corollary:2");
    EXPECT_THROW(FunctionalSpec::corollary(zero, 0), Error);

    const auto te = ComplementEnumeration::build(
        AlgebraSpec::trivial_extension(AlgebraSpec::masked_pointwise(IndexSet::all())));
    const Index u = te.algebra().adjoined_indices().back();
    EXPECT_EQ(eval_phi(FunctionalSpec::theorem(te), e(u) + e(7)), GaussianRational(1));
}

TEST(Functional, MatchesReferenceOnZeroProduct) {
    const auto zero = ComplementEnumeration::build(AlgebraSpec::zero_product());
    oracle::Random rnd(17);
    const auto w = oracle::window(AlgebraSpec::zero_product(), 64);
    for (int t = 0; t < 500; ++t) {
        const Element a = rnd.element(w, 8);
        ASSERT_EQ(eval_phi(FunctionalSpec::theorem(zero), a), zero_product_value(a, std::nullopt));
        for (Index n = 1; n <= 4; ++n) {
            ASSERT_EQ(eval_phi(FunctionalSpec::corollary(zero, n), a), zero_product_value(a, n));
        }
    }
}

TEST(Functional, LinearAndVanishesOnProducts) {
    oracle::Random rnd(23);
    for (const auto& alg : kernel_fixtures()) {
        const auto en = ComplementEnumeration::build(alg);
        const auto w = oracle::window(alg, 40);
        for (const auto& f : {FunctionalSpec::theorem(en), FunctionalSpec::corollary(en, 1),
                              FunctionalSpec::corollary(en, 3)}) {
            for (int t = 0; t < 150; ++t) {
                const Element a = rnd.element(w);
                const Element b = rnd.element(w);
                const GaussianRational s = rnd.gaussian();
                ASSERT_EQ(eval_phi(f, a + s * b), eval_phi(f, a) + s * eval_phi(f, b)) << alg.describe();
                ASSERT_TRUE(eval_phi(f, multiply(alg, a, b)).is_zero()) << alg.describe() << " " << f.label();
            }
        }
    }
}

TEST(Certificate, BoundedExamples) {
    const auto c123 = ComplementEnumeration::build(AlgebraSpec::masked_pointwise(IndexSet::complement_of({1, 2, 3})));
    const auto cert = is_discontinuous_certificate(FunctionalSpec::theorem(c123), BaseNormTag::L1);
    EXPECT_FALSE(cert.unbounded());
    ASSERT_TRUE(cert.sup && cert.sup->exact);
    EXPECT_EQ(*cert.sup->exact, Rational(3));

    const auto ex4 = ComplementEnumeration::build(AlgebraSpec::truncated_poly_ideal(3, 12));
    const auto c4 = is_discontinuous_certificate(FunctionalSpec::theorem(ex4), BaseNormTag::Sup);
    ASSERT_TRUE(c4.sup && c4.sup->exact);
    EXPECT_EQ(*c4.sup->exact, Rational(3));

    // phi_2 on a three-element complement: only a_21 = l_2, valued 0,
    // and l_1, l_3 in other pieces, valued 1.
    const auto c2 = is_discontinuous_certificate(FunctionalSpec::corollary(ex4, 2), BaseNormTag::L1);
    EXPECT_EQ(*c2.sup->exact, Rational(1));
}

TEST(Certificate, UnboundedExamples) {
    const auto zero = ComplementEnumeration::build(AlgebraSpec::zero_product());
    for (BaseNormTag base : {BaseNormTag::L1, BaseNormTag::L2, BaseNormTag::Sup}) {
        const auto cert = is_discontinuous_certificate(FunctionalSpec::corollary(zero, 5), base, 10);
        ASSERT_TRUE(cert.unbounded());
        ASSERT_EQ(cert.witnesses.size(), 10u);
        for (std::size_t j = 0; j < cert.witnesses.size(); ++j) {
            const auto& w = cert.witnesses[j];
            EXPECT_EQ(w.index, partition_index(5, j + 1));
            EXPECT_EQ(w.phi_value, GaussianRational(j == 0 ? 0 : static_cast<long long>(j + 1)));
            ASSERT_TRUE(w.base_norm.exact);
            EXPECT_EQ(*w.base_norm.exact, Rational(1));
        }
    }
    const auto evens = ComplementEnumeration::build(AlgebraSpec::masked_pointwise(IndexSet::evens()));
    const auto cert = is_discontinuous_certificate(FunctionalSpec::theorem(evens), BaseNormTag::L1, 4);
    ASSERT_EQ(cert.witnesses.size(), 4u);
    EXPECT_EQ(cert.witnesses[3].index, 7u);
    EXPECT_EQ(cert.witnesses[3].phi_value, GaussianRational(4));
}
