#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "algnorm/scalar.hpp"
#include "oracles.hpp"

using namespace algnorm;

namespace {

mpq_class q(long n, long d = 1) {
    mpq_class v(n, d);
    v.canonicalize();
    return v;
}

// Reference value straight from GMP, bypassing the inline fast path.
std::string ref(const mpq_class& v) { return Rational(v).to_string(); }

}  // namespace

TEST(Rational, CanonicalForm) {
    EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
    EXPECT_EQ(Rational(0, 7).to_string(), "0");
    EXPECT_EQ(Rational(0, 7), Rational(0));
    EXPECT_EQ(Rational(10, 5).to_string(), "2");
    EXPECT_TRUE(Rational(10, 5).is_integer());
    EXPECT_EQ(Rational(-3, 9).denominator(), 3);
}

TEST(Rational, ZeroDenominatorRejected) {
    try {
        Rational(1, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidParameter);
    }
    EXPECT_THROW(Rational(1) / Rational(0), Error);
}

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(Rational::parse("3/4"), Rational(3, 4));
    EXPECT_EQ(Rational::parse("-12/8"), Rational(-3, 2));
    EXPECT_EQ(Rational::parse("+5"), Rational(5));
    EXPECT_EQ(Rational::parse("123456789012345678901234567890").to_string(), "123456789012345678901234567890");
    for (const char* bad : {"", "1/", "/2", "1/0", "a", "1.5", "1/-2", "--1"}) {
        try {
            Rational::parse(bad);
            ADD_FAILURE() << bad;
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::ParseError) << bad;
        }
    }
}

TEST(Rational, OverflowPromotesAndDemotes) {
    const long long big = std::numeric_limits<long long>::max();
    Rational a(big);
    Rational b = a + Rational(1);
    EXPECT_EQ(b.to_string(), "9223372036854775808");
    EXPECT_EQ(b - Rational(1), a);
    EXPECT_EQ((a * a / a), a);
    Rational min(std::numeric_limits<long long>::min());
    EXPECT_EQ(min.to_string(), "-9223372036854775808");
    EXPECT_EQ(-min, b);
    EXPECT_EQ(Rational(1, big) * Rational(1, big) * Rational(big) * Rational(big), Rational(1));
}

// Every operation agrees with GMP on random operands, including operands
// near the 64-bit boundary.
TEST(Rational, MatchesGmpOnRandomOperands) {
    oracle::Random rnd(7);
    const long long edge = std::numeric_limits<long long>::max() / 3;
    for (int t = 0; t < 20000; ++t) {
        const long long bound = (t % 4 == 0) ? edge : 1000;
        const long an = rnd.integer(-bound, bound);
        const long ad = rnd.integer(1, bound);
        const long bn = rnd.integer(-bound, bound);
        const long bd = rnd.integer(1, bound);
        const Rational a(an, ad);
        const Rational b(bn, bd);
        const mpq_class qa = q(an, ad);
        const mpq_class qb = q(bn, bd);
        ASSERT_EQ((a + b).to_string(), ref(qa + qb));
        ASSERT_EQ((a - b).to_string(), ref(qa - qb));
        ASSERT_EQ((a * b).to_string(), ref(qa * qb));
        if (bn != 0) {
            ASSERT_EQ((a / b).to_string(), ref(qa / qb));
        }
        ASSERT_EQ(a < b, qa < qb);
        ASSERT_EQ(a == b, qa == qb);
        ASSERT_DOUBLE_EQ(a.to_double(), qa.get_d());
    }
}

TEST(Rational, ExactSqrt) {
    EXPECT_EQ(Rational(9, 4).exact_sqrt(), Rational(3, 2));
    EXPECT_FALSE(Rational(2).exact_sqrt().has_value());
    EXPECT_FALSE(Rational(-4).exact_sqrt().has_value());
    EXPECT_EQ(Rational(0).exact_sqrt(), Rational(0));
    const Rational big = Rational::parse("1000000000000000000000000");
    EXPECT_EQ(big.exact_sqrt(), Rational::parse("1000000000000"));
}

TEST(GaussianRational, Arithmetic) {
    const GaussianRational z(Rational(1), Rational(2));
    const GaussianRational w(Rational(3), Rational(-1));
    EXPECT_EQ(z * w, GaussianRational(Rational(5), Rational(5)));
    EXPECT_EQ(z * w / w, z);
    EXPECT_EQ(z.conj(), GaussianRational(Rational(1), Rational(-2)));
    EXPECT_TRUE((z - z).is_zero());
    EXPECT_EQ(GaussianRational(Rational(3, 5), Rational(4, 5)).to_string(), "3/5+4/5i");
    EXPECT_EQ(GaussianRational(Rational(0), Rational(-2)).to_string(), "-2i");
    EXPECT_EQ(GaussianRational(7).to_string(), "7");
    EXPECT_THROW(z / GaussianRational(), Error);
}

TEST(Magnitude, Examples) {
    const Magnitude zero = magnitude(GaussianRational());
    ASSERT_TRUE(zero.exact);
    EXPECT_EQ(*zero.exact, Rational(0));

    const Magnitude m = magnitude(GaussianRational(Rational(3, 2)));
    ASSERT_TRUE(m.exact);
    EXPECT_EQ(*m.exact, Rational(3, 2));

    const GaussianRational z(Rational(3, 5), Rational(4, 5));
    EXPECT_EQ(magnitude_squared(z), Rational(1));
    const Magnitude mz = magnitude(z);
    EXPECT_NEAR(mz.approx, 1.0, mz.error + 1e-15);
    // A perfect rational square is resolved exactly.
    ASSERT_TRUE(mz.exact);
    EXPECT_EQ(*mz.exact, Rational(1));

    EXPECT_EQ(magnitude_squared(GaussianRational(Rational(1), Rational(1))), Rational(2));
    const Magnitude irr = magnitude(GaussianRational(Rational(1), Rational(1)));
    EXPECT_FALSE(irr.exact);
    EXPECT_NEAR(irr.approx, std::sqrt(2.0), irr.approx * 0x1p-48);
}

TEST(Magnitude, Properties) {
    oracle::Random rnd(11);
    for (int t = 0; t < 2000; ++t) {
        const GaussianRational z = rnd.gaussian();
        const GaussianRational w = rnd.gaussian();
        ASSERT_EQ(magnitude_squared(z * w), magnitude_squared(z) * magnitude_squared(w));
        const Magnitude mz = magnitude(z);
        if (mz.exact) {
            ASSERT_EQ(*mz.exact * *mz.exact, magnitude_squared(z));
        }
        ASSERT_LE(std::abs(mz.approx - std::sqrt(magnitude_squared(z).to_double())), mz.error + 1e-300);
        // |z + w|^2 <= (|z| + |w|)^2 via 2 Re(z conj w) <= 2 |z||w|, all squared.
        const Rational cross = (z * w.conj()).re();
        const Rational lhs = magnitude_squared(z + w) - magnitude_squared(z) - magnitude_squared(w);
        ASSERT_EQ(lhs, cross + cross);
        if (cross.sign() > 0) {
            ASSERT_LE(cross * cross, magnitude_squared(z) * magnitude_squared(w));
        }
        ASSERT_TRUE(less_equal(magnitude(z + w), magnitude(z) + magnitude(w), kApproxTolerance).holds);
    }
}

TEST(Magnitude, ComparisonsPreferExactPaths) {
    const Magnitude a = Magnitude::from_exact(Rational(1, 3));
    const Magnitude b = Magnitude::from_exact(Rational(1, 3) + Rational(1, 1000000000000LL));
    const Verdict v = less_equal(b, a, kApproxTolerance);
    EXPECT_TRUE(v.exact);
    EXPECT_FALSE(v.holds);  // differs by far less than the tolerance, still decided exactly

    const Magnitude s2 = Magnitude::from_square(Rational(2));
    const Magnitude s8 = Magnitude::from_square(Rational(8));
    const Verdict prod = equal(s2 * s2, Magnitude::from_exact(Rational(2)), kApproxTolerance);
    EXPECT_TRUE(prod.exact);
    EXPECT_TRUE(prod.holds);
    const Verdict sq = less_equal(s2, s8, kApproxTolerance);
    EXPECT_TRUE(sq.exact);
    EXPECT_TRUE(sq.holds);

    // Sums of irrational magnitudes fall back to the tolerance.
    const Verdict approx = less_equal(s2 + s2, s8, kApproxTolerance);
    EXPECT_FALSE(approx.exact);
    EXPECT_TRUE(approx.holds);
}
