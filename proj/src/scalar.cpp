#include "algnorm/scalar.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "algnorm/error.hpp"

namespace algnorm {

namespace {

// Relative rounding unit for one double operation, doubled to absorb the
// conversion from an exact rational.
constexpr double kUlp = 0x1p-52;
// Stated relative error of a square root approximation.
constexpr double kSqrtRelativeBound = 0x1p-48;

bool is_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (!is_digits(text)) {
        throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(whole) + "'");
    }
    mpz_class value(std::string(text), 10);
    return negative ? mpz_class(-value) : value;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::FlagError: return "FlagError";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::MalformedTable: return "MalformedTable";
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::NotAssociative: return "NotAssociative";
        case ErrorKind::InfiniteCodimension: return "InfiniteCodimension";
        case ErrorKind::FiniteCodimension: return "FiniteCodimension";
        case ErrorKind::EmptyComplement: return "EmptyComplement";
        case ErrorKind::BoundedFunctional: return "BoundedFunctional";
        case ErrorKind::UnknownEntry: return "UnknownEntry";
        case ErrorKind::SymbolicOnly: return "SymbolicOnly";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
    if (a == 0) return b;
    if (b == 0) return a;
    const int shift = std::countr_zero(a | b);
    a >>= std::countr_zero(a);
    do {
        b >>= std::countr_zero(b);
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

u128 gcd128(u128 a, u128 b) {
    while ((a >> 64) != 0 || (b >> 64) != 0) {
        if (b == 0) return a;
        a %= b;
        std::swap(a, b);
    }
    return gcd64(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
}

u128 abs128(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

std::uint64_t abs64(std::int64_t v) { return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v); }

mpz_class to_mpz(i128 v) {
    const bool negative = v < 0;
    const u128 m = abs128(v);
    mpz_class hi(static_cast<unsigned long>(m >> 64));
    mpz_class r = (hi << 64) + mpz_class(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
    return negative ? mpz_class(-r) : r;
}

mpz_class to_mpz(u128 v) { return to_mpz(static_cast<i128>(v >> 1)) * 2 + static_cast<unsigned long>(v & 1); }

bool fits(const mpz_class& z) { return z.fits_slong_p() && z != static_cast<long>(kMin); }

std::uint64_t isqrt(std::uint64_t v) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && static_cast<u128>(r) * r > v) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= v) ++r;
    return r;
}

}  // namespace

Rational::Rational(long long value) {
    if (value == kMin) {
        assign(mpq_class(mpz_class(static_cast<long>(value))));
    } else {
        num_ = value;
    }
}

Rational::Rational(long long numerator, long long denominator) {
    if (denominator == 0) {
        throw Error(ErrorKind::InvalidParameter, "rational with zero denominator");
    }
    const bool negative = (numerator < 0) != (denominator < 0);
    const u128 n = abs64(numerator);
    const u128 d = abs64(denominator);
    assign_wide(negative ? -static_cast<i128>(n) : static_cast<i128>(n), d);
}

Rational::Rational(mpq_class value) {
    value.canonicalize();
    assign(std::move(value));
}

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_), big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
}

void Rational::assign(mpq_class q) {
    if (fits(q.get_num()) && fits(q.get_den())) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
        big_.reset();
    } else {
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

// Reduces num/den (den > 0) and stores it.
void Rational::assign_wide(i128 num, u128 den) {
    if (den != 1) {
        const u128 g = gcd128(abs128(num), den);
        if (g > 1) {
            num /= static_cast<i128>(g);
            den /= g;
        }
    }
    assign_reduced(num, den);
}

void Rational::assign_reduced(i128 num, u128 den) {
    if (num == 0) den = 1;
    if (num > kMin && num <= kMax && den <= static_cast<u128>(kMax)) {
        num_ = static_cast<std::int64_t>(num);
        den_ = static_cast<std::int64_t>(den);
        big_.reset();
        return;
    }
    big_ = std::make_unique<mpq_class>(to_mpz(num), to_mpz(den));
}

mpq_class Rational::value() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }

mpz_class Rational::denominator() const {
    return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

double Rational::to_double() const {
    constexpr std::uint64_t kExactDouble = std::uint64_t{1} << 53;
    if (small() && abs64(num_) <= kExactDouble && static_cast<std::uint64_t>(den_) <= kExactDouble) {
        // Both conversions are exact, so only the division rounds.
        return static_cast<double>(num_) / static_cast<double>(den_);
    }
    return value().get_d();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(mpq_class(parse_integer(text, text)));
    }
    mpz_class num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!is_digits(den_text)) {
        throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
    }
    mpz_class den(std::string(den_text), 10);
    if (den == 0) {
        throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const {
    if (big_) {
        if (big_->get_den() == 1) return big_->get_num().get_str();
        return big_->get_num().get_str() + "/" + big_->get_den().get_str();
    }
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) {
        return std::nullopt;
    }
    if (small()) {
        const std::uint64_t rn = isqrt(static_cast<std::uint64_t>(num_));
        const std::uint64_t rd = isqrt(static_cast<std::uint64_t>(den_));
        if (static_cast<u128>(rn) * rn != static_cast<u128>(num_) || static_cast<u128>(rd) * rd != static_cast<u128>(den_)) {
            return std::nullopt;
        }
        Rational r;
        r.num_ = static_cast<std::int64_t>(rn);
        r.den_ = static_cast<std::int64_t>(rd);
        return r;
    }
    const mpz_class& num = big_->get_num();
    const mpz_class& den = big_->get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(mpq_class(rn, rd));
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (small() && rhs.small()) {
        if (den_ == rhs.den_) {
            assign_wide(static_cast<i128>(num_) + rhs.num_, static_cast<u128>(den_));
            return *this;
        }
        // Knuth's reduced addition: only the shared part g of the
        // denominators can cancel against the new numerator.
        const std::uint64_t g = gcd64(static_cast<std::uint64_t>(den_), static_cast<std::uint64_t>(rhs.den_));
        const i128 n = static_cast<i128>(num_) * static_cast<i128>(static_cast<std::uint64_t>(rhs.den_) / g) +
                       static_cast<i128>(rhs.num_) * static_cast<i128>(static_cast<std::uint64_t>(den_) / g);
        const u128 d = static_cast<u128>(static_cast<std::uint64_t>(den_) / g) * static_cast<std::uint64_t>(rhs.den_);
        if (g == 1) {
            assign_reduced(n, d);
        } else {
            const std::uint64_t g2 = gcd64(static_cast<std::uint64_t>(abs128(n) % g), g);
            assign_reduced(n / static_cast<i128>(g2), d / g2);
        }
        return *this;
    }
    assign(value() + rhs.value());
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    if (small() && rhs.small()) {
        const std::uint64_t g1 = gcd64(abs64(num_), static_cast<std::uint64_t>(rhs.den_));
        const std::uint64_t g2 = gcd64(abs64(rhs.num_), static_cast<std::uint64_t>(den_));
        // gcd(0, d) = d, so neither g is zero.
        const i128 n = static_cast<i128>(num_ / static_cast<std::int64_t>(g1)) * (rhs.num_ / static_cast<std::int64_t>(g2));
        const u128 d = static_cast<u128>(static_cast<std::uint64_t>(den_) / g2) * (static_cast<std::uint64_t>(rhs.den_) / g1);
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        assign_reduced(n, d);
        return *this;
    }
    assign(value() * rhs.value());
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw Error(ErrorKind::InvalidParameter, "division by zero");
    }
    if (rhs.small()) {
        Rational inverse;
        inverse.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
        inverse.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
        return *this *= inverse;
    }
    assign(value() / rhs.value());
    return *this;
}

Rational Rational::operator-() const {
    Rational r = *this;
    if (r.big_) {
        mpq_neg(r.big_->get_mpq_t(), r.big_->get_mpq_t());
    } else {
        r.num_ = -r.num_;
    }
    return r;
}

bool operator==(const Rational& lhs, const Rational& rhs) {
    if (lhs.small() != rhs.small()) return false;
    if (lhs.small()) return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    return *lhs.big_ == *rhs.big_;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    if (lhs.small() && rhs.small()) {
        return static_cast<i128>(lhs.num_) * rhs.den_ <=> static_cast<i128>(rhs.num_) * lhs.den_;
    }
    const int c = cmp(lhs.value(), rhs.value());
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
    if (im_.is_zero() && rhs.im_.is_zero()) {
        re_ *= rhs.re_;
        return *this;
    }
    Rational re = re_ * rhs.re_ - im_ * rhs.im_;
    Rational im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
    const Rational norm = magnitude_squared(rhs);
    if (norm.is_zero()) {
        throw Error(ErrorKind::InvalidParameter, "division by zero");
    }
    *this *= rhs.conj();
    re_ /= norm;
    im_ /= norm;
    return *this;
}

std::string GaussianRational::to_string() const {
    if (im_.is_zero()) {
        return re_.to_string();
    }
    std::string imag = im_.to_string() + "i";
    if (re_.is_zero()) {
        return imag;
    }
    return re_.to_string() + (im_.sign() > 0 ? "+" : "") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

Rational magnitude_squared(const GaussianRational& z) {
    if (z.im().is_zero()) {
        return z.re() * z.re();
    }
    return z.re() * z.re() + z.im() * z.im();
}

Magnitude Magnitude::from_exact(const Rational& value) {
    Magnitude m;
    m.exact = value;
    m.approx = value.to_double();
    m.error = std::abs(m.approx) * kUlp;
    return m;
}

Magnitude Magnitude::from_square(const Rational& square) {
    if (auto root = square.exact_sqrt()) {
        return from_exact(*root);
    }
    Magnitude m;
    m.squared = square;
    m.approx = std::sqrt(square.to_double());
    m.error = m.approx * kSqrtRelativeBound;
    return m;
}

std::optional<Rational> Magnitude::square() const {
    if (exact) return *exact * *exact;
    return squared;
}

std::string Magnitude::to_string() const {
    if (exact) {
        return exact->to_string();
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "~%.17g", approx);
    return buf;
}

Magnitude magnitude(const GaussianRational& z) {
    if (z.is_real()) {
        return Magnitude::from_exact(z.re().abs());
    }
    if (z.is_imaginary()) {
        return Magnitude::from_exact(z.im().abs());
    }
    return Magnitude::from_square(magnitude_squared(z));
}

Magnitude operator+(const Magnitude& lhs, const Magnitude& rhs) {
    if (lhs.exact && rhs.exact) {
        return Magnitude::from_exact(*lhs.exact + *rhs.exact);
    }
    Magnitude m;
    m.approx = lhs.approx + rhs.approx;
    m.error = lhs.error + rhs.error + std::abs(m.approx) * kUlp;
    return m;
}

Magnitude operator*(const Magnitude& lhs, const Magnitude& rhs) {
    if (lhs.exact && rhs.exact) {
        return Magnitude::from_exact(*lhs.exact * *rhs.exact);
    }
    Magnitude m;
    if ((lhs.exact || lhs.squared) && (rhs.exact || rhs.squared)) {
        m.squared = *lhs.square() * *rhs.square();
        if (auto root = m.squared->exact_sqrt()) return Magnitude::from_exact(*root);
    }
    m.approx = lhs.approx * rhs.approx;
    m.error = std::abs(lhs.approx) * rhs.error + std::abs(rhs.approx) * lhs.error + lhs.error * rhs.error +
              std::abs(m.approx) * kUlp;
    return m;
}

namespace {

double slack(const Magnitude& lhs, const Magnitude& rhs, double tolerance) {
    const double scale = std::max({1.0, std::abs(lhs.approx), std::abs(rhs.approx)});
    return lhs.error + rhs.error + tolerance * scale;
}

}  // namespace

Verdict less_equal(const Magnitude& lhs, const Magnitude& rhs, double tolerance) {
    if (lhs.exact && rhs.exact) {
        return {*lhs.exact <= *rhs.exact, true};
    }
    if ((lhs.exact || lhs.squared) && (rhs.exact || rhs.squared)) {
        return {*lhs.square() <= *rhs.square(), true};
    }
    return {lhs.approx <= rhs.approx + slack(lhs, rhs, tolerance), false};
}

Verdict equal(const Magnitude& lhs, const Magnitude& rhs, double tolerance) {
    if (lhs.exact && rhs.exact) {
        return {*lhs.exact == *rhs.exact, true};
    }
    if ((lhs.exact || lhs.squared) && (rhs.exact || rhs.squared)) {
        return {*lhs.square() == *rhs.square(), true};
    }
    return {std::abs(lhs.approx - rhs.approx) <= slack(lhs, rhs, tolerance), false};
}

}  // namespace algnorm
