#pragma once

/*
 * Exact scalars.
 *
 * Rational is an arbitrary precision fraction kept in lowest terms with a
 * positive denominator, stored inline while it fits in 64 bits. GaussianRational is re + im*i with rational parts and
 * is the coefficient field of every algebra in the library.
 *
 * Magnitude carries |z| for a scalar or a norm value. The square root of a
 * rational is usually irrational, so a magnitude stores an exact value when
 * one is known, the exact square when one is known, and always a double
 * approximation with an absolute error bound.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace algnorm {

class Rational {
public:
    Rational() = default;
    Rational(long long value);  // NOLINT: implicit on purpose
    Rational(long long numerator, long long denominator);
    explicit Rational(mpq_class value);

    Rational(const Rational& other);
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;

    // Accepts "p" or "p/q" with an optional leading sign; q must be nonzero.
    static Rational parse(std::string_view text);

    std::string to_string() const;
    double to_double() const;

    int sign() const;
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const;
    mpq_class value() const;
    mpz_class numerator() const;
    mpz_class denominator() const;

    Rational abs() const;
    // The nonnegative rational square root, when this is the square of a
    // rational.
    std::optional<Rational> exact_sqrt() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs);
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

private:
    // Values whose numerator and denominator fit in 64 bits live inline in
    // num_/den_; anything larger moves to big_. The representation is
    // canonical: big_ is set only when the value does not fit.
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;

    bool small() const { return !big_; }
    void assign(mpq_class q);
    void assign_wide(__int128 num, unsigned __int128 den);
    void assign_reduced(__int128 num, unsigned __int128 den);
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long long re) : re_(re) {}  // NOLINT: implicit on purpose
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_imaginary() const { return re_.is_zero(); }
    GaussianRational conj() const { return {re_, -im_}; }

    GaussianRational& operator+=(const GaussianRational& rhs);
    GaussianRational& operator-=(const GaussianRational& rhs);
    GaussianRational& operator*=(const GaussianRational& rhs);
    // Throws InvalidParameter on division by zero.
    GaussianRational& operator/=(const GaussianRational& rhs);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

    // "3/5+4/5i", "-2i", "7".
    std::string to_string() const;

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

Rational magnitude_squared(const GaussianRational& z);

struct Magnitude {
    std::optional<Rational> exact;
    // Exact square of an inexact value, when known.
    std::optional<Rational> squared;
    double approx = 0.0;
    // Absolute bound on |approx - true value|.
    double error = 0.0;

    static Magnitude from_exact(const Rational& value);
    // sqrt(square) for a nonnegative rational square.
    static Magnitude from_square(const Rational& square);

    bool is_exact() const { return exact.has_value(); }
    // exact^2 or squared, whichever is available.
    std::optional<Rational> square() const;
    std::string to_string() const;
};

Magnitude magnitude(const GaussianRational& z);

Magnitude operator+(const Magnitude& lhs, const Magnitude& rhs);
Magnitude operator*(const Magnitude& lhs, const Magnitude& rhs);

// Result of comparing two magnitudes. exact is false when the verdict came
// from the floating approximations (then within the given tolerance).
struct Verdict {
    bool holds = false;
    bool exact = false;
};

// lhs <= rhs. Decided exactly from exact values or exact squares when both
// sides have them; otherwise approximately with relative tolerance.
Verdict less_equal(const Magnitude& lhs, const Magnitude& rhs, double tolerance);
Verdict equal(const Magnitude& lhs, const Magnitude& rhs, double tolerance);

// 2^-40, the only tolerance the library applies to approximate comparisons.
inline constexpr double kApproxTolerance = 0x1p-40;

}  // namespace algnorm
