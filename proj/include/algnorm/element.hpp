#pragma once

#include <string>
#include <utility>
#include <vector>

#include "algnorm/index_set.hpp"
#include "algnorm/scalar.hpp"

namespace algnorm {

// A finitely supported coefficient vector over the canonical basis e_1, e_2, ...
// Terms are kept sorted by index and never hold a zero coefficient, so equal
// elements have identical term lists.
class Element {
public:
    using Term = std::pair<Index, GaussianRational>;

    Element() = default;

    static Element basis(Index k, GaussianRational coefficient = GaussianRational(1));
    // Sums repeated indices and drops zeros.
    static Element from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    GaussianRational coefficient(Index k) const;

    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element& operator*=(const GaussianRational& scalar);

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const GaussianRational& s, Element a) { return a *= s; }
    Element operator-() const;

    friend bool operator==(const Element&, const Element&) = default;

    // "3*e2 + (1+i)*e5", "0" for the zero element.
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

}  // namespace algnorm
