#include "algnorm/element.hpp"

#include <algorithm>

namespace algnorm {

namespace {

template <class Op>
std::vector<Element::Term> merge(const std::vector<Element::Term>& a, const std::vector<Element::Term>& b, Op op) {
    std::vector<Element::Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->first < j->first)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->first < i->first) {
            out.emplace_back(j->first, op(GaussianRational(), j->second));
            ++j;
        } else {
            GaussianRational c = op(i->second, j->second);
            if (!c.is_zero()) {
                out.emplace_back(i->first, std::move(c));
            }
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Element Element::basis(Index k, GaussianRational coefficient) {
    Element e;
    if (!coefficient.is_zero()) {
        e.terms_.emplace_back(k, std::move(coefficient));
    }
    return e;
}

Element Element::from_terms(std::vector<Term> terms) {
    std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    Element e;
    for (auto& t : terms) {
        if (!e.terms_.empty() && e.terms_.back().first == t.first) {
            e.terms_.back().second += t.second;
            if (e.terms_.back().second.is_zero()) {
                e.terms_.pop_back();
            }
        } else if (!t.second.is_zero()) {
            e.terms_.push_back(std::move(t));
        }
    }
    return e;
}

GaussianRational Element::coefficient(Index k) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const Term& t, Index key) { return t.first < key; });
    if (it != terms_.end() && it->first == k) {
        return it->second;
    }
    return {};
}

Element& Element::operator+=(const Element& rhs) {
    terms_ = merge(terms_, rhs.terms_, [](const GaussianRational& x, const GaussianRational& y) { return x + y; });
    return *this;
}

Element& Element::operator-=(const Element& rhs) {
    terms_ = merge(terms_, rhs.terms_, [](const GaussianRational& x, const GaussianRational& y) { return x - y; });
    return *this;
}

Element& Element::operator*=(const GaussianRational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) {
        t.second *= scalar;
    }
    return *this;
}

Element Element::operator-() const {
    Element e = *this;
    for (auto& t : e.terms_) {
        t.second = -t.second;
    }
    return e;
}

std::string Element::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        const std::string coeff = c.to_string();
        if (coeff != "1") {
            out += c.is_real() ? coeff : "(" + coeff + ")";
            out += "*";
        }
        out += "e" + std::to_string(k);
    }
    return out;
}

}  // namespace algnorm
