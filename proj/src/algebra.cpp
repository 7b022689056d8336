#include "algnorm/algebra.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "random.hpp"

namespace algnorm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_in_range(const AlgebraSpec& algebra, const Element& a) {
    for (const auto& [k, c] : a.terms()) {
        if (!algebra.in_range(k)) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "basis index " + std::to_string(k) + " is outside " + algebra.describe());
        }
    }
}

// Dense accumulator over indices 1..dim for the finite dimensional products.
class DenseAccumulator {
public:
    explicit DenseAccumulator(Index dim) : coeffs_(dim), touched_(dim, false) {}

    void add(Index k, const GaussianRational& c) {
        coeffs_[k - 1] += c;
        touched_[k - 1] = true;
    }

    Element finish() {
        std::vector<Element::Term> terms;
        for (Index k = 0; k < coeffs_.size(); ++k) {
            if (touched_[k] && !coeffs_[k].is_zero()) {
                terms.emplace_back(k + 1, std::move(coeffs_[k]));
            }
        }
        return Element::from_terms(std::move(terms));
    }

private:
    std::vector<GaussianRational> coeffs_;
    std::vector<bool> touched_;
};

Element multiply_unchecked(const AlgebraSpec& algebra, const Element& a, const Element& b);

Element multiply_structure(const AlgebraSpec::StructureConstants& sc, const Element& a, const Element& b) {
    DenseAccumulator acc(sc.dim);
    for (const auto& [i, ci] : a.terms()) {
        for (const auto& [j, cj] : b.terms()) {
            const Element& p = sc.product(i, j);
            if (p.is_zero()) continue;
            const GaussianRational scale = ci * cj;
            for (const auto& [k, ck] : p.terms()) {
                acc.add(k, scale * ck);
            }
        }
    }
    return acc.finish();
}

Element multiply_masked(const IndexSet& mask, const Element& a, const Element& b) {
    std::vector<Element::Term> out;
    auto i = a.terms().begin();
    auto j = b.terms().begin();
    while (i != a.terms().end() && j != b.terms().end()) {
        if (i->first < j->first) {
            ++i;
        } else if (j->first < i->first) {
            ++j;
        } else {
            if (mask.contains(i->first)) {
                out.emplace_back(i->first, i->second * j->second);
            }
            ++i;
            ++j;
        }
    }
    return Element::from_terms(std::move(out));
}

Element multiply_poly(const AlgebraSpec::TruncatedPolyIdeal& p, const Element& a, const Element& b) {
    DenseAccumulator acc(p.dim());
    for (const auto& [i, ci] : a.terms()) {
        for (const auto& [j, cj] : b.terms()) {
            const Index degree = p.degree(i) + p.degree(j);
            if (degree > p.N) continue;
            acc.add(degree - p.n + 1, ci * cj);
        }
    }
    return acc.finish();
}

Element strip(const Element& a, Index adjoined) {
    if (a.coefficient(adjoined).is_zero()) {
        return a;
    }
    std::vector<Element::Term> terms;
    for (const auto& t : a.terms()) {
        if (t.first != adjoined) terms.push_back(t);
    }
    return Element::from_terms(std::move(terms));
}

Element multiply_unchecked(const AlgebraSpec& algebra, const Element& a, const Element& b) {
    return std::visit(overloaded{
                          [&](const AlgebraSpec::StructureConstants& sc) { return multiply_structure(sc, a, b); },
                          [&](const AlgebraSpec::MaskedPointwise& m) { return multiply_masked(m.mask, a, b); },
                          [&](const AlgebraSpec::TruncatedPolyIdeal& p) { return multiply_poly(p, a, b); },
                          [&](const AlgebraSpec::TrivialExtension& t) {
                              return multiply_unchecked(*t.inner, strip(a, t.adjoined), strip(b, t.adjoined));
                          },
                          [](const AlgebraSpec::ZeroProduct&) { return Element(); },
                      },
                      algebra.variant());
}

std::string basis_label_at_depth(const AlgebraSpec& algebra, Index k, int depth) {
    if (const auto* t = algebra.get_if<AlgebraSpec::TrivialExtension>()) {
        if (k == t->adjoined) {
            return depth == 0 ? "u" : "u" + std::to_string(depth);
        }
        return basis_label_at_depth(*t->inner, k, depth + 1);
    }
    if (const auto* p = algebra.get_if<AlgebraSpec::TruncatedPolyIdeal>()) {
        return "x^" + std::to_string(p->degree(k));
    }
    return "e" + std::to_string(k);
}

Element random_element(std::mt19937_64& rng, const std::vector<Index>& window) {
    const auto size = detail::uniform(rng, 1, 3);
    std::vector<Element::Term> terms;
    for (std::uint64_t s = 0; s < size; ++s) {
        const Index k = window[detail::uniform(rng, 0, window.size() - 1)];
        const auto re = detail::uniform_signed(rng, -5, 5);
        const auto im = detail::uniform_signed(rng, -5, 5);
        terms.emplace_back(k, GaussianRational(Rational(re), Rational(im)));
    }
    return Element::from_terms(std::move(terms));
}

}  // namespace

AlgebraSpec AlgebraSpec::structure_constants(Index dim, std::vector<StructureEntry> table) {
    if (dim == 0) {
        throw Error(ErrorKind::MalformedTable, "structure constant algebra needs dim >= 1");
    }
    if (dim > 4096) {
        throw Error(ErrorKind::MalformedTable, "structure constant dimension " + std::to_string(dim) + " too large");
    }
    std::set<std::tuple<Index, Index, Index>> seen;
    std::vector<std::vector<Element::Term>> raw(dim * dim);
    for (const auto& e : table) {
        for (Index x : {e.i, e.j, e.k}) {
            if (x < 1 || x > dim) {
                throw Error(ErrorKind::MalformedTable, "table index " + std::to_string(x) + " outside 1.." +
                                                           std::to_string(dim));
            }
        }
        if (!seen.emplace(e.i, e.j, e.k).second) {
            throw Error(ErrorKind::MalformedTable, "repeated table entry (" + std::to_string(e.i) + "," +
                                                       std::to_string(e.j) + "," + std::to_string(e.k) + ")");
        }
        raw[(e.i - 1) * dim + (e.j - 1)].emplace_back(e.k, e.c);
    }
    StructureConstants sc{dim, std::move(table), {}};
    sc.products.reserve(raw.size());
    for (auto& terms : raw) {
        sc.products.push_back(Element::from_terms(std::move(terms)));
    }
    return AlgebraSpec(std::move(sc));
}

AlgebraSpec AlgebraSpec::masked_pointwise(IndexSet mask) { return AlgebraSpec(MaskedPointwise{std::move(mask)}); }

AlgebraSpec AlgebraSpec::truncated_poly_ideal(Index n, Index N) {
    if (n < 1) {
        throw Error(ErrorKind::InvalidParameter, "truncated polynomial ideal needs n >= 1");
    }
    if (N < 2 * n) {
        throw Error(ErrorKind::InvalidParameter, "truncated polynomial ideal needs N >= 2n (n=" + std::to_string(n) +
                                                     ", N=" + std::to_string(N) + ")");
    }
    if (N > 4096) {
        throw Error(ErrorKind::InvalidParameter, "truncation degree " + std::to_string(N) + " too large");
    }
    return AlgebraSpec(TruncatedPolyIdeal{n, N});
}

AlgebraSpec AlgebraSpec::trivial_extension(AlgebraSpec inner) {
    Index adjoined;
    if (auto dim = inner.dimension()) {
        adjoined = *dim + 1;
    } else {
        const auto inner_adjoined = inner.adjoined_indices();
        adjoined = inner_adjoined.empty() ? kSequenceLimit : inner_adjoined.back() + 1;
    }
    return AlgebraSpec(TrivialExtension{std::make_shared<const AlgebraSpec>(std::move(inner)), adjoined});
}

AlgebraSpec AlgebraSpec::zero_product() { return AlgebraSpec(ZeroProduct{}); }

std::string AlgebraSpec::family() const {
    return std::visit(overloaded{
                          [](const StructureConstants&) { return "structure_constants"; },
                          [](const MaskedPointwise&) { return "masked_pointwise"; },
                          [](const TruncatedPolyIdeal&) { return "truncated_poly_ideal"; },
                          [](const TrivialExtension&) { return "trivial_extension"; },
                          [](const ZeroProduct&) { return "zero_product"; },
                      },
                      *v_);
}

std::string AlgebraSpec::describe() const {
    return std::visit(overloaded{
                          [](const StructureConstants& sc) {
                              return "structure_constants(dim=" + std::to_string(sc.dim) + ")";
                          },
                          [](const MaskedPointwise& m) { return "masked_pointwise(" + m.mask.describe() + ")"; },
                          [](const TruncatedPolyIdeal& p) {
                              return "truncated_poly_ideal(n=" + std::to_string(p.n) + ", N=" + std::to_string(p.N) +
                                     ")";
                          },
                          [](const TrivialExtension& t) { return "trivial_extension(" + t.inner->describe() + ")"; },
                          [](const ZeroProduct&) { return std::string("zero_product"); },
                      },
                      *v_);
}

std::optional<Index> AlgebraSpec::dimension() const {
    return std::visit(overloaded{
                          [](const StructureConstants& sc) -> std::optional<Index> { return sc.dim; },
                          [](const TruncatedPolyIdeal& p) -> std::optional<Index> { return p.dim(); },
                          [](const TrivialExtension& t) -> std::optional<Index> {
                              auto d = t.inner->dimension();
                              return d ? std::optional<Index>(*d + 1) : std::nullopt;
                          },
                          [](const auto&) -> std::optional<Index> { return std::nullopt; },
                      },
                      *v_);
}

bool AlgebraSpec::in_range(Index k) const {
    return std::visit(overloaded{
                          [k](const StructureConstants& sc) { return k >= 1 && k <= sc.dim; },
                          [k](const TruncatedPolyIdeal& p) { return k >= 1 && k <= p.dim(); },
                          [k](const TrivialExtension& t) { return k == t.adjoined || t.inner->in_range(k); },
                          [k](const auto&) { return k >= 1 && k < kSequenceLimit; },
                      },
                      *v_);
}

std::vector<Index> AlgebraSpec::adjoined_indices() const {
    if (const auto* t = get_if<TrivialExtension>()) {
        auto out = t->inner->adjoined_indices();
        out.push_back(t->adjoined);
        return out;
    }
    return {};
}

std::string AlgebraSpec::basis_label(Index k) const { return basis_label_at_depth(*this, k, 0); }

std::string AlgebraSpec::render(const Element& a) const {
    if (a.is_zero()) {
        return "0";
    }
    std::string out;
    for (const auto& [k, c] : a.terms()) {
        if (!out.empty()) out += " + ";
        const std::string coeff = c.to_string();
        if (coeff != "1") {
            out += (c.is_real() ? coeff : "(" + coeff + ")") + "*";
        }
        out += basis_label(k);
    }
    return out;
}

Element multiply(const AlgebraSpec& algebra, const Element& a, const Element& b) {
    require_in_range(algebra, a);
    require_in_range(algebra, b);
    return multiply_unchecked(algebra, a, b);
}

Element canonical_basis_element(const AlgebraSpec& algebra, Index k) {
    if (!algebra.in_range(k)) {
        throw Error(ErrorKind::IndexOutOfRange, "basis index " + std::to_string(k) + " is outside " + algebra.describe());
    }
    return Element::basis(k);
}

ValidationReport validate(const AlgebraSpec& algebra, std::uint64_t spot_checks, std::uint64_t seed) {
    ValidationReport report{algebra.family(), false, 0};

    if (const auto* sc = algebra.get_if<AlgebraSpec::StructureConstants>()) {
        report.exhaustive = true;
        for (Index i = 1; i <= sc->dim; ++i) {
            for (Index j = 1; j <= sc->dim; ++j) {
                const Element& ij = sc->product(i, j);
                for (Index l = 1; l <= sc->dim; ++l) {
                    const Element left = multiply_unchecked(algebra, ij, Element::basis(l));
                    const Element right = multiply_unchecked(algebra, Element::basis(i), sc->product(j, l));
                    ++report.triples_checked;
                    if (left != right) {
                        throw NotAssociativeError(i, j, l,
                                                  "not associative at (e" + std::to_string(i) + ", e" +
                                                      std::to_string(j) + ", e" + std::to_string(l) + "): (ab)c = " +
                                                      left.to_string() + " but a(bc) = " + right.to_string());
                    }
                }
            }
        }
        return report;
    }

    if (const auto* t = algebra.get_if<AlgebraSpec::TrivialExtension>()) {
        validate(*t->inner, spot_checks, seed);
    }

    std::vector<Index> window;
    const Index top = algebra.dimension().value_or(16);
    for (Index k = 1; k <= top; ++k) {
        if (algebra.in_range(k)) window.push_back(k);
    }
    for (Index u : algebra.adjoined_indices()) {
        if (std::find(window.begin(), window.end(), u) == window.end()) window.push_back(u);
    }

    std::mt19937_64 rng(seed);
    for (std::uint64_t trial = 0; trial < spot_checks; ++trial) {
        const Element a = random_element(rng, window);
        const Element b = random_element(rng, window);
        const Element c = random_element(rng, window);
        const Element left = multiply_unchecked(algebra, multiply_unchecked(algebra, a, b), c);
        const Element right = multiply_unchecked(algebra, a, multiply_unchecked(algebra, b, c));
        ++report.triples_checked;
        if (left != right) {
            throw Error(ErrorKind::InternalInconsistency,
                        algebra.describe() + " failed an associativity spot check on a=" + a.to_string() +
                            ", b=" + b.to_string() + ", c=" + c.to_string());
        }
    }
    return report;
}

}  // namespace algnorm
