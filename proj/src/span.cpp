#include "algnorm/span.hpp"

#include <algorithm>

namespace algnorm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool is_adjoined(const std::vector<Index>& adjoined, Index k) {
    return std::find(adjoined.begin(), adjoined.end(), k) != adjoined.end();
}

bool sequence_contains(const SquareSpan::SequenceFamily& s, Index k) {
    return s.span_indices.contains(k) && !is_adjoined(s.adjoined, k);
}

SquareSpan analytic_span(const AlgebraSpec& algebra) {
    return std::visit(
        overloaded{
            [&](const AlgebraSpec::StructureConstants& sc) {
                RowSpace rows;
                for (const Element& p : sc.products) {
                    rows.insert(p);
                }
                return SquareSpan(SquareSpan::FiniteDim{sc.dim, std::move(rows)});
            },
            [](const AlgebraSpec::MaskedPointwise& m) {
                return SquareSpan(SquareSpan::SequenceFamily{m.mask, {}});
            },
            [](const AlgebraSpec::TruncatedPolyIdeal& p) {
                // degrees 2n..N
                std::vector<Index> indices;
                for (Index k = p.n + 1; k <= p.dim(); ++k) {
                    indices.push_back(k);
                }
                return SquareSpan(SquareSpan::SequenceFamily{IndexSet::finite_list(std::move(indices)), {}});
            },
            [](const AlgebraSpec::TrivialExtension& t) {
                SquareSpan inner = analytic_span(*t.inner);
                if (auto* f = std::get_if<SquareSpan::FiniteDim>(&inner.variant())) {
                    return SquareSpan(SquareSpan::FiniteDim{f->ambient_dim + 1, f->rows});
                }
                auto s = std::get<SquareSpan::SequenceFamily>(inner.variant());
                s.adjoined.push_back(t.adjoined);
                return SquareSpan(std::move(s));
            },
            [](const AlgebraSpec::ZeroProduct&) {
                return SquareSpan(SquareSpan::SequenceFamily{IndexSet::finite_list({}), {}});
            },
        },
        algebra.variant());
}

}  // namespace

std::string Codimension::to_string() const { return value_ ? std::to_string(*value_) : "∞"; }

bool SquareSpan::contains(const Element& a) const {
    if (const auto* f = std::get_if<FiniteDim>(&v_)) {
        return f->rows.contains(a);
    }
    const auto& s = std::get<SequenceFamily>(v_);
    return std::all_of(a.terms().begin(), a.terms().end(),
                       [&](const Element::Term& t) { return sequence_contains(s, t.first); });
}

bool SquareSpan::contains_basis(Index k) const { return contains(Element::basis(k)); }

Element SquareSpan::residual(const Element& a) const {
    if (const auto* f = std::get_if<FiniteDim>(&v_)) {
        return f->rows.reduce(a);
    }
    const auto& s = std::get<SequenceFamily>(v_);
    std::vector<Element::Term> terms;
    for (const auto& t : a.terms()) {
        if (!sequence_contains(s, t.first)) terms.push_back(t);
    }
    return Element::from_terms(std::move(terms));
}

std::string SquareSpan::describe(const AlgebraSpec& algebra) const {
    if (const auto* f = std::get_if<FiniteDim>(&v_)) {
        std::string out = "span{";
        for (std::size_t i = 0; i < f->rows.rows().size(); ++i) {
            if (i) out += ", ";
            out += algebra.render(f->rows.rows()[i]);
        }
        return out + "} (rank " + std::to_string(f->rows.rank()) + " of " + std::to_string(f->ambient_dim) + ")";
    }
    const auto& s = std::get<SequenceFamily>(v_);
    if (const auto* p = algebra.get_if<AlgebraSpec::TruncatedPolyIdeal>()) {
        return "span{x^k : " + std::to_string(2 * p->n) + " <= k <= " + std::to_string(p->N) + "}";
    }
    if (const auto* l = std::get_if<IndexSet::FiniteList>(&s.span_indices.variant()); l && l->indices.empty()) {
        return "{0}";
    }
    std::string out = "span{e_k : k in " + s.span_indices.describe() + "}";
    if (!s.adjoined.empty()) out += " x {0}";
    return out;
}

std::vector<Index> truncation_window(const AlgebraSpec& algebra, Index truncation) {
    std::vector<Index> window;
    const Index top = algebra.dimension().value_or(truncation);
    for (Index k = 1; k <= top; ++k) {
        if (algebra.in_range(k)) window.push_back(k);
    }
    for (Index u : algebra.adjoined_indices()) {
        if (std::find(window.begin(), window.end(), u) == window.end()) window.push_back(u);
    }
    return window;
}

RowSpace brute_force_span(const AlgebraSpec& algebra, Index truncation) {
    const auto window = truncation_window(algebra, truncation);
    RowSpace rows;
    for (Index i : window) {
        for (Index j : window) {
            rows.insert(multiply(algebra, Element::basis(i), Element::basis(j)));
        }
    }
    return rows;
}

RowSpace window_span(const AlgebraSpec& algebra, const SquareSpan& span, Index truncation) {
    if (const auto* f = std::get_if<SquareSpan::FiniteDim>(&span.variant())) {
        return f->rows;
    }
    RowSpace rows;
    for (Index k : truncation_window(algebra, truncation)) {
        if (span.contains_basis(k)) rows.insert(Element::basis(k));
    }
    return rows;
}

SquareSpan square_span(const AlgebraSpec& algebra, const SpanOptions& options) {
    SquareSpan span = analytic_span(algebra);
    const bool sequence = std::holds_alternative<SquareSpan::SequenceFamily>(span.variant());
    if (sequence && (options.truncation > 0 || algebra.dimension())) {
        const Index t = options.truncation > 0 ? options.truncation : 1;
        if (brute_force_span(algebra, t) != window_span(algebra, span, t)) {
            throw Error(ErrorKind::InternalInconsistency, "analytic A^2 of " + algebra.describe() +
                                                              " disagrees with the brute-force span at T=" +
                                                              std::to_string(t));
        }
    }
    return span;
}

Codimension codimension(const AlgebraSpec& algebra) {
    return std::visit(overloaded{
                          [&](const AlgebraSpec::StructureConstants& sc) {
                              const auto span = analytic_span(algebra);
                              return Codimension::finite(sc.dim -
                                                         std::get<SquareSpan::FiniteDim>(span.variant()).rows.rank());
                          },
                          [](const AlgebraSpec::MaskedPointwise& m) {
                              return m.mask.complement_is_finite()
                                         ? Codimension::finite(m.mask.finite_complement().size())
                                         : Codimension::countably_infinite();
                          },
                          [](const AlgebraSpec::TruncatedPolyIdeal& p) { return Codimension::finite(p.n); },
                          [](const AlgebraSpec::TrivialExtension& t) {
                              const Codimension inner = codimension(*t.inner);
                              return inner.is_finite() ? Codimension::finite(inner.value() + 1) : inner;
                          },
                          [](const AlgebraSpec::ZeroProduct&) { return Codimension::countably_infinite(); },
                      },
                      algebra.variant());
}

std::vector<Element> quotient_basis(const AlgebraSpec& algebra) {
    auto infinite = [&] {
        return Error(ErrorKind::InfiniteCodimension, "A^2 has infinite codimension in " + algebra.describe());
    };
    std::vector<Index> indices;
    std::visit(overloaded{
                   [&](const AlgebraSpec::StructureConstants& sc) {
                       const auto span = analytic_span(algebra);
                       const auto& rows = std::get<SquareSpan::FiniteDim>(span.variant()).rows;
                       for (Index k = 1; k <= sc.dim; ++k) {
                           if (!rows.is_pivot(k)) indices.push_back(k);
                       }
                   },
                   [&](const AlgebraSpec::MaskedPointwise& m) {
                       if (!m.mask.complement_is_finite()) throw infinite();
                       indices = m.mask.finite_complement();
                   },
                   [&](const AlgebraSpec::TruncatedPolyIdeal& p) {
                       for (Index k = 1; k <= p.n; ++k) indices.push_back(k);
                   },
                   [&](const AlgebraSpec::TrivialExtension& t) {
                       for (const Element& e : quotient_basis(*t.inner)) {
                           indices.push_back(e.terms().front().first);
                       }
                       indices.push_back(t.adjoined);
                   },
                   [&](const AlgebraSpec::ZeroProduct&) { throw infinite(); },
               },
               algebra.variant());
    std::vector<Element> out;
    out.reserve(indices.size());
    for (Index k : indices) {
        out.push_back(Element::basis(k));
    }
    return out;
}

std::string to_string(Side side) {
    switch (side) {
        case Side::Left: return "left";
        case Side::Right: return "right";
        case Side::TwoSided: return "two-sided";
    }
    return "?";
}

namespace {

// Solves sum_i x_i * (e_i e_j) = e_j for every j (left) or
// sum_i x_i * (e_j e_i) = e_j (right). Unknown x_i is coordinate i and the
// right-hand side is coordinate dim+1 of each equation row.
std::optional<Element> solve_identity(const AlgebraSpec::StructureConstants& sc, bool left) {
    const Index rhs = sc.dim + 1;
    RowSpace system;
    for (Index j = 1; j <= sc.dim; ++j) {
        for (Index k = 1; k <= sc.dim; ++k) {
            std::vector<Element::Term> eq;
            for (Index i = 1; i <= sc.dim; ++i) {
                const Element& p = left ? sc.product(i, j) : sc.product(j, i);
                GaussianRational c = p.coefficient(k);
                if (!c.is_zero()) eq.emplace_back(i, std::move(c));
            }
            if (j == k) eq.emplace_back(rhs, GaussianRational(1));
            system.insert(Element::from_terms(std::move(eq)));
        }
    }
    if (system.is_pivot(rhs)) {
        return std::nullopt;
    }
    std::vector<Element::Term> solution;
    for (const Element& row : system.rows()) {
        solution.emplace_back(row.terms().front().first, row.coefficient(rhs));
    }
    return Element::from_terms(std::move(solution));
}

}  // namespace

std::optional<Identity> find_identity(const AlgebraSpec& algebra) {
    const auto* sc = algebra.get_if<AlgebraSpec::StructureConstants>();
    if (sc == nullptr) {
        // Sequence families would need an infinitely supported unit, the
        // polynomial ideal only raises degrees, and a trivial extension kills
        // the adjoined coordinate.
        return std::nullopt;
    }
    auto left = solve_identity(*sc, true);
    auto right = solve_identity(*sc, false);
    if (left && right) {
        return Identity{*left, Side::TwoSided};
    }
    if (left) return Identity{*left, Side::Left};
    if (right) return Identity{*right, Side::Right};
    return std::nullopt;
}

std::string to_string(PropositionReport::Outcome outcome) {
    switch (outcome) {
        case PropositionReport::Outcome::Pass: return "pass";
        case PropositionReport::Outcome::ConverseFails: return "converse-fails";
        case PropositionReport::Outcome::NotApplicable: return "not-applicable";
        case PropositionReport::Outcome::InternalInconsistency: return "internal-inconsistency";
    }
    return "?";
}

PropositionReport check_proposition(const AlgebraSpec& algebra) {
    const Codimension codim = codimension(algebra);
    auto identity = find_identity(algebra);
    const bool square_is_all = codim == Codimension::finite(0);
    if (identity) {
        if (square_is_all) {
            return {PropositionReport::Outcome::Pass, codim, identity,
                    "unital (" + to_string(identity->side) + " identity " + algebra.render(identity->element) +
                        ") and A^2 = A"};
        }
        return {PropositionReport::Outcome::InternalInconsistency, codim, identity,
                "identity found but A^2 has codimension " + codim.to_string()};
    }
    if (square_is_all) {
        return {PropositionReport::Outcome::ConverseFails, codim, std::nullopt,
                "A^2 = A but there is no left or right identity"};
    }
    return {PropositionReport::Outcome::NotApplicable, codim, std::nullopt,
            "no identity and A^2 has codimension " + codim.to_string()};
}

}  // namespace algnorm
