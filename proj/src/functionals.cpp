#include "algnorm/functionals.hpp"

#include <algorithm>
#include <bit>

namespace algnorm {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

using Members = std::variant<std::vector<Index>, IndexSet>;

struct Parts {
    Members members;
    std::vector<Index> leftovers;
};

Parts complement_parts(const AlgebraSpec& algebra) {
    return std::visit(overloaded{
                          [&](const AlgebraSpec::StructureConstants& sc) {
                              const auto span = square_span(algebra);
                              const auto& rows = std::get<SquareSpan::FiniteDim>(span.variant()).rows;
                              std::vector<Index> free;
                              for (Index k = 1; k <= sc.dim; ++k) {
                                  if (!rows.is_pivot(k)) free.push_back(k);
                              }
                              return Parts{std::move(free), {}};
                          },
                          [](const AlgebraSpec::MaskedPointwise& m) {
                              if (m.mask.complement_is_finite()) {
                                  return Parts{m.mask.finite_complement(), {}};
                              }
                              return Parts{m.mask, {}};
                          },
                          [](const AlgebraSpec::TruncatedPolyIdeal& p) {
                              std::vector<Index> low;
                              for (Index k = 1; k <= p.n; ++k) low.push_back(k);
                              return Parts{std::move(low), {}};
                          },
                          [](const AlgebraSpec::TrivialExtension& t) {
                              Parts inner = complement_parts(*t.inner);
                              inner.leftovers.push_back(t.adjoined);
                              return inner;
                          },
                          [](const AlgebraSpec::ZeroProduct&) { return Parts{IndexSet::finite_list({}), {}}; },
                      },
                      algebra.variant());
}

}  // namespace

PiecePosition partition_position(Index m) {
    if (m == 0) {
        throw Error(ErrorKind::InvalidParameter, "partition positions start at 1");
    }
    const int twos = std::countr_zero(m);
    const Index odd = m >> twos;
    return {static_cast<Index>(twos) + 1, (odd + 1) / 2};
}

Index partition_index(Index piece, Index position) {
    if (piece == 0 || position == 0) {
        throw Error(ErrorKind::InvalidParameter, "pieces and positions start at 1");
    }
    const Index odd = 2 * position - 1;
    if (position > (UINT64_MAX >> 1) || piece > 64 || (piece > 1 && (odd >> (65 - piece)) != 0)) {
        throw Error(ErrorKind::InvalidParameter, "partition index overflows for piece " + std::to_string(piece) +
                                                     ", position " + std::to_string(position));
    }
    return odd << (piece - 1);
}

ComplementEnumeration ComplementEnumeration::build(const AlgebraSpec& algebra, const SpanOptions& options) {
    if (codimension(algebra) == Codimension::finite(0)) {
        throw Error(ErrorKind::EmptyComplement, "A^2 = A for " + algebra.describe() + "; no functional to build");
    }
    auto span = std::make_shared<const SquareSpan>(square_span(algebra, options));
    Parts parts = complement_parts(algebra);
    return ComplementEnumeration(algebra, std::move(span), std::move(parts.members), std::move(parts.leftovers));
}

std::optional<Index> ComplementEnumeration::size() const {
    if (const auto* list = std::get_if<std::vector<Index>>(&members_)) {
        return list->size();
    }
    return std::nullopt;
}

Index ComplementEnumeration::at(Index m) const {
    if (m == 0) {
        throw Error(ErrorKind::InvalidParameter, "enumeration positions start at 1");
    }
    if (const auto* list = std::get_if<std::vector<Index>>(&members_)) {
        if (m > list->size()) {
            throw Error(ErrorKind::InvalidParameter, "enumeration of " + algebra_.describe() + " has only " +
                                                         std::to_string(list->size()) + " members");
        }
        return (*list)[m - 1];
    }
    return std::get<IndexSet>(members_).nth_complement(m);
}

std::optional<Index> ComplementEnumeration::position(Index k) const {
    if (const auto* list = std::get_if<std::vector<Index>>(&members_)) {
        auto it = std::lower_bound(list->begin(), list->end(), k);
        if (it != list->end() && *it == k) {
            return static_cast<Index>(it - list->begin()) + 1;
        }
        return std::nullopt;
    }
    const auto& span_set = std::get<IndexSet>(members_);
    if (k == 0 || k >= kSequenceLimit || span_set.contains(k)) {
        return std::nullopt;
    }
    return span_set.complement_count_up_to(k);
}

std::vector<Index> ComplementEnumeration::prefix(Index count) const {
    const Index n = std::min(count, size().value_or(count));
    std::vector<Index> out;
    out.reserve(n);
    for (Index m = 1; m <= n; ++m) {
        out.push_back(at(m));
    }
    return out;
}

FunctionalSpec FunctionalSpec::theorem(ComplementEnumeration enumeration) {
    return FunctionalSpec(std::move(enumeration), TheoremPhi{});
}

FunctionalSpec FunctionalSpec::corollary(ComplementEnumeration enumeration, Index n) {
    if (n == 0) {
        throw Error(ErrorKind::InvalidParameter, "corollary functionals are numbered from 1");
    }
    return FunctionalSpec(std::move(enumeration), CorollaryPhiN{n});
}

std::optional<Index> FunctionalSpec::corollary_index() const {
    if (const auto* c = std::get_if<CorollaryPhiN>(&kind_)) {
        return c->n;
    }
    return std::nullopt;
}

std::string FunctionalSpec::label() const {
    if (auto n = corollary_index()) {
        return "corollary:" + std::to_string(*n);
    }
    return "theorem";
}

GaussianRational FunctionalSpec::basis_value(Index k) const {
    const auto& leftovers = enumeration_.leftovers();
    if (std::find(leftovers.begin(), leftovers.end(), k) != leftovers.end()) {
        return GaussianRational(1);
    }
    if (auto m = enumeration_.position(k)) {
        if (std::holds_alternative<TheoremPhi>(kind_)) {
            return GaussianRational(static_cast<long long>(*m));
        }
        const auto [piece, j] = partition_position(*m);
        if (piece != std::get<CorollaryPhiN>(kind_).n) {
            return GaussianRational(1);
        }
        return j >= 2 ? GaussianRational(static_cast<long long>(j)) : GaussianRational(0);
    }
    if (enumeration_.span().contains_basis(k)) {
        return GaussianRational(0);
    }
    return GaussianRational(1);
}

GaussianRational eval_phi(const FunctionalSpec& f, const Element& a) {
    GaussianRational value;
    const Element r = f.enumeration().span().residual(a);
    for (const auto& [k, c] : r.terms()) {
        value += c * f.basis_value(k);
    }
    return value;
}

DiscontinuityCertificate is_discontinuous_certificate(const FunctionalSpec& f, BaseNormTag base, Index witness_count) {
    const auto& e = f.enumeration();
    DiscontinuityCertificate cert{DiscontinuityCertificate::Kind::Bounded, base, f.label(), {}, std::nullopt};

    if (!e.finite()) {
        cert.kind = DiscontinuityCertificate::Kind::Unbounded;
        const auto piece = f.corollary_index();
        for (Index j = 1; j <= witness_count; ++j) {
            const Index k = e.at(piece ? partition_index(*piece, j) : j);
            cert.witnesses.push_back({k, eval_phi(f, Element::basis(k)), base_norm(base, Element::basis(k))});
        }
        return cert;
    }

    // Every basis vector outside this candidate list lies in D, where phi is 0.
    std::vector<Index> candidates;
    if (auto dim = e.algebra().dimension()) {
        for (Index k = 1; k <= *dim; ++k) candidates.push_back(k);
    } else {
        candidates = e.prefix(*e.size());
        candidates.insert(candidates.end(), e.leftovers().begin(), e.leftovers().end());
    }
    GaussianRational best;
    Rational best_square(0);
    for (Index k : candidates) {
        GaussianRational v = eval_phi(f, Element::basis(k));
        Rational sq = magnitude_squared(v);
        if (sq > best_square) {
            best_square = std::move(sq);
            best = std::move(v);
        }
    }
    cert.sup = magnitude(best);
    return cert;
}

}  // namespace algnorm
