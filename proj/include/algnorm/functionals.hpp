#pragma once

/*
 * Linear functionals vanishing on A^2.
 *
 * The basis indices outside the A^2 index set are enumerated increasingly as
 * L = {l_1, l_2, ...}. Every enumerated e_k has norm one under l1, l2 and sup.
 * L is cut into the pieces L_n = {a_n1, a_n2, ...} by the 2-adic pairing
 * m = 2^(n-1) * (2j - 1), so l_m = a_nj.
 *
 * On canonical basis vectors (D is the A^2 index set, leftovers are basis
 * vectors in neither L nor D, e.g. an adjoined coordinate):
 *
 *              l_m      a_nj, j >= 2   a_n1   other pieces   D   leftover
 *   theorem     m            -          -          -         0      1
 *   phi_n       -            j          0          1         0      1
 *
 * and both extend linearly.
 */

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "algnorm/algebra.hpp"
#include "algnorm/base_norm.hpp"
#include "algnorm/span.hpp"

namespace algnorm {

struct PiecePosition {
    Index piece;
    Index position;
    friend bool operator==(const PiecePosition&, const PiecePosition&) = default;
};

// m = 2^(piece-1) * (2*position - 1). Throws InvalidParameter for m = 0.
PiecePosition partition_position(Index m);
// Inverse of partition_position. Throws InvalidParameter on zero arguments or
// when the result does not fit in an Index.
Index partition_index(Index piece, Index position);

class ComplementEnumeration {
public:
    // Throws EmptyComplement when A^2 = A.
    static ComplementEnumeration build(const AlgebraSpec& algebra, const SpanOptions& options = {});

    const AlgebraSpec& algebra() const { return algebra_; }
    const SquareSpan& span() const { return *span_; }

    bool finite() const { return std::holds_alternative<std::vector<Index>>(members_); }
    // Number of members when finite.
    std::optional<Index> size() const;

    // l_m for m >= 1. Throws InvalidParameter past the end of a finite
    // enumeration.
    Index at(Index m) const;
    // The m with l_m = k, if k is enumerated.
    std::optional<Index> position(Index k) const;
    // First min(count, size) members.
    std::vector<Index> prefix(Index count) const;

    // Basis indices outside L and outside the span (adjoined coordinates).
    const std::vector<Index>& leftovers() const { return leftovers_; }

private:
    ComplementEnumeration(AlgebraSpec algebra, std::shared_ptr<const SquareSpan> span,
                          std::variant<std::vector<Index>, IndexSet> members, std::vector<Index> leftovers)
        : algebra_(std::move(algebra)),
          span_(std::move(span)),
          members_(std::move(members)),
          leftovers_(std::move(leftovers)) {}

    AlgebraSpec algebra_;
    std::shared_ptr<const SquareSpan> span_;
    // Either the explicit increasing list, or "every index not in this set".
    std::variant<std::vector<Index>, IndexSet> members_;
    std::vector<Index> leftovers_;
};

class FunctionalSpec {
public:
    struct TheoremPhi {};
    struct CorollaryPhiN {
        Index n;
    };
    using Kind = std::variant<TheoremPhi, CorollaryPhiN>;

    static FunctionalSpec theorem(ComplementEnumeration enumeration);
    // Throws InvalidParameter for n = 0.
    static FunctionalSpec corollary(ComplementEnumeration enumeration, Index n);

    const ComplementEnumeration& enumeration() const { return enumeration_; }
    const AlgebraSpec& algebra() const { return enumeration_.algebra(); }
    const Kind& kind() const { return kind_; }
    std::optional<Index> corollary_index() const;
    // "theorem" or "corollary:<n>".
    std::string label() const;

    // Table value for a basis index k outside the A^2 index set (L or a
    // leftover). eval_phi extends it linearly through SquareSpan::residual.
    GaussianRational basis_value(Index k) const;

private:
    FunctionalSpec(ComplementEnumeration enumeration, Kind kind)
        : enumeration_(std::move(enumeration)), kind_(kind) {}

    ComplementEnumeration enumeration_;
    Kind kind_;
};

GaussianRational eval_phi(const FunctionalSpec& f, const Element& a);

struct CertificateWitness {
    Index index;
    GaussianRational phi_value;
    Magnitude base_norm;
};

struct DiscontinuityCertificate {
    enum class Kind { Unbounded, Bounded };
    Kind kind;
    BaseNormTag base;
    std::string functional;
    // Unbounded: norm-one basis vectors on which |phi| grows without bound.
    std::vector<CertificateWitness> witnesses;
    // Bounded: max |phi(e_k)| over all canonical basis vectors.
    std::optional<Magnitude> sup;

    bool unbounded() const { return kind == Kind::Unbounded; }
};

inline constexpr Index kDefaultCertificateWitnesses = 10;

DiscontinuityCertificate is_discontinuous_certificate(const FunctionalSpec& f, BaseNormTag base,
                                                      Index witness_count = kDefaultCertificateWitnesses);

}  // namespace algnorm
