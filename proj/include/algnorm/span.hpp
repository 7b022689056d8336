#pragma once

/*
 * The square subalgebra A^2 = span{ab}, its codimension in A, representatives
 * of A/A^2, and identity detection.
 *
 * Finite dimensional structure-constant algebras get an explicit reduced row
 * echelon basis of A^2. The sequence families (and the truncated polynomial
 * ideal) have A^2 equal to the span of a set of canonical basis vectors; that
 * set is given analytically and cross-checked against the brute-force span of
 * all basis products inside a finite window.
 */

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "algnorm/algebra.hpp"
#include "algnorm/row_space.hpp"

namespace algnorm {

class Codimension {
public:
    static Codimension finite(Index k) { return Codimension(k); }
    static Codimension countably_infinite() { return Codimension(); }

    bool is_finite() const { return value_.has_value(); }
    // Precondition: is_finite().
    Index value() const { return *value_; }
    // "3" or "∞".
    std::string to_string() const;

    friend bool operator==(const Codimension&, const Codimension&) = default;

private:
    Codimension() = default;
    explicit Codimension(Index k) : value_(k) {}
    std::optional<Index> value_;
};

class SquareSpan {
public:
    struct FiniteDim {
        Index ambient_dim;
        RowSpace rows;
    };
    struct SequenceFamily {
        IndexSet span_indices;
        // Adjoined trivial-extension coordinates; never in the span even when
        // span_indices would admit them.
        std::vector<Index> adjoined;
    };
    using Variant = std::variant<FiniteDim, SequenceFamily>;

    explicit SquareSpan(Variant v) : v_(std::move(v)) {}

    const Variant& variant() const { return v_; }

    bool contains(const Element& a) const;
    bool contains_basis(Index k) const;
    // Coordinates of a along the canonical complement of the span: a minus a
    // member of A^2, supported only on basis indices outside the span.
    Element residual(const Element& a) const;

    std::string describe(const AlgebraSpec& algebra) const;

private:
    Variant v_;
};

struct SpanOptions {
    // Window size for the brute-force cross-check of the sequence families;
    // 0 disables it. Finite dimensional families are always checked in full.
    Index truncation = 50;
};

// Throws InternalInconsistency when the analytic description disagrees with
// the brute-force window span.
SquareSpan square_span(const AlgebraSpec& algebra, const SpanOptions& options = {});

inline bool contains(const SquareSpan& span, const Element& a) { return span.contains(a); }

// Indices probed by the brute-force cross-check: 1..min(T, dim) plus adjoined
// coordinates.
std::vector<Index> truncation_window(const AlgebraSpec& algebra, Index truncation);
// Row-reduced span of e_i e_j over all i, j in the window.
RowSpace brute_force_span(const AlgebraSpec& algebra, Index truncation);
// The analytic span restricted to the window, as a row space of unit vectors
// or reduced rows.
RowSpace window_span(const AlgebraSpec& algebra, const SquareSpan& span, Index truncation);

Codimension codimension(const AlgebraSpec& algebra);

// Canonical basis vectors whose classes form a basis of A/A^2. Throws
// InfiniteCodimension when the codimension is infinite.
std::vector<Element> quotient_basis(const AlgebraSpec& algebra);

enum class Side { Left, Right, TwoSided };
std::string to_string(Side side);

struct Identity {
    Element element;
    Side side;
};

std::optional<Identity> find_identity(const AlgebraSpec& algebra);

struct PropositionReport {
    enum class Outcome { Pass, ConverseFails, NotApplicable, InternalInconsistency };
    Outcome outcome;
    Codimension codimension;
    std::optional<Identity> identity;
    std::string detail;
};
std::string to_string(PropositionReport::Outcome outcome);

// Unital implies A = A^2; A = A^2 without an identity is the converse failing.
PropositionReport check_proposition(const AlgebraSpec& algebra);

}  // namespace algnorm
