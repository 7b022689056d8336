#pragma once

/*
 * Associative algebras over the Gaussian rationals, all presented on a
 * countable canonical basis indexed from 1.
 *
 *   structure_constants   e_i e_j = sum_k c(i,j,k) e_k on 1..dim
 *   masked_pointwise      (ab)_k = a_k b_k for k in the mask, 0 elsewhere
 *   truncated_poly_ideal  x^n F[x] modulo degrees above N; index i is x^(n+i-1)
 *   trivial_extension     A x C with (a, s)(b, t) = (ab, 0)
 *   zero_product          every product is 0
 *
 * The adjoined coordinate of a trivial extension gets the index right after
 * a finite inner algebra, or a reserved index >= kSequenceLimit when the inner
 * algebra is infinite dimensional.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "algnorm/element.hpp"
#include "algnorm/error.hpp"
#include "algnorm/index_set.hpp"
#include "algnorm/scalar.hpp"

namespace algnorm {

struct StructureEntry {
    Index i;
    Index j;
    Index k;
    GaussianRational c;
};

class AlgebraSpec {
public:
    struct StructureConstants {
        Index dim;
        std::vector<StructureEntry> table;
        // products[(i-1)*dim + (j-1)] = e_i e_j
        std::vector<Element> products;

        const Element& product(Index i, Index j) const { return products[(i - 1) * dim + (j - 1)]; }
    };
    struct MaskedPointwise {
        IndexSet mask;
    };
    struct TruncatedPolyIdeal {
        Index n;
        Index N;

        Index dim() const { return N - n + 1; }
        Index degree(Index k) const { return n + k - 1; }
    };
    struct TrivialExtension {
        std::shared_ptr<const AlgebraSpec> inner;
        Index adjoined;
    };
    struct ZeroProduct {};
    using Variant = std::variant<StructureConstants, MaskedPointwise, TruncatedPolyIdeal, TrivialExtension, ZeroProduct>;

    // Throws MalformedTable for dim 0, indices outside 1..dim or repeated
    // (i, j, k) entries. Associativity is checked by validate().
    static AlgebraSpec structure_constants(Index dim, std::vector<StructureEntry> table);
    static AlgebraSpec masked_pointwise(IndexSet mask);
    // Requires n >= 1 and N >= 2n; throws InvalidParameter otherwise.
    static AlgebraSpec truncated_poly_ideal(Index n, Index N);
    static AlgebraSpec trivial_extension(AlgebraSpec inner);
    static AlgebraSpec zero_product();

    const Variant& variant() const { return *v_; }
    template <class T>
    const T* get_if() const {
        return std::get_if<T>(v_.get());
    }

    // "structure_constants", "masked_pointwise", ...
    std::string family() const;
    // One line, e.g. "masked_pointwise(evens)".
    std::string describe() const;

    // Finite dimension, or nullopt for the infinite sequence families.
    std::optional<Index> dimension() const;
    bool in_range(Index k) const;
    // Adjoined coordinates of (nested) trivial extensions, outermost last.
    std::vector<Index> adjoined_indices() const;

    // "e3", "x^4", "u".
    std::string basis_label(Index k) const;
    std::string render(const Element& a) const;

private:
    explicit AlgebraSpec(Variant v) : v_(std::make_shared<const Variant>(std::move(v))) {}
    std::shared_ptr<const Variant> v_;
};

// Throws IndexOutOfRange when a support index is outside the algebra.
Element multiply(const AlgebraSpec& algebra, const Element& a, const Element& b);

// Throws IndexOutOfRange when k is outside the algebra.
Element canonical_basis_element(const AlgebraSpec& algebra, Index k);

struct ValidationReport {
    std::string family;
    bool exhaustive = false;  // every basis triple checked
    std::uint64_t triples_checked = 0;
};

// Thrown by validate() with the first non-associative basis triple.
class NotAssociativeError : public Error {
public:
    NotAssociativeError(Index i, Index j, Index l, const std::string& message)
        : Error(ErrorKind::NotAssociative, message), i(i), j(j), l(l) {}
    Index i, j, l;
};

inline constexpr std::uint64_t kDefaultValidationSeed = 0x5eed'a55a'0c1dULL;

// Structure constants: all dim^3 basis triples. Other families are associative
// by construction and get `spot_checks` random triples from a fixed seed.
ValidationReport validate(const AlgebraSpec& algebra, std::uint64_t spot_checks = 1000,
                          std::uint64_t seed = kDefaultValidationSeed);

}  // namespace algnorm
