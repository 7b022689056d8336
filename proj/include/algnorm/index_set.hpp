#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace algnorm {

using Index = std::uint64_t;

// Sequence families index their canonical basis by 1, 2, 3, ... and stay
// strictly below this bound; indices from the bound upward are reserved for
// adjoined directions of trivial extensions.
inline constexpr Index kSequenceLimit = Index{1} << 62;

/*
 * A decidable set of positive basis indices. Used as the multiplication mask of
 * the masked pointwise algebras and as the index characterization of A^2 for
 * the sequence families.
 */
class IndexSet {
public:
    struct All {};
    struct Evens {};
    struct Odds {};
    struct Residue {
        Index modulus;
        Index residue;  // normalized into [0, modulus)
    };
    struct FiniteList {
        std::vector<Index> indices;  // sorted, unique, all >= 1
    };
    struct ComplementOfFiniteList {
        std::vector<Index> indices;
    };
    using Variant = std::variant<All, Evens, Odds, Residue, FiniteList, ComplementOfFiniteList>;

    IndexSet() : v_(All{}) {}

    static IndexSet all() { return IndexSet(All{}); }
    static IndexSet evens() { return IndexSet(Evens{}); }
    static IndexSet odds() { return IndexSet(Odds{}); }
    static IndexSet residue(Index modulus, Index residue);
    static IndexSet finite_list(std::vector<Index> indices);
    static IndexSet complement_of(std::vector<Index> indices);

    const Variant& variant() const { return v_; }

    bool contains(Index k) const;
    bool is_finite() const;
    bool complement_is_finite() const;

    // Number of members in [1, k].
    Index count_up_to(Index k) const;
    Index complement_count_up_to(Index k) const { return k - count_up_to(k); }

    // The m-th smallest positive index outside the set (m >= 1). Throws
    // InvalidParameter when the complement has fewer than m members below
    // kSequenceLimit.
    Index nth_complement(Index m) const;
    // All members of a finite complement, increasing. Throws InvalidParameter
    // when the complement is infinite.
    std::vector<Index> finite_complement() const;

    // "all", "evens", "odds", "residue(4,1)", "{1,2}", "complement{1,2}".
    std::string describe() const;

    friend bool operator==(const IndexSet& a, const IndexSet& b);

private:
    explicit IndexSet(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

}  // namespace algnorm
