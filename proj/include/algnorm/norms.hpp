#pragma once

/*
 * Algebra norms p(a) = |a| + |phi(a)| built from a base norm and a functional
 * vanishing on A^2, and explicit witness tables certifying inequivalence.
 *
 * Equivalence is never concluded from samples. A pair of norms is either
 * related analytically (base <= p with constant 1), certified inequivalent by
 * a canonical witness family on which one side grows while the other stays
 * constant, or only described by an empirical constant over a sample.
 */

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "algnorm/base_norm.hpp"
#include "algnorm/functionals.hpp"

namespace algnorm {

struct NormSpec {
    BaseNormTag base = BaseNormTag::L1;
    std::optional<FunctionalSpec> functional;

    // "base", "theorem" or "corollary:<n>".
    std::string label() const;
};

Magnitude eval_norm(const NormSpec& norm, const Element& a);

struct WitnessRow {
    Index k;
    Index witness_index;
    Magnitude p_m;  // left-hand norm of the comparison
    Magnitude p_n;  // right-hand norm
    // p_m / p_n when both are exact, otherwise a rational lower bound.
    Rational ratio;
};

struct WitnessReport {
    std::string lhs;
    std::string rhs;
    BaseNormTag base = BaseNormTag::L1;
    std::vector<WitnessRow> rows;
    // Rows are exact, p_n is constant along them and p_m strictly increases:
    // the canonical family has no constant C with p_m <= C * p_n.
    bool certifies_unbounded = false;
};

// Rows k = 2..k_max on the witnesses a_mk. Throws InvalidParameter for m = n,
// zero indices or k_max < 2, and FiniteCodimension when A^2 has finite
// codimension.
WitnessReport inequivalence_witness(const AlgebraSpec& algebra, Index m, Index n, Index k_max,
                                    BaseNormTag base = BaseNormTag::L1);

// p against its own base norm, rows k = 2..k_max on l_k (theorem) or a_nk
// (corollary n). Throws BoundedFunctional when phi is bounded.
WitnessReport base_vs_p_witness(const FunctionalSpec& f, Index k_max, BaseNormTag base = BaseNormTag::L1);

struct PairRelation {
    enum class Kind { AnalyticDomination, CertifiedUnbounded, Sampled };
    // The relation describes norms[lhs] <= C * norms[rhs].
    std::size_t lhs;
    std::size_t rhs;
    Kind kind;
    std::optional<Rational> constant;   // exact C when known
    double approx_constant = 0.0;       // C from the sample (or the exact C)
    std::optional<WitnessReport> witness;  // CertifiedUnbounded only
};
std::string to_string(PairRelation::Kind kind);

struct ChainReport {
    std::vector<std::string> labels;
    std::vector<PairRelation> relations;
    // Candidates that dominate (are dominated by) every other norm, unless
    // certified otherwise.
    std::vector<std::size_t> maxima;
    std::vector<std::size_t> minima;
    // True when some relation rests only on the sample.
    bool heuristic = false;
};

// Norms are expected to live on the same algebra. Throws InvalidParameter for
// an empty list.
ChainReport finite_chain_extremes(std::span<const NormSpec> norms, std::span<const Element> sample);

}  // namespace algnorm
