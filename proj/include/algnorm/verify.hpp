#pragma once

/*
 * Seeded property checks over sampled elements.
 *
 * Comparisons go through less_equal / equal on Magnitude, so a relation is
 * decided by exact rational arithmetic whenever both sides carry an exact
 * value or an exact square, and by the 2^-40 tolerance only otherwise. Each
 * report counts how many comparisons took which path.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "algnorm/norms.hpp"
#include "algnorm/sampler.hpp"

namespace algnorm {

struct Violation {
    std::string inputs;
    std::string relation;
    std::string observed;
};

inline constexpr std::size_t kMaxRecordedViolations = 10;

struct CheckReport {
    std::string name;
    std::string algebra;
    std::string subject;
    std::uint64_t trials = 0;
    std::uint64_t violation_count = 0;
    std::vector<Violation> violations;  // the first kMaxRecordedViolations
    std::uint64_t exact_comparisons = 0;
    std::uint64_t approximate_comparisons = 0;
    std::vector<std::string> warnings;

    bool pass() const { return violation_count == 0; }
    void record(Violation v);
};

using NormFunction = std::function<Magnitude(const Element&)>;

CheckReport check_submultiplicative(const AlgebraSpec& algebra, const NormSpec& norm, const SamplerConfig& config);
CheckReport check_submultiplicative(const AlgebraSpec& algebra, const NormFunction& norm, const std::string& label,
                                    const SamplerConfig& config);

// Definiteness, absolute homogeneity and the triangle inequality.
CheckReport check_norm_axioms(const AlgebraSpec& algebra, const NormSpec& norm, const SamplerConfig& config);

// phi(ab) = 0 and ab in A^2 for sampled pairs; for trivial extensions also
// that every adjoined coordinate of ab vanishes.
CheckReport check_kernel_condition(const AlgebraSpec& algebra, const FunctionalSpec& f, const SamplerConfig& config);

// Infinite codimension iff the theorem functional has an unbounded
// certificate. In the finite case the exact sup is required, and every
// candidate basis vector must satisfy p(e_k) <= (1 + sup) |e_k|.
CheckReport check_theorem_equivalence(const AlgebraSpec& algebra);

// A norm q = |.|_1 + |psi| on the even-masked pointwise algebra where psi
// does not vanish on A^2, so q is not submultiplicative. The table and the
// violating pair were found by exhaustive search (see the verify tests).
struct NegativeControl {
    AlgebraSpec algebra;
    std::vector<std::pair<Index, Rational>> psi;  // zero off these indices
    Element a;
    Element b;
};
const NegativeControl& negative_control();
Magnitude eval_negative_control(const Element& a);
// Checks the recorded pair first, then config.trials sampled pairs.
CheckReport check_negative_control(const SamplerConfig& config);

struct SuiteConfig {
    SamplerConfig sampler;
    // Norm checks run for each base. l1 and sup sample from the real
    // coefficient pool so their arithmetic stays exact; l2 and the kernel
    // checks use the pool set in `sampler`.
    std::vector<BaseNormTag> bases{BaseNormTag::L1};
    Index corollaries = 3;  // phi_1 .. phi_corollaries alongside the theorem phi
    bool negative_control = false;
};

struct SuiteReport {
    std::vector<CheckReport> checks;
    std::vector<std::string> warnings;
    bool negative_control = false;
    // Whether the control found its violation. A control that passes means
    // the harness cannot detect a broken norm.
    bool control_detected = false;

    bool pass() const;
    std::uint64_t violation_count() const;
};

// Every check over every computable gallery family.
SuiteReport run_suite(const SuiteConfig& config);
// The same checks scoped to one algebra.
SuiteReport run_suite(const AlgebraSpec& algebra, const SuiteConfig& config);

}  // namespace algnorm
