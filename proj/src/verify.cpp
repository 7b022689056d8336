#include "algnorm/verify.hpp"

#include "algnorm/gallery.hpp"

namespace algnorm {

namespace {

std::string pair_inputs(const AlgebraSpec& algebra, const Element& a, const Element& b) {
    return "a = " + algebra.render(a) + "; b = " + algebra.render(b);
}

CheckReport start(std::string name, const AlgebraSpec& algebra, std::string subject, const SamplerConfig& config) {
    CheckReport r;
    r.name = std::move(name);
    r.algebra = algebra.describe();
    r.subject = std::move(subject);
    if (config.trials == 0) {
        r.warnings.push_back("trials = 0: nothing was sampled, the pass is vacuous");
    }
    return r;
}

void count(CheckReport& report, const Verdict& v) {
    if (v.exact) {
        ++report.exact_comparisons;
    } else {
        ++report.approximate_comparisons;
    }
}

std::string norm_subject(const NormSpec& norm) { return to_string(norm.base) + "/" + norm.label(); }

// Single product-bound comparison shared by the real checks and the control.
void compare_product(CheckReport& report, const AlgebraSpec& algebra, const NormFunction& norm, const Element& a,
                     const Element& b) {
    const Magnitude pa = norm(a);
    const Magnitude pb = norm(b);
    const Magnitude pab = norm(multiply(algebra, a, b));
    const Magnitude bound = pa * pb;
    const Verdict v = less_equal(pab, bound, kApproxTolerance);
    count(report, v);
    if (!v.holds) {
        report.record({pair_inputs(algebra, a, b), "p(ab) <= p(a) p(b)",
                       "p(ab) = " + pab.to_string() + ", p(a) = " + pa.to_string() + ", p(b) = " + pb.to_string()});
    }
}

bool positive(const Magnitude& m) {
    if (m.exact) return m.exact->sign() > 0;
    return m.approx - m.error > 0.0;
}

}  // namespace

void CheckReport::record(Violation v) {
    ++violation_count;
    if (violations.size() < kMaxRecordedViolations) violations.push_back(std::move(v));
}

CheckReport check_submultiplicative(const AlgebraSpec& algebra, const NormFunction& norm, const std::string& label,
                                    const SamplerConfig& config) {
    CheckReport report = start("submultiplicative", algebra, label, config);
    Sampler sampler(algebra, config);
    for (std::uint64_t t = 0; t < config.trials; ++t) {
        const Element a = sampler.element();
        const Element b = sampler.element();
        compare_product(report, algebra, norm, a, b);
        ++report.trials;
    }
    return report;
}

// Also records the intermediate step phi(ab) = 0 that the bound rests on.
CheckReport check_submultiplicative(const AlgebraSpec& algebra, const NormSpec& norm, const SamplerConfig& config) {
    const NormFunction p = [&norm](const Element& a) { return eval_norm(norm, a); };
    CheckReport report = start("submultiplicative", algebra, norm_subject(norm), config);
    Sampler sampler(algebra, config);
    for (std::uint64_t t = 0; t < config.trials; ++t) {
        const Element a = sampler.element();
        const Element b = sampler.element();
        if (norm.functional) {
            ++report.exact_comparisons;
            if (const auto v = eval_phi(*norm.functional, multiply(algebra, a, b)); !v.is_zero()) {
                report.record({pair_inputs(algebra, a, b), "phi(ab) = 0", "phi(ab) = " + v.to_string()});
            }
        }
        compare_product(report, algebra, p, a, b);
        ++report.trials;
    }
    return report;
}

CheckReport check_norm_axioms(const AlgebraSpec& algebra, const NormSpec& norm, const SamplerConfig& config) {
    CheckReport report = start("norm-axioms", algebra, norm_subject(norm), config);
    if (const Magnitude zero = eval_norm(norm, Element{}); !zero.exact || !zero.exact->is_zero()) {
        report.record({"a = 0", "p(0) = 0", "p(0) = " + zero.to_string()});
    }
    Sampler sampler(algebra, config);
    for (std::uint64_t t = 0; t < config.trials; ++t) {
        const Element a = sampler.element();
        const Element b = sampler.element();
        const GaussianRational lambda = sampler.scalar();
        const Magnitude pa = eval_norm(norm, a);
        const Magnitude pb = eval_norm(norm, b);

        if (!a.is_zero() && !positive(pa)) {
            report.record({"a = " + algebra.render(a), "p(a) > 0 for a != 0", "p(a) = " + pa.to_string()});
        }
        if (pa.exact) {
            ++report.exact_comparisons;
        } else {
            ++report.approximate_comparisons;
        }

        const Magnitude scaled = eval_norm(norm, lambda * a);
        const Magnitude expected = magnitude(lambda) * pa;
        const Verdict hom = equal(scaled, expected, kApproxTolerance);
        count(report, hom);
        if (!hom.holds) {
            report.record({"a = " + algebra.render(a) + "; lambda = " + lambda.to_string(), "p(lambda a) = |lambda| p(a)",
                           "p(lambda a) = " + scaled.to_string() + ", |lambda| p(a) = " + expected.to_string()});
        }

        const Magnitude sum = eval_norm(norm, a + b);
        const Magnitude bound = pa + pb;
        const Verdict tri = less_equal(sum, bound, kApproxTolerance);
        count(report, tri);
        if (!tri.holds) {
            report.record({pair_inputs(algebra, a, b), "p(a + b) <= p(a) + p(b)",
                           "p(a + b) = " + sum.to_string() + ", p(a) + p(b) = " + bound.to_string()});
        }
        ++report.trials;
    }
    return report;
}

CheckReport check_kernel_condition(const AlgebraSpec& algebra, const FunctionalSpec& f, const SamplerConfig& config) {
    CheckReport report = start("kernel-condition", algebra, f.label(), config);
    const SquareSpan& span = f.enumeration().span();
    const std::vector<Index> adjoined = algebra.adjoined_indices();
    Sampler sampler(algebra, config);
    for (std::uint64_t t = 0; t < config.trials; ++t) {
        const Element a = sampler.element();
        const Element b = sampler.element();
        const Element ab = multiply(algebra, a, b);

        const GaussianRational value = eval_phi(f, ab);
        ++report.exact_comparisons;
        if (!value.is_zero()) {
            report.record({pair_inputs(algebra, a, b), "phi(ab) = 0", "phi(ab) = " + value.to_string()});
        }
        ++report.exact_comparisons;
        if (!span.contains(ab)) {
            report.record({pair_inputs(algebra, a, b), "ab in A^2", "ab = " + algebra.render(ab)});
        }
        for (Index u : adjoined) {
            ++report.exact_comparisons;
            if (const auto c = ab.coefficient(u); !c.is_zero()) {
                report.record({pair_inputs(algebra, a, b), "adjoined coordinate of ab is 0",
                               algebra.basis_label(u) + " coefficient " + c.to_string()});
            }
        }
        ++report.trials;
    }
    return report;
}

CheckReport check_theorem_equivalence(const AlgebraSpec& algebra) {
    CheckReport report;
    report.name = "theorem-equivalence";
    report.algebra = algebra.describe();
    report.subject = "theorem";
    report.trials = 1;

    const Codimension codim = codimension(algebra);
    std::optional<ComplementEnumeration> e;
    try {
        e = ComplementEnumeration::build(algebra);
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::EmptyComplement) throw;
    }
    ++report.exact_comparisons;
    if (!e) {
        if (!codim.is_finite() || codim.value() != 0) {
            report.record({algebra.describe(), "empty complement iff codimension 0",
                           "codimension " + codim.to_string() + " but the complement is empty"});
        }
        return report;
    }

    const FunctionalSpec phi = FunctionalSpec::theorem(*e);
    const auto cert = is_discontinuous_certificate(phi, BaseNormTag::L1);
    if (!codim.is_finite()) {
        if (!cert.unbounded()) {
            report.record({algebra.describe(), "infinite codimension => unbounded certificate",
                           "certificate is bounded"});
        }
        return report;
    }
    if (codim.value() == 0) {
        report.record({algebra.describe(), "codimension 0 => empty complement", "complement is nonempty"});
        return report;
    }
    if (cert.unbounded() || !cert.sup || !cert.sup->exact) {
        report.record({algebra.describe(), "finite codimension => bounded certificate with exact sup",
                       cert.unbounded() ? "certificate is unbounded" : "sup is missing or inexact"});
        return report;
    }

    // Continuity side: on every canonical basis vector p <= (1 + sup) |.|.
    const Rational constant = Rational(1) + *cert.sup->exact;
    const NormSpec p{BaseNormTag::L1, phi};
    std::vector<Index> candidates;
    if (const auto dim = algebra.dimension()) {
        for (Index k = 1; k <= *dim; ++k) candidates.push_back(k);
    } else {
        candidates = e->prefix(*e->size());
        for (Index u : e->leftovers()) candidates.push_back(u);
    }
    for (Index k : candidates) {
        const Element v = Element::basis(k);
        const Magnitude lhs = eval_norm(p, v);
        const Magnitude rhs = Magnitude::from_exact(constant) * base_norm(BaseNormTag::L1, v);
        const Verdict verdict = less_equal(lhs, rhs, kApproxTolerance);
        count(report, verdict);
        if (!verdict.holds) {
            report.record({algebra.basis_label(k), "p(e_k) <= (1 + sup) |e_k|",
                           "p = " + lhs.to_string() + ", bound = " + rhs.to_string()});
        }
    }
    return report;
}

const NegativeControl& negative_control() {
    static const NegativeControl control{
        AlgebraSpec::masked_pointwise(IndexSet::evens()),
        {{1, Rational(-5)}, {2, Rational(5)}},
        Element::from_terms({{1, GaussianRational(1)}, {2, GaussianRational(1)}}),
        Element::from_terms({{1, GaussianRational(1)}, {2, GaussianRational(1)}}),
    };
    return control;
}

Magnitude eval_negative_control(const Element& a) {
    GaussianRational psi;
    for (const auto& [k, v] : negative_control().psi) {
        psi += a.coefficient(k) * GaussianRational(v);
    }
    return base_norm(BaseNormTag::L1, a) + magnitude(psi);
}

CheckReport check_negative_control(const SamplerConfig& config) {
    const NegativeControl& control = negative_control();
    const NormFunction q = eval_negative_control;
    CheckReport report = start("negative-control", control.algebra, "l1/psi", config);
    compare_product(report, control.algebra, q, control.a, control.b);
    ++report.trials;
    SamplerConfig real = config;
    real.pool = CoefficientPool::Real;
    Sampler sampler(control.algebra, real);
    for (std::uint64_t t = 0; t < config.trials; ++t) {
        const Element a = sampler.element();
        const Element b = sampler.element();
        compare_product(report, control.algebra, q, a, b);
        ++report.trials;
    }
    return report;
}

bool SuiteReport::pass() const {
    if (negative_control) return false;
    for (const auto& c : checks) {
        if (!c.pass()) return false;
    }
    return true;
}

std::uint64_t SuiteReport::violation_count() const {
    std::uint64_t n = 0;
    for (const auto& c : checks) n += c.violation_count;
    return n;
}

namespace {

void append_algebra_checks(SuiteReport& suite, const AlgebraSpec& algebra, const SuiteConfig& config) {
    suite.checks.push_back(check_theorem_equivalence(algebra));

    std::vector<FunctionalSpec> functionals;
    if (codimension(algebra) != Codimension::finite(0)) {
        const auto e = ComplementEnumeration::build(algebra);
        functionals.push_back(FunctionalSpec::theorem(e));
        for (Index n = 1; n <= config.corollaries; ++n) functionals.push_back(FunctionalSpec::corollary(e, n));
    }
    for (const auto& f : functionals) {
        suite.checks.push_back(check_kernel_condition(algebra, f, config.sampler));
    }

    for (BaseNormTag base : config.bases) {
        SamplerConfig sampler = config.sampler;
        if (base != BaseNormTag::L2) sampler.pool = CoefficientPool::Real;
        std::vector<NormSpec> norms{{base, std::nullopt}};
        for (const auto& f : functionals) norms.push_back({base, f});
        for (const auto& norm : norms) {
            suite.checks.push_back(check_submultiplicative(algebra, norm, sampler));
            suite.checks.push_back(check_norm_axioms(algebra, norm, sampler));
        }
    }
}

void finish(SuiteReport& suite, const SuiteConfig& config) {
    if (config.sampler.trials == 0) {
        suite.warnings.push_back("trials = 0: sampled checks are vacuous");
    }
    if (config.negative_control) {
        suite.checks.push_back(check_negative_control(config.sampler));
        suite.negative_control = true;
        suite.control_detected = !suite.checks.back().pass();
        if (!suite.control_detected) {
            suite.warnings.push_back("negative control found no violation: the harness missed a broken norm");
        }
    }
}

}  // namespace

SuiteReport run_suite(const SuiteConfig& config) {
    SuiteReport suite;
    for (const auto& entry : list_entries()) {
        if (entry.algebra) append_algebra_checks(suite, *entry.algebra, config);
    }
    finish(suite, config);
    return suite;
}

SuiteReport run_suite(const AlgebraSpec& algebra, const SuiteConfig& config) {
    SuiteReport suite;
    append_algebra_checks(suite, algebra, config);
    finish(suite, config);
    return suite;
}

}  // namespace algnorm
