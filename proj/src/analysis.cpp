#include "algnorm/analysis.hpp"

namespace algnorm {

AnalysisReport analyze(const AlgebraSpec& algebra, const SpanOptions& options) {
    ValidationReport validation = validate(algebra);
    const SquareSpan span = square_span(algebra, options);
    const Codimension codim = codimension(algebra);

    std::optional<std::vector<Element>> quotient;
    if (codim.is_finite()) quotient = quotient_basis(algebra);

    std::optional<DiscontinuityCertificate> certificate;
    if (codim != Codimension::finite(0)) {
        const auto phi = FunctionalSpec::theorem(ComplementEnumeration::build(algebra, options));
        certificate = is_discontinuous_certificate(phi, BaseNormTag::L1);
    }

    return AnalysisReport{
        algebra,
        std::move(validation),
        span.describe(algebra),
        codim,
        std::move(quotient),
        find_identity(algebra),
        check_proposition(algebra),
        !codim.is_finite(),
        std::move(certificate),
    };
}

}  // namespace algnorm
