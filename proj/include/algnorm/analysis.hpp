#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algnorm/functionals.hpp"
#include "algnorm/span.hpp"

namespace algnorm {

struct AnalysisReport {
    AlgebraSpec algebra;
    ValidationReport validation;
    std::string square_span;
    Codimension codimension;
    std::optional<std::vector<Element>> quotient_basis;  // finite codimension only
    std::optional<Identity> identity;
    PropositionReport proposition;
    // DSAP holds iff the codimension is infinite; the certificate is for the
    // theorem functional under the l1 base whenever the complement is nonempty.
    bool dsap = false;
    std::optional<DiscontinuityCertificate> certificate;
};

// Validates first, so a non-associative table throws NotAssociative.
AnalysisReport analyze(const AlgebraSpec& algebra, const SpanOptions& options = {});

}  // namespace algnorm
