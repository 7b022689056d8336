#include "algnorm/norms.hpp"

#include <algorithm>

namespace algnorm {

namespace {

constexpr Index kChainWitnessRows = 20;

Rational ratio_of(const Magnitude& num, const Magnitude& den) {
    if (num.exact && den.exact && !den.exact->is_zero()) {
        return *num.exact / *den.exact;
    }
    const double lo = std::max(0.0, num.approx - num.error) / (den.approx + den.error);
    return Rational(mpq_class(lo));
}

bool rows_certify(const std::vector<WitnessRow>& rows) {
    if (rows.empty()) return false;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (!r.p_m.exact || !r.p_n.exact) return false;
        if (*r.p_n.exact != *rows.front().p_n.exact) return false;
        if (i > 0 && !(*r.p_m.exact > *rows[i - 1].p_m.exact)) return false;
    }
    return true;
}

// Rows along piece `piece`: witnesses a_{piece,k} for k = 2..k_max.
WitnessReport piece_rows(const NormSpec& lhs, const NormSpec& rhs, const ComplementEnumeration& e, Index piece,
                         Index k_max) {
    WitnessReport report{lhs.label(), rhs.label(), lhs.base, {}, false};
    for (Index k = 2; k <= k_max; ++k) {
        const Index index = e.at(partition_index(piece, k));
        const Element w = Element::basis(index);
        Magnitude pm = eval_norm(lhs, w);
        Magnitude pn = eval_norm(rhs, w);
        Rational ratio = ratio_of(pm, pn);
        report.rows.push_back({k, index, std::move(pm), std::move(pn), std::move(ratio)});
    }
    report.certifies_unbounded = rows_certify(report.rows);
    return report;
}

// A piece of L on which lhs grows and rhs stays constant, if the tables give
// one.
std::optional<Index> growth_piece(const NormSpec& lhs, const NormSpec& rhs) {
    if (!lhs.functional || lhs.functional->enumeration().finite()) {
        return std::nullopt;
    }
    std::optional<Index> rhs_piece;  // the one piece where rhs grows
    if (rhs.functional) {
        if (rhs.functional->enumeration().finite()) return std::nullopt;
        rhs_piece = rhs.functional->corollary_index();
        if (!rhs_piece) return std::nullopt;  // theorem grows everywhere
    }
    if (auto a = lhs.functional->corollary_index()) {
        if (rhs_piece && *rhs_piece == *a) return std::nullopt;
        return *a;
    }
    return (rhs_piece && *rhs_piece == 1) ? Index{2} : Index{1};
}

}  // namespace

std::string NormSpec::label() const { return functional ? functional->label() : "base"; }

Magnitude eval_norm(const NormSpec& norm, const Element& a) {
    Magnitude value = base_norm(norm.base, a);
    if (norm.functional) {
        value = value + magnitude(eval_phi(*norm.functional, a));
    }
    return value;
}

WitnessReport inequivalence_witness(const AlgebraSpec& algebra, Index m, Index n, Index k_max, BaseNormTag base) {
    if (m == 0 || n == 0) {
        throw Error(ErrorKind::InvalidParameter, "functional indices start at 1");
    }
    if (m == n) {
        throw Error(ErrorKind::InvalidParameter, "inequivalence needs m != n");
    }
    if (k_max < 2) {
        throw Error(ErrorKind::InvalidParameter, "k_max must be at least 2");
    }
    const Codimension codim = codimension(algebra);
    if (codim.is_finite()) {
        throw Error(ErrorKind::FiniteCodimension,
                    "A^2 has finite codimension " + codim.to_string() + " in " + algebra.describe());
    }
    const auto e = ComplementEnumeration::build(algebra);
    const NormSpec pm{base, FunctionalSpec::corollary(e, m)};
    const NormSpec pn{base, FunctionalSpec::corollary(e, n)};
    return piece_rows(pm, pn, e, m, k_max);
}

WitnessReport base_vs_p_witness(const FunctionalSpec& f, Index k_max, BaseNormTag base) {
    if (k_max < 2) {
        throw Error(ErrorKind::InvalidParameter, "k_max must be at least 2");
    }
    if (f.enumeration().finite()) {
        throw Error(ErrorKind::BoundedFunctional,
                    f.label() + " is bounded on " + f.algebra().describe() + "; p is equivalent to the base norm");
    }
    const NormSpec p{base, f};
    const NormSpec plain{base, std::nullopt};
    if (auto n = f.corollary_index()) {
        return piece_rows(p, plain, f.enumeration(), *n, k_max);
    }
    WitnessReport report{p.label(), plain.label(), base, {}, false};
    for (Index k = 2; k <= k_max; ++k) {
        const Index index = f.enumeration().at(k);
        const Element w = Element::basis(index);
        Magnitude pm = eval_norm(p, w);
        Magnitude pn = eval_norm(plain, w);
        Rational ratio = ratio_of(pm, pn);
        report.rows.push_back({k, index, std::move(pm), std::move(pn), std::move(ratio)});
    }
    report.certifies_unbounded = rows_certify(report.rows);
    return report;
}

std::string to_string(PairRelation::Kind kind) {
    switch (kind) {
        case PairRelation::Kind::AnalyticDomination: return "analytic";
        case PairRelation::Kind::CertifiedUnbounded: return "unbounded";
        case PairRelation::Kind::Sampled: return "sampled";
    }
    return "?";
}

ChainReport finite_chain_extremes(std::span<const NormSpec> norms, std::span<const Element> sample) {
    if (norms.empty()) {
        throw Error(ErrorKind::InvalidParameter, "finite_chain_extremes needs at least one norm");
    }
    ChainReport report;
    for (const auto& n : norms) report.labels.push_back(n.label());

    auto same = [](const NormSpec& a, const NormSpec& b) {
        if (a.base != b.base || a.functional.has_value() != b.functional.has_value()) return false;
        return !a.functional || a.functional->label() == b.functional->label();
    };

    for (std::size_t i = 0; i < norms.size(); ++i) {
        for (std::size_t j = 0; j < norms.size(); ++j) {
            if (i == j) continue;
            const NormSpec& lhs = norms[i];
            const NormSpec& rhs = norms[j];
            PairRelation rel{i, j, PairRelation::Kind::Sampled, std::nullopt, 0.0, std::nullopt};

            if (same(lhs, rhs) || (lhs.base == rhs.base && !lhs.functional && rhs.functional)) {
                rel.kind = PairRelation::Kind::AnalyticDomination;
                rel.constant = Rational(1);
                rel.approx_constant = 1.0;
            } else if (auto piece = growth_piece(lhs, rhs)) {
                const auto& e = lhs.functional->enumeration();
                auto w = piece_rows(lhs, rhs, e, *piece, kChainWitnessRows);
                if (w.certifies_unbounded) {
                    rel.kind = PairRelation::Kind::CertifiedUnbounded;
                    rel.witness = std::move(w);
                }
            }

            if (rel.kind == PairRelation::Kind::Sampled) {
                report.heuristic = true;
                bool all_exact = true;
                std::optional<Rational> best_exact;
                double best = 0.0;
                for (const Element& a : sample) {
                    const Magnitude l = eval_norm(lhs, a);
                    const Magnitude r = eval_norm(rhs, a);
                    if (r.exact ? r.exact->is_zero() : r.approx <= 0.0) continue;
                    if (l.exact && r.exact) {
                        Rational q = *l.exact / *r.exact;
                        if (!best_exact || q > *best_exact) best_exact = q;
                        best = std::max(best, q.to_double());
                    } else {
                        all_exact = false;
                        best = std::max(best, l.approx / r.approx);
                    }
                }
                if (all_exact && best_exact) rel.constant = best_exact;
                rel.approx_constant = best;
            }
            report.relations.push_back(std::move(rel));
        }
    }

    auto certified = [&](std::size_t lhs, std::size_t rhs) {
        for (const auto& r : report.relations) {
            if (r.lhs == lhs && r.rhs == rhs) return r.kind == PairRelation::Kind::CertifiedUnbounded;
        }
        return false;
    };
    for (std::size_t i = 0; i < norms.size(); ++i) {
        bool is_max = true;
        bool is_min = true;
        for (std::size_t j = 0; j < norms.size(); ++j) {
            if (i == j) continue;
            if (certified(j, i)) is_max = false;
            if (certified(i, j)) is_min = false;
        }
        if (is_max) report.maxima.push_back(i);
        if (is_min) report.minima.push_back(i);
    }
    return report;
}

}  // namespace algnorm
