#include "algnorm/gallery.hpp"

namespace algnorm {

namespace {

constexpr std::string_view kPolyIdealId = "ex4-poly-ideal";

GalleryEntry poly_ideal_entry(Index n, Index N) {
    GalleryEntry e;
    e.id = std::string(kPolyIdealId);
    e.title = "x^n F[x] truncated above degree N (n = " + std::to_string(n) + ", N = " + std::to_string(N) + ")";
    e.algebra = AlgebraSpec::truncated_poly_ideal(n, N);
    e.expected_codimension = Codimension::finite(n);
    e.expected_dsap = false;
    e.notes = {
        "A^2 = x^n A, spanned by the degrees 2n..N.",
        "Representatives of A/A^2 are x^n, ..., x^(2n-1); the monomials 1, ..., x^(n-1) are not in A.",
    };
    e.parameterized = true;
    return e;
}

std::vector<GalleryEntry> fixed_entries() {
    std::vector<GalleryEntry> out;

    GalleryEntry c00;
    c00.id = "ex-c00";
    c00.title = "c00 with pointwise product";
    c00.algebra = AlgebraSpec::masked_pointwise(IndexSet::all());
    c00.expected_codimension = Codimension::finite(0);
    c00.expected_identity = false;
    c00.notes = {"e_k = e_k e_k, so A^2 = A, yet there is no identity: A = A^2 does not force a unit."};
    out.push_back(std::move(c00));

    GalleryEntry evens;
    evens.id = "ex-masked-evens";
    evens.title = "c00 with the product kept on even coordinates";
    evens.algebra = AlgebraSpec::masked_pointwise(IndexSet::evens());
    evens.expected_codimension = Codimension::countably_infinite();
    evens.expected_dsap = true;
    evens.notes = {"A^2 is spanned by the even basis vectors; the odd ones enumerate the complement."};
    out.push_back(std::move(evens));

    GalleryEntry zero;
    zero.id = "ex-zero-product";
    zero.title = "c00 with the zero product";
    zero.algebra = AlgebraSpec::zero_product();
    zero.expected_codimension = Codimension::countably_infinite();
    zero.expected_dsap = true;
    zero.notes = {"A^2 = 0; every basis vector is in the complement enumeration."};
    out.push_back(std::move(zero));

    GalleryEntry te;
    te.id = "ex3-trivial-extension";
    te.title = "c00 x C with (a, s)(b, t) = (ab, 0)";
    te.algebra = AlgebraSpec::trivial_extension(AlgebraSpec::masked_pointwise(IndexSet::all()));
    te.expected_codimension = Codimension::finite(1);
    te.expected_dsap = false;
    te.notes = {
        "(A x C)^2 = A^2 x {0} = c00 x {0}: only the adjoined direction is missing.",
        "With A^2 = A the inner algebra gives codimension 1, so the infinite family of norms on A x C "
        "cannot come from this construction; it needs the external result the example cites.",
    };
    out.push_back(std::move(te));

    GalleryEntry teb;
    teb.id = "ex3b-trivial-extension-zero";
    teb.title = "(zero-product c00) x C";
    teb.algebra = AlgebraSpec::trivial_extension(AlgebraSpec::zero_product());
    teb.expected_codimension = Codimension::countably_infinite();
    teb.expected_dsap = true;
    teb.notes = {"The inner algebra has A^2 = 0, so (A x C)^2 = 0 and the codimension is infinite."};
    out.push_back(std::move(teb));

    GalleryEntry l2;
    l2.id = "ex1-l2";
    l2.title = "l2 with pointwise operations";
    l2.expected_codimension = Codimension::countably_infinite();
    l2.expected_dsap = true;
    l2.notes = {
        "(ℓ²)² = ℓ¹ under pointwise operations.",
        "ℓ²/ℓ¹ is infinite dimensional, so ℓ² carries infinitely many inequivalent algebra norms.",
        "No finite representation: the entry is documentation only.",
    };
    out.push_back(std::move(l2));

    GalleryEntry disc;
    disc.id = "ex2-disc-algebra";
    disc.title = "the disc algebra A(D)";
    disc.expected_codimension = Codimension::finite(0);
    disc.expected_dsap = false;
    disc.expected_identity = true;
    disc.notes = {
        "A(D) is unital, so A² = A and no functional vanishing on A² is nonzero.",
        "A(D) still carries infinitely many norms, so infinite codimension of A² is sufficient but not "
        "necessary.",
        "No construction is available: the entry is documentation only.",
    };
    out.push_back(std::move(disc));

    return out;
}

std::vector<std::string> compare(const GalleryEntry& entry, const AnalysisReport& report) {
    std::vector<std::string> out;
    if (report.codimension != entry.expected_codimension) {
        out.push_back("codimension: expected " + entry.expected_codimension.to_string() + ", computed " +
                      report.codimension.to_string());
    }
    if (report.dsap != entry.expected_dsap) {
        out.push_back(std::string("DSAP: expected ") + (entry.expected_dsap ? "yes" : "no") + ", computed " +
                      (report.dsap ? "yes" : "no"));
    }
    if (entry.expected_identity && *entry.expected_identity != report.identity.has_value()) {
        out.push_back(std::string("identity: expected ") + (*entry.expected_identity ? "present" : "absent") +
                      ", computed " + (report.identity ? "present" : "absent"));
    }
    if (report.certificate && report.certificate->unbounded() != report.dsap) {
        out.push_back("certificate kind disagrees with the codimension");
    }
    return out;
}

std::string joined_notes(const GalleryEntry& entry) {
    std::string text;
    for (const auto& n : entry.notes) {
        if (!text.empty()) text += "\n";
        text += n;
    }
    return text;
}

}  // namespace

std::vector<GalleryEntry> list_entries() {
    std::vector<GalleryEntry> out = fixed_entries();
    out.insert(out.begin() + 5, poly_ideal_entry(kDefaultPolyIdealN, 4 * kDefaultPolyIdealN));
    return out;
}

GalleryEntry find_entry(std::string_view id, const GalleryParams& params) {
    if (id == kPolyIdealId) {
        const Index n = params.n.value_or(kDefaultPolyIdealN);
        return poly_ideal_entry(n, params.N.value_or(4 * n));
    }
    for (auto& entry : fixed_entries()) {
        if (entry.id != id) continue;
        if (params.n || params.N) {
            throw Error(ErrorKind::InvalidParameter, "entry " + entry.id + " takes no parameters");
        }
        return std::move(entry);
    }
    throw Error(ErrorKind::UnknownEntry, "unknown gallery entry '" + std::string(id) + "'");
}

GalleryRun run_entry(std::string_view id, const GalleryParams& params) {
    GalleryEntry entry = find_entry(id, params);
    if (!entry.algebra) {
        throw Error(ErrorKind::SymbolicOnly, joined_notes(entry));
    }
    AnalysisReport analysis = analyze(*entry.algebra);
    std::vector<std::string> mismatches = compare(entry, analysis);

    std::vector<WitnessReport> matrix;
    std::optional<WitnessReport> base_vs_p;
    if (!analysis.codimension.is_finite()) {
        for (Index m = 1; m <= kGalleryMatrixSize; ++m) {
            for (Index n = 1; n <= kGalleryMatrixSize; ++n) {
                if (m == n) continue;
                matrix.push_back(inequivalence_witness(*entry.algebra, m, n, kGalleryWitnessRows));
                if (!matrix.back().certifies_unbounded) {
                    mismatches.push_back("witness p" + std::to_string(m) + " vs p" + std::to_string(n) +
                                         " does not certify");
                }
            }
        }
        base_vs_p =
            base_vs_p_witness(FunctionalSpec::theorem(ComplementEnumeration::build(*entry.algebra)), kGalleryWitnessRows);
    }
    return GalleryRun{std::move(entry), std::move(analysis), std::move(mismatches), std::move(matrix),
                      std::move(base_vs_p)};
}

std::vector<std::string> self_test() {
    std::vector<std::string> out;
    for (const auto& entry : list_entries()) {
        if (!entry.algebra) continue;
        for (const auto& m : compare(entry, analyze(*entry.algebra))) {
            out.push_back(entry.id + ": " + m);
        }
    }
    return out;
}

}  // namespace algnorm
