#include "algnorm/io.hpp"

#include <fstream>
#include <sstream>

namespace algnorm {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) parse_fail(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

Index index_from_json(const Json& j, const char* what) {
    if (j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        return j.get<Index>();
    }
    parse_fail(std::string(what) + " must be a nonnegative integer");
}

std::vector<Index> indices_from_json(const Json& j) {
    if (!j.is_array()) parse_fail("\"indices\" must be an array");
    std::vector<Index> out;
    for (const auto& x : j) out.push_back(index_from_json(x, "index"));
    return out;
}

IndexSet mask_from_json(const Json& j) {
    const std::string kind = j.is_string() ? j.get<std::string>() : field(j, "kind").get<std::string>();
    if (kind == "all") return IndexSet::all();
    if (kind == "evens") return IndexSet::evens();
    if (kind == "odds") return IndexSet::odds();
    if (kind == "residue") {
        return IndexSet::residue(index_from_json(field(j, "modulus"), "modulus"),
                                 index_from_json(field(j, "residue"), "residue"));
    }
    if (kind == "finite") return IndexSet::finite_list(indices_from_json(field(j, "indices")));
    if (kind == "cofinite") return IndexSet::complement_of(indices_from_json(field(j, "indices")));
    parse_fail("unknown mask kind \"" + kind + "\"");
}

Json mask_to_json(const IndexSet& s) {
    return std::visit(
        [](const auto& v) -> Json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, IndexSet::All>) {
                return {{"kind", "all"}};
            } else if constexpr (std::is_same_v<T, IndexSet::Evens>) {
                return {{"kind", "evens"}};
            } else if constexpr (std::is_same_v<T, IndexSet::Odds>) {
                return {{"kind", "odds"}};
            } else if constexpr (std::is_same_v<T, IndexSet::Residue>) {
                return {{"kind", "residue"}, {"modulus", v.modulus}, {"residue", v.residue}};
            } else if constexpr (std::is_same_v<T, IndexSet::FiniteList>) {
                return {{"kind", "finite"}, {"indices", v.indices}};
            } else {
                return {{"kind", "cofinite"}, {"indices", v.indices}};
            }
        },
        s.variant());
}

Json elements_json(const std::vector<Element>& v, const AlgebraSpec& algebra) {
    Json out = Json::array();
    for (const auto& e : v) out.push_back(algebra.render(e));
    return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const GaussianRational& z) { return {{"re", z.re().to_string()}, {"im", z.im().to_string()}}; }

Json to_json(const Magnitude& m, const RenderOptions& options) {
    if (m.exact) {
        if (!options.with_float) return m.exact->to_string();
        return {{"exact", m.exact->to_string()}, {"float", m.approx}};
    }
    Json out = {{"approx", m.approx}, {"error", m.error}};
    if (m.squared) out["squared"] = m.squared->to_string();
    return out;
}

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    parse_fail("a rational must be a \"p/q\" string or an integer");
}

GaussianRational gaussian_from_json(const Json& j) {
    if (j.is_object()) {
        Rational re = j.contains("re") ? rational_from_json(j.at("re")) : Rational(0);
        Rational im = j.contains("im") ? rational_from_json(j.at("im")) : Rational(0);
        if (!j.contains("re") && !j.contains("im")) parse_fail("a Gaussian rational needs \"re\" or \"im\"");
        return GaussianRational(std::move(re), std::move(im));
    }
    return GaussianRational(rational_from_json(j));
}

AlgebraSpec algebra_from_json(const Json& j) {
    if (!j.is_object()) parse_fail("an algebra spec must be a JSON object");
    const Json& fam = field(j, "family");
    if (!fam.is_string()) parse_fail("\"family\" must be a string");
    const std::string family = fam.get<std::string>();
    if (family == "structure_constants") {
        const Index dim = index_from_json(field(j, "dim"), "dim");
        const Json& table = field(j, "table");
        if (!table.is_array()) parse_fail("\"table\" must be an array");
        std::vector<StructureEntry> entries;
        for (const auto& row : table) {
            if (row.is_array()) {
                if (row.size() != 4) parse_fail("table rows are [i, j, k, c]");
                entries.push_back({index_from_json(row[0], "i"), index_from_json(row[1], "j"),
                                   index_from_json(row[2], "k"), gaussian_from_json(row[3])});
            } else {
                entries.push_back({index_from_json(field(row, "i"), "i"), index_from_json(field(row, "j"), "j"),
                                   index_from_json(field(row, "k"), "k"), gaussian_from_json(field(row, "c"))});
            }
        }
        return AlgebraSpec::structure_constants(dim, std::move(entries));
    }
    if (family == "masked_pointwise") return AlgebraSpec::masked_pointwise(mask_from_json(field(j, "mask")));
    if (family == "truncated_poly_ideal") {
        return AlgebraSpec::truncated_poly_ideal(index_from_json(field(j, "n"), "n"),
                                                 index_from_json(field(j, "N"), "N"));
    }
    if (family == "trivial_extension") return AlgebraSpec::trivial_extension(algebra_from_json(field(j, "inner")));
    if (family == "zero_product") return AlgebraSpec::zero_product();
    parse_fail("unknown family \"" + family + "\"");
}

Json to_json(const AlgebraSpec& algebra) {
    return std::visit(
        [](const auto& v) -> Json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, AlgebraSpec::StructureConstants>) {
                Json table = Json::array();
                for (const auto& e : v.table) {
                    table.push_back(Json::array({e.i, e.j, e.k, to_json(e.c)}));
                }
                return {{"family", "structure_constants"}, {"dim", v.dim}, {"table", std::move(table)}};
            } else if constexpr (std::is_same_v<T, AlgebraSpec::MaskedPointwise>) {
                return {{"family", "masked_pointwise"}, {"mask", mask_to_json(v.mask)}};
            } else if constexpr (std::is_same_v<T, AlgebraSpec::TruncatedPolyIdeal>) {
                return {{"family", "truncated_poly_ideal"}, {"n", v.n}, {"N", v.N}};
            } else if constexpr (std::is_same_v<T, AlgebraSpec::TrivialExtension>) {
                return {{"family", "trivial_extension"}, {"inner", to_json(*v.inner)}};
            } else {
                return {{"family", "zero_product"}};
            }
        },
        algebra.variant());
}

Element element_from_json(const Json& j, const AlgebraSpec& algebra) {
    const Json& coeffs = field(j, "coeffs");
    if (!coeffs.is_object()) parse_fail("\"coeffs\" must be an object");
    const auto adjoined = algebra.adjoined_indices();
    std::vector<Element::Term> terms;
    for (const auto& [key, value] : coeffs.items()) {
        Index k = 0;
        if (key == "u") {
            if (adjoined.empty()) parse_fail("\"u\" names an adjoined coordinate, but the algebra has none");
            k = adjoined.back();
        } else {
            std::size_t used = 0;
            try {
                k = std::stoull(key, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != key.size() || key.empty() || key[0] == '-' || key[0] == '+') {
                parse_fail("coefficient key \"" + key + "\" is not an index");
            }
        }
        if (!algebra.in_range(k)) {
            throw Error(ErrorKind::IndexOutOfRange, "index " + key + " is outside " + algebra.describe());
        }
        terms.emplace_back(k, gaussian_from_json(value));
    }
    return Element::from_terms(std::move(terms));
}

Json to_json(const Element& a, const AlgebraSpec& algebra) {
    const auto adjoined = algebra.adjoined_indices();
    Json coeffs = Json::object();
    for (const auto& [k, c] : a.terms()) {
        const std::string key = (!adjoined.empty() && k == adjoined.back()) ? "u" : std::to_string(k);
        coeffs[key] = to_json(c);
    }
    return {{"coeffs", std::move(coeffs)}};
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        parse_fail(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_json_text(ss.str());
}

AlgebraSpec load_algebra(const std::filesystem::path& path) {
    try {
        return algebra_from_json(read_json_file(path));
    } catch (const Json::exception& e) {
        parse_fail(path.string() + ": " + e.what());
    }
}

Element load_element(const std::filesystem::path& path, const AlgebraSpec& algebra) {
    try {
        return element_from_json(read_json_file(path), algebra);
    } catch (const Json::exception& e) {
        parse_fail(path.string() + ": " + e.what());
    }
}

Json to_json(const DiscontinuityCertificate& c, const RenderOptions& options) {
    Json out = {{"kind", c.unbounded() ? "unbounded" : "bounded"},
                {"functional", c.functional},
                {"base", to_string(c.base)}};
    if (c.unbounded()) {
        Json ws = Json::array();
        for (const auto& w : c.witnesses) {
            ws.push_back({{"index", w.index},
                          {"phi_value", to_json(w.phi_value)},
                          {"base_norm", to_json(w.base_norm, options)}});
        }
        out["witnesses"] = std::move(ws);
    } else if (c.sup) {
        out["sup"] = to_json(*c.sup, options);
    }
    return out;
}

Json to_json(const WitnessReport& w, const RenderOptions& options) {
    Json rows = Json::array();
    for (const auto& r : w.rows) {
        Json row = {{"k", r.k},
                    {"witness_index", r.witness_index},
                    {"p_m", to_json(r.p_m, options)},
                    {"p_n", to_json(r.p_n, options)},
                    {"ratio", r.ratio.to_string()}};
        if (options.with_float) row["ratio_float"] = r.ratio.to_double();
        rows.push_back(std::move(row));
    }
    return {{"lhs", w.lhs},
            {"rhs", w.rhs},
            {"base", to_string(w.base)},
            {"certifies_unbounded", w.certifies_unbounded},
            {"rows", std::move(rows)}};
}

std::string witness_csv(const WitnessReport& w) {
    auto value = [](const Magnitude& m) { return m.exact ? m.exact->to_string() : m.to_string(); };
    std::string out = "k,witness_index,p_m,p_n,ratio\n";
    for (const auto& r : w.rows) {
        out += std::to_string(r.k) + "," + std::to_string(r.witness_index) + "," + value(r.p_m) + "," +
               value(r.p_n) + "," + r.ratio.to_string() + "\n";
    }
    return out;
}

Json to_json(const ChainReport& c) {
    Json relations = Json::array();
    for (const auto& r : c.relations) {
        Json rel = {{"lhs", c.labels[r.lhs]}, {"rhs", c.labels[r.rhs]}, {"kind", to_string(r.kind)}};
        if (r.constant) rel["constant"] = r.constant->to_string();
        rel["approx_constant"] = r.approx_constant;
        relations.push_back(std::move(rel));
    }
    Json maxima = Json::array();
    Json minima = Json::array();
    for (auto i : c.maxima) maxima.push_back(c.labels[i]);
    for (auto i : c.minima) minima.push_back(c.labels[i]);
    return {{"norms", c.labels},
            {"relations", std::move(relations)},
            {"maxima", std::move(maxima)},
            {"minima", std::move(minima)},
            {"heuristic", c.heuristic}};
}

Json to_json(const CheckReport& r) {
    Json violations = Json::array();
    for (const auto& v : r.violations) {
        violations.push_back({{"inputs", v.inputs}, {"relation", v.relation}, {"observed", v.observed}});
    }
    return {{"name", r.name},
            {"algebra", r.algebra},
            {"subject", r.subject},
            {"trials", r.trials},
            {"pass", r.pass()},
            {"violation_count", r.violation_count},
            {"exact_comparisons", r.exact_comparisons},
            {"approximate_comparisons", r.approximate_comparisons},
            {"violations", std::move(violations)},
            {"warnings", r.warnings}};
}

Json to_json(const SuiteReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    Json out = {{"pass", r.pass()},
                {"checks_run", r.checks.size()},
                {"violation_count", r.violation_count()},
                {"warnings", r.warnings}};
    if (r.negative_control) out["negative_control"] = r.control_detected ? "detected" : "missed";
    out["checks"] = std::move(checks);
    return out;
}

Json to_json(const AnalysisReport& r, const RenderOptions& options) {
    const AlgebraSpec& a = r.algebra;
    Json out = {{"algebra", a.describe()}, {"family", a.family()}};
    if (const auto d = a.dimension()) {
        out["dimension"] = *d;
    } else {
        out["dimension"] = "countable";
    }
    Json adjoined = Json::array();
    for (Index u : a.adjoined_indices()) adjoined.push_back(a.basis_label(u));
    out["adjoined"] = std::move(adjoined);
    out["validation"] = {{"exhaustive", r.validation.exhaustive}, {"triples_checked", r.validation.triples_checked}};
    out["square_span"] = r.square_span;
    out["codimension"] = r.codimension.to_string();
    if (r.quotient_basis) {
        out["quotient_basis"] = elements_json(*r.quotient_basis, a);
    } else {
        out["quotient_basis"] = nullptr;
    }
    if (r.identity) {
        out["identity"] = {{"element", a.render(r.identity->element)}, {"side", to_string(r.identity->side)}};
    } else {
        out["identity"] = nullptr;
    }
    out["proposition"] = {{"outcome", to_string(r.proposition.outcome)}, {"detail", r.proposition.detail}};
    out["dsap"] = yes_no(r.dsap);
    if (r.certificate) {
        out["certificate"] = to_json(*r.certificate, options);
    } else {
        out["certificate"] = nullptr;
    }
    return out;
}

Json to_json(const GalleryEntry& e) {
    Json out = {{"id", e.id},
                {"title", e.title},
                {"computable", e.algebra.has_value()},
                {"parameterized", e.parameterized},
                {"expected_codimension", e.expected_codimension.to_string()},
                {"expected_dsap", yes_no(e.expected_dsap)}};
    if (e.algebra) out["algebra"] = to_json(*e.algebra);
    out["notes"] = e.notes;
    return out;
}

Json to_json(const GalleryRun& r, const RenderOptions& options) {
    Json matrix = Json::array();
    for (const auto& w : r.witness_matrix) matrix.push_back(to_json(w, options));
    Json out = {{"entry", to_json(r.entry)},
                {"analysis", to_json(r.analysis, options)},
                {"reproduces", r.mismatches.empty()},
                {"mismatches", r.mismatches},
                {"witness_matrix", std::move(matrix)}};
    if (r.base_vs_p) out["base_vs_p"] = to_json(*r.base_vs_p, options);
    return out;
}

}  // namespace algnorm
