#pragma once

/*
 * JSON and CSV renderings.
 *
 * Rationals are strings "p/q" ("p" when q = 1), Gaussian rationals objects
 * {"re": "p/q", "im": "p/q"}. Algebra files look like
 *
 *   {"family": "structure_constants", "dim": 2, "table": [[1, 1, 1, "1"], ...]}
 *   {"family": "masked_pointwise", "mask": {"kind": "residue", "modulus": 3, "residue": 1}}
 *   {"family": "truncated_poly_ideal", "n": 3, "N": 12}
 *   {"family": "trivial_extension", "inner": {...}}
 *   {"family": "zero_product"}
 *
 * with mask kinds all, evens, odds, residue, finite and cofinite (the last
 * two carry "indices"). Element files are {"coeffs": {"<index>": scalar}}
 * where a scalar is a Gaussian object or a rational string; the key "u"
 * names the outermost adjoined coordinate of a trivial extension.
 */

#include <filesystem>
#include <string>

#include "algnorm/analysis.hpp"
#include "algnorm/gallery.hpp"
#include "algnorm/verify.hpp"
#include "json.hpp"

namespace algnorm {

using Json = nlohmann::ordered_json;

struct RenderOptions {
    bool with_float = false;  // add decimal approximations next to exact values
};

Json to_json(const Rational& r);
Json to_json(const GaussianRational& z);
Json to_json(const Magnitude& m, const RenderOptions& options = {});
Rational rational_from_json(const Json& j);
GaussianRational gaussian_from_json(const Json& j);

// All parsing errors are ParseError; structural problems in a table keep the
// algebra module's kinds (MalformedTable, InvalidParameter).
AlgebraSpec algebra_from_json(const Json& j);
Json to_json(const AlgebraSpec& algebra);
Element element_from_json(const Json& j, const AlgebraSpec& algebra);
Json to_json(const Element& a, const AlgebraSpec& algebra);

Json parse_json_text(const std::string& text);
Json read_json_file(const std::filesystem::path& path);
AlgebraSpec load_algebra(const std::filesystem::path& path);
Element load_element(const std::filesystem::path& path, const AlgebraSpec& algebra);

Json to_json(const DiscontinuityCertificate& c, const RenderOptions& options = {});
Json to_json(const WitnessReport& w, const RenderOptions& options = {});
// Header "k,witness_index,p_m,p_n,ratio", one row per k, exact values.
std::string witness_csv(const WitnessReport& w);
Json to_json(const ChainReport& c);
Json to_json(const CheckReport& r);
Json to_json(const SuiteReport& r);
Json to_json(const AnalysisReport& r, const RenderOptions& options = {});
Json to_json(const GalleryEntry& e);
Json to_json(const GalleryRun& r, const RenderOptions& options = {});

}  // namespace algnorm
