#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algnorm/analysis.hpp"
#include "algnorm/norms.hpp"

namespace algnorm {

struct GalleryEntry {
    std::string id;
    std::string title;
    // nullopt for the symbolic-only entries, which carry notes instead.
    std::optional<AlgebraSpec> algebra;
    Codimension expected_codimension = Codimension::finite(0);
    bool expected_dsap = false;
    std::optional<bool> expected_identity;
    std::vector<std::string> notes;
    bool parameterized = false;
};

// Parameters of the truncated polynomial ideal entry. N defaults to 4n.
struct GalleryParams {
    std::optional<Index> n;
    std::optional<Index> N;
};

inline constexpr Index kDefaultPolyIdealN = 3;

// Every entry; the parameterized one at its defaults.
std::vector<GalleryEntry> list_entries();
// Throws UnknownEntry for an unknown id and InvalidParameter when parameters
// are given to an entry that takes none.
GalleryEntry find_entry(std::string_view id, const GalleryParams& params = {});

struct GalleryRun {
    GalleryEntry entry;
    AnalysisReport analysis;
    // Expected-versus-computed disagreements; empty when the entry reproduces.
    std::vector<std::string> mismatches;
    // Infinite codimension only: p_m against p_n for m != n in 1..5, and the
    // theorem norm against its base.
    std::vector<WitnessReport> witness_matrix;
    std::optional<WitnessReport> base_vs_p;
};

inline constexpr Index kGalleryMatrixSize = 5;
inline constexpr Index kGalleryWitnessRows = 10;

// Throws UnknownEntry, or SymbolicOnly (message = the entry's notes) for the
// entries with no finite representation.
GalleryRun run_entry(std::string_view id, const GalleryParams& params = {});

// Expected values of every computable entry against the span engine.
std::vector<std::string> self_test();

}  // namespace algnorm
