#pragma once

#include "simtri/hypergraph.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace simtri {

/// A named list of forbidden 3-graphs.
struct Family {
    std::string id;
    std::vector<ThreeGraph> members;
};

/// "F" is the whole catalog; any catalog name ("K4-", "L2", ...) is that graph alone.
/// Throws ArgumentError for unknown names.
Family family_by_name(const std::string& name);

/// FNV-1a over the members' edge lists; used to tie checkpoints to a family.
std::uint64_t family_fingerprint(const Family& family);

/// Resumable search state: the decision path to the node being expanded (1 = triple taken),
/// plus the best graph found before it.
struct TuranCheckpoint {
    int n = 0;
    std::string family_id;
    std::uint64_t fingerprint = 0;
    std::uint64_t nodes = 0;
    int best = -1;
    std::vector<Triple> witness;
    std::vector<std::uint8_t> path;
    bool complete = false;

    friend bool operator==(const TuranCheckpoint&, const TuranCheckpoint&) = default;
};

std::string serialize_checkpoint(const TuranCheckpoint& cp);
/// nullopt (with a reason in `problem`) for anything malformed.
std::optional<TuranCheckpoint> deserialize_checkpoint(const std::string& text, std::string* problem = nullptr);

inline constexpr int kTuranDefaultMaxN = 9;

struct TuranOptions {
    /// Lifts the n <= 9 guard (n stays <= 64).
    bool force = false;
    /// Written every `checkpoint_interval` nodes and when the search stops.
    std::optional<std::filesystem::path> checkpoint_file;
    std::uint64_t checkpoint_interval = 10'000'000;
    /// Stop after this many nodes; the result then carries a checkpoint.
    std::optional<std::uint64_t> node_limit;
    /// Continue from an earlier checkpoint (must match n and the family).
    std::optional<TuranCheckpoint> resume;
};

struct SearchResult {
    int n = 0;
    std::string family_id;
    int max_edges = 0;
    ThreeGraph witness;
    std::uint64_t nodes_expanded = 0;
    /// False when the search stopped at the node limit; max_edges is then a lower bound.
    bool complete = true;
    std::optional<TuranCheckpoint> checkpoint;

    friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

/// ex(n, family) by depth-first branch and bound over the C(n,3) triples in lexicographic order,
/// taking a triple before skipping it. A triple is taken only if no member copy passes through
/// it. A node is cut when its edges plus the untouched triples of the current first vertex plus
/// ex(n - a - 1) for the remaining vertices cannot beat the best graph; smaller ex values come
/// from the same search. The witness is the first maximum graph in search order.
/// Throws SizeError for n > 9 without `force` (and always for n > 64), ArgumentError for an
/// empty family or a member without edges.
SearchResult exact_turan(int n, const Family& family, const TuranOptions& options = {});

/// Recomputes family-freeness and edge count of the witness.
bool verify_witness(const SearchResult& result, const Family& family);

} // namespace simtri
