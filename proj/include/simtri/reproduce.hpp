#pragma once

// The reproduction suite: one check per acceptance criterion, driven by replaceable inputs so
// that mutated catalogs or poisoned caches can be shown to make the matching row fail.

#include "simtri/catalog.hpp"
#include "simtri/constructions.hpp"
#include "simtri/hypergraph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace simtri {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct ReproduceInputs {
    std::vector<CatalogEntry> catalog;
    /// h table to use instead of computing one (e.g. loaded from a cache file).
    std::optional<HSequence> hseq;
    std::uint64_t seed = kDefaultSeed;
    int threads = 1;

    /// The built-in catalog, no cache.
    static ReproduceInputs defaults();
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::vector<std::string> details;
    double seconds = 0;

    friend bool operator==(const CriterionResult&, const CriterionResult&) = default;
};

struct ReproduceSummary {
    std::vector<CriterionResult> rows;
    bool all_pass() const;

    friend bool operator==(const ReproduceSummary&, const ReproduceSummary&) = default;
};

inline constexpr int kCriterionCount = 10;

/// Runs criterion `id` (1..10).
CriterionResult run_criterion(int id, const ReproduceInputs& inputs);
ReproduceSummary run_reproduce(const ReproduceInputs& inputs);

/// ex(n, family) by enumerating all 2^C(n,3) edge subsets. Copies of each member are listed by
/// trying every injective vertex map, and "contains a copy" is closed upward over the subset
/// lattice. n <= 6.
int exhaustive_turan(int n, const std::vector<ThreeGraph>& family);

/// Containment by trying every injective map V(pattern) -> V(host).
bool brute_force_contains(const ThreeGraph& host, const ThreeGraph& pattern);

/// Random family-free graph: triples in random order, each kept with probability `density`
/// if the graph stays free.
ThreeGraph random_free_graph(int n, const std::vector<ThreeGraph>& family, double density, std::uint64_t seed);

} // namespace simtri
