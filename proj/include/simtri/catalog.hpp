#pragma once

#include "simtri/hypergraph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace simtri {

enum class CatalogSource {
    PriorWork, // K4-, C5-, C5+, L2..L6, P7-
    Extension, // L7..L10
};

std::string_view to_string(CatalogSource s);

struct CatalogEntry {
    std::string name;
    ThreeGraph graph;
    CatalogSource source;
    /// True iff the graph admits a dense ordering, i.e. the embedder can certify it.
    bool verifiable = false;
};

/// The 13 forbidden 3-graphs, in listing order. Vertex labels are the 1-based labels of the
/// listing shifted down by one; L10's a, b, c are 10, 11, 12.
const std::vector<CatalogEntry>& catalog();

/// Looks up an entry by name (e.g. "K4-", "L10"); nullptr when absent.
const CatalogEntry* find_catalog_entry(std::string_view name);

/// The catalog graphs alone, for family-freeness checks.
std::vector<ThreeGraph> catalog_family();

/// Builds a graph from the compact edge notation used in the listings ("123 124 58a"),
/// where 1-9 and a, b, c denote vertices 1..12. Vertex count is the largest label.
ThreeGraph graph_from_compact(std::string_view edges);

/// Witness of the dense property: an ordering v_1..v_r such that each v_i (3 <= i <= r-1)
/// closes exactly one edge e_i inside {v_1..v_i} and v_r lies in exactly two edges.
struct DenseCertificate {
    std::vector<Vertex> ordering;
    std::vector<Triple> prefix_edges;   // e_3 .. e_{r-1}, index i-3
    std::pair<Triple, Triple> final_edges; // (e_r, e_r'), e_r < e_r'

    friend bool operator==(const DenseCertificate&, const DenseCertificate&) = default;
};

/// Checks every certificate condition against h. Throws ArgumentError when the ordering is
/// not a permutation of V(h).
bool check_certificate(const ThreeGraph& h, const DenseCertificate& cert);

/// Derives e_i and (e_r, e_r') for a given ordering; nullopt when the ordering is not dense.
std::optional<DenseCertificate> certificate_from_ordering(const ThreeGraph& h, std::vector<Vertex> ordering);

/// Backtracking search for a dense ordering. The final vertex is tried in ascending order among
/// vertices of degree 2, then prefixes are extended in ascending vertex order, so the result
/// is reproducible.
std::optional<DenseCertificate> find_dense_ordering(const ThreeGraph& h);

/// `ordering: v1 .. vr` then `e_i: a b c` lines (1-indexed), the last two as `e_r:` / `e_r':`.
std::string format_certificate(const DenseCertificate& cert);

} // namespace simtri
