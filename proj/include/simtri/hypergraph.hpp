#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace simtri {

using Vertex = int;

/// An unordered vertex triple stored in increasing order (a < b < c).
struct Triple {
    Vertex a = 0;
    Vertex b = 0;
    Vertex c = 0;

    friend auto operator<=>(const Triple&, const Triple&) = default;

    std::array<Vertex, 3> vertices() const { return {a, b, c}; }
    bool contains(Vertex v) const { return a == v || b == v || c == v; }
};

/// Sorts three distinct vertices into a Triple. Throws ArgumentError on repeats or negatives.
Triple make_triple(Vertex x, Vertex y, Vertex z);

/// Number of triples on n vertices, C(n,3).
std::uint64_t triple_count(int n);

/// Lexicographic rank of t among the C(n,3) increasing triples of {0..n-1}.
std::uint64_t triple_rank(int n, const Triple& t);
Triple triple_unrank(int n, std::uint64_t rank);

/// Largest vertex count for which the pair-mask index is kept.
inline constexpr int kMaskedMaxVertices = 64;

/// 3-uniform hypergraph on vertices 0..n-1 with a canonical (sorted, duplicate-free) edge list.
///
/// Immutable once constructed. Up to 64 vertices every vertex pair carries a 64-bit mask of
/// the third vertices completing an edge, which gives O(1) membership and word-parallel
/// neighborhoods; larger graphs fall back to a sorted pair index.
class ThreeGraph {
  public:
    ThreeGraph() = default;
    explicit ThreeGraph(int n);
    /// Validates every triple against n and rejects duplicates; edge order is irrelevant.
    ThreeGraph(int n, std::vector<Triple> edges);

    int vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Triple> edges() const noexcept { return edges_; }

    bool has_edge(const Triple& t) const;
    bool has_edge(Vertex x, Vertex y, Vertex z) const;

    /// Vertices c with {a,b,c} an edge, ascending. a != b required.
    std::vector<Vertex> neighborhood(Vertex a, Vertex b) const;
    /// Bitmask form of neighborhood(); only available when vertex_count() <= 64.
    std::uint64_t pair_mask(Vertex a, Vertex b) const;
    bool is_masked() const noexcept { return n_ <= kMaskedMaxVertices; }

    int degree(Vertex v) const;
    const std::vector<int>& degrees() const noexcept { return degrees_; }

    /// Induced subgraph on the given vertices, relabelled 0..k-1 in the given order.
    ThreeGraph induced(std::span<const Vertex> vertices) const;
    /// Applies a vertex relabelling old -> perm[old]; perm must be a permutation of 0..n-1.
    ThreeGraph relabeled(std::span<const Vertex> perm) const;
    ThreeGraph with_edge(const Triple& t) const;

    friend bool operator==(const ThreeGraph& lhs, const ThreeGraph& rhs) {
        return lhs.n_ == rhs.n_ && lhs.edges_ == rhs.edges_;
    }

  private:
    void check_vertex(Vertex v) const;
    void build_index();

    struct PairEntry {
        Vertex a;
        Vertex b;
        Vertex third;
        friend auto operator<=>(const PairEntry&, const PairEntry&) = default;
    };

    int n_ = 0;
    std::vector<Triple> edges_;
    std::vector<int> degrees_;
    std::vector<std::uint64_t> masks_;  // n*n, symmetric; only when n <= 64
    std::vector<PairEntry> pair_index_; // only when n > 64
};

/// Linkgraph of a vertex: the vertex pairs completing an edge with `center`.
struct LinkGraph {
    Vertex center = 0;
    std::vector<std::pair<Vertex, Vertex>> pairs; // first < second, sorted

    std::size_t size() const noexcept { return pairs.size(); }
};

/// N(a,b): all c with {a,b,c} in E(G). Throws ArgumentError when a == b or out of range.
std::vector<Vertex> neighborhood(const ThreeGraph& g, Vertex a, Vertex b);

/// L(v), L_A(v) or L_{A,B}(v) depending on which restriction sets are supplied.
LinkGraph link(const ThreeGraph& g, Vertex v,
               const std::optional<std::vector<Vertex>>& restrict_a = std::nullopt,
               const std::optional<std::vector<Vertex>>& restrict_b = std::nullopt);

/// Injective map V(H) -> V(G) sending every edge of H onto an edge of G (not necessarily induced).
using Embedding = std::vector<Vertex>;

std::optional<Embedding> find_subgraph(const ThreeGraph& host, const ThreeGraph& pattern);
bool contains_subgraph(const ThreeGraph& host, const ThreeGraph& pattern);

/// True iff G contains a copy of `pattern` that uses the edge `anchor` (which must be in G).
bool contains_subgraph_through(const ThreeGraph& host, const ThreeGraph& pattern, const Triple& anchor);

bool is_family_free(const ThreeGraph& g, std::span<const ThreeGraph> family);

/// G_{u,v}: u is deleted and its index reused for a fresh copy w of v.
///
/// The result keeps every edge avoiding u and gains {w,a,b} for each {a,b,v} in E(G) with
/// u not in {a,b}. No edge contains both w and v.
ThreeGraph clone_vertex(const ThreeGraph& g, Vertex u, Vertex v);

} // namespace simtri
