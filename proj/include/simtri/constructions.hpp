#pragma once

#include "simtri/geometry.hpp"
#include "simtri/hypergraph.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace simtri {

using Split = std::array<int, 3>;

/// h(n) = max{abc + h(a) + h(b) + h(c) : a + b + c = n}, with h(0) = h(1) = h(2) = 0.
/// Splits are sorted a >= b >= c; among maximizers the lexicographically largest wins.
/// Splits with c = 0 take part, except the trivial (n, 0, 0).
class HSequence {
  public:
    HSequence() = default;
    explicit HSequence(int max_n) { extend(max_n); }

    /// Computes every entry up to max_n (no-op if already present).
    void extend(int max_n);

    int max_n() const noexcept { return static_cast<int>(values_.size()) - 1; }
    std::int64_t value(int n) const;
    Split split(int n) const;
    const std::vector<std::int64_t>& values() const noexcept { return values_; }
    const std::vector<Split>& splits() const noexcept { return splits_; }

    /// Text form: a `# simtri-hseq v1` header followed by lines `n h a b c`.
    std::string serialize() const;

    /// Parses a cache. Returns nullopt (and fills `problem`) when the header or any line is
    /// malformed, rows are missing or out of order, or a row is inconsistent with its own split
    /// (h(n) != abc + h(a) + h(b) + h(c)). Maximality is not rechecked.
    static std::optional<HSequence> deserialize(const std::string& text, std::string* problem = nullptr);

    /// Builds a table from explicit rows; rows must cover 0..N in order.
    static HSequence from_rows(std::vector<std::int64_t> values, std::vector<Split> splits);

  private:
    std::vector<std::int64_t> values_;
    std::vector<Split> splits_;
};

/// Process-wide table, grown on demand.
std::int64_t h_value(int n);
Split best_split(int n);

/// Split used by S(n): a = ceil(n/3), c = floor(n/3), b = n - a - c.
Split balanced_split(int n);

/// e(S(n)) without building the graph.
std::int64_t s_edge_count(int n);

/// The recursive balanced 3-partite construction. The three copies occupy contiguous vertex
/// blocks (sizes a, b, c in that order) and are numbered depth first.
ThreeGraph build_S(int n);

/// Blow-up with `parts` balanced groups per level: all triples meeting three different groups,
/// recursively inside each group. Group sizes are ceil/floor of n/parts, larger groups first.
ThreeGraph build_blowup(int n, int parts);

enum class ConstructionKind { PlanarIterated, Disphenoid, RegularSimplex };

std::string_view to_string(ConstructionKind k);
ConstructionKind construction_kind_from_string(std::string_view s);

inline constexpr double kDefaultRatio = 0.05;
inline constexpr double kMaxRatio = 0.2;

struct ConstructionSpec {
    ConstructionKind kind = ConstructionKind::PlanarIterated;
    TriangleShape shape = TriangleShape::equilateral();
    /// Level contraction: each group is a copy of the parent pattern scaled by this factor.
    double ratio = kDefaultRatio;
    /// Ambient dimension for the simplex kinds (3 for disphenoid).
    int dim = 3;
};

/// Throws ArgumentError unless 0 < ratio <= 0.2, the dimension fits the kind, a disphenoid shape
/// is strictly acute and a regular-simplex shape is equilateral.
void validate_spec(const ConstructionSpec& spec);

/// Places balanced groups at the vertices of a triangle of the given shape, recursively, each
/// level scaled by spec.ratio. Group order and vertex numbering follow build_S. For n = 3 the
/// output is the triangle (0,0), (1,0), apex.
PointSet build_planar_construction(int n, const ConstructionSpec& spec);

/// Tetrahedron with four faces congruent to the triangle with these sides. Throws
/// InfeasibleError unless the triangle is strictly acute.
std::array<std::array<double, 3>, 4> make_disphenoid(std::array<double, 3> sides);

/// d+1 points in R^d with all pairwise distances 1.
std::vector<Coordinates> regular_simplex(int d);

/// Iterated placement of d+1 balanced groups at the vertices of a disphenoid (d = 3, acute
/// shape) or a regular simplex (d >= 4, equilateral shape), contracted by spec.ratio per level.
/// Vertex numbering follows build_blowup(n, d + 1).
PointSet build_simplex_construction(int n, int d, const ConstructionSpec& spec);

/// Exact value of sum_i C(d+1,3) (d+1)^(i-1) (n/(d+1)^i)^3 for n = (d+1)^k. Throws ArgumentError
/// for any other n or d < 3.
std::int64_t expected_simplex_count(std::int64_t n, int d);

/// Outcome of building a construction and checking its similarity graph against the expected
/// pattern (S(n) for the planar kind, the (d+1)-part blow-up otherwise).
struct ValidatedConstruction {
    PointSet points;
    ThreeGraph pattern;
    double requested_ratio = 0;
    double ratio = 0;
    int halvings = 0;
    std::size_t similar = 0;
    std::size_t missing = 0;  // pattern edges absent from the similarity graph
    std::size_t spurious = 0; // similarity edges outside the pattern
    bool validated = false;
};

/// Compares the similarity graph of a point set with a pattern of identical numbering.
ValidatedConstruction compare_with_pattern(PointSet points, ThreeGraph pattern, const TriangleShape& shape,
                                           double eps, int threads = 1);

/// Builds the construction at spec.ratio and halves the ratio until the similarity graph at
/// eps (radians) equals the pattern exactly, at most `max_halvings` times. The last attempt is
/// returned with validated = false if none matched.
ValidatedConstruction realize_construction(int n, const ConstructionSpec& spec, double eps, int threads = 1,
                                           int max_halvings = 20);

} // namespace simtri
