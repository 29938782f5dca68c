#pragma once

#include "simtri/hypergraph.hpp"

#include <array>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

namespace simtri {

inline constexpr double kAngleSumTolerance = 1e-12;
/// Triples whose smallest angle falls below this are treated as collinear.
inline constexpr double kDegenerateAngle = 1e-12;

inline constexpr double degrees_to_radians(double deg) { return deg * std::numbers::pi / 180.0; }
inline constexpr double radians_to_degrees(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Similarity class of a triangle: angles in radians, sorted ascending, summing to pi.
class TriangleShape {
  public:
    /// Sorts the angles. Throws ArgumentError if any angle is non-positive or the sum is off pi.
    static TriangleShape from_angles(double x, double y, double z);
    static TriangleShape from_degrees(double x, double y, double z);
    /// Shape of the triangle with the given side lengths (must satisfy the strict triangle inequality).
    static TriangleShape from_sides(double x, double y, double z);
    static TriangleShape equilateral();

    const std::array<double, 3>& angles() const noexcept { return angles_; }
    double smallest() const noexcept { return angles_[0]; }
    double largest() const noexcept { return angles_[2]; }
    bool is_acute() const noexcept { return angles_[2] < std::numbers::pi / 2; }

    /// Side lengths proportional to sin(angle), scaled so the longest side is 1, ascending.
    std::array<double, 3> unit_sides() const;

  private:
    std::array<double, 3> angles_{};
};

using Coordinates = std::vector<double>;

/// n points in R^d, d >= 2, pairwise distinct (exact coordinate equality is rejected).
class PointSet {
  public:
    PointSet() = default;
    PointSet(int dim, std::vector<Coordinates> points);

    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return points_.size(); }
    const Coordinates& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Coordinates>& points() const noexcept { return points_; }

    friend bool operator==(const PointSet&, const PointSet&) = default;

  private:
    int dim_ = 2;
    std::vector<Coordinates> points_;
};

/// Sorted angle triple of pqr via the law of cosines; nullopt for coincident or collinear points.
std::optional<TriangleShape> triangle_angles(std::span<const double> p, std::span<const double> q,
                                             std::span<const double> r);

/// Strict comparison of sorted angles: every difference must be below eps (radians).
bool is_eps_similar(const TriangleShape& t1, const TriangleShape& t2, double eps);

/// Strict comparison of side lengths after sorting both triples ascending.
bool is_eps_isomorphic(std::array<double, 3> sides1, std::array<double, 3> sides2, double eps);

/// G(P,T,eps) together with the parameters it was built from.
struct SimilarityGraph {
    ThreeGraph graph;
    TriangleShape shape;
    double eps = 0;
};

/// O(n^3) scan over all triples. `threads` > 1 splits the outer index; the result does not
/// depend on the thread count.
SimilarityGraph build_similarity_graph(const PointSet& points, const TriangleShape& shape, double eps,
                                       int threads = 1);

std::size_t count_similar(const PointSet& points, const TriangleShape& shape, double eps, int threads = 1);
std::size_t count_isomorphic(const PointSet& points, std::array<double, 3> sides, double eps);

double distance(std::span<const double> p, std::span<const double> q);

} // namespace simtri
