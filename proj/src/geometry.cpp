#include "simtri/geometry.hpp"

#include "simtri/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

namespace simtri {

TriangleShape TriangleShape::from_angles(double x, double y, double z) {
    if (!(x > 0 && y > 0 && z > 0))
        throw ArgumentError("triangle angles must be positive");
    if (std::abs(x + y + z - std::numbers::pi) > kAngleSumTolerance)
        throw ArgumentError("triangle angles must sum to pi");
    TriangleShape s;
    s.angles_ = {x, y, z};
    std::sort(s.angles_.begin(), s.angles_.end());
    return s;
}

TriangleShape TriangleShape::from_degrees(double x, double y, double z) {
    return from_angles(degrees_to_radians(x), degrees_to_radians(y), degrees_to_radians(z));
}

TriangleShape TriangleShape::from_sides(double x, double y, double z) {
    std::array<double, 3> s{x, y, z};
    std::sort(s.begin(), s.end());
    if (!(s[0] > 0) || !(s[0] + s[1] > s[2]))
        throw ArgumentError("side lengths do not form a nondegenerate triangle");
    // Angles opposite the two shorter sides; the largest closes the sum exactly.
    auto angle = [](double opp, double u, double v) {
        return std::acos(std::clamp((u * u + v * v - opp * opp) / (2 * u * v), -1.0, 1.0));
    };
    const double a0 = angle(s[0], s[1], s[2]);
    const double a1 = angle(s[1], s[0], s[2]);
    return from_angles(a0, a1, std::numbers::pi - a0 - a1);
}

TriangleShape TriangleShape::equilateral() {
    TriangleShape s;
    s.angles_ = {std::numbers::pi / 3, std::numbers::pi / 3, std::numbers::pi / 3};
    return s;
}

std::array<double, 3> TriangleShape::unit_sides() const {
    const double big = std::sin(angles_[2]);
    return {std::sin(angles_[0]) / big, std::sin(angles_[1]) / big, 1.0};
}

PointSet::PointSet(int dim, std::vector<Coordinates> points) : dim_(dim), points_(std::move(points)) {
    if (dim < 2)
        throw ArgumentError("point dimension must be at least 2");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (static_cast<int>(points_[i].size()) != dim)
            throw ArgumentError("point " + std::to_string(i) + " has " + std::to_string(points_[i].size()) +
                                " coordinates, expected " + std::to_string(dim));
        for (double c : points_[i])
            if (!std::isfinite(c))
                throw ArgumentError("point " + std::to_string(i) + " has a non-finite coordinate");
    }
    std::vector<std::size_t> idx(points_.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](auto l, auto r) { return points_[l] < points_[r]; });
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (points_[idx[i]] == points_[idx[i - 1]])
            throw ArgumentError("points " + std::to_string(std::min(idx[i], idx[i - 1])) + " and " +
                                std::to_string(std::max(idx[i], idx[i - 1])) + " coincide");
}

double distance(std::span<const double> p, std::span<const double> q) {
    double s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double d = p[i] - q[i];
        s += d * d;
    }
    return std::sqrt(s);
}

std::optional<TriangleShape> triangle_angles(std::span<const double> p, std::span<const double> q,
                                             std::span<const double> r) {
    if (p.size() != q.size() || p.size() != r.size())
        throw ArgumentError("triangle vertices have different dimensions");
    const double a = distance(q, r);
    const double b = distance(p, r);
    const double c = distance(p, q);
    if (a == 0 || b == 0 || c == 0)
        return std::nullopt;
    auto angle = [](double opp, double u, double v) {
        return std::acos(std::clamp((u * u + v * v - opp * opp) / (2 * u * v), -1.0, 1.0));
    };
    std::array<double, 3> ang{angle(a, b, c), angle(b, a, c), angle(c, a, b)};
    std::sort(ang.begin(), ang.end());
    if (ang[0] < kDegenerateAngle)
        return std::nullopt;
    // The two smaller angles are well conditioned; derive the largest so the sum is exact.
    ang[2] = std::numbers::pi - ang[0] - ang[1];
    if (ang[2] < ang[1])
        std::swap(ang[1], ang[2]);
    return TriangleShape::from_angles(ang[0], ang[1], ang[2]);
}

bool is_eps_similar(const TriangleShape& t1, const TriangleShape& t2, double eps) {
    if (!(eps > 0))
        throw ArgumentError("eps must be positive");
    for (int i = 0; i < 3; ++i)
        if (!(std::abs(t1.angles()[i] - t2.angles()[i]) < eps))
            return false;
    return true;
}

bool is_eps_isomorphic(std::array<double, 3> sides1, std::array<double, 3> sides2, double eps) {
    if (!(eps > 0))
        throw ArgumentError("eps must be positive");
    for (double s : sides1)
        if (!(s > 0))
            throw ArgumentError("side lengths must be positive");
    for (double s : sides2)
        if (!(s > 0))
            throw ArgumentError("side lengths must be positive");
    std::sort(sides1.begin(), sides1.end());
    std::sort(sides2.begin(), sides2.end());
    for (int i = 0; i < 3; ++i)
        if (!(std::abs(sides1[i] - sides2[i]) < eps))
            return false;
    return true;
}

SimilarityGraph build_similarity_graph(const PointSet& points, const TriangleShape& shape, double eps,
                                       int threads) {
    if (!(eps > 0))
        throw ArgumentError("eps must be positive");
    const int n = static_cast<int>(points.size());
    threads = std::clamp(threads, 1, std::max(1, n));

    auto scan = [&](int first, std::vector<Triple>& out) {
        for (int i = first; i < n; i += threads)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k) {
                    auto t = triangle_angles(points[i], points[j], points[k]);
                    if (t && is_eps_similar(*t, shape, eps))
                        out.push_back({i, j, k});
                }
    };

    std::vector<std::vector<Triple>> parts(threads);
    if (threads == 1) {
        scan(0, parts[0]);
    } else {
        std::vector<std::jthread> workers;
        for (int w = 0; w < threads; ++w)
            workers.emplace_back([&, w] { scan(w, parts[w]); });
    }
    std::vector<Triple> edges;
    for (auto& p : parts)
        edges.insert(edges.end(), p.begin(), p.end());
    return {ThreeGraph(n, std::move(edges)), shape, eps};
}

std::size_t count_similar(const PointSet& points, const TriangleShape& shape, double eps, int threads) {
    return build_similarity_graph(points, shape, eps, threads).graph.edge_count();
}

std::size_t count_isomorphic(const PointSet& points, std::array<double, 3> sides, double eps) {
    if (!(eps > 0))
        throw ArgumentError("eps must be positive");
    for (double s : sides)
        if (!(s > 0))
            throw ArgumentError("side lengths must be positive");
    const std::size_t n = points.size();
    std::size_t count = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                std::array<double, 3> s{distance(points[j], points[k]), distance(points[i], points[k]),
                                        distance(points[i], points[j])};
                if (is_eps_isomorphic(s, sides, eps))
                    ++count;
            }
    return count;
}

} // namespace simtri
