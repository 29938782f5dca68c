#pragma once

// Slow, obviously-correct reference implementations. None of them call into the library
// beyond ThreeGraph accessors, so they can check the fast paths independently.

#include "simtri/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using simtri::ThreeGraph;
using simtri::Triple;
using simtri::Vertex;

inline std::set<std::array<int, 3>> edge_set(const ThreeGraph& g) {
    std::set<std::array<int, 3>> s;
    for (const Triple& t : g.edges())
        s.insert({t.a, t.b, t.c});
    return s;
}

inline bool has(const std::set<std::array<int, 3>>& s, int x, int y, int z) {
    std::array<int, 3> k{x, y, z};
    std::sort(k.begin(), k.end());
    return s.count(k) > 0;
}

// Tries every injective map, with a partial check after each assignment.
inline bool contains(const ThreeGraph& host, const ThreeGraph& pattern) {
    const int k = pattern.vertex_count(), n = host.vertex_count();
    if (k > n)
        return false;
    const auto hs = edge_set(host);
    std::vector<int> map(k, -1);
    std::vector<bool> used(n, false);
    auto ok_so_far = [&](int upto) {
        for (const Triple& t : pattern.edges())
            if (t.c <= upto && !has(hs, map[t.a], map[t.b], map[t.c]))
                return false;
        return true;
    };
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == k)
            return true;
        for (int v = 0; v < n; ++v) {
            if (used[v])
                continue;
            map[i] = v;
            used[v] = true;
            if (ok_so_far(i) && self(self, i + 1))
                return true;
            used[v] = false;
        }
        map[i] = -1;
        return false;
    };
    return rec(rec, 0);
}

// Dense property straight from the definition, over all r! orderings.
inline bool has_dense_ordering(const ThreeGraph& h) {
    const int r = h.vertex_count();
    if (r < 4)
        return false;
    std::vector<int> order(r);
    std::iota(order.begin(), order.end(), 0);
    const auto edges = h.edges();
    do {
        std::vector<int> pos(r);
        for (int i = 0; i < r; ++i)
            pos[order[i]] = i;
        // Edges whose last vertex (in the ordering) is order[i].
        std::vector<int> closing(r, 0);
        for (const Triple& t : edges)
            ++closing[std::max({pos[t.a], pos[t.b], pos[t.c]})];
        bool ok = closing[0] == 0 && closing[1] == 0 && closing[r - 1] == 2;
        for (int i = 2; ok && i < r - 1; ++i)
            ok = closing[i] == 1;
        if (ok)
            return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

// ex(n, family) over every edge subset; n <= 6.
inline int exhaustive_ex(int n, const std::vector<ThreeGraph>& family) {
    std::vector<Triple> all;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                all.push_back({a, b, c});
    const std::uint64_t total = 1ULL << all.size();
    int best = 0;
    for (std::uint64_t m = 0; m < total; ++m) {
        const int e = std::popcount(m);
        if (e <= best)
            continue;
        std::vector<Triple> edges;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (m >> i & 1)
                edges.push_back(all[i]);
        const ThreeGraph g(n, edges);
        bool free = true;
        for (const auto& f : family)
            if (contains(g, f)) {
                free = false;
                break;
            }
        if (free)
            best = e;
    }
    return best;
}

// h by the plain recurrence over every split a >= b >= c, no pruning.
inline std::vector<std::int64_t> h_table(int max_n) {
    std::vector<std::int64_t> h(max_n + 1, 0);
    for (int n = 3; n <= max_n; ++n)
        for (int a = 1; a <= n; ++a)
            for (int b = 0; b <= a && a + b <= n; ++b) {
                const int c = n - a - b;
                if (c > b || a == n)
                    continue;
                h[n] = std::max(h[n], std::int64_t(a) * b * c + h[a] + h[b] + h[c]);
            }
    return h;
}

// Angles of a triangle from its sides, sorted, in radians.
inline std::array<double, 3> angles_from_points(const std::vector<double>& p, const std::vector<double>& q,
                                                const std::vector<double>& r) {
    auto d = [](const std::vector<double>& x, const std::vector<double>& y) {
        double s = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            s += (x[i] - y[i]) * (x[i] - y[i]);
        return std::sqrt(s);
    };
    const double a = d(q, r), b = d(p, r), c = d(p, q);
    auto ang = [](double opp, double s1, double s2) {
        return std::acos(std::clamp((s1 * s1 + s2 * s2 - opp * opp) / (2 * s1 * s2), -1.0, 1.0));
    };
    std::array<double, 3> out{ang(a, b, c), ang(b, a, c), 0};
    out[2] = std::acos(-1.0) - out[0] - out[1];
    std::sort(out.begin(), out.end());
    return out;
}

inline ThreeGraph random_graph(int n, double density, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0, 1);
    std::vector<Triple> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (u(rng) < density)
                    edges.push_back({a, b, c});
    return ThreeGraph(n, edges);
}

} // namespace oracle
