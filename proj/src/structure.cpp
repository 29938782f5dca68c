#include "simtri/structure.hpp"

#include "simtri/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <thread>

namespace simtri {

double objective(double a1, double a2, double a3) {
    return a1 * a2 + a1 * a3 + a2 * a3 - (a1 * a1 + a2 * a2 + a3 * a3) / 4;
}

std::int64_t objective_numerator(std::int64_t s1, std::int64_t s2, std::int64_t s3) {
    return 4 * (s1 * s2 + s1 * s3 + s2 * s3) - (s1 * s1 + s2 * s2 + s3 * s3);
}

namespace {

std::vector<Vertex> intersect(const std::vector<Vertex>& x, const std::vector<Vertex>& y) {
    std::vector<Vertex> out;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

PartitionReport make_report(int n, PartitionBase kind, std::vector<Vertex> base,
                            std::array<std::vector<Vertex>, 3> parts) {
    PartitionReport r;
    r.base_kind = kind;
    r.base = std::move(base);
    r.n = n;
    std::vector<int> hits(n, 0);
    for (const auto& p : parts)
        for (Vertex v : p)
            ++hits[v];
    r.disjoint = std::all_of(hits.begin(), hits.end(), [](int h) { return h <= 1; });
    for (Vertex v = 0; v < n; ++v)
        if (hits[v] == 0)
            r.leftover.push_back(v);
    std::array<std::int64_t, 3> s{};
    for (int i = 0; i < 3; ++i) {
        s[i] = static_cast<std::int64_t>(parts[i].size());
        r.fractions[i] = static_cast<double>(s[i]) / n;
    }
    r.parts = std::move(parts);
    r.objective_numerator = objective_numerator(s[0], s[1], s[2]);
    r.objective = static_cast<double>(r.objective_numerator) / (4.0 * n * n);
    r.min_size_ok = 100 * std::min({s[0], s[1], s[2]}) >= 26 * std::int64_t{n};
    r.leftover_ok = 1000 * static_cast<std::int64_t>(r.leftover.size()) <= 12 * std::int64_t{n};
    return r;
}

// Candidate comparison: larger objective first, then the smaller base.
bool better(const PartitionReport& x, const PartitionReport& y) {
    if (x.objective_numerator != y.objective_numerator)
        return x.objective_numerator > y.objective_numerator;
    return x.base < y.base;
}

PartitionReport edge_partition(const ThreeGraph& g, const Triple& e) {
    return make_report(g.vertex_count(), PartitionBase::Edge, {e.a, e.b, e.c},
                       {g.neighborhood(e.b, e.c), g.neighborhood(e.a, e.c), g.neighborhood(e.a, e.b)});
}

std::optional<PartitionReport> best_t221(const ThreeGraph& g) {
    const int n = g.vertex_count();
    std::optional<PartitionReport> best;
    // Parts {x1,x1'} and {x2,x2'} are unordered between themselves: take (x1,x1') < (x2,x2').
    for (Vertex x3 = 0; x3 < n; ++x3) {
        std::vector<std::vector<Vertex>> nb(n);
        for (Vertex v = 0; v < n; ++v)
            if (v != x3)
                nb[v] = g.neighborhood(v, x3);
        for (Vertex x1 = 0; x1 < n; ++x1) {
            for (Vertex y1 = x1 + 1; y1 < n; ++y1) {
                if (x1 == x3 || y1 == x3)
                    continue;
                // x2, x2' must complete edges with x3 and both of x1, x1'.
                std::vector<Vertex> common = intersect(nb[x1], nb[y1]);
                for (std::size_t i = 0; i < common.size(); ++i) {
                    for (std::size_t j = i + 1; j < common.size(); ++j) {
                        const Vertex x2 = common[i], y2 = common[j];
                        if (x2 == x1 || x2 == y1 || y2 == x1 || y2 == y1)
                            continue;
                        if (std::pair{x2, y2} < std::pair{x1, y1})
                            continue;
                        std::array<std::vector<Vertex>, 3> parts{
                            intersect(g.neighborhood(x2, x3), g.neighborhood(y2, x3)),
                            intersect(g.neighborhood(x1, x3), g.neighborhood(y1, x3)),
                            intersect(intersect(g.neighborhood(x1, x2), g.neighborhood(y1, x2)),
                                      intersect(g.neighborhood(x1, y2), g.neighborhood(y1, y2)))};
                        auto r = make_report(n, PartitionBase::T221, {x1, y1, x2, y2, x3}, std::move(parts));
                        if (!best || better(r, *best))
                            best = std::move(r);
                    }
                }
            }
        }
    }
    return best;
}

} // namespace

PartitionReport best_edge_partition(const ThreeGraph& g, PartitionBase base, int threads) {
    if (g.edge_count() == 0)
        throw NoEdgeError("partition search needs at least one edge");
    if (base == PartitionBase::T221) {
        auto r = best_t221(g);
        if (!r)
            throw NoEdgeError("graph contains no T221 copy");
        return *r;
    }
    const auto edges = g.edges();
    threads = std::clamp(threads, 1, static_cast<int>(edges.size()));
    std::vector<std::optional<PartitionReport>> local(threads);
    auto scan = [&](int w) {
        for (std::size_t i = w; i < edges.size(); i += threads) {
            auto r = edge_partition(g, edges[i]);
            if (!local[w] || better(r, *local[w]))
                local[w] = std::move(r);
        }
    };
    if (threads == 1) {
        scan(0);
    } else {
        std::vector<std::jthread> workers;
        for (int w = 0; w < threads; ++w)
            workers.emplace_back(scan, w);
    }
    std::optional<PartitionReport> best;
    for (auto& r : local)
        if (r && (!best || better(*r, *best)))
            best = std::move(r);
    return *best;
}

namespace {

using boost::multiprecision::cpp_rational;

std::string fraction(const cpp_rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

BoundCheck make_check(std::string name, const cpp_rational& computed, std::optional<cpp_rational> claimed,
                      std::optional<cpp_rational> bound) {
    BoundCheck c;
    c.name = std::move(name);
    c.computed = fraction(computed);
    c.computed_value = computed.convert_to<double>();
    if (claimed) {
        c.claimed = fraction(*claimed);
        c.matches_claim = computed == *claimed;
    }
    if (bound)
        c.below_bound = computed < *bound;
    return c;
}

} // namespace

bool BoundCheckReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.pass(); });
}

BoundCheckReport quadratic_bound_checks() {
    const cpp_rational bound(24406, 100000);
    BoundCheckReport report;

    const cpp_rational a0(26, 100);
    const cpp_rational v1 = -cpp_rational(9, 8) * a0 * a0 + cpp_rational(3, 4) * a0 + cpp_rational(1, 8);
    report.checks.push_back(make_check("quadratic at a = 26/100", v1, cpp_rational(24325, 100000), bound));

    // Vertex of -(9/8)a^2 + p a + q sits at a = p / (9/4).
    const cpp_rational p(741, 1000), q(122018, 1000000);
    const cpp_rational arg = p / cpp_rational(9, 4);
    const cpp_rational v2 = -cpp_rational(9, 8) * arg * arg + p * arg + q;
    report.checks.push_back(make_check("argmax of shifted quadratic", arg, cpp_rational(247, 750), std::nullopt));
    report.checks.push_back(make_check("maximum of shifted quadratic", v2, cpp_rational(61009, 250000), bound));

    const cpp_rational third(1, 3);
    const cpp_rational obj = 3 * third * third - (3 * third * third) / 4;
    report.checks.push_back(make_check("objective at (1/3,1/3,1/3)", obj, cpp_rational(1, 4), std::nullopt));
    return report;
}

double g_polynomial(double x1, double x2, double x3) {
    return x1 * x2 * x3 + (x1 * x1 * x1 + x2 * x2 * x2 + x3 * x3 * x3) / 24;
}

MaximizeResult maximize_g() {
    constexpr double lo = 0.26, hi = 0.48;
    MaximizeResult result;
    result.value = -1;

    // Points are kept as integer multiples of the current step to avoid drift.
    std::int64_t scale = 1000;
    std::int64_t best_i = 0, best_j = 0;
    auto consider = [&](std::int64_t i, std::int64_t j) {
        const std::int64_t k = scale - i - j;
        const double x1 = static_cast<double>(i) / scale, x2 = static_cast<double>(j) / scale,
                     x3 = static_cast<double>(k) / scale;
        for (double x : {x1, x2, x3})
            if (x < lo - 1e-12 || x > hi + 1e-12)
                return;
        const double v = g_polynomial(x1, x2, x3);
        if (v > result.value) {
            result.value = v;
            result.argmax = {x1, x2, x3};
            best_i = i;
            best_j = j;
        }
    };
    auto record = [&] {
        result.stages.push_back({1.0 / static_cast<double>(scale), result.argmax, result.value});
    };

    for (std::int64_t i = 260; i <= 480; ++i)
        for (std::int64_t j = 260; j <= 480; ++j)
            consider(i, j);
    record();

    for (int stage = 0; stage < 4; ++stage) {
        scale *= 10;
        best_i *= 10;
        best_j *= 10;
        const std::int64_t ci = best_i, cj = best_j;
        // The incumbent (offset 0) is part of the window, so values never decrease.
        for (std::int64_t di = -10; di <= 10; ++di)
            for (std::int64_t dj = -10; dj <= 10; ++dj)
                consider(ci + di, cj + dj);
        record();
    }
    return result;
}

} // namespace simtri
