#include "simtri/hypergraph.hpp"

#include "simtri/detail/matcher.hpp"
#include "simtri/errors.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace simtri {

Triple make_triple(Vertex x, Vertex y, Vertex z) {
    if (x < 0 || y < 0 || z < 0)
        throw ArgumentError("negative vertex in triple");
    if (x == y || y == z || x == z)
        throw ArgumentError("triple has repeated vertex " + std::to_string(x == y ? x : z));
    std::array<Vertex, 3> v{x, y, z};
    std::sort(v.begin(), v.end());
    return {v[0], v[1], v[2]};
}

namespace {

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace

std::uint64_t triple_count(int n) { return n < 3 ? 0 : choose(static_cast<std::uint64_t>(n), 3); }

std::uint64_t triple_rank(int n, const Triple& t) {
    // Triples before t: those with a smaller first vertex, then a smaller second, then third.
    const auto un = static_cast<std::uint64_t>(n);
    std::uint64_t rank = 0;
    for (Vertex a = 0; a < t.a; ++a)
        rank += choose(un - 1 - a, 2);
    for (Vertex b = t.a + 1; b < t.b; ++b)
        rank += un - 1 - b;
    rank += static_cast<std::uint64_t>(t.c - t.b - 1);
    return rank;
}

Triple triple_unrank(int n, std::uint64_t rank) {
    const auto un = static_cast<std::uint64_t>(n);
    if (rank >= triple_count(n))
        throw ArgumentError("triple rank out of range");
    Vertex a = 0;
    while (rank >= choose(un - 1 - a, 2)) {
        rank -= choose(un - 1 - a, 2);
        ++a;
    }
    Vertex b = a + 1;
    while (rank >= un - 1 - b) {
        rank -= un - 1 - b;
        ++b;
    }
    return {a, b, b + 1 + static_cast<Vertex>(rank)};
}

ThreeGraph::ThreeGraph(int n) : ThreeGraph(n, {}) {}

ThreeGraph::ThreeGraph(int n, std::vector<Triple> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0)
        throw ArgumentError("negative vertex count");
    for (const Triple& t : edges_) {
        if (!(t.a >= 0 && t.a < t.b && t.b < t.c && t.c < n))
            throw ArgumentError("edge {" + std::to_string(t.a) + "," + std::to_string(t.b) + "," +
                                std::to_string(t.c) + "} is not an increasing triple below n=" +
                                std::to_string(n));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw ArgumentError("duplicate edge");
    build_index();
}

void ThreeGraph::build_index() {
    degrees_.assign(n_, 0);
    for (const Triple& t : edges_) {
        ++degrees_[t.a];
        ++degrees_[t.b];
        ++degrees_[t.c];
    }
    if (is_masked()) {
        masks_.assign(static_cast<std::size_t>(n_) * n_, 0);
        auto set = [&](Vertex x, Vertex y, Vertex z) {
            masks_[x * n_ + y] |= std::uint64_t{1} << z;
            masks_[y * n_ + x] |= std::uint64_t{1} << z;
        };
        for (const Triple& t : edges_) {
            set(t.a, t.b, t.c);
            set(t.a, t.c, t.b);
            set(t.b, t.c, t.a);
        }
    } else {
        pair_index_.reserve(edges_.size() * 3);
        for (const Triple& t : edges_) {
            pair_index_.push_back({t.a, t.b, t.c});
            pair_index_.push_back({t.a, t.c, t.b});
            pair_index_.push_back({t.b, t.c, t.a});
        }
        std::sort(pair_index_.begin(), pair_index_.end());
    }
}

void ThreeGraph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_)
        throw ArgumentError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

bool ThreeGraph::has_edge(const Triple& t) const {
    if (t.c >= n_ || t.a < 0)
        return false;
    if (is_masked())
        return (masks_[t.a * n_ + t.b] >> t.c) & 1U;
    return std::binary_search(edges_.begin(), edges_.end(), t);
}

bool ThreeGraph::has_edge(Vertex x, Vertex y, Vertex z) const {
    if (x == y || y == z || x == z)
        return false;
    std::array<Vertex, 3> v{x, y, z};
    std::sort(v.begin(), v.end());
    return has_edge(Triple{v[0], v[1], v[2]});
}

std::uint64_t ThreeGraph::pair_mask(Vertex a, Vertex b) const {
    if (!is_masked())
        throw SizeError("pair masks need at most 64 vertices");
    return masks_[a * n_ + b];
}

std::vector<Vertex> ThreeGraph::neighborhood(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    if (a == b)
        throw ArgumentError("neighborhood needs two distinct vertices");
    std::vector<Vertex> out;
    if (is_masked()) {
        for (std::uint64_t m = masks_[a * n_ + b]; m; m &= m - 1)
            out.push_back(std::countr_zero(m));
        return out;
    }
    if (a > b)
        std::swap(a, b);
    auto lo = std::lower_bound(pair_index_.begin(), pair_index_.end(), PairEntry{a, b, -1});
    for (; lo != pair_index_.end() && lo->a == a && lo->b == b; ++lo)
        out.push_back(lo->third);
    return out;
}

int ThreeGraph::degree(Vertex v) const {
    check_vertex(v);
    return degrees_[v];
}

ThreeGraph ThreeGraph::induced(std::span<const Vertex> vertices) const {
    std::vector<int> index(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        check_vertex(vertices[i]);
        if (index[vertices[i]] >= 0)
            throw ArgumentError("repeated vertex in induced subgraph selection");
        index[vertices[i]] = static_cast<int>(i);
    }
    std::vector<Triple> out;
    for (const Triple& t : edges_)
        if (index[t.a] >= 0 && index[t.b] >= 0 && index[t.c] >= 0)
            out.push_back(make_triple(index[t.a], index[t.b], index[t.c]));
    return ThreeGraph(static_cast<int>(vertices.size()), std::move(out));
}

ThreeGraph ThreeGraph::relabeled(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw ArgumentError("relabelling must cover every vertex");
    std::vector<char> seen(n_, 0);
    for (Vertex p : perm) {
        check_vertex(p);
        if (seen[p]++)
            throw ArgumentError("relabelling is not a permutation");
    }
    std::vector<Triple> out;
    out.reserve(edges_.size());
    for (const Triple& t : edges_)
        out.push_back(make_triple(perm[t.a], perm[t.b], perm[t.c]));
    return ThreeGraph(n_, std::move(out));
}

ThreeGraph ThreeGraph::with_edge(const Triple& t) const {
    auto e = edges_;
    e.push_back(t);
    return ThreeGraph(n_, std::move(e));
}

namespace {

struct GraphHost {
    const ThreeGraph& g;

    int vertex_count() const { return g.vertex_count(); }
    int degree(Vertex v) const { return g.degrees()[v]; }
    bool has_edge(Vertex x, Vertex y, Vertex z) const { return g.has_edge(x, y, z); }
    bool masked() const { return g.is_masked(); }
    std::uint64_t mask(Vertex a, Vertex b) const { return g.pair_mask(a, b); }
    void thirds(Vertex a, Vertex b, std::vector<Vertex>& out) const { out = g.neighborhood(a, b); }
};

} // namespace

std::vector<Vertex> neighborhood(const ThreeGraph& g, Vertex a, Vertex b) { return g.neighborhood(a, b); }

LinkGraph link(const ThreeGraph& g, Vertex v, const std::optional<std::vector<Vertex>>& restrict_a,
               const std::optional<std::vector<Vertex>>& restrict_b) {
    const int n = g.vertex_count();
    if (v < 0 || v >= n)
        throw ArgumentError("link center " + std::to_string(v) + " out of range");
    auto membership = [&](const std::optional<std::vector<Vertex>>& set) {
        std::vector<char> in(n, set ? 0 : 1);
        if (set)
            for (Vertex x : *set) {
                if (x < 0 || x >= n)
                    throw ArgumentError("restriction set contains out-of-range vertex");
                in[x] = 1;
            }
        return in;
    };
    if (restrict_b && !restrict_a)
        throw ArgumentError("bipartite link needs both restriction sets");
    const auto in_a = membership(restrict_a);
    const auto in_b = membership(restrict_b);

    LinkGraph out{v, {}};
    for (const Triple& t : g.edges()) {
        if (!t.contains(v))
            continue;
        Vertex x = t.a == v ? t.b : t.a;
        Vertex y = t.c == v ? t.b : t.c;
        bool keep = restrict_b ? (in_a[x] && in_b[y]) || (in_a[y] && in_b[x]) : in_a[x] && in_a[y];
        if (keep)
            out.pairs.emplace_back(x, y);
    }
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

std::optional<Embedding> find_subgraph(const ThreeGraph& host, const ThreeGraph& pattern) {
    if (pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count())
        return std::nullopt;
    const auto plan = detail::make_plan(pattern);
    GraphHost h{host};
    if (!detail::degree_dominates(h, plan))
        return std::nullopt;
    detail::Matcher<GraphHost> m(h, plan);
    return m.run({});
}

bool contains_subgraph(const ThreeGraph& host, const ThreeGraph& pattern) {
    return find_subgraph(host, pattern).has_value();
}

bool contains_subgraph_through(const ThreeGraph& host, const ThreeGraph& pattern, const Triple& anchor) {
    if (!host.has_edge(anchor))
        throw ArgumentError("anchor triple is not an edge of the host");
    if (pattern.vertex_count() > host.vertex_count())
        return false;
    GraphHost h{host};
    const auto a = anchor.vertices();
    for (const Triple& f : pattern.edges()) {
        const auto seeds = f.vertices();
        const auto plan = detail::make_plan(pattern, seeds);
        detail::Matcher<GraphHost> m(h, plan);
        std::array<Vertex, 3> img = a;
        do {
            if (m.run(img))
                return true;
        } while (std::next_permutation(img.begin(), img.end()));
    }
    return false;
}

bool is_family_free(const ThreeGraph& g, std::span<const ThreeGraph> family) {
    return std::none_of(family.begin(), family.end(),
                        [&](const ThreeGraph& h) { return contains_subgraph(g, h); });
}

ThreeGraph clone_vertex(const ThreeGraph& g, Vertex u, Vertex v) {
    const int n = g.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw ArgumentError("clone_vertex: vertex out of range");
    if (u == v)
        throw ArgumentError("clone_vertex: u and v must differ");
    std::vector<Triple> out;
    for (const Triple& t : g.edges())
        if (!t.contains(u))
            out.push_back(t);
    // w takes u's index; {a,b,v} in E with u not in {a,b} gives {w,a,b}.
    for (const Triple& t : g.edges()) {
        if (!t.contains(v) || t.contains(u))
            continue;
        Vertex x = t.a == v ? t.b : t.a;
        Vertex y = t.c == v ? t.b : t.c;
        out.push_back(make_triple(u, x, y));
    }
    return ThreeGraph(n, std::move(out));
}

} // namespace simtri
