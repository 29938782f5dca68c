#include "simtri/catalog.hpp"

#include "simtri/errors.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace simtri {

std::string_view to_string(CatalogSource s) {
    switch (s) {
    case CatalogSource::PriorWork:
        return "prior-work";
    case CatalogSource::Extension:
        return "extension";
    }
    return "unknown";
}

ThreeGraph graph_from_compact(std::string_view edges) {
    auto label = [](char ch) -> int {
        if (ch >= '1' && ch <= '9')
            return ch - '0';
        if (ch >= 'a' && ch <= 'c')
            return 10 + (ch - 'a');
        throw ArgumentError(std::string("bad vertex label '") + ch + "'");
    };
    std::vector<std::array<int, 3>> raw;
    int n = 0;
    std::istringstream in{std::string(edges)};
    std::string tok;
    while (in >> tok) {
        if (tok.size() != 3)
            throw ArgumentError("compact edge '" + tok + "' must have three labels");
        std::array<int, 3> e{label(tok[0]), label(tok[1]), label(tok[2])};
        n = std::max({n, e[0], e[1], e[2]});
        raw.push_back(e);
    }
    std::vector<Triple> out;
    for (auto e : raw)
        out.push_back(make_triple(e[0] - 1, e[1] - 1, e[2] - 1));
    return ThreeGraph(n, std::move(out));
}

namespace {

std::vector<CatalogEntry> build_catalog() {
    struct Raw {
        const char* name;
        const char* edges;
        CatalogSource source;
    };
    static constexpr Raw raw[] = {
        {"K4-", "123 124 134", CatalogSource::PriorWork},
        {"C5-", "123 124 135 245", CatalogSource::PriorWork},
        {"C5+", "126 236 346 456 516", CatalogSource::PriorWork},
        {"L2", "123 124 125 136 456", CatalogSource::PriorWork},
        {"L3", "123 124 135 256 346", CatalogSource::PriorWork},
        {"L4", "123 124 156 256 345", CatalogSource::PriorWork},
        {"L5", "123 124 135 146 356", CatalogSource::PriorWork},
        {"L6", "123 124 145 346 356", CatalogSource::PriorWork},
        {"P7-", "123 145 167 246 257 347", CatalogSource::PriorWork},
        {"L7", "123 124 125 136 137 458 678", CatalogSource::Extension},
        {"L8", "123 124 125 136 137 468 579 289", CatalogSource::Extension},
        {"L9", "123 124 125 136 237 469 578 189", CatalogSource::Extension},
        {"L10", "123 124 125 126 137 138 239 58a 47b 69c abc", CatalogSource::Extension},
    };
    std::vector<CatalogEntry> out;
    for (const Raw& r : raw) {
        CatalogEntry e{r.name, graph_from_compact(r.edges), r.source, false};
        e.verifiable = find_dense_ordering(e.graph).has_value();
        out.push_back(std::move(e));
    }
    return out;
}

void check_permutation(const ThreeGraph& h, std::span<const Vertex> ordering) {
    const int r = h.vertex_count();
    if (static_cast<int>(ordering.size()) != r)
        throw ArgumentError("ordering has " + std::to_string(ordering.size()) + " entries, graph has " +
                            std::to_string(r) + " vertices");
    std::vector<char> seen(r, 0);
    for (Vertex v : ordering) {
        if (v < 0 || v >= r || seen[v])
            throw ArgumentError("ordering is not a permutation of the vertices");
        seen[v] = 1;
    }
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view name) {
    for (const auto& e : catalog())
        if (e.name == name)
            return &e;
    return nullptr;
}

std::vector<ThreeGraph> catalog_family() {
    std::vector<ThreeGraph> out;
    for (const auto& e : catalog())
        out.push_back(e.graph);
    return out;
}

std::optional<DenseCertificate> certificate_from_ordering(const ThreeGraph& h, std::vector<Vertex> ordering) {
    check_permutation(h, ordering);
    const int r = h.vertex_count();
    if (r < 4)
        return std::nullopt;
    std::vector<int> position(r);
    for (int i = 0; i < r; ++i)
        position[ordering[i]] = i;

    DenseCertificate cert;
    cert.ordering = std::move(ordering);
    // Each edge is "closed" by its latest vertex in the ordering.
    std::vector<std::vector<Triple>> closed(r);
    for (const Triple& t : h.edges()) {
        const int last = std::max({position[t.a], position[t.b], position[t.c]});
        closed[last].push_back(t);
    }
    if (!closed[0].empty() || !closed[1].empty())
        return std::nullopt;
    for (int i = 2; i < r - 1; ++i) {
        if (closed[i].size() != 1)
            return std::nullopt;
        cert.prefix_edges.push_back(closed[i].front());
    }
    const Vertex last = cert.ordering.back();
    if (closed[r - 1].size() != 2 || h.degree(last) != 2)
        return std::nullopt;
    cert.final_edges = {closed[r - 1][0], closed[r - 1][1]};
    return cert;
}

bool check_certificate(const ThreeGraph& h, const DenseCertificate& cert) {
    check_permutation(h, cert.ordering);
    const int r = h.vertex_count();
    if (r < 4 || static_cast<int>(cert.prefix_edges.size()) != r - 3)
        return false;
    std::vector<char> in_prefix(r, 0);
    in_prefix[cert.ordering[0]] = in_prefix[cert.ordering[1]] = 1;
    for (int i = 2; i < r - 1; ++i) {
        const Vertex v = cert.ordering[i];
        in_prefix[v] = 1;
        int count = 0;
        for (const Triple& t : h.edges())
            if (t.contains(v) && in_prefix[t.a] && in_prefix[t.b] && in_prefix[t.c])
                ++count;
        const Triple& e = cert.prefix_edges[i - 2];
        if (count != 1 || !h.has_edge(e) || !e.contains(v) || !in_prefix[e.a] || !in_prefix[e.b] || !in_prefix[e.c])
            return false;
    }
    const Vertex last = cert.ordering.back();
    const auto [er, er2] = cert.final_edges;
    if (h.degree(last) != 2 || er == er2)
        return false;
    return h.has_edge(er) && h.has_edge(er2) && er.contains(last) && er2.contains(last);
}

std::optional<DenseCertificate> find_dense_ordering(const ThreeGraph& h) {
    const int r = h.vertex_count();
    if (r < 4 || r > 64)
        return std::nullopt;
    std::vector<Vertex> order;
    std::unordered_set<std::uint64_t> dead;

    auto closes_exactly_one = [&](std::uint64_t set, Vertex x) {
        int count = 0;
        for (const Triple& t : h.edges()) {
            if (!t.contains(x))
                continue;
            const std::uint64_t bits = (std::uint64_t{1} << t.a) | (std::uint64_t{1} << t.b) | (std::uint64_t{1} << t.c);
            if ((bits & ~(set | std::uint64_t{1} << x)) == 0 && ++count > 1)
                return false;
        }
        return count == 1;
    };

    for (Vertex last = 0; last < r; ++last) {
        if (h.degree(last) != 2)
            continue;
        dead.clear();
        order.clear();
        // Depth-first extension; `set` is the prefix as a bitmask.
        auto extend = [&](auto&& self, std::uint64_t set) -> bool {
            if (static_cast<int>(order.size()) == r - 1)
                return true;
            if (dead.contains(set))
                return false;
            for (Vertex x = 0; x < r; ++x) {
                if (x == last || (set >> x) & 1U)
                    continue;
                if (order.size() >= 2 && !closes_exactly_one(set, x))
                    continue;
                order.push_back(x);
                if (self(self, set | std::uint64_t{1} << x))
                    return true;
                order.pop_back();
            }
            dead.insert(set);
            return false;
        };
        if (extend(extend, 0)) {
            order.push_back(last);
            return certificate_from_ordering(h, order);
        }
    }
    return std::nullopt;
}

std::string format_certificate(const DenseCertificate& cert) {
    std::ostringstream out;
    auto edge = [&](const Triple& t) { out << t.a + 1 << ' ' << t.b + 1 << ' ' << t.c + 1 << '\n'; };
    out << "ordering:";
    for (Vertex v : cert.ordering)
        out << ' ' << v + 1;
    out << '\n';
    const std::size_t r = cert.ordering.size();
    for (std::size_t i = 0; i < cert.prefix_edges.size(); ++i) {
        out << "e_" << i + 3 << ": ";
        edge(cert.prefix_edges[i]);
    }
    out << "e_" << r << ": ";
    edge(cert.final_edges.first);
    out << "e_" << r << "': ";
    edge(cert.final_edges.second);
    return out.str();
}

} // namespace simtri
