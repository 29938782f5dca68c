#include "simtri/embedder.hpp"

#include "simtri/errors.hpp"

#include <algorithm>

namespace simtri {

EmbeddingReport verify_forbidden(const ThreeGraph& h, const DenseCertificate& cert) {
    const int r = h.vertex_count();
    if (r > kMaxEmbedVertices)
        throw SizeError("embedder accepts at most " + std::to_string(kMaxEmbedVertices) + " vertices, got " +
                        std::to_string(r));
    if (!check_certificate(h, cert))
        throw ArgumentError("invalid dense certificate");

    std::vector<int> position(r);
    for (int i = 0; i < r; ++i)
        position[cert.ordering[i]] = i;

    // For each position i >= 2: the two earlier vertices of the edge that places v_i, earlier first.
    struct Step {
        Vertex vertex;
        Vertex base0;
        Vertex base1;
    };
    std::vector<Step> steps;
    for (int i = 2; i < r; ++i) {
        const Vertex v = cert.ordering[i];
        const Triple& e = i < r - 1 ? cert.prefix_edges[i - 2] : cert.final_edges.first;
        std::array<Vertex, 2> base{};
        int k = 0;
        for (Vertex x : e.vertices())
            if (x != v)
                base[k++] = x;
        if (position[base[0]] > position[base[1]])
            std::swap(base[0], base[1]);
        steps.push_back({v, base[0], base[1]});
    }
    const Triple check = cert.final_edges.second;

    EmbeddingReport report;
    report.configurations_checked = std::uint64_t{1} << (r - 2);
    std::vector<EisensteinPoint> p(r);
    std::vector<EisensteinPoint> sorted(r);
    for (std::uint32_t choices = 0; choices < report.configurations_checked; ++choices) {
        p[cert.ordering[0]] = {0, 0};
        p[cert.ordering[1]] = {1, 0};
        for (std::size_t s = 0; s < steps.size(); ++s) {
            const auto [first, second] = apexes(p[steps[s].base0], p[steps[s].base1]);
            p[steps[s].vertex] = (choices >> s) & 1U ? second : first;
        }
        sorted = p;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            ++report.collisions;
        if (is_equilateral(p[check.a], p[check.b], p[check.c]))
            report.realizations.push_back({choices, {p[check.a], p[check.b], p[check.c]}, p});
    }
    report.verified = report.realizations.empty();
    return report;
}

} // namespace simtri
