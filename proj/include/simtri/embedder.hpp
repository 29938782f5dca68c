#pragma once

#include "simtri/catalog.hpp"
#include "simtri/eisenstein.hpp"
#include "simtri/hypergraph.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace simtri {

/// Largest graph the embedder accepts.
inline constexpr int kMaxEmbedVertices = 12;

/// A configuration in which the check edge e_r' came out equilateral.
struct Realization {
    /// Bit i-3 selects the apex used for v_i (0 = first result of apexes()).
    std::uint32_t choices = 0;
    /// Points of e_r' in the vertex order of the triple.
    std::array<EisensteinPoint, 3> points{};
    /// Positions of every vertex (indexed by vertex label).
    std::vector<EisensteinPoint> embedding;

    friend bool operator==(const Realization&, const Realization&) = default;
};

struct EmbeddingReport {
    bool verified = false;
    std::uint64_t configurations_checked = 0;
    std::vector<Realization> realizations; // ascending by choices
    /// Configurations in which two embedded vertices coincide.
    std::uint64_t collisions = 0;

    friend bool operator==(const EmbeddingReport&, const EmbeddingReport&) = default;
};

/// Enumerates all 2^(r-2) equilateral embeddings dictated by the certificate, starting from
/// p(v_1) = 0 and p(v_2) = 1, and reports every configuration where e_r' is equilateral.
/// Throws ArgumentError for an invalid certificate and SizeError when r > 12.
EmbeddingReport verify_forbidden(const ThreeGraph& h, const DenseCertificate& cert);

} // namespace simtri
