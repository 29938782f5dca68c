#pragma once

#include "simtri/hypergraph.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace simtri {

enum class PartitionBase {
    Edge,    // x1 x2 x3
    T221,    // x1 x1' x2 x2' x3 with the four edges x{1,1'} x{2,2'} x3
};

/// Partition of V(G) induced by a base copy. For an edge x1x2x3: A1 = N(x2,x3), A2 = N(x1,x3),
/// A3 = N(x1,x2). For a T221 copy the sets are intersections over the doubled vertices.
/// J is the complement of A1 u A2 u A3.
struct PartitionReport {
    PartitionBase base_kind = PartitionBase::Edge;
    std::vector<Vertex> base; // (x1,x2,x3) or (x1,x1',x2,x2',x3)
    std::array<std::vector<Vertex>, 3> parts;
    std::vector<Vertex> leftover;
    int n = 0;
    std::array<double, 3> fractions{};
    double objective = 0;
    /// objective = objective_numerator / (4 n^2) exactly.
    std::int64_t objective_numerator = 0;
    bool disjoint = false;
    bool min_size_ok = false;  // every |A_i| >= 0.26 n
    bool leftover_ok = false;  // |J| <= 0.012 n
};

/// a1a2 + a1a3 + a2a3 - (a1^2 + a2^2 + a3^2)/4.
double objective(double a1, double a2, double a3);

/// Numerator over the common denominator 4n^2, for part sizes s_i = a_i n.
std::int64_t objective_numerator(std::int64_t s1, std::int64_t s2, std::int64_t s3);

/// Scans every edge (or every T221 copy, O(n^5), meant for small n) and returns the partition
/// maximizing the objective; ties go to the lexicographically smallest base. Throws
/// NoEdgeError for an edgeless graph, and for the T221 scan when no copy exists.
PartitionReport best_edge_partition(const ThreeGraph& g, PartitionBase base = PartitionBase::Edge,
                                    int threads = 1);

/// One exact-arithmetic check. Values are printed as reduced fractions.
struct BoundCheck {
    std::string name;
    std::string computed;
    std::string claimed;        // empty when nothing is claimed
    double computed_value = 0;
    bool matches_claim = true;
    bool below_bound = true;    // computed < 0.24406 (where applicable)
    bool pass() const { return matches_claim && below_bound; }
};

struct BoundCheckReport {
    std::vector<BoundCheck> checks;
    bool all_pass() const;
};

/// (1) -(9/8)(0.26)^2 + (3/4)(0.26) + 1/8 against the claimed 0.24325;
/// (2) argmax and maximum of -(9/8)a^2 + (741/1000)a + 122018/10^6 against 247/750 and
///     61009/250000;
/// (3) both values below 0.24406;
/// (4) objective(1/3,1/3,1/3) = 1/4.
BoundCheckReport quadratic_bound_checks();

/// g(x) = x1 x2 x3 + (x1^3 + x2^3 + x3^3)/24.
double g_polynomial(double x1, double x2, double x3);

struct MaximizeStage {
    double step = 0;
    std::array<double, 3> argmax{};
    double value = 0;
};

struct MaximizeResult {
    std::array<double, 3> argmax{};
    double value = 0;
    std::vector<MaximizeStage> stages; // grid first, then each refinement
};

/// Grid search at step 1e-3 over {x in [0.26,0.48]^3 : x1+x2+x3 = 1}, then local refinement
/// around the incumbent with steps 1e-4 .. 1e-7.
MaximizeResult maximize_g();

} // namespace simtri
