#pragma once

// Backtracking subgraph matcher shared by ThreeGraph containment and the Turán search.
//
// A Host exposes:
//   int vertex_count() const;
//   int degree(Vertex) const;
//   bool has_edge(Vertex, Vertex, Vertex) const;
//   bool masked() const;                      // true when vertex_count() <= 64
//   std::uint64_t mask(Vertex, Vertex) const; // third vertices of a pair, masked hosts only
//   void thirds(Vertex, Vertex, std::vector<Vertex>&) const; // same, as a list (any host)

#include "simtri/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace simtri::detail {

/// Search order for one pattern. Positions < seed_count are pre-assigned by the caller.
struct PatternPlan {
    int pattern_vertices = 0;
    int seed_count = 0;
    std::vector<Vertex> order;     // position -> pattern vertex
    std::vector<int> degree;       // by position
    // closing[p]: pairs of earlier positions (i,j) with {order[p],order[i],order[j]} in E(H)
    std::vector<std::vector<std::pair<int, int>>> closing;
    std::vector<int> sorted_degrees; // descending, for degree-sequence dominance
};

inline PatternPlan make_plan(const ThreeGraph& pattern, std::span<const Vertex> seeds = {}) {
    const int k = pattern.vertex_count();
    PatternPlan plan;
    plan.pattern_vertices = k;
    plan.seed_count = static_cast<int>(seeds.size());

    std::vector<int> position(k, -1);
    auto place = [&](Vertex h) {
        position[h] = static_cast<int>(plan.order.size());
        plan.order.push_back(h);
    };
    for (Vertex s : seeds)
        place(s);

    const auto& deg = pattern.degrees();
    while (static_cast<int>(plan.order.size()) < k) {
        Vertex best = -1;
        std::array<int, 3> best_key{-1, -1, -1};
        for (Vertex h = 0; h < k; ++h) {
            if (position[h] >= 0)
                continue;
            int closing = 0;
            int touching = 0;
            for (const Triple& e : pattern.edges()) {
                if (!e.contains(h))
                    continue;
                int placed = 0;
                for (Vertex x : e.vertices())
                    if (x != h && position[x] >= 0)
                        ++placed;
                closing += placed == 2;
                touching += placed > 0;
            }
            std::array<int, 3> key{closing, touching, deg[h]};
            if (key > best_key) {
                best_key = key;
                best = h;
            }
        }
        place(best);
    }

    plan.degree.resize(k);
    plan.closing.resize(k);
    for (int p = 0; p < k; ++p)
        plan.degree[p] = deg[plan.order[p]];
    for (const Triple& e : pattern.edges()) {
        auto v = e.vertices();
        std::array<int, 3> pos{position[v[0]], position[v[1]], position[v[2]]};
        std::sort(pos.begin(), pos.end());
        plan.closing[pos[2]].emplace_back(pos[0], pos[1]);
    }
    plan.sorted_degrees = deg;
    std::sort(plan.sorted_degrees.begin(), plan.sorted_degrees.end(), std::greater<>());
    return plan;
}

template <class Host>
class Matcher {
  public:
    Matcher(const Host& host, const PatternPlan& plan) : host_(host), plan_(plan) {
        const int n = host.vertex_count();
        image_.assign(plan.pattern_vertices, -1);
        used_.assign(n, 0);
        if (host.masked()) {
            degree_ok_.assign(plan.pattern_vertices, 0);
            for (int p = 0; p < plan.pattern_vertices; ++p)
                for (Vertex g = 0; g < n; ++g)
                    if (host.degree(g) >= plan.degree[p])
                        degree_ok_[p] |= std::uint64_t{1} << g;
        }
    }

    /// Attempts to extend the seed images to a full embedding.
    std::optional<Embedding> run(std::span<const Vertex> seed_images) {
        const int n = host_.vertex_count();
        if (plan_.pattern_vertices > n)
            return std::nullopt;
        for (int p = 0; p < plan_.seed_count; ++p) {
            Vertex g = seed_images[p];
            if (g < 0 || g >= n || used_[g] || host_.degree(g) < plan_.degree[p]) {
                reset();
                return std::nullopt;
            }
            image_[p] = g;
            used_[g] = 1;
            used_mask_ |= bit(g);
        }
        for (int p = 0; p < plan_.seed_count; ++p)
            for (auto [i, j] : plan_.closing[p])
                if (!host_.has_edge(image_[p], image_[i], image_[j])) {
                    reset();
                    return std::nullopt;
                }

        std::optional<Embedding> result;
        if (extend(plan_.seed_count)) {
            Embedding emb(plan_.pattern_vertices);
            for (int p = 0; p < plan_.pattern_vertices; ++p)
                emb[plan_.order[p]] = image_[p];
            result = std::move(emb);
        }
        reset();
        return result;
    }

  private:
    static std::uint64_t bit(Vertex g) { return g < 64 ? std::uint64_t{1} << g : 0; }

    void reset() {
        std::fill(image_.begin(), image_.end(), -1);
        std::fill(used_.begin(), used_.end(), 0);
        used_mask_ = 0;
    }

    bool assign_and_recurse(int p, Vertex g) {
        image_[p] = g;
        used_[g] = 1;
        used_mask_ |= bit(g);
        if (extend(p + 1))
            return true;
        used_[g] = 0;
        used_mask_ &= ~bit(g);
        image_[p] = -1;
        return false;
    }

    bool extend(int p) {
        if (p == plan_.pattern_vertices)
            return true;
        const auto& closing = plan_.closing[p];
        const int n = host_.vertex_count();

        if (host_.masked()) {
            std::uint64_t cand = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
            cand &= ~used_mask_ & degree_ok_[p];
            for (auto [i, j] : closing) {
                cand &= host_.mask(image_[i], image_[j]);
                if (!cand)
                    return false;
            }
            while (cand) {
                Vertex g = std::countr_zero(cand);
                cand &= cand - 1;
                if (assign_and_recurse(p, g))
                    return true;
            }
            return false;
        }

        std::vector<Vertex> cand;
        if (closing.empty()) {
            for (Vertex g = 0; g < n; ++g)
                if (!used_[g] && host_.degree(g) >= plan_.degree[p])
                    cand.push_back(g);
        } else {
            auto [i0, j0] = closing.front();
            host_.thirds(image_[i0], image_[j0], cand);
            std::erase_if(cand, [&](Vertex g) {
                if (used_[g] || host_.degree(g) < plan_.degree[p])
                    return true;
                for (std::size_t c = 1; c < closing.size(); ++c)
                    if (!host_.has_edge(g, image_[closing[c].first], image_[closing[c].second]))
                        return true;
                return false;
            });
        }
        for (Vertex g : cand)
            if (assign_and_recurse(p, g))
                return true;
        return false;
    }

    const Host& host_;
    const PatternPlan& plan_;
    std::vector<Vertex> image_; // by position
    std::vector<char> used_;
    std::uint64_t used_mask_ = 0;
    std::vector<std::uint64_t> degree_ok_;
};

/// Degree-sequence dominance: the k-th largest host degree must be at least the k-th largest
/// pattern degree for every k.
template <class Host>
bool degree_dominates(const Host& host, const PatternPlan& plan) {
    std::vector<int> hd(host.vertex_count());
    for (Vertex g = 0; g < host.vertex_count(); ++g)
        hd[g] = host.degree(g);
    std::sort(hd.begin(), hd.end(), std::greater<>());
    for (std::size_t i = 0; i < plan.sorted_degrees.size(); ++i)
        if (i >= hd.size() || hd[i] < plan.sorted_degrees[i])
            return false;
    return true;
}

} // namespace simtri::detail
