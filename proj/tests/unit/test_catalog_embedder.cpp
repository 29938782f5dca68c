#include "oracles.hpp"

#include "simtri/catalog.hpp"
#include "simtri/eisenstein.hpp"
#include "simtri/embedder.hpp"
#include "simtri/errors.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <map>
#include <random>

using namespace simtri;

namespace {

using C = std::complex<double>;

// The same enumeration in floating point: returns the choice masks in which e_r' is
// equilateral with positive side.
std::vector<std::uint32_t> float_realizations(const ThreeGraph& h, const DenseCertificate& cert) {
    const int r = h.vertex_count();
    const C w = std::polar(1.0, std::acos(-1.0) / 3);
    std::vector<int> pos(r);
    for (int i = 0; i < r; ++i)
        pos[cert.ordering[i]] = i;
    std::vector<std::uint32_t> out;
    for (std::uint32_t m = 0; m < (1u << (r - 2)); ++m) {
        std::vector<C> p(r);
        p[cert.ordering[1]] = 1;
        for (int i = 2; i < r; ++i) {
            const Vertex v = cert.ordering[i];
            const Triple e = i < r - 1 ? cert.prefix_edges[i - 2] : cert.final_edges.first;
            std::vector<Vertex> base;
            for (Vertex x : e.vertices())
                if (x != v)
                    base.push_back(x);
            if (pos[base[0]] > pos[base[1]])
                std::swap(base[0], base[1]);
            const C u = p[base[0]], d = p[base[1]] - u;
            p[v] = (m >> (i - 2) & 1) ? u + d * (1.0 - w) : u + d * w;
        }
        const Triple f = cert.final_edges.second;
        const double s1 = std::abs(p[f.a] - p[f.b]), s2 = std::abs(p[f.b] - p[f.c]), s3 = std::abs(p[f.c] - p[f.a]);
        if (s1 > 1e-9 && std::abs(s1 - s2) < 1e-9 && std::abs(s2 - s3) < 1e-9)
            out.push_back(m);
    }
    return out;
}

} // namespace

TEST(Eisenstein, Arithmetic) {
    // w^2 = w - 1, and the apexes of 0 and 1 are w and 1 - w.
    EXPECT_EQ(kOmega * kOmega, (EisensteinPoint{-1, 1}));
    const auto [p, q] = apexes({0, 0}, {1, 0});
    EXPECT_EQ(p, kOmega);
    EXPECT_EQ(q, kOneMinusOmega);
    EXPECT_TRUE(is_equilateral({0, 0}, {1, 0}, p));
    EXPECT_EQ((EisensteinPoint{2, 1}).norm(), 7);
    EXPECT_EQ((EisensteinPoint{2, 1} * EisensteinPoint{2, 1}.conj()).b, 0);
}

TEST(Catalog, ListingShape) {
    const auto& cat = catalog();
    ASSERT_EQ(cat.size(), 13u);
    const char* names[] = {"K4-", "C5-", "C5+", "L2", "L3", "L4", "L5", "L6", "P7-", "L7", "L8", "L9", "L10"};
    for (std::size_t i = 0; i < 13; ++i)
        EXPECT_EQ(cat[i].name, names[i]);
    EXPECT_EQ(find_catalog_entry("L10")->graph.vertex_count(), 12);
    EXPECT_EQ(find_catalog_entry("L7")->graph.vertex_count(), 8);
    EXPECT_EQ(find_catalog_entry("nope"), nullptr);
    EXPECT_EQ(graph_from_compact("123 4ab"), ThreeGraph(11, {{0, 1, 2}, {3, 9, 10}}));
}

TEST(Catalog, DenseFlagsMatchOracle) {
    for (const auto& e : catalog()) {
        if (e.graph.vertex_count() > 9)
            continue;
        const bool expect = oracle::has_dense_ordering(e.graph);
        EXPECT_EQ(e.verifiable, expect) << e.name;
        EXPECT_EQ(find_dense_ordering(e.graph).has_value(), expect) << e.name;
    }
    EXPECT_FALSE(find_catalog_entry("P7-")->verifiable);
    EXPECT_TRUE(find_catalog_entry("L10")->verifiable);
}

TEST(Catalog, DenseSearchMatchesOracleOnRandomGraphs) {
    std::mt19937_64 rng(13);
    int dense = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int r = 4 + static_cast<int>(rng() % 4);
        // Sparse graphs around r - 1 edges are where the dense property can hold.
        const ThreeGraph g = oracle::random_graph(r, double(r - 1) / triple_count(r), rng);
        const bool expect = oracle::has_dense_ordering(g);
        dense += expect;
        const auto cert = find_dense_ordering(g);
        ASSERT_EQ(cert.has_value(), expect) << "trial " << trial;
        if (cert)
            ASSERT_TRUE(check_certificate(g, *cert));
    }
    EXPECT_GT(dense, 5);
}

TEST(Certificate, RejectsTampering) {
    const ThreeGraph& k4 = find_catalog_entry("K4-")->graph;
    auto cert = *find_dense_ordering(k4);
    EXPECT_TRUE(check_certificate(k4, cert));
    auto bad = cert;
    bad.prefix_edges[0] = {1, 2, 3};
    EXPECT_FALSE(check_certificate(k4, bad));
    bad = cert;
    bad.final_edges.second = bad.final_edges.first;
    EXPECT_FALSE(check_certificate(k4, bad));
    bad = cert;
    bad.ordering.pop_back();
    EXPECT_THROW(check_certificate(k4, bad), ArgumentError);
    EXPECT_FALSE(certificate_from_ordering(find_catalog_entry("P7-")->graph, {0, 1, 2, 3, 4, 5, 6}).has_value());
}

TEST(Embedder, ConfigurationCountsAreTwoToTheRMinusTwo) {
    // L7 has 8 vertices, so its certificate dictates 2^6 = 64 configurations.
    const auto expect = std::map<std::string, std::uint64_t>{{"K4-", 4}, {"L7", 64}, {"L8", 128}, {"L10", 1024}};
    for (const auto& [name, count] : expect) {
        const auto& g = find_catalog_entry(name)->graph;
        const auto rep = verify_forbidden(g, *find_dense_ordering(g));
        EXPECT_EQ(rep.configurations_checked, count) << name;
        EXPECT_TRUE(rep.verified) << name;
    }
}

TEST(Embedder, EveryDenseCatalogGraphIsForbidden) {
    for (const auto& e : catalog()) {
        if (!e.verifiable)
            continue;
        const auto cert = find_dense_ordering(e.graph);
        ASSERT_TRUE(cert) << e.name;
        EXPECT_TRUE(verify_forbidden(e.graph, *cert).verified) << e.name;
        EXPECT_TRUE(float_realizations(e.graph, *cert).empty()) << e.name;
    }
}

TEST(Embedder, HexagonControlIsRealizable) {
    const ThreeGraph hex = graph_from_compact("123 134 145 156 246");
    const auto cert = find_dense_ordering(hex);
    ASSERT_TRUE(cert);
    const auto rep = verify_forbidden(hex, *cert);
    EXPECT_FALSE(rep.verified);
    std::vector<std::uint32_t> exact;
    for (const auto& z : rep.realizations)
        if ((z.points[0] - z.points[1]).norm() > 0)
            exact.push_back(z.choices);
    EXPECT_EQ(exact, float_realizations(hex, *cert));
    EXPECT_FALSE(exact.empty());
}

TEST(Embedder, ExactAgreesWithFloatingPointOnRandomDenseGraphs) {
    std::mt19937_64 rng(17);
    int tested = 0;
    for (int trial = 0; trial < 2000 && tested < 150; ++trial) {
        const int r = 5 + static_cast<int>(rng() % 4);
        const ThreeGraph g = oracle::random_graph(r, double(r - 1) / triple_count(r), rng);
        const auto cert = find_dense_ordering(g);
        if (!cert)
            continue;
        ++tested;
        const auto rep = verify_forbidden(g, *cert);
        std::vector<std::uint32_t> exact;
        for (const auto& z : rep.realizations)
            if ((z.points[0] - z.points[1]).norm() > 0)
                exact.push_back(z.choices);
        ASSERT_EQ(exact, float_realizations(g, *cert)) << "trial " << trial;
    }
    EXPECT_GT(tested, 50);
}

TEST(Embedder, RejectsOversizedAndInvalid) {
    const ThreeGraph& k4 = find_catalog_entry("K4-")->graph;
    auto cert = *find_dense_ordering(k4);
    cert.prefix_edges[0] = {1, 2, 3};
    EXPECT_THROW(verify_forbidden(k4, cert), ArgumentError);
    std::vector<Triple> chain;
    for (int i = 2; i < 13; ++i)
        chain.push_back({i - 2, i - 1, i});
    const ThreeGraph big(13, chain);
    DenseCertificate fake;
    for (int i = 0; i < 13; ++i)
        fake.ordering.push_back(i);
    EXPECT_THROW(verify_forbidden(big, fake), SizeError);
}
