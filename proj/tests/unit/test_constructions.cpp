#include "oracles.hpp"

#include "simtri/catalog.hpp"
#include "simtri/constructions.hpp"
#include "simtri/errors.hpp"
#include "simtri/geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace simtri;

TEST(HSequence, MatchesPlainRecurrence) {
    const auto ref = oracle::h_table(400);
    const HSequence seq(400);
    for (int n = 0; n <= 400; ++n) {
        ASSERT_EQ(seq.value(n), ref[n]) << "n = " << n;
        const Split s = seq.split(n);
        if (n >= 3) {
            ASSERT_EQ(s[0] + s[1] + s[2], n);
            ASSERT_TRUE(s[0] >= s[1] && s[1] >= s[2]);
            ASSERT_EQ(std::int64_t(s[0]) * s[1] * s[2] + ref[s[0]] + ref[s[1]] + ref[s[2]], ref[n]);
        }
    }
}

TEST(HSequence, KnownValues) {
    // h(3^k) = (27^k - 3^k) / 24, and h(n) agrees with e(S(n)) on this range.
    const std::int64_t small[] = {0, 0, 0, 1, 2, 4, 8, 13, 20, 30};
    for (int n = 0; n <= 9; ++n)
        EXPECT_EQ(h_value(n), small[n]);
    std::int64_t p = 1, c = 1;
    for (int k = 1; k <= 8; ++k) {
        p *= 3;
        c *= 27;
        EXPECT_EQ(h_value(static_cast<int>(p)), (c - p) / 24);
    }
    EXPECT_EQ(h_value(27), 819);
    EXPECT_EQ(best_split(27), (Split{9, 9, 9}));
    for (int n = 0; n <= 200; ++n)
        ASSERT_EQ(s_edge_count(n), h_value(n)) << n;
}

TEST(HSequence, UpperBoundHolds) {
    HSequence seq(3000);
    for (std::int64_t x = 0; x <= 3000; ++x)
        ASSERT_LE(24 * seq.value(static_cast<int>(x)), x * x * x - x);
}

TEST(HSequence, SerializationRoundTrip) {
    const HSequence seq(60);
    const auto back = HSequence::deserialize(seq.serialize());
    ASSERT_TRUE(back);
    EXPECT_EQ(back->values(), seq.values());
    EXPECT_EQ(back->splits(), seq.splits());
}

TEST(HSequence, DeserializeRejections) {
    const std::string good = HSequence(10).serialize();
    std::string why;
    EXPECT_FALSE(HSequence::deserialize("# other v1\n0 0 0 0 0\n", &why));
    EXPECT_FALSE(why.empty());

    auto replace_line = [&](int n, const std::string& row) {
        std::string text = good;
        const std::string key = "\n" + std::to_string(n) + " ";
        const auto at = text.find(key);
        const auto end = text.find('\n', at + 1);
        return text.replace(at + 1, end - at - 1, row);
    };
    EXPECT_TRUE(HSequence::deserialize(replace_line(7, "7 13 3 2 2")));
    EXPECT_FALSE(HSequence::deserialize(replace_line(7, "7 14 3 2 2"), &why)) << "inconsistent value";
    EXPECT_FALSE(HSequence::deserialize(replace_line(7, "7 13 3 3 2"), &why)) << "split does not sum to n";
    EXPECT_FALSE(HSequence::deserialize(replace_line(7, "8 13 3 3 2"), &why)) << "row out of order";
    EXPECT_FALSE(HSequence::deserialize(replace_line(7, "7 thirteen 3 2 2"), &why)) << "malformed";
    // Consistent but not maximal: accepted, since maximality is not rechecked.
    const auto poisoned = HSequence::deserialize(replace_line(7, "7 9 5 1 1"));
    ASSERT_TRUE(poisoned);
    EXPECT_EQ(poisoned->value(7), 9);
}

TEST(SConstruction, EdgeCountsAndStructure) {
    for (int n : {3, 4, 7, 9, 10, 27, 30}) {
        const ThreeGraph g = build_S(n);
        EXPECT_EQ(static_cast<std::int64_t>(g.edge_count()), s_edge_count(n)) << n;
    }
    EXPECT_EQ(balanced_split(10), (Split{4, 3, 3}));
    EXPECT_EQ(balanced_split(11), (Split{4, 4, 3}));
    EXPECT_EQ(build_blowup(8, 4).edge_count(), 32u);
}

TEST(SConstruction, IsFamilyFreeForSmallN) {
    const auto family = catalog_family();
    for (int n = 3; n <= 12; ++n)
        EXPECT_TRUE(is_family_free(build_S(n), family)) << n;
}

TEST(Planar, ValidatedRealizationMatchesPattern) {
    ConstructionSpec spec;
    const auto v = realize_construction(27, spec, degrees_to_radians(1));
    EXPECT_TRUE(v.validated);
    EXPECT_EQ(v.similar, 819u);
    EXPECT_EQ(v.missing + v.spurious, 0u);
    EXPECT_DOUBLE_EQ(v.requested_ratio, 0.05);
    EXPECT_DOUBLE_EQ(v.ratio, 0.05 / (1 << v.halvings));

    // The literal contraction misses many cross-level triples: the angle error is of order
    // 100 * ratio degrees.
    const auto literal = compare_with_pattern(build_planar_construction(27, spec), build_S(27),
                                              spec.shape, degrees_to_radians(1));
    EXPECT_FALSE(literal.validated);
    EXPECT_LT(literal.similar, 819u);
}

TEST(Planar, GeneralShapeAndBaseTriangle) {
    ConstructionSpec spec;
    spec.shape = TriangleShape::from_degrees(40, 60, 80);
    const PointSet p3 = build_planar_construction(3, spec);
    const auto t = triangle_angles(p3[0], p3[1], p3[2]);
    ASSERT_TRUE(t);
    EXPECT_TRUE(is_eps_similar(*t, spec.shape, 1e-12));
    EXPECT_TRUE(realize_construction(20, spec, degrees_to_radians(1)).validated);
}

TEST(Planar, RejectsBadSpecs) {
    ConstructionSpec spec;
    spec.ratio = 0.3;
    EXPECT_THROW(validate_spec(spec), ArgumentError);
    spec.ratio = 0;
    EXPECT_THROW(validate_spec(spec), ArgumentError);
    spec = {};
    spec.kind = ConstructionKind::Disphenoid;
    spec.shape = TriangleShape::from_degrees(30, 30, 120);
    EXPECT_THROW(validate_spec(spec), ArgumentError);
    spec = {};
    spec.kind = ConstructionKind::RegularSimplex;
    spec.dim = 4;
    spec.shape = TriangleShape::from_degrees(50, 60, 70);
    EXPECT_THROW(validate_spec(spec), ArgumentError);
    EXPECT_EQ(construction_kind_from_string("regular-simplex"), ConstructionKind::RegularSimplex);
    EXPECT_THROW(construction_kind_from_string("cube"), ArgumentError);
}

TEST(Disphenoid, FacesAreCongruent) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.5, 1.5);
    int built = 0;
    for (int i = 0; i < 200; ++i) {
        std::array<double, 3> s{u(rng), u(rng), u(rng)};
        std::sort(s.begin(), s.end());
        const bool acute = s[0] * s[0] + s[1] * s[1] > s[2] * s[2];
        if (!acute) {
            EXPECT_THROW(make_disphenoid(s), InfeasibleError);
            continue;
        }
        ++built;
        const auto v = make_disphenoid(s);
        const int faces[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
        for (const auto& f : faces) {
            std::array<double, 3> d{};
            for (int k = 0; k < 3; ++k) {
                const auto& p = v[f[k]];
                const auto& q = v[f[(k + 1) % 3]];
                d[k] = std::hypot(p[0] - q[0], p[1] - q[1], p[2] - q[2]);
            }
            std::sort(d.begin(), d.end());
            for (int k = 0; k < 3; ++k)
                ASSERT_NEAR(d[k], s[k], 1e-12 * s[2]);
        }
    }
    EXPECT_GT(built, 50);
    EXPECT_THROW(make_disphenoid({3, 4, 5}), InfeasibleError);
}

TEST(Simplex, RegularSimplexDistances) {
    for (int d = 2; d <= 7; ++d) {
        const auto pts = regular_simplex(d);
        ASSERT_EQ(pts.size(), std::size_t(d + 1));
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                ASSERT_NEAR(distance(pts[i], pts[j]), 1.0, 1e-12);
    }
}

TEST(Simplex, ExpectedCountsAndRatios) {
    // n = 4^k in R^3: the limit of count / n^3 is 4 / 60 = 1/15.
    EXPECT_EQ(expected_simplex_count(4, 3), 4);
    EXPECT_EQ(expected_simplex_count(16, 3), 4 * 64 + 4 * 4);
    const double r3 = double(expected_simplex_count(1024, 3)) / std::pow(1024.0, 3);
    EXPECT_NEAR(r3, 1.0 / 15, 1e-5);
    // d = 4: C(5,3) / (125 - 5) = 1/12 in the limit.
    const double r4 = double(expected_simplex_count(3125, 4)) / std::pow(3125.0, 3);
    EXPECT_NEAR(r4, 1.0 / 12, 1e-5);
    EXPECT_GT(std::abs(r4 - 0.1) / 0.1, 0.1);
    EXPECT_THROW(expected_simplex_count(12, 3), ArgumentError);
    EXPECT_THROW(expected_simplex_count(9, 2), ArgumentError);
}

TEST(Simplex, ConstructionsRealizePatterns) {
    ConstructionSpec spec;
    spec.kind = ConstructionKind::Disphenoid;
    spec.shape = TriangleShape::from_degrees(50, 60, 70);
    const auto v3 = realize_construction(16, spec, degrees_to_radians(1));
    EXPECT_TRUE(v3.validated);
    EXPECT_EQ(static_cast<std::int64_t>(v3.similar), expected_simplex_count(16, 3));

    spec.kind = ConstructionKind::RegularSimplex;
    spec.shape = TriangleShape::equilateral();
    spec.dim = 4;
    const auto v4 = realize_construction(25, spec, degrees_to_radians(1));
    EXPECT_TRUE(v4.validated);
    EXPECT_EQ(static_cast<std::int64_t>(v4.similar), expected_simplex_count(25, 4));
    EXPECT_EQ(v4.points.dim(), 4);
}
