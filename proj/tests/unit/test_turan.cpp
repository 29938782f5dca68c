#include "oracles.hpp"

#include "simtri/catalog.hpp"
#include "simtri/constructions.hpp"
#include "simtri/errors.hpp"
#include "simtri/turan.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace simtri;

TEST(Turan, MatchesExhaustiveOracleForFamily) {
    const Family f = family_by_name("F");
    for (int n = 3; n <= 5; ++n) {
        const auto r = exact_turan(n, f);
        EXPECT_EQ(r.max_edges, oracle::exhaustive_ex(n, f.members)) << n;
        EXPECT_TRUE(verify_witness(r, f));
        EXPECT_TRUE(r.complete);
    }
}

TEST(Turan, MatchesExhaustiveOracleForSingleGraphs) {
    for (const char* name : {"K4-", "C5-", "L2"}) {
        const Family f = family_by_name(name);
        for (int n = 4; n <= 6; ++n) {
            const auto r = exact_turan(n, f);
            EXPECT_EQ(r.max_edges, oracle::exhaustive_ex(n, f.members)) << name << " n=" << n;
            EXPECT_TRUE(verify_witness(r, f));
        }
    }
}

TEST(Turan, EqualsHForSmallN) {
    const Family f = family_by_name("F");
    for (int n = 3; n <= 8; ++n)
        EXPECT_EQ(exact_turan(n, f).max_edges, h_value(n)) << n;
}

TEST(Turan, KnownK4MinusValues) {
    const Family f = family_by_name("K4-");
    EXPECT_EQ(exact_turan(5, f).max_edges, 5);
    EXPECT_EQ(exact_turan(6, f).max_edges, 10);
    EXPECT_EQ(exact_turan(7, f).max_edges, 15);
}

TEST(Turan, Guards) {
    const Family f = family_by_name("F");
    EXPECT_THROW(exact_turan(10, f), SizeError);
    TuranOptions o;
    o.force = true;
    EXPECT_THROW(exact_turan(65, f, o), SizeError);
    EXPECT_THROW(exact_turan(5, Family{"empty", {}}), ArgumentError);
    EXPECT_THROW(exact_turan(5, Family{"edgeless", {ThreeGraph(3)}}), ArgumentError);
    EXPECT_THROW(family_by_name("nope"), ArgumentError);
}

TEST(Turan, Deterministic) {
    const Family f = family_by_name("F");
    EXPECT_EQ(exact_turan(7, f), exact_turan(7, f));
}

TEST(Turan, ResumeGivesIdenticalResult) {
    const Family f = family_by_name("F");
    const auto full = exact_turan(7, f);
    for (std::uint64_t limit : {1ULL, 17ULL, 1000ULL, 20000ULL}) {
        TuranOptions stop;
        stop.node_limit = limit;
        const auto part = exact_turan(7, f, stop);
        ASSERT_FALSE(part.complete) << limit;
        ASSERT_TRUE(part.checkpoint);
        // Through the text form, as the CLI would.
        const auto cp = deserialize_checkpoint(serialize_checkpoint(*part.checkpoint));
        ASSERT_TRUE(cp);
        ASSERT_EQ(*cp, *part.checkpoint);
        TuranOptions resume;
        resume.resume = *cp;
        const auto rest = exact_turan(7, f, resume);
        EXPECT_TRUE(rest.complete);
        EXPECT_EQ(rest.max_edges, full.max_edges);
        EXPECT_EQ(rest.witness, full.witness);
        EXPECT_EQ(rest.nodes_expanded, full.nodes_expanded) << limit;
    }
}

TEST(Turan, ChainedResumes) {
    const Family f = family_by_name("K4-");
    const auto full = exact_turan(7, f);
    TuranOptions o;
    o.node_limit = 500;
    auto r = exact_turan(7, f, o);
    int hops = 0;
    while (!r.complete && hops < 10000) {
        o.resume = *r.checkpoint;
        o.node_limit = r.nodes_expanded + 500;
        r = exact_turan(7, f, o);
        ++hops;
    }
    ASSERT_TRUE(r.complete);
    EXPECT_GT(hops, 1);
    EXPECT_EQ(r.max_edges, full.max_edges);
    EXPECT_EQ(r.witness, full.witness);
}

TEST(Turan, CheckpointFileWritten) {
    const auto path = std::filesystem::temp_directory_path() / "simtri_turan_cp_test.txt";
    std::filesystem::remove(path);
    TuranOptions o;
    o.checkpoint_file = path;
    o.checkpoint_interval = 100;
    const auto r = exact_turan(6, family_by_name("F"), o);
    ASSERT_TRUE(std::filesystem::exists(path));
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    const auto cp = deserialize_checkpoint(ss.str());
    ASSERT_TRUE(cp);
    EXPECT_TRUE(cp->complete);
    EXPECT_EQ(cp->best, r.max_edges);
    std::filesystem::remove(path);
}

TEST(Turan, ResumeRejectsMismatch) {
    TuranOptions stop;
    stop.node_limit = 10;
    const auto part = exact_turan(6, family_by_name("F"), stop);
    TuranOptions bad;
    bad.resume = *part.checkpoint;
    EXPECT_THROW(exact_turan(7, family_by_name("F"), bad), ArgumentError);
    EXPECT_THROW(exact_turan(6, family_by_name("K4-"), bad), ArgumentError);
}

TEST(Checkpoint, MalformedTextRejected) {
    std::string why;
    EXPECT_FALSE(deserialize_checkpoint("garbage", &why));
    EXPECT_FALSE(why.empty());
    TuranOptions stop;
    stop.node_limit = 50;
    const auto text = serialize_checkpoint(*exact_turan(6, family_by_name("F"), stop).checkpoint);
    EXPECT_TRUE(deserialize_checkpoint(text));
    EXPECT_FALSE(deserialize_checkpoint(text.substr(0, text.size() / 2)));
}
