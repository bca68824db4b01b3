#include "doctest.h"

#include <set>
#include <sstream>
#include <tuple>

#include "twc/graph.hpp"

using namespace twc;

namespace {

struct Built {
    Ring ring;
    CodeSpec spec;
    CosetGraph graph;
};

Built build(uint64_t p, unsigned h, uint64_t d) {
    Ring R = Ring::init(p, h);
    CodeSpec spec = CodeSpec::make(p, h, d);
    PuncturedCode PC = puncture(build_code(spec, R), spec, R);
    return {R, spec, build_coset_graph(PC, R)};
}

}  // namespace

TEST_CASE("coset graph construction") {
    SUBCASE("p=3 h=3 d=1: 729 vertices, degree 104") {
        Built b = build(3, 3, 1);
        CHECK(b.graph.v == 729);
        CHECK(b.graph.degree == 104);
    }
    SUBCASE("p=2 h=4 d=1 (experimental): 256 vertices, degree 45") {
        Built b = build(2, 4, 1);
        CHECK(b.graph.v == 256);
        CHECK(b.graph.degree == 45);
    }
    SUBCASE("p=3 h=1 d=1: 9 vertices, degree 8 (complete)") {
        Built b = build(3, 1, 1);
        CHECK(b.graph.v == 9);
        CHECK(b.graph.degree == 8);
    }
    SUBCASE("connection set size n_hat*(q-1), zero-free, negation-closed") {
        Built b = build(5, 2, 2);
        CHECK(b.graph.conn.size() == 3 * 24);
        std::set<uint32_t> conn(b.graph.conn.begin(), b.graph.conn.end());
        CHECK(conn.size() == b.graph.conn.size());
        CHECK(conn.count(0) == 0);
        uint64_t q = b.graph.q;
        for (uint32_t e : conn) {
            uint32_t neg = (uint32_t)(((q - e / q) % q) * q + (q - e % q) % q);
            CHECK(conn.count(neg) == 1);
        }
    }
    SUBCASE("non-projective input rejected") {
        Ring R = Ring::init(3, 2);
        CodeSpec spec = CodeSpec::make(3, 2, 1);
        GeneratorMatrix G = build_code(spec, R);
        PuncturedCode fake;
        fake.spec = spec;
        fake.length = spec.n;
        fake.row1 = G.row1;
        fake.row2 = G.row2;
        CHECK_THROWS_AS(build_coset_graph(fake, R), std::invalid_argument);
    }
}

TEST_CASE("verify_srg") {
    SUBCASE("p=3 h=3 d=1: (729, 104, 31, 12), eigenvalues 23 and -4") {
        Built b = build(3, 3, 1);
        SrgResult res = verify_srg(b.graph);
        REQUIRE(res.is_srg);
        CHECK(res.params.v == 729);
        CHECK(res.params.eta == 104);
        CHECK(res.params.lambda == 31);
        CHECK(res.params.mu == 12);
        CHECK(res.params.r == 23);
        CHECK(res.params.s == -4);
        CHECK(res.params.f == 104);
        CHECK(res.params.g == 624);
    }
    SUBCASE("all-pairs slow mode agrees (p=3 h=2)") {
        Built b = build(3, 2, 1);
        SrgOptions slow;
        slow.all_pairs = true;
        SrgResult res = verify_srg(b.graph, slow);
        REQUIRE(res.is_srg);
        SrgResult fast = verify_srg(b.graph);
        CHECK(fast.params.lambda == res.params.lambda);
        CHECK(fast.params.mu == res.params.mu);
    }
    SUBCASE("p=2 h=4: eigenvalues 13 and -3, lambda 16, mu 6") {
        Built b = build(2, 4, 1);
        SrgResult res = verify_srg(b.graph);
        REQUIRE(res.is_srg);
        CHECK(res.params.r == 13);
        CHECK(res.params.s == -3);
        CHECK(res.params.lambda == 16);
        CHECK(res.params.mu == 6);
    }
    SUBCASE("complete graph flagged trivial, not verified") {
        Built b = build(3, 1, 1);
        SrgResult res = verify_srg(b.graph);
        CHECK(res.complete);
        CHECK_FALSE(res.is_srg);
    }
    SUBCASE("SrgParams identities hold on every verified case") {
        for (auto [p, h, d] : {std::tuple<uint64_t, unsigned, uint64_t>{3, 2, 1},
                               {3, 3, 1}, {5, 2, 1}, {5, 2, 2}, {7, 2, 2}}) {
            Built b = build(p, h, d);
            SrgResult res = verify_srg(b.graph);
            REQUIRE(res.is_srg);
            const SrgParams& P = res.params;
            CHECK(P.eta * (P.eta - P.lambda - 1) == (uint64_t)P.mu * (P.v - P.eta - 1));
            CHECK(P.r * P.r - (P.lambda - P.mu) * P.r - ((int64_t)P.eta - P.mu) == 0);
            CHECK(P.s * P.s - (P.lambda - P.mu) * P.s - ((int64_t)P.eta - P.mu) == 0);
            CHECK(1 + P.f + P.g == P.v);
            CHECK((int64_t)P.eta + (int64_t)P.f * P.r + (int64_t)P.g * P.s == 0);
        }
    }
}

TEST_CASE("predicted vs verified") {
    for (auto [p, h, d] : {std::tuple<uint64_t, unsigned, uint64_t>{3, 2, 1},
                           {3, 3, 1}, {5, 2, 1}, {5, 2, 3}, {7, 2, 2}}) {
        Built b = build(p, h, d);
        SrgResult res = verify_srg(b.graph);
        REQUIRE(res.is_srg);
        SrgParams pred = predicted_srg(b.spec);
        CHECK(pred.v == res.params.v);
        CHECK(pred.eta == res.params.eta);
        CHECK(pred.r == res.params.r);
        CHECK(pred.s == res.params.s);
        CHECK(pred.f == res.params.f);
        CHECK(pred.g == res.params.g);
        // multiplicities equal the enumerated frequencies
        WeightDistribution wd = weight_distribution_enum(b.spec, b.ring);
        REQUIRE(wd.entries.size() == 3);
        CHECK(res.params.f == wd.entries[1].second);
        CHECK(res.params.g == wd.entries[2].second);
    }
}

TEST_CASE("p=7 h=2 d=2: observed eigenvalues vs the printed 94, -4") {
    Built b = build(7, 2, 2);
    SrgResult res = verify_srg(b.graph);
    REQUIRE(res.is_srg);
    CHECK(res.params.v == 2401);
    CHECK(res.params.eta == 192);
    // The formula reading q - n_hat gives 45; the printed value 94 does not
    // satisfy the SRG identities for this graph.
    CHECK(res.params.r == 49 - 4);
    CHECK(res.params.s == -4);
    CHECK(res.params.r != 94);
}

TEST_CASE("latin square classification") {
    SUBCASE("p=3 h=3: positive, N=27 M=4") {
        Built b = build(3, 3, 1);
        SrgResult res = verify_srg(b.graph);
        LatinSquareReport ls = latin_square_classify(res.params, b.spec);
        CHECK(ls.N == 27);
        CHECK(ls.M == 4);
        CHECK(ls.expected_lambda == 31);  // N-2 + (M-1)(M-2)
        CHECK(ls.latin_square);
        CHECK(ls.multiplicities_match);
    }
    SUBCASE("p=2 h=4: positive, N=16 M=3") {
        Built b = build(2, 4, 1);
        SrgResult res = verify_srg(b.graph);
        LatinSquareReport ls = latin_square_classify(res.params, b.spec);
        CHECK(ls.N == 16);
        CHECK(ls.M == 3);
        CHECK(ls.latin_square);
    }
    SUBCASE("p=7 h=2 d=2: negative") {
        Built b = build(7, 2, 2);
        SrgResult res = verify_srg(b.graph);
        LatinSquareReport ls = latin_square_classify(res.params, b.spec);
        CHECK_FALSE(ls.latin_square);
    }
}

TEST_CASE("cover checks at p=3") {
    SUBCASE("levels 1 <- 2") {
        CoverReport rep = cover_check(3, 1, 1);
        CHECK(rep.ok);
        CHECK(rep.v_low == 9);
        CHECK(rep.v_high == 81);
        CHECK(rep.fiber_size == 9);
        CHECK(rep.collapsed_per_vertex == 8);  // n_hat * (p-1)
        CHECK(rep.neighbor_fiber_constant == 3);
        CHECK(rep.checked_vertices == 81);
    }
    SUBCASE("levels 2 <- 3") {
        CoverReport rep = cover_check(3, 1, 2);
        CHECK(rep.ok);
        CHECK(rep.v_low == 81);
        CHECK(rep.v_high == 729);
        CHECK(rep.fiber_size == 9);
        CHECK(rep.collapsed_per_vertex == 8);
        CHECK(rep.neighbor_fiber_constant == 3);
    }
    SUBCASE("d=2 levels 1 <- 2") {
        CoverReport rep = cover_check(3, 2, 1);
        CHECK(rep.ok);
        CHECK(rep.collapsed_per_vertex == 2 * 2);  // n_hat = 2
    }
}

TEST_CASE("edge list export") {
    Built b = build(3, 1, 1);
    std::ostringstream os;
    export_edgelist(b.graph, os);
    std::istringstream is(os.str());
    std::set<std::pair<uint32_t, uint32_t>> edges;
    uint32_t u, w;
    uint64_t last_u = 0;
    while (is >> u >> w) {
        CHECK(u < w);
        CHECK(u >= last_u);
        last_u = u;
        edges.insert({u, w});
    }
    CHECK(edges.size() == b.graph.v * b.graph.degree / 2);  // K_9: 36 edges
    // adjacency symmetric and consistent with the connection set
    uint64_t q = b.graph.q;
    for (auto [x, y] : edges) {
        uint32_t diff = (uint32_t)(((y / q + q - x / q) % q) * q + (y % q + q - x % q) % q);
        CHECK(b.graph.in_conn[diff] == 1);
    }
}
