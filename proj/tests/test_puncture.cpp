#include "doctest.h"

#include <functional>
#include <map>
#include <numeric>
#include <tuple>
#include <vector>

#include "twc/puncture.hpp"

using namespace twc;

namespace {

// Brute-force partition by pairwise determinant divisibility (union-find),
// independent of the exponent shortcut used in the library.
std::vector<std::vector<uint32_t>> brute_classes(const GeneratorMatrix& G,
                                                 const Ring& R) {
    size_t n = G.row1.size();
    std::vector<uint32_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<uint32_t(uint32_t)> find = [&](uint32_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (size_t j = 0; j < n; ++j)
        for (size_t k = j + 1; k < n; ++k) {
            uint64_t det = R.zq_sub(R.zq_mul(G.row1[j], G.row2[k]),
                                    R.zq_mul(G.row2[j], G.row1[k]));
            if (det % R.p() == 0) parent[find((uint32_t)k)] = find((uint32_t)j);
        }
    std::map<uint32_t, std::vector<uint32_t>> by_root;
    for (uint32_t j = 0; j < n; ++j) by_root[find(j)].push_back(j);
    std::vector<std::vector<uint32_t>> out;
    for (auto& [root, cls] : by_root) out.push_back(cls);
    return out;
}

// Dual words of weight <= 2 by direct scalar-pair enumeration.
bool has_low_weight_dual_word(const std::vector<uint64_t>& r1,
                              const std::vector<uint64_t>& r2, const Ring& R) {
    size_t n = r1.size();
    for (size_t j = 0; j < n; ++j)
        for (uint64_t a = 1; a < R.q(); ++a)
            if (R.zq_mul(a, r1[j]) == 0 && R.zq_mul(a, r2[j]) == 0) return true;
    for (size_t j = 0; j < n; ++j)
        for (size_t k = j + 1; k < n; ++k)
            for (uint64_t a = 1; a < R.q(); ++a)
                for (uint64_t b = 1; b < R.q(); ++b)
                    if (R.zq_add(R.zq_mul(a, r1[j]), R.zq_mul(b, r1[k])) == 0 &&
                        R.zq_add(R.zq_mul(a, r2[j]), R.zq_mul(b, r2[k])) == 0)
                        return true;
    return false;
}

}  // namespace

TEST_CASE("dependence classes") {
    SUBCASE("p=5 h=3 d=1: 6 classes of size 4") {
        Ring R = Ring::init(5, 3);
        CodeSpec spec = CodeSpec::make(5, 3, 1);
        DependencePartition part = dependence_classes(build_code(spec, R), spec, R);
        CHECK(part.classes.size() == 6);
        CHECK(part.class_size == 4);
    }
    SUBCASE("p=7 h=2 d=2: 4 classes of size 12") {
        Ring R = Ring::init(7, 2);
        CodeSpec spec = CodeSpec::make(7, 2, 2);
        DependencePartition part = dependence_classes(build_code(spec, R), spec, R);
        CHECK(part.classes.size() == 4);
        CHECK(part.class_size == 12);
    }
    SUBCASE("p=3 h=2 d=1: 4 classes of size 2, against a brute-force scan") {
        Ring R = Ring::init(3, 2);
        CodeSpec spec = CodeSpec::make(3, 2, 1);
        GeneratorMatrix G = build_code(spec, R);
        DependencePartition part = dependence_classes(G, spec, R);
        CHECK(part.classes.size() == 4);
        CHECK(part.class_size == 2);
        auto brute = brute_classes(G, R);
        REQUIRE(brute.size() == part.classes.size());
        for (size_t i = 0; i < brute.size(); ++i) CHECK(brute[i] == part.classes[i]);
    }
    SUBCASE("class count times class size is p^2-1") {
        for (auto [p, h, d] : {std::tuple<uint64_t, unsigned, uint64_t>{3, 2, 2},
                               {5, 2, 2}, {5, 2, 3}, {7, 1, 2}}) {
            Ring R = Ring::init(p, h);
            CodeSpec spec = CodeSpec::make(p, h, d);
            DependencePartition part = dependence_classes(build_code(spec, R), spec, R);
            CHECK(part.classes.size() * part.class_size == p * p - 1);
        }
    }
    SUBCASE("degenerate spec refused") {
        Ring R = Ring::init(5, 2);
        CodeSpec spec = CodeSpec::make(5, 2, 6);
        CHECK_THROWS_AS(dependence_classes(build_code(spec, R), spec, R),
                        std::invalid_argument);
        CHECK_THROWS_AS(puncture(build_code(spec, R), spec, R), std::invalid_argument);
    }
}

TEST_CASE("puncturing") {
    SUBCASE("p=5 h=3 d=1: length 6, weights divided by 4") {
        Ring R = Ring::init(5, 3);
        CodeSpec spec = CodeSpec::make(5, 3, 1);
        PuncturedCode PC = puncture(build_code(spec, R), spec, R);
        CHECK(PC.length == 6);
        CHECK(paper_format(punctured_distribution(PC, R)) ==
              "[ <0, 1>, <5, 744>, <6, 14880> ]");
    }
    SUBCASE("p=3 h=3 d=1: length 4, weights {3, 4}") {
        Ring R = Ring::init(3, 3);
        CodeSpec spec = CodeSpec::make(3, 3, 1);
        PuncturedCode PC = puncture(build_code(spec, R), spec, R);
        CHECK(PC.length == 4);
        WeightDistribution wd = punctured_distribution(PC, R);
        REQUIRE(wd.entries.size() == 3);
        CHECK(wd.entries[1].first == 3);
        CHECK(wd.entries[2].first == 4);
    }
    SUBCASE("punctured weights are full weights / m with identical frequencies") {
        for (auto [p, h, d] : {std::tuple<uint64_t, unsigned, uint64_t>{3, 2, 1},
                               {3, 2, 2}, {5, 2, 2}, {5, 2, 3}, {7, 2, 2}}) {
            Ring R = Ring::init(p, h);
            CodeSpec spec = CodeSpec::make(p, h, d);
            PuncturedCode PC = puncture(build_code(spec, R), spec, R);
            WeightDistribution full = weight_distribution_enum(spec, R);
            WeightDistribution punct = punctured_distribution(PC, R);
            REQUIRE(full.entries.size() == punct.entries.size());
            for (size_t i = 0; i < full.entries.size(); ++i) {
                CHECK(full.entries[i].first == punct.entries[i].first * spec.m);
                CHECK(full.entries[i].second == punct.entries[i].second);
            }
        }
    }
    SUBCASE("p=7 h=2 d=2: length 4, distribution recorded for the printed <2, 96>") {
        Ring R = Ring::init(7, 2);
        CodeSpec spec = CodeSpec::make(7, 2, 2);
        PuncturedCode PC = puncture(build_code(spec, R), spec, R);
        CHECK(PC.length == 4);
        // Enumeration adjudicates: the min weight is 3, not the printed 2.
        WeightDistribution wd = punctured_distribution(PC, R);
        CHECK(paper_format(wd) == "[ <0, 1>, <3, 192>, <4, 2208> ]");
    }
}

TEST_CASE("projectivity") {
    SUBCASE("punctured codes are projective, full codes are not") {
        for (auto [p, h] : {std::pair<uint64_t, unsigned>{3, 2}, {5, 2}, {5, 3}, {7, 2}}) {
            Ring R = Ring::init(p, h);
            CodeSpec spec = CodeSpec::make(p, h, 1);
            GeneratorMatrix G = build_code(spec, R);
            PuncturedCode PC = puncture(G, spec, R);
            CHECK(projectivity_check(PC, R).projective);
            CHECK_FALSE(projectivity_check(G.row1, G.row2, R).projective);
        }
    }
    SUBCASE("determinant criterion agrees with scalar-pair dual-word search") {
        for (auto [p, h, d] : {std::tuple<uint64_t, unsigned, uint64_t>{3, 2, 1},
                               {3, 2, 2}, {5, 2, 3}, {7, 2, 2}}) {
            Ring R = Ring::init(p, h);
            CodeSpec spec = CodeSpec::make(p, h, d);
            GeneratorMatrix G = build_code(spec, R);
            PuncturedCode PC = puncture(G, spec, R);
            CHECK(projectivity_check(PC, R).projective ==
                  !has_low_weight_dual_word(PC.row1, PC.row2, R));
            CHECK(projectivity_check(G.row1, G.row2, R).projective ==
                  !has_low_weight_dual_word(G.row1, G.row2, R));
        }
    }
    SUBCASE("projectivity over the full odd-prime matrix") {
        for (uint64_t p : {3ull, 5ull, 7ull}) {
            for (unsigned h : {1u, 2u, 3u}) {
                if (p == 7 && h == 3) continue;  // covered in acceptance
                Ring R = Ring::init(p, h);
                uint64_t n = p * p - 1;
                for (uint64_t d = 1; d <= n; ++d) {
                    if (n % d != 0) continue;
                    CodeSpec spec = CodeSpec::make(p, h, d);
                    if (spec.degenerate) continue;
                    PuncturedCode PC = puncture(build_code(spec, R), spec, R);
                    CHECK(projectivity_check(PC, R).projective);
                }
            }
        }
    }
}

TEST_CASE("griesmer bound, d=1") {
    for (auto [p, h] : {std::pair<uint64_t, unsigned>{3, 2}, {5, 3}, {7, 3}}) {
        Ring R = Ring::init(p, h);
        GriesmerReport rep = griesmer_check(CodeSpec::make(p, h, 1), R);
        CHECK(rep.d_min == p * p - p);
        CHECK(rep.bound == rep.d_min + (p - 1));
        CHECK(rep.equality);
    }
    Ring R = Ring::init(5, 2);
    CHECK_THROWS_AS(griesmer_check(CodeSpec::make(5, 2, 2), R), std::invalid_argument);
}

TEST_CASE("MDR / MDS") {
    SUBCASE("p=5 h=3: length 6, d_min 5") {
        Ring R = Ring::init(5, 3);
        CodeSpec spec = CodeSpec::make(5, 3, 1);
        MdrReport rep = mdr_check(puncture(build_code(spec, R), spec, R), R);
        CHECK(rep.length == 6);
        CHECK(rep.d_min == 5);
        CHECK(rep.free_rank2);
        CHECK(rep.mdr);
    }
    SUBCASE("p=3 h=3: length 4, d_min 3") {
        Ring R = Ring::init(3, 3);
        CodeSpec spec = CodeSpec::make(3, 3, 1);
        MdrReport rep = mdr_check(puncture(build_code(spec, R), spec, R), R);
        CHECK(rep.length == 4);
        CHECK(rep.d_min == 3);
        CHECK(rep.mdr);
    }
    SUBCASE("p=3 h=1: the classical MDS case") {
        Ring R = Ring::init(3, 1);
        CodeSpec spec = CodeSpec::make(3, 1, 1);
        MdrReport rep = mdr_check(puncture(build_code(spec, R), spec, R), R);
        CHECK(rep.length == 4);
        CHECK(rep.d_min == 3);  // [4, 2, 3]_3, meets Singleton
        CHECK(rep.mdr);
    }
}
