#ifndef TWC_GRAPH_HPP
#define TWC_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "twc/code.hpp"
#include "twc/puncture.hpp"
#include "twc/ring.hpp"

namespace twc {

// Cayley graph on the syndrome space Z_q^2 of a projective 2-row code:
// vertices are pairs (s0, s1) encoded as s1*q + s0, connection set
// {lambda * col_i : lambda in Z_q \ {0}}.
struct CosetGraph {
    uint64_t p = 0;
    unsigned h = 0;
    uint64_t q = 0;        // p^h
    uint64_t v = 0;        // q^2 vertices
    uint64_t n_hat = 0;    // punctured length
    uint64_t degree = 0;   // n_hat * (q - 1)
    std::vector<uint32_t> conn;     // connection set, encoded vertices, sorted
    std::vector<uint8_t> in_conn;   // membership bitmap, size v
};

struct SrgParams {
    uint64_t v = 0, eta = 0;
    int64_t lambda = 0, mu = 0;
    int64_t r = 0, s = 0;       // restricted eigenvalues
    uint64_t f = 0, g = 0;      // multiplicities
};

struct SrgResult {
    bool is_srg = false;
    bool complete = false;   // K_v: every nonzero difference is a connection
    SrgParams params;
    bool sampled = false;
    uint64_t checked_differences = 0;
    std::string witness;     // difference vector breaking constancy, if any
};

struct SrgOptions {
    uint64_t vertex_budget = 1'000'000;
    uint64_t sample_size = 200'000;  // difference samples beyond the budget
    uint64_t seed = 0x5eed;
    bool all_pairs = false;          // slow O(v^2 * eta) mode, v <= 4096
};

struct LatinSquareReport {
    bool latin_square = false;
    bool multiplicities_match = false;
    uint64_t N = 0, M = 0;
    int64_t expected_lambda = 0, expected_mu = 0;
    uint64_t expected_eta = 0, expected_f = 0, expected_g = 0;
};

struct CoverReport {
    bool ok = false;
    uint64_t p = 0, h_low = 0;
    uint64_t v_low = 0, v_high = 0;
    uint64_t fiber_size = 0;                // p^2
    bool fibers_uniform = false;
    uint64_t collapsed_per_vertex = 0;      // n_hat * (p - 1)
    bool collapsed_uniform = false;
    uint64_t neighbor_fiber_constant = 0;   // p
    bool neighbor_uniform = false;
    bool edges_map_to_edges = false;
    uint64_t checked_vertices = 0;
    bool sampled = false;
    std::string detail;
};

CosetGraph build_coset_graph(const PuncturedCode& PC, const Ring& ring);

SrgResult verify_srg(const CosetGraph& G, const SrgOptions& opts = {});

// Closed-form prediction with eigenvalues q - n_hat and -n_hat and
// multiplicities from the examples-consistent frequencies.
SrgParams predicted_srg(const CodeSpec& spec);

// Latin-square-type test with N = p^h, M = p+1 (standard parameter form).
LatinSquareReport latin_square_classify(const SrgParams& params, const CodeSpec& spec);

struct CoverOptions {
    uint64_t vertex_budget = 1'000'000;
    uint64_t sample_size = 4096;
    uint64_t seed = 0x5eed;
};

// Reduction mod p^h_low from the level h_low+1 graph onto the level h_low
// graph, for the code C_d: fiber sizes, edge preservation, collapsed-edge
// and neighbor-fiber constants.
CoverReport cover_check(uint64_t p, uint64_t d, unsigned h_low,
                        const CoverOptions& opts = {});

// One edge per line "u v", u < v, ascending; vertex encoding s1*q + s0.
void export_edgelist(const CosetGraph& G, std::ostream& os);

}  // namespace twc

#endif
