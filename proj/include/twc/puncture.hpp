#ifndef TWC_PUNCTURE_HPP
#define TWC_PUNCTURE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "twc/code.hpp"
#include "twc/ring.hpp"

namespace twc {

// Columns j, k are co-class iff det(col_j | col_k) = 0 mod p,
// equivalently xi^{(j-k) d (p-1)} = 1.
struct DependencePartition {
    std::vector<std::vector<uint32_t>> classes;
    uint64_t class_size = 0;  // uniform, equals m
};

struct PuncturedCode {
    CodeSpec spec;
    uint64_t length = 0;                 // (p^2-1)/m
    std::vector<uint64_t> row1, row2;    // 2 x length generator
    std::vector<uint64_t> labels;        // kept column exponents
};

struct ProjectivityReport {
    bool projective = false;
    bool has_zero_column = false;
    std::string witness;  // offending column or pair, if any
};

struct GriesmerReport {
    uint64_t n = 0;
    uint64_t d_min = 0;
    uint64_t bound = 0;  // d_min + ceil(d_min/p)
    bool meets = false;
    bool equality = false;
};

struct MdrReport {
    uint64_t length = 0;
    uint64_t d_min = 0;
    bool free_rank2 = false;
    bool mdr = false;  // d_min == length - 1
};

DependencePartition dependence_classes(const GeneratorMatrix& G, const CodeSpec& spec,
                                       const Ring& ring);

// Keeps the smallest label per class.
PuncturedCode puncture(const GeneratorMatrix& G, const CodeSpec& spec, const Ring& ring);

ProjectivityReport projectivity_check(const std::vector<uint64_t>& row1,
                                      const std::vector<uint64_t>& row2, const Ring& ring);
ProjectivityReport projectivity_check(const PuncturedCode& PC, const Ring& ring);

// Exhaustive distribution of the punctured code (q^2 codewords).
WeightDistribution punctured_distribution(const PuncturedCode& PC, const Ring& ring);

// d=1 only: n >= d_min + ceil(d_min/p) for the rank-2 free code, d_min enumerated.
GriesmerReport griesmer_check(const CodeSpec& spec, const Ring& ring);

MdrReport mdr_check(const PuncturedCode& PC, const Ring& ring);

}  // namespace twc

#endif
