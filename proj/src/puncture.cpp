#include "twc/puncture.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace twc {

namespace {

// det of the 2x2 matrix formed by columns j and k, mod q.
uint64_t column_det(const GeneratorMatrix& G, uint64_t j, uint64_t k, const Ring& ring) {
    return ring.zq_sub(ring.zq_mul(G.row1[j], G.row2[k]),
                       ring.zq_mul(G.row2[j], G.row1[k]));
}

}  // namespace

DependencePartition dependence_classes(const GeneratorMatrix& G, const CodeSpec& spec,
                                       const Ring& ring) {
    if (spec.degenerate)
        throw std::invalid_argument("dependence_classes: degenerate spec");
    uint64_t n = spec.n;
    uint64_t n_hat = n / spec.m;

    // Exponent criterion: j, k co-class iff (j-k)*d*(p-1) = 0 mod p^2-1,
    // i.e. j = k mod n_hat.
    DependencePartition part;
    part.classes.assign(n_hat, {});
    for (uint64_t j = 0; j < n; ++j)
        part.classes[j % n_hat].push_back((uint32_t)j);
    part.class_size = spec.m;

    // Cross-check against the determinant criterion on every pair.
    for (uint64_t j = 0; j < n; ++j) {
        for (uint64_t k = j + 1; k < n; ++k) {
            bool det_dep = column_det(G, j, k, ring) % spec.p == 0;
            bool exp_dep = (j % n_hat) == (k % n_hat);
            if (det_dep != exp_dep) {
                std::ostringstream os;
                os << "dependence criteria disagree on columns " << j << ", " << k;
                throw std::runtime_error(os.str());
            }
        }
    }
    for (auto& cls : part.classes)
        if (cls.size() != spec.m)
            throw std::runtime_error("dependence class size is not uniform");
    return part;
}

PuncturedCode puncture(const GeneratorMatrix& G, const CodeSpec& spec, const Ring& ring) {
    DependencePartition part = dependence_classes(G, spec, ring);
    PuncturedCode PC;
    PC.spec = spec;
    PC.length = part.classes.size();
    for (auto& cls : part.classes) {
        uint32_t j = *std::min_element(cls.begin(), cls.end());
        PC.row1.push_back(G.row1[j]);
        PC.row2.push_back(G.row2[j]);
        PC.labels.push_back(j);
    }
    return PC;
}

ProjectivityReport projectivity_check(const std::vector<uint64_t>& row1,
                                      const std::vector<uint64_t>& row2, const Ring& ring) {
    ProjectivityReport rep;
    uint64_t p = ring.p();
    size_t n = row1.size();
    for (size_t j = 0; j < n; ++j) {
        if (row1[j] % p == 0 && row2[j] % p == 0) {
            rep.has_zero_column = true;
            std::ostringstream os;
            os << "column " << j << " vanishes mod p";
            rep.witness = os.str();
            return rep;
        }
    }
    // A 2x2 matrix over Z_{p^h} has nontrivial kernel iff p divides its det,
    // so a unit det on every pair rules out dual words of weight 2.
    for (size_t j = 0; j < n; ++j) {
        for (size_t k = j + 1; k < n; ++k) {
            uint64_t det = ring.zq_sub(ring.zq_mul(row1[j], row2[k]),
                                       ring.zq_mul(row2[j], row1[k]));
            if (det % p == 0) {
                std::ostringstream os;
                os << "columns " << j << ", " << k << " dependent mod p";
                rep.witness = os.str();
                return rep;
            }
        }
    }
    rep.projective = true;
    return rep;
}

ProjectivityReport projectivity_check(const PuncturedCode& PC, const Ring& ring) {
    return projectivity_check(PC.row1, PC.row2, ring);
}

WeightDistribution punctured_distribution(const PuncturedCode& PC, const Ring& ring) {
    return span_distribution(PC.row1, PC.row2, ring);
}

GriesmerReport griesmer_check(const CodeSpec& spec, const Ring& ring) {
    if (spec.d != 1)
        throw std::invalid_argument("griesmer_check applies to d = 1 only");
    WeightDistribution wd = weight_distribution_enum(spec, ring);
    GriesmerReport rep;
    rep.n = spec.n;
    rep.d_min = wd.min_nonzero_weight();
    rep.bound = rep.d_min + (rep.d_min + spec.p - 1) / spec.p;
    rep.meets = rep.n >= rep.bound;
    rep.equality = rep.n == rep.bound;
    return rep;
}

MdrReport mdr_check(const PuncturedCode& PC, const Ring& ring) {
    MdrReport rep;
    rep.length = PC.length;
    // Free of rank 2 iff some 2x2 minor is a unit (the generator map is then
    // injective on Z_q^2).
    for (size_t j = 0; j < PC.length && !rep.free_rank2; ++j)
        for (size_t k = j + 1; k < PC.length && !rep.free_rank2; ++k) {
            uint64_t det = ring.zq_sub(ring.zq_mul(PC.row1[j], PC.row2[k]),
                                       ring.zq_mul(PC.row2[j], PC.row1[k]));
            if (ring.zq_is_unit(det)) rep.free_rank2 = true;
        }
    WeightDistribution wd = punctured_distribution(PC, ring);
    rep.d_min = wd.min_nonzero_weight();
    rep.mdr = rep.free_rank2 && rep.d_min == rep.length - 1;
    return rep;
}

}  // namespace twc
