#ifndef TWC_CODE_HPP
#define TWC_CODE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "twc/ring.hpp"

namespace twc {

// The trace code C_d of length p^2-1 over Z_{p^h}.
struct CodeSpec {
    uint64_t p = 0;
    unsigned h = 0;
    uint64_t d = 1;
    uint64_t m = 0;          // gcd(d, p+1) * (p-1)
    uint64_t n = 0;          // p^2 - 1
    bool degenerate = false; // m == p^2 - 1

    static CodeSpec make(uint64_t p, unsigned h, uint64_t d);
};

// 2 x n generator over Z_{p^h}: row 1 = c(1), row 2 = c(xi),
// column j carries the evaluation point xi^{j*d}.
struct GeneratorMatrix {
    std::vector<uint64_t> row1;
    std::vector<uint64_t> row2;
    std::vector<uint64_t> column_labels;  // exponent j
};

struct WeightDistribution {
    enum class Source { enumerated, closed_theorem, closed_examples };
    std::vector<std::pair<uint64_t, uint64_t>> entries;  // (weight, frequency), sorted by weight
    Source source = Source::enumerated;

    uint64_t total() const;
    uint64_t min_nonzero_weight() const;
    bool operator==(const WeightDistribution& o) const { return entries == o.entries; }
};

struct EnumOptions {
    bool use_orbits = false;
    bool parallel = true;
    uint64_t budget = 100'000'000;  // coordinate evaluations
    bool override_budget = false;
    bool cross_check = true;        // orbit path re-checked against naive at p <= 5
};

GeneratorMatrix build_code(const CodeSpec& spec, const Ring& ring);

// Codeword c(A) = (Tr(A * xi^{j*d}))_j, computed coordinate-wise by trace.
std::vector<uint64_t> codeword(GRElem A, const CodeSpec& spec, const Ring& ring);

uint64_t hamming_weight(const std::vector<uint64_t>& word);

// Exact weight distribution over all A in GR(p^h,2): serial reference scan.
WeightDistribution weight_distribution_serial(const CodeSpec& spec, const Ring& ring);

// Production path: OpenMP scan, or orbit-folded enumeration when requested.
WeightDistribution weight_distribution_enum(const CodeSpec& spec, const Ring& ring,
                                            const EnumOptions& opts = {});

// Generic exhaustive distribution of the rank-2 code spanned by two rows.
WeightDistribution span_distribution(const std::vector<uint64_t>& row1,
                                     const std::vector<uint64_t>& row2,
                                     const Ring& ring);

enum class ClosedVariant { theorem, examples_consistent };

// Predicted [<0,1>, <w1,A1>, <n,A2>]; refuses degenerate specs.
WeightDistribution closed_form_distribution(const CodeSpec& spec, ClosedVariant variant);

// Sum of frequency * (n - weight) must equal n * p^h.
bool moment_identity_holds(const WeightDistribution& wd, const CodeSpec& spec);

struct DistributionReport {
    CodeSpec spec;
    WeightDistribution enumerated;
    WeightDistribution theorem_form;    // empty entries when degenerate
    WeightDistribution examples_form;
    bool has_closed_forms = false;
    bool theorem_matches = false;
    bool examples_matches = false;
    bool moment_ok = false;
    std::vector<std::string> mismatches;  // per-variant differing entries
};

DistributionReport distribution_report(const CodeSpec& spec, const Ring& ring,
                                       const EnumOptions& opts = {});

// Exact bracketed list syntax "[ <0, 1>, <20, 744>, <24, 14880> ]".
std::string paper_format(const WeightDistribution& wd);
WeightDistribution parse_paper_format(const std::string& text);

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace twc

#endif
