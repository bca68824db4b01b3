#include "twc/code.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace twc {

CodeSpec CodeSpec::make(uint64_t p, unsigned h, uint64_t d) {
    uint64_t n = p * p - 1;
    if (d == 0 || n % d != 0)
        throw std::invalid_argument("d must be a positive divisor of p^2-1");
    CodeSpec s;
    s.p = p;
    s.h = h;
    s.d = d;
    s.n = n;
    s.m = std::gcd(d, p + 1) * (p - 1);
    s.degenerate = (s.m == n);
    return s;
}

uint64_t WeightDistribution::total() const {
    uint64_t t = 0;
    for (auto& [w, f] : entries) t += f;
    return t;
}

uint64_t WeightDistribution::min_nonzero_weight() const {
    for (auto& [w, f] : entries)
        if (w > 0 && f > 0) return w;
    throw std::runtime_error("no nonzero weight present");
}

GeneratorMatrix build_code(const CodeSpec& spec, const Ring& ring) {
    if (spec.p != ring.p() || spec.h != ring.h())
        throw std::invalid_argument("spec does not match ring");
    GeneratorMatrix G;
    G.row1.resize(spec.n);
    G.row2.resize(spec.n);
    G.column_labels.resize(spec.n);
    GRElem step = ring.pow(ring.xi(), spec.d);
    GRElem x = ring.one();  // xi^{j*d}, j ascending from 0
    for (uint64_t j = 0; j < spec.n; ++j) {
        G.row1[j] = ring.trace(x);
        G.row2[j] = ring.trace(ring.mul(ring.xi(), x));
        G.column_labels[j] = j;
        x = ring.mul(x, step);
    }
    return G;
}

std::vector<uint64_t> codeword(GRElem A, const CodeSpec& spec, const Ring& ring) {
    std::vector<uint64_t> word(spec.n);
    GRElem step = ring.pow(ring.xi(), spec.d);
    GRElem x = ring.one();
    for (uint64_t j = 0; j < spec.n; ++j) {
        word[j] = ring.trace(ring.mul(A, x));
        x = ring.mul(x, step);
    }
    return word;
}

uint64_t hamming_weight(const std::vector<uint64_t>& word) {
    uint64_t w = 0;
    for (uint64_t c : word) w += (c != 0);
    return w;
}

namespace {

uint64_t word_weight(uint64_t a, uint64_t b, const std::vector<uint64_t>& r1,
                     const std::vector<uint64_t>& r2, uint64_t q) {
    uint64_t w = 0;
    size_t n = r1.size();
    for (size_t j = 0; j < n; ++j)
        w += ((a * r1[j] + b * r2[j]) % q) != 0;
    return w;
}

WeightDistribution freq_to_distribution(const std::vector<uint64_t>& freq,
                                        WeightDistribution::Source src) {
    WeightDistribution wd;
    wd.source = src;
    for (uint64_t w = 0; w < freq.size(); ++w)
        if (freq[w] > 0) wd.entries.emplace_back(w, freq[w]);
    return wd;
}

std::vector<uint64_t> span_freq_serial(const std::vector<uint64_t>& r1,
                                       const std::vector<uint64_t>& r2, uint64_t q) {
    std::vector<uint64_t> freq(r1.size() + 1, 0);
    for (uint64_t a = 0; a < q; ++a)
        for (uint64_t b = 0; b < q; ++b)
            ++freq[word_weight(a, b, r1, r2, q)];
    return freq;
}

std::vector<uint64_t> span_freq_parallel(const std::vector<uint64_t>& r1,
                                         const std::vector<uint64_t>& r2, uint64_t q) {
    std::vector<uint64_t> freq(r1.size() + 1, 0);
#ifdef _OPENMP
#pragma omp parallel
    {
        std::vector<uint64_t> local(r1.size() + 1, 0);
#pragma omp for schedule(static) nowait
        for (int64_t a = 0; a < (int64_t)q; ++a)
            for (uint64_t b = 0; b < q; ++b)
                ++local[word_weight((uint64_t)a, b, r1, r2, q)];
#pragma omp critical
        for (size_t w = 0; w < freq.size(); ++w) freq[w] += local[w];
    }
#else
    freq = span_freq_serial(r1, r2, q);
#endif
    return freq;
}

// Coordinates of z in the basis {1, xi}.
std::pair<uint64_t, uint64_t> to_xi_basis(GRElem z, const Ring& ring) {
    GRElem xi = ring.xi();
    uint64_t vinv = ring.zq_inv(xi.c1);  // xi generates, so its w-coord is a unit
    uint64_t b = ring.zq_mul(z.c1, vinv);
    uint64_t a = ring.zq_sub(z.c0, ring.zq_mul(b, xi.c0));
    return {a, b};
}

// Orbit-folded enumeration: weights are constant along A -> A * xi^d since
// x -> xi * x permutes the coordinates of c(A * xi^d).
std::vector<uint64_t> span_freq_orbits(const CodeSpec& spec, const Ring& ring,
                                       const std::vector<uint64_t>& r1,
                                       const std::vector<uint64_t>& r2) {
    uint64_t q = ring.q();
    // Multiplication by xi^d as a 2x2 matrix in the basis {1, xi}:
    // (a + b*xi) * xi^d = a * xi^d + b * xi^{d+1}.
    auto [s00, s01] = to_xi_basis(ring.pow(ring.xi(), spec.d), ring);
    auto [s10, s11] = to_xi_basis(ring.pow(ring.xi(), spec.d + 1), ring);

    std::vector<uint64_t> freq(r1.size() + 1, 0);
    std::vector<bool> visited(q * q, false);
    for (uint64_t start = 0; start < q * q; ++start) {
        if (visited[start]) continue;
        uint64_t a = start / q, b = start % q;
        uint64_t orbit_size = 0;
        uint64_t cur = start;
        do {
            visited[cur] = true;
            ++orbit_size;
            uint64_t ca = cur / q, cb = cur % q;
            uint64_t na = (ca * s00 + cb * s10) % q;
            uint64_t nb = (ca * s01 + cb * s11) % q;
            cur = na * q + nb;
        } while (cur != start);
        freq[word_weight(a, b, r1, r2, q)] += orbit_size;
    }
    return freq;
}

}  // namespace

WeightDistribution span_distribution(const std::vector<uint64_t>& row1,
                                     const std::vector<uint64_t>& row2,
                                     const Ring& ring) {
    if (row1.size() != row2.size())
        throw std::invalid_argument("row length mismatch");
    return freq_to_distribution(span_freq_parallel(row1, row2, ring.q()),
                                WeightDistribution::Source::enumerated);
}

WeightDistribution weight_distribution_serial(const CodeSpec& spec, const Ring& ring) {
    GeneratorMatrix G = build_code(spec, ring);
    return freq_to_distribution(span_freq_serial(G.row1, G.row2, ring.q()),
                                WeightDistribution::Source::enumerated);
}

WeightDistribution weight_distribution_enum(const CodeSpec& spec, const Ring& ring,
                                            const EnumOptions& opts) {
    uint64_t q = ring.q();
    uint64_t naive_cost = q * q * spec.n;
    uint64_t orbit_len = spec.n / spec.d;  // order of xi^d
    uint64_t orbit_cost = (q * q / orbit_len + 1) * spec.n + q * q;
    uint64_t cost = opts.use_orbits ? orbit_cost : naive_cost;
    if (cost > opts.budget && !opts.override_budget)
        throw BudgetExceeded("enumeration cost " + std::to_string(cost) +
                             " exceeds budget " + std::to_string(opts.budget) +
                             (opts.use_orbits ? "" : "; try the orbit path"));

    GeneratorMatrix G = build_code(spec, ring);
    std::vector<uint64_t> freq;
    if (opts.use_orbits) {
        freq = span_freq_orbits(spec, ring, G.row1, G.row2);
        if (opts.cross_check && spec.p <= 5) {
            std::vector<uint64_t> ref = span_freq_serial(G.row1, G.row2, q);
            if (freq != ref)
                throw std::runtime_error("orbit enumeration disagrees with naive scan");
        }
    } else if (opts.parallel) {
        freq = span_freq_parallel(G.row1, G.row2, q);
    } else {
        freq = span_freq_serial(G.row1, G.row2, q);
    }
    return freq_to_distribution(freq, WeightDistribution::Source::enumerated);
}

WeightDistribution closed_form_distribution(const CodeSpec& spec, ClosedVariant variant) {
    if (spec.degenerate)
        throw std::invalid_argument(
            "degenerate spec (m = p^2-1): no two-weight prediction, use enumeration");
    uint64_t q = ipow(spec.p, spec.h);
    uint64_t size = q * q;
    uint64_t classes = spec.n / spec.m;
    uint64_t A1;
    if (variant == ClosedVariant::theorem)
        A1 = classes * (ipow(spec.m + 1, spec.h) - 1);
    else
        A1 = classes * (q - 1);
    uint64_t w1 = spec.n - spec.m;
    WeightDistribution wd;
    wd.source = variant == ClosedVariant::theorem
                    ? WeightDistribution::Source::closed_theorem
                    : WeightDistribution::Source::closed_examples;
    wd.entries.emplace_back(0, 1);
    if (A1 > 0) wd.entries.emplace_back(w1, A1);
    if (size >= 1 + A1 && size - 1 - A1 > 0)
        wd.entries.emplace_back(spec.n, size - 1 - A1);
    return wd;
}

bool moment_identity_holds(const WeightDistribution& wd, const CodeSpec& spec) {
    uint64_t q = ipow(spec.p, spec.h);
    uint64_t lhs = 0;
    for (auto& [w, f] : wd.entries) lhs += f * (spec.n - w);
    return lhs == spec.n * q;
}

namespace {

void diff_entries(const char* tag, const WeightDistribution& pred,
                  const WeightDistribution& enumd, std::vector<std::string>& out) {
    std::map<uint64_t, uint64_t> pe, ee;
    for (auto& [w, f] : pred.entries) pe[w] = f;
    for (auto& [w, f] : enumd.entries) ee[w] = f;
    for (auto& [w, f] : pe) {
        uint64_t actual = ee.count(w) ? ee[w] : 0;
        if (actual != f) {
            std::ostringstream os;
            os << tag << ": weight " << w << " predicted frequency " << f
               << ", enumerated " << actual;
            out.push_back(os.str());
        }
    }
    for (auto& [w, f] : ee) {
        if (!pe.count(w)) {
            std::ostringstream os;
            os << tag << ": weight " << w << " enumerated frequency " << f
               << ", not predicted";
            out.push_back(os.str());
        }
    }
}

}  // namespace

DistributionReport distribution_report(const CodeSpec& spec, const Ring& ring,
                                       const EnumOptions& opts) {
    DistributionReport rep;
    rep.spec = spec;
    rep.enumerated = weight_distribution_enum(spec, ring, opts);
    rep.moment_ok = moment_identity_holds(rep.enumerated, spec);
    if (!spec.degenerate) {
        rep.has_closed_forms = true;
        rep.theorem_form = closed_form_distribution(spec, ClosedVariant::theorem);
        rep.examples_form = closed_form_distribution(spec, ClosedVariant::examples_consistent);
        rep.theorem_matches = rep.theorem_form.entries == rep.enumerated.entries;
        rep.examples_matches = rep.examples_form.entries == rep.enumerated.entries;
        if (!rep.theorem_matches)
            diff_entries("theorem", rep.theorem_form, rep.enumerated, rep.mismatches);
        if (!rep.examples_matches)
            diff_entries("examples-consistent", rep.examples_form, rep.enumerated,
                         rep.mismatches);
    }
    return rep;
}

std::string paper_format(const WeightDistribution& wd) {
    std::ostringstream os;
    os << "[ ";
    for (size_t i = 0; i < wd.entries.size(); ++i) {
        if (i) os << ", ";
        os << "<" << wd.entries[i].first << ", " << wd.entries[i].second << ">";
    }
    os << " ]";
    return os.str();
}

WeightDistribution parse_paper_format(const std::string& text) {
    WeightDistribution wd;
    size_t pos = 0;
    while ((pos = text.find('<', pos)) != std::string::npos) {
        size_t comma = text.find(',', pos);
        size_t close = text.find('>', pos);
        if (comma == std::string::npos || close == std::string::npos || comma > close)
            throw std::invalid_argument("malformed weight distribution string");
        uint64_t w = std::stoull(text.substr(pos + 1, comma - pos - 1));
        uint64_t f = std::stoull(text.substr(comma + 1, close - comma - 1));
        wd.entries.emplace_back(w, f);
        pos = close + 1;
    }
    if (wd.entries.empty())
        throw std::invalid_argument("no entries in weight distribution string");
    std::sort(wd.entries.begin(), wd.entries.end());
    return wd;
}

}  // namespace twc
