#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "teflow/symbolize.hpp"

namespace teflow {

// Estimator knobs. Own/other history lengths are fixed at one step and the
// logarithm base at 2; other values are rejected.
struct EstimatorConfig {
    int q = 15;
    int own_history = 1;
    int other_history = 1;
    int log_base = 2;

    void validate() const;
};

// Empirical counts over the sliding triples (target[t+1], target[t], source[t]).
// All marginals are accumulated over the same index range t = 0..N-2, so every
// distribution normalizes by the same total_triples and the pair/single counts
// are exact marginals of the triple counts.
struct JointCounts {
    std::map<std::uint32_t, std::int64_t> triple_counts;   // key3(next, self, other)
    std::map<std::uint32_t, std::int64_t> pair_self_next;  // key2(next, self)
    std::map<std::uint32_t, std::int64_t> pair_self_other; // key2(self, other)
    std::map<int, std::int64_t> single_self;
    std::int64_t total_triples = 0;

    // Symbols fit in 8 bits (q <= 64 everywhere in this artifact).
    static std::uint32_t key3(int next, int self, int other) {
        return (static_cast<std::uint32_t>(next) << 16) |
               (static_cast<std::uint32_t>(self) << 8) |
               static_cast<std::uint32_t>(other);
    }
    static std::uint32_t key2(int a, int b) {
        return (static_cast<std::uint32_t>(a) << 8) | static_cast<std::uint32_t>(b);
    }
};

enum class MatrixKind { TransferEntropy, Asymmetry };

// n x n matrix over sector labels. Entry (i, j) is the flow from sector i to
// sector j; the diagonal is identically zero for both kinds.
struct TEMatrix {
    std::vector<std::string> labels;
    MatrixKind kind = MatrixKind::TransferEntropy;
    std::vector<double> values; // row-major, n*n

    TEMatrix() = default;
    TEMatrix(std::vector<std::string> labels_, MatrixKind kind_);

    std::size_t n() const { return labels.size(); }
    double at(std::size_t i, std::size_t j) const { return values[i * n() + j]; }
    double& at(std::size_t i, std::size_t j) { return values[i * n() + j]; }
};

// Counts for estimating the flow source -> target: the target's next symbol
// against its own previous symbol and the source's previous symbol.
JointCounts accumulate_counts(const SymbolSeries& target, const SymbolSeries& source);

// Plug-in transfer entropy in bits:
//   sum over triples of p3 * log2( p3 * p(self) / (p(next,self) * p(self,other)) )
// with every probability normalized by total_triples. Terms with zero triple
// count contribute nothing (they never enter the sparse map). The result is
// analytically >= 0; floating point may produce values as low as -1e-12, and
// anything below that indicates a bug (no silent clamping is applied).
double transfer_entropy_pair(const JointCounts& counts);

// Pairwise matrix: entry (i, j) = transfer entropy from series i to series j.
// Each entry is computed by an independent pairwise call.
TEMatrix te_matrix(const std::vector<SymbolSeries>& series, const EstimatorConfig& cfg);

// Antisymmetric flow differences: entry (i, j) = te(i, j) - te(j, i), computed
// once per unordered pair and negated, so antisymmetry is exact.
TEMatrix asymmetry_matrix(const TEMatrix& te);

// Independent oracle: evaluates the definitional conditional-probability form
//   sum p3 * log2( p(next | self, other) / p(next | self) )
// over a dense table built by exhaustive triple enumeration. Shares no code
// with transfer_entropy_pair. Restricted to q <= 6 and series length <= 1000.
double brute_force_te(const SymbolSeries& target, const SymbolSeries& source);

} // namespace teflow
