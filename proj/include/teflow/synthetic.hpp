#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "teflow/panel.hpp"
#include "teflow/symbolize.hpp"

namespace teflow {

// Coupled discrete processes with closed-form transfer entropy, used as
// ground truth for estimator validation. Generation is deterministic given
// the spec: a fixed mt19937_64 stream with hand-rolled integer/uniform
// mappings, so fixtures are bit-stable across platforms.
struct CoupledProcessSpec {
    enum class Kind { CoupledBinary, LaggedCopy, Independent };

    Kind kind = Kind::CoupledBinary;
    double epsilon = 0.1;     // coupled-binary noise, in [0, 0.5]
    int alphabet = 2;         // lagged-copy / independent alphabet size, >= 2
    std::int64_t length = 0;  // >= 10
    std::uint64_t seed = 0;

    void validate() const;
};

// Closed-form transfer entropies in bits for the generated pair.
struct AnalyticTE {
    double source_to_target = 0.0; // X -> Y
    double target_to_source = 0.0; // Y -> X
};

// Returns (X, Y) where X drives Y:
//   coupled-binary: X iid uniform {1,2}; Y[t+1] = X[t] with prob 1-eps, else flipped
//   lagged-copy:    X iid uniform over the alphabet; Y[t] = X[t-1]
//   independent:    both iid uniform, independent
// Y[0] is uniform in all kinds.
std::pair<SymbolSeries, SymbolSeries> generate(const CoupledProcessSpec& spec);

AnalyticTE analytic_te(const CoupledProcessSpec& spec);

// Binary entropy H2(eps) in bits, with H2(0) = H2(1) = 0.
double binary_entropy(double eps);

// Continuous wrapper: maps symbols to log returns such that refitting q =
// alphabet uniform bins on the output recovers the symbol sequence exactly
// (values sit in the middle 80% of each bin, leaving a guard gap around every
// bin edge). Deterministic given the seed.
std::vector<double> continuous_returns(const SymbolSeries& series, std::uint64_t seed);

// Full price-panel wrapper for end-to-end runs: two columns "X" and "Y",
// prices exponentiated from the wrapped returns, consecutive calendar dates.
PricePanel generate_price_panel(const CoupledProcessSpec& spec,
                                Date start_date = Date{2000, 1, 3});

} // namespace teflow
