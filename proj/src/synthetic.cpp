#include "teflow/synthetic.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "teflow/error.hpp"

namespace teflow {

namespace {

// Integer/uniform mappings are hand-rolled on top of the raw mt19937_64
// stream: the standard fixes the engine's output exactly, while the std
// distribution adapters are implementation-defined and would break fixture
// stability across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % n;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % n;
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

BinningSpec nominal_spec(int alphabet) {
    // Synthetic series are natively discrete; the spec is a unit-width grid
    // so symbol k sits in bin k.
    return BinningSpec{alphabet, 0.5, alphabet + 0.5, 1.0};
}

} // namespace

void CoupledProcessSpec::validate() const {
    if (length < 10)
        throw ValidationError("process length must be >= 10, got " + std::to_string(length));
    if (kind == Kind::CoupledBinary) {
        if (!(epsilon >= 0.0 && epsilon <= 0.5))
            throw ValidationError("epsilon must lie in [0, 0.5], got " + std::to_string(epsilon));
    } else {
        if (alphabet < 2)
            throw ValidationError("alphabet size must be >= 2, got " + std::to_string(alphabet));
        if (alphabet > 64) throw ValidationError("alphabet size must be <= 64");
    }
}

std::pair<SymbolSeries, SymbolSeries> generate(const CoupledProcessSpec& spec) {
    spec.validate();

    const int a = spec.kind == CoupledProcessSpec::Kind::CoupledBinary ? 2 : spec.alphabet;
    const std::size_t n = static_cast<std::size_t>(spec.length);
    std::mt19937_64 rng(spec.seed);

    SymbolSeries x;
    x.spec = nominal_spec(a);
    x.label = "X";
    x.symbols.resize(n);
    for (auto& k : x.symbols) k = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(a)));

    SymbolSeries y;
    y.spec = nominal_spec(a);
    y.label = "Y";
    y.symbols.resize(n);
    y.symbols[0] = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(a)));

    switch (spec.kind) {
        case CoupledProcessSpec::Kind::CoupledBinary:
            for (std::size_t t = 1; t < n; ++t) {
                const bool flip = uniform01(rng) < spec.epsilon;
                y.symbols[t] = flip ? 3 - x.symbols[t - 1] : x.symbols[t - 1];
            }
            break;
        case CoupledProcessSpec::Kind::LaggedCopy:
            for (std::size_t t = 1; t < n; ++t) y.symbols[t] = x.symbols[t - 1];
            break;
        case CoupledProcessSpec::Kind::Independent:
            for (std::size_t t = 1; t < n; ++t)
                y.symbols[t] = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(a)));
            break;
    }
    return {std::move(x), std::move(y)};
}

double binary_entropy(double eps) {
    if (eps <= 0.0 || eps >= 1.0) return 0.0;
    return -eps * std::log2(eps) - (1.0 - eps) * std::log2(1.0 - eps);
}

AnalyticTE analytic_te(const CoupledProcessSpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case CoupledProcessSpec::Kind::CoupledBinary:
            return {1.0 - binary_entropy(spec.epsilon), 0.0};
        case CoupledProcessSpec::Kind::LaggedCopy:
            return {std::log2(static_cast<double>(spec.alphabet)), 0.0};
        case CoupledProcessSpec::Kind::Independent:
            return {0.0, 0.0};
    }
    throw ValidationError("unknown process kind");
}

std::vector<double> continuous_returns(const SymbolSeries& series, std::uint64_t seed) {
    const int a = series.spec.q;
    if (a < 2) throw ValidationError("alphabet must be >= 2");

    // Symbol k maps into the interior of bin k of a symmetric return range:
    // the jitter stays in the middle 80% of each bin, so refitted uniform bin
    // edges (which drift by at most 10% of a bin from the construction grid)
    // always fall inside the unused guard gaps.
    constexpr double kScale = 0.1;
    std::mt19937_64 rng(seed);
    std::vector<double> out;
    out.reserve(series.size());
    for (int k : series.symbols) {
        if (k < 1 || k > a) throw ContractError("symbol out of range");
        const double jitter = 0.1 + 0.8 * uniform01(rng);
        out.push_back(-0.5 * kScale + kScale * ((k - 1) + jitter) / a);
    }
    return out;
}

PricePanel generate_price_panel(const CoupledProcessSpec& spec, Date start_date) {
    if (!start_date.valid()) throw ValidationError("invalid start date");
    auto [x, y] = generate(spec);
    const auto rx = continuous_returns(x, spec.seed ^ 0x9e3779b97f4a7c15ULL);
    const auto ry = continuous_returns(y, spec.seed ^ 0x517cc1b727220a95ULL);

    PricePanel panel;
    panel.labels = {x.label, y.label};
    const std::size_t n = rx.size();
    panel.dates.reserve(n + 1);
    panel.prices.reserve(n + 1);

    double px = 100.0, py = 100.0;
    panel.dates.push_back(start_date);
    panel.prices.push_back({px, py});
    for (std::size_t t = 0; t < n; ++t) {
        px *= std::exp(rx[t]);
        py *= std::exp(ry[t]);
        panel.dates.push_back(start_date.plus_days(static_cast<std::int64_t>(t) + 1));
        panel.prices.push_back({px, py});
    }
    return panel;
}

} // namespace teflow
