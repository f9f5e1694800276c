#include "teflow/entropy.hpp"

#include <cmath>

#include "teflow/error.hpp"

namespace teflow {

void EstimatorConfig::validate() const {
    if (q < 2) throw ValidationError("estimator q must be >= 2, got " + std::to_string(q));
    if (own_history != 1 || other_history != 1)
        throw ValidationError("history lengths are fixed at 1 in this estimator");
    if (log_base != 2) throw ValidationError("log base is fixed at 2 in this estimator");
}

TEMatrix::TEMatrix(std::vector<std::string> labels_, MatrixKind kind_)
    : labels(std::move(labels_)), kind(kind_), values(labels.size() * labels.size(), 0.0) {}

namespace {

void check_symbols(const SymbolSeries& s) {
    for (int k : s.symbols)
        if (k < 1 || k > s.spec.q)
            throw ContractError("symbol " + std::to_string(k) + " outside [1, " +
                                std::to_string(s.spec.q) + "] in series '" + s.label + "'");
}

} // namespace

JointCounts accumulate_counts(const SymbolSeries& target, const SymbolSeries& source) {
    if (target.size() != source.size())
        throw ShapeError("series lengths differ: '" + target.label + "' has " +
                         std::to_string(target.size()) + ", '" + source.label + "' has " +
                         std::to_string(source.size()));
    if (target.size() < 3)
        throw InsufficientDataError("need at least 3 observations, got " +
                                    std::to_string(target.size()));
    check_symbols(target);
    check_symbols(source);

    JointCounts counts;
    const auto& x = target.symbols;
    const auto& y = source.symbols;
    for (std::size_t t = 0; t + 1 < x.size(); ++t) {
        ++counts.triple_counts[JointCounts::key3(x[t + 1], x[t], y[t])];
        ++counts.pair_self_next[JointCounts::key2(x[t + 1], x[t])];
        ++counts.pair_self_other[JointCounts::key2(x[t], y[t])];
        ++counts.single_self[x[t]];
        ++counts.total_triples;
    }
    return counts;
}

double transfer_entropy_pair(const JointCounts& counts) {
    if (counts.total_triples < 1)
        throw InsufficientDataError("no triples accumulated");

    // Every probability is a count over total_triples, so the normalization
    // cancels inside the log and each term reduces to an exact integer ratio:
    //   log2( c3 * c(self) / (c(next,self) * c(self,other)) ).
    const double total = static_cast<double>(counts.total_triples);
    double te = 0.0;
    for (const auto& [key, c3] : counts.triple_counts) {
        const int next = static_cast<int>(key >> 16);
        const int self = static_cast<int>((key >> 8) & 0xff);
        const int other = static_cast<int>(key & 0xff);
        const double c1 = static_cast<double>(counts.single_self.at(self));
        const double c2n = static_cast<double>(counts.pair_self_next.at(JointCounts::key2(next, self)));
        const double c2so = static_cast<double>(counts.pair_self_other.at(JointCounts::key2(self, other)));
        te += (static_cast<double>(c3) / total) *
              std::log2((static_cast<double>(c3) * c1) / (c2n * c2so));
    }
    return te;
}

TEMatrix te_matrix(const std::vector<SymbolSeries>& series, const EstimatorConfig& cfg) {
    cfg.validate();
    if (series.size() < 2)
        throw InsufficientDataError("te_matrix needs at least 2 series, got " +
                                    std::to_string(series.size()));
    for (const auto& s : series) {
        if (s.size() != series.front().size())
            throw ShapeError("series '" + s.label + "' length " + std::to_string(s.size()) +
                             " differs from '" + series.front().label + "' length " +
                             std::to_string(series.front().size()));
        if (s.spec.q != cfg.q)
            throw ContractError("series '" + s.label + "' was binned with q=" +
                                std::to_string(s.spec.q) + " but the estimator expects q=" +
                                std::to_string(cfg.q));
    }

    std::vector<std::string> labels;
    labels.reserve(series.size());
    for (const auto& s : series) labels.push_back(s.label);

    TEMatrix m(std::move(labels), MatrixKind::TransferEntropy);
    const std::size_t n = series.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue; // diagonal stays exactly zero
            double value;
            try {
                // Entry (i, j) is the flow i -> j: series j is the target
                // whose next symbol is predicted, series i the source.
                value = transfer_entropy_pair(accumulate_counts(series[j], series[i]));
            } catch (const Error& e) {
                throw Error("pair ('" + series[i].label + "' -> '" + series[j].label +
                            "'): " + e.what());
            }
            if (value < -1e-12)
                throw ContractError("transfer entropy " + std::to_string(value) + " for pair ('" +
                                    series[i].label + "' -> '" + series[j].label +
                                    "') is negative beyond tolerance; this indicates a bug");
            m.at(i, j) = value;
        }
    }
    return m;
}

TEMatrix asymmetry_matrix(const TEMatrix& te) {
    if (te.kind != MatrixKind::TransferEntropy)
        throw ContractError("asymmetry_matrix expects a transfer-entropy matrix");

    TEMatrix out(te.labels, MatrixKind::Asymmetry);
    const std::size_t n = te.n();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = te.at(i, j) - te.at(j, i);
            out.at(i, j) = d;
            out.at(j, i) = -d;
        }
    }
    return out;
}

} // namespace teflow
