// Definitional transfer-entropy oracle. Builds a dense triple table by
// exhaustive enumeration and evaluates the conditional-probability form
// directly. Intentionally shares nothing with the sparse estimator so that
// agreement between the two is evidence, not tautology.

#include <cmath>
#include <vector>

#include "teflow/entropy.hpp"
#include "teflow/error.hpp"

namespace teflow {

double brute_force_te(const SymbolSeries& target, const SymbolSeries& source) {
    if (target.size() != source.size())
        throw ShapeError("series lengths differ: " + std::to_string(target.size()) + " vs " +
                         std::to_string(source.size()));
    if (target.size() < 3)
        throw InsufficientDataError("need at least 3 observations, got " +
                                    std::to_string(target.size()));
    if (target.spec.q > 6 || source.spec.q > 6)
        throw ValidationError("brute_force_te is restricted to alphabets q <= 6");
    if (target.size() > 1000)
        throw ValidationError("brute_force_te is restricted to series of length <= 1000");

    const int qt = target.spec.q;
    const int qs = source.spec.q;
    for (int k : target.symbols)
        if (k < 1 || k > qt) throw ContractError("target symbol out of range");
    for (int k : source.symbols)
        if (k < 1 || k > qs) throw ContractError("source symbol out of range");

    // Dense cube of triple occurrences (next, self, other), 1-based symbols.
    const std::size_t nt = static_cast<std::size_t>(qt) + 1;
    const std::size_t ns = static_cast<std::size_t>(qs) + 1;
    std::vector<long> cube(nt * nt * ns, 0);
    auto cell = [&](int next, int self, int other) -> long& {
        return cube[(static_cast<std::size_t>(next) * nt + static_cast<std::size_t>(self)) * ns +
                    static_cast<std::size_t>(other)];
    };

    const long total = static_cast<long>(target.size()) - 1;
    for (std::size_t t = 0; t + 1 < target.size(); ++t)
        ++cell(target.symbols[t + 1], target.symbols[t], source.symbols[t]);

    double te = 0.0;
    for (int self = 1; self <= qt; ++self) {
        // Marginals for this self symbol, all derived from the cube.
        long c_self = 0;
        std::vector<long> c_next_self(nt, 0);
        std::vector<long> c_self_other(ns, 0);
        for (int next = 1; next <= qt; ++next) {
            for (int other = 1; other <= qs; ++other) {
                const long c = cell(next, self, other);
                c_self += c;
                c_next_self[static_cast<std::size_t>(next)] += c;
                c_self_other[static_cast<std::size_t>(other)] += c;
            }
        }
        if (c_self == 0) continue;

        for (int next = 1; next <= qt; ++next) {
            for (int other = 1; other <= qs; ++other) {
                const long c3 = cell(next, self, other);
                if (c3 == 0) continue;
                const double p3 = static_cast<double>(c3) / static_cast<double>(total);
                const double p_next_given_both =
                    static_cast<double>(c3) /
                    static_cast<double>(c_self_other[static_cast<std::size_t>(other)]);
                const double p_next_given_self =
                    static_cast<double>(c_next_self[static_cast<std::size_t>(next)]) /
                    static_cast<double>(c_self);
                te += p3 * std::log2(p_next_given_both / p_next_given_self);
            }
        }
    }
    return te;
}

} // namespace teflow
