// Shared test helpers: fixture builders and estimator-independent oracles.
#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "teflow/symbolize.hpp"

namespace testsupport {

// Symbol series over alphabet q with a nominal unit-grid spec, for feeding
// the estimator directly.
inline teflow::SymbolSeries make_symbols(std::vector<int> symbols, int q,
                                         std::string label = "s") {
    teflow::SymbolSeries s;
    s.symbols = std::move(symbols);
    s.spec = teflow::BinningSpec{q, 0.5, q + 0.5, 1.0};
    s.label = std::move(label);
    return s;
}

inline teflow::SymbolSeries random_symbols(int q, std::size_t length, std::mt19937_64& rng,
                                           std::string label = "s") {
    std::vector<int> symbols(length);
    for (auto& k : symbols) k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(q));
    return make_symbols(std::move(symbols), q, std::move(label));
}

// Student-t CDF by adaptive Simpson quadrature of the density, sharing no
// code with the continued-fraction implementation under test.
namespace detail {

inline double t_pdf(double x, double df) {
    const double log_norm = std::lgamma(0.5 * (df + 1.0)) - std::lgamma(0.5 * df) -
                            0.5 * std::log(df * 3.14159265358979323846);
    return std::exp(log_norm - 0.5 * (df + 1.0) * std::log1p(x * x / df));
}

inline double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive(double a, double b, double fa, double fm, double fb, double whole,
                       double tol, double df, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = t_pdf(lm, df);
    const double frm = t_pdf(rm, df);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive(a, m, fa, flm, fm, left, 0.5 * tol, df, depth - 1) +
           adaptive(m, b, fm, frm, fb, right, 0.5 * tol, df, depth - 1);
}

} // namespace detail

inline double simpson_t_cdf(double t, double df) {
    if (t < 0.0) return 1.0 - simpson_t_cdf(-t, df);
    const double fa = detail::t_pdf(0.0, df);
    const double fb = detail::t_pdf(t, df);
    const double fm = detail::t_pdf(0.5 * t, df);
    const double whole = detail::simpson(0.0, t, fa, fm, fb);
    return 0.5 + detail::adaptive(0.0, t, fa, fm, fb, whole, 1e-13, df, 40);
}

} // namespace testsupport
