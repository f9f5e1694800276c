#pragma once

namespace teflow {

// Regularized incomplete beta function I_x(a, b), a, b > 0, x in [0, 1].
// Continued-fraction evaluation; relative accuracy better than 1e-12 over the
// ranges used here (a up to 5e3, b = 1/2).
double regularized_incomplete_beta(double a, double b, double x);

// Student-t CDF, df > 0.
double student_t_cdf(double t, double df);

// Two-sided p-value for a t statistic: P(|T| >= |t|) = I_{df/(df+t^2)}(df/2, 1/2).
double student_t_two_sided_p(double t, double df);

} // namespace teflow
