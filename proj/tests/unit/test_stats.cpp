#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "teflow/error.hpp"
#include "teflow/stats.hpp"

using namespace teflow;

TEST_CASE("incomplete beta endpoints and symmetry") {
    CHECK(regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0);
    CHECK(regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0);
    // I_x(a,b) = 1 - I_{1-x}(b,a)
    for (double x : {0.05, 0.3, 0.5, 0.9}) {
        const double lhs = regularized_incomplete_beta(1.7, 4.2, x);
        const double rhs = 1.0 - regularized_incomplete_beta(4.2, 1.7, 1.0 - x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    }
    CHECK_THROWS_AS(regularized_incomplete_beta(0.0, 1.0, 0.5), ValidationError);
    CHECK_THROWS_AS(regularized_incomplete_beta(1.0, 1.0, 1.5), ValidationError);
}

TEST_CASE("incomplete beta closed forms") {
    // I_x(1, b) = 1 - (1-x)^b, I_x(a, 1) = x^a
    for (double x : {0.1, 0.37, 0.62, 0.95}) {
        CHECK(regularized_incomplete_beta(1.0, 3.5, x) ==
              doctest::Approx(1.0 - std::pow(1.0 - x, 3.5)).epsilon(1e-13));
        CHECK(regularized_incomplete_beta(2.5, 1.0, x) ==
              doctest::Approx(std::pow(x, 2.5)).epsilon(1e-13));
    }
}

TEST_CASE("t CDF closed forms at df=1 and df=2") {
    for (double t : {-10.0, -2.5, -0.3, 0.0, 0.7, 1.0, 4.0, 25.0}) {
        const double cauchy = 0.5 + std::atan(t) / 3.14159265358979323846;
        CHECK(student_t_cdf(t, 1.0) == doctest::Approx(cauchy).epsilon(1e-12));
        const double df2 = 0.5 * (1.0 + t / std::sqrt(2.0 + t * t));
        CHECK(student_t_cdf(t, 2.0) == doctest::Approx(df2).epsilon(1e-12));
    }
}

TEST_CASE("t CDF matches quadrature to 1e-10 across df in [1, 1e4]") {
    for (double df : {1.0, 2.0, 3.0, 5.0, 8.0, 14.0, 30.0, 100.0, 1000.0, 10000.0}) {
        for (double t : {0.0, 0.5, 1.0, 2.0, 3.5, 6.0, 10.0}) {
            const double expected = testsupport::simpson_t_cdf(t, df);
            CHECK(std::fabs(student_t_cdf(t, df) - expected) < 1e-10);
            CHECK(std::fabs(student_t_cdf(-t, df) - (1.0 - expected)) < 1e-10);
        }
    }
}

TEST_CASE("two-sided p-values") {
    CHECK(student_t_two_sided_p(0.0, 8.0) == 1.0);
    for (double df : {1.0, 4.0, 25.0, 5000.0}) {
        for (double t : {0.2, 1.3, 2.8, 7.0}) {
            const double direct = 2.0 * (1.0 - student_t_cdf(t, df));
            CHECK(student_t_two_sided_p(t, df) == doctest::Approx(direct).epsilon(1e-11));
            CHECK(student_t_two_sided_p(-t, df) == doctest::Approx(direct).epsilon(1e-11));
        }
    }
    // Large |t| drives p toward zero without underflowing to negative values.
    const double tiny = student_t_two_sided_p(50.0, 100.0);
    CHECK(tiny > 0.0);
    CHECK(tiny < 1e-30);
}
