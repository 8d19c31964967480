#pragma once

#include "borpi/bigreal.hpp"
#include "borpi/precision.hpp"

namespace borpi {

// Coefficient kernel of the series: Squared is D_k = (1/2)_k^2 / (1)_k^2
// (the expansion of 2K/pi), Cubed is (1/2)_k^3 / (1)_k^3.
enum class Kernel { Squared, Cubed };

struct SeriesSpec {
    BigReal z;         // series argument, |z| < 1; each term carries z^k
    BigReal weight_a;  // weight a + b*k applied per term
    BigReal weight_b;
    Kernel kernel = Kernel::Squared;
    long max_terms = 4000;
};

struct SeriesSum {
    BigReal value;
    long terms = 0;
};

// sum_k D_k (a + b k) z^k. Truncates once the weighted term magnitude stays
// below 10^(-working_digits-5) for three consecutive terms. Throws
// DivergenceError for |z| >= 1 and PrecisionError when max_terms is hit
// before the truncation rule fires.
SeriesSum eval_weighted_series_ex(const SeriesSpec& spec, const PrecisionContext& ctx);
BigReal eval_weighted_series(const SeriesSpec& spec, const PrecisionContext& ctx);

// Residual |L(x) - (1+t) L(t)| of the quadratic transformation, where L is
// the Squared-kernel series at argument x^2 and t the quadratic descent of x.
BigReal verify_quadratic_transform(const BigReal& x, const PrecisionContext& ctx);

// Residual of ((x^2-1) v^2 + 2x^2 v + x^2) applied to the Squared-kernel
// series, v the Euler operator x d/dx acting termwise as v x^(2k) = 2k x^(2k).
BigReal ode_residual(const BigReal& x, const PrecisionContext& ctx);

// Residual of (sum D_k x^(2k))^2 = sum (1/2)_k^3/(1)_k^3 [4x^2(1-x^2)]^k.
// Valid for 0 < x < 1/sqrt(2); larger x is rejected. The right side's term
// cap is sized from its argument, so x close to the boundary may exceed the
// feasible cap and raise PrecisionError.
BigReal verify_clausen(const BigReal& x, const PrecisionContext& ctx);

// Product of the two weighted series of one built-in identity, compared to
// 1/pi from the Machin oracle. Returns the relative residual.
BigReal verify_identity_product(int identity_id, const PrecisionContext& ctx,
                                long max_terms = 4000);

}  // namespace borpi
