#include "borpi/series.hpp"

#include <cmath>

#include "borpi/errors.hpp"
#include "borpi/initial_values.hpp"
#include "borpi/iterations.hpp"
#include "borpi/machin.hpp"

namespace borpi {

namespace {

// Applies D_{k+1} = ratio(k) * D_k to a running term, with the integer
// factors split so they stay well inside long range.
void apply_kernel_ratio(BigReal& term, Kernel kernel, long k) {
    long odd = 2 * k + 1;
    term *= odd * odd;
    term /= 4 * (k + 1) * (k + 1);
    if (kernel == Kernel::Cubed) {
        term *= odd;
        term /= 2 * (k + 1);
    }
}

}  // namespace

SeriesSum eval_weighted_series_ex(const SeriesSpec& spec, const PrecisionContext& ctx) {
    if (!(abs(spec.z) < 1)) throw DivergenceError("series argument must satisfy |z| < 1");

    BigReal threshold = pow10(-ctx.working_digits() - 5, ctx);
    BigReal term = BigReal::integer(1, ctx);  // D_k z^k
    BigReal weight = spec.weight_a;           // a + b k
    BigReal sum = BigReal::integer(0, ctx);

    int below = 0;
    for (long k = 0; k < spec.max_terms; ++k) {
        BigReal weighted = term * weight;
        sum += weighted;
        if (abs(weighted) < threshold) {
            if (++below >= 3) return SeriesSum{std::move(sum), k + 1};
        } else {
            below = 0;
        }
        apply_kernel_ratio(term, spec.kernel, k);
        term *= spec.z;
        weight += spec.weight_b;
    }
    throw PrecisionError("series did not converge within " + std::to_string(spec.max_terms) +
                         " terms");
}

BigReal eval_weighted_series(const SeriesSpec& spec, const PrecisionContext& ctx) {
    return eval_weighted_series_ex(spec, ctx).value;
}

BigReal verify_quadratic_transform(const BigReal& x, const PrecisionContext& ctx) {
    BigReal t = quad_descend(x, ctx);
    BigReal one = BigReal::integer(1, ctx);
    BigReal zero = BigReal::integer(0, ctx);
    BigReal lhs = eval_weighted_series({x * x, one, zero, Kernel::Squared, 100000}, ctx);
    BigReal rhs = eval_weighted_series({t * t, one, zero, Kernel::Squared, 100000}, ctx);
    return abs(lhs - (1 + t) * rhs);
}

BigReal ode_residual(const BigReal& x, const PrecisionContext& ctx) {
    if (!(x > 0 && x < 1)) throw DomainError("ode_residual argument must lie in (0,1)");
    BigReal z = x * x;
    BigReal threshold = pow10(-ctx.working_digits() - 5, ctx);

    // termwise Euler operator: theta x^(2k) = 2k x^(2k)
    BigReal s0 = BigReal::integer(0, ctx);  // sum D_k z^k
    BigReal s1 = BigReal::integer(0, ctx);  // sum 2k D_k z^k
    BigReal s2 = BigReal::integer(0, ctx);  // sum (2k)^2 D_k z^k
    BigReal term = BigReal::integer(1, ctx);

    int below = 0;
    for (long k = 0; k < 200000; ++k) {
        s0 += term;
        BigReal theta_term = term * (2 * k);
        s1 += theta_term;
        s2 += theta_term * (2 * k);
        // the heaviest weight decides truncation
        BigReal gauge = k == 0 ? abs(term) : abs(theta_term * (2 * k));
        if (gauge < threshold) {
            if (++below >= 3) break;
        } else {
            below = 0;
        }
        apply_kernel_ratio(term, Kernel::Squared, k);
        term *= z;
    }
    if (below < 3) throw PrecisionError("ode_residual series did not converge");
    return abs((z - 1) * s2 + 2 * z * s1 + z * s0);
}

BigReal verify_clausen(const BigReal& x, const PrecisionContext& ctx) {
    BigReal half = BigReal::rational(1, 2, ctx);
    if (!(x > 0) || !(x * x < half))
        throw DomainError("verify_clausen requires 0 < x < 1/sqrt(2)");

    BigReal one = BigReal::integer(1, ctx);
    BigReal zero = BigReal::integer(0, ctx);
    BigReal z = x * x;
    BigReal w = 4 * z * (1 - z);

    // terms needed for w^k to drop below the truncation threshold
    double digits_per_term = -w.log10_abs();
    double needed = (static_cast<double>(ctx.working_digits()) + 8.0) / digits_per_term;
    constexpr double kFeasibleCap = 2.0e6;
    if (needed > kFeasibleCap)
        throw PrecisionError("clausen right side needs ~" +
                             std::to_string(static_cast<long>(needed)) +
                             " terms; argument too close to 1/sqrt(2)");
    long cap = std::max<long>(4000, static_cast<long>(needed) + 1000);

    BigReal lhs = eval_weighted_series({z, one, zero, Kernel::Squared, 100000}, ctx);
    BigReal rhs = eval_weighted_series({w, one, zero, Kernel::Cubed, cap}, ctx);
    return abs(lhs * lhs - rhs);
}

BigReal verify_identity_product(int identity_id, const PrecisionContext& ctx, long max_terms) {
    const InitialValueSet& set = identity_set(identity_id);
    BigReal d0 = eval(set.d0, ctx);
    BigReal z = d0 * d0;
    BigReal one = BigReal::integer(1, ctx);
    BigReal zero = BigReal::integer(0, ctx);

    BigReal first = eval_weighted_series({z, one, zero, Kernel::Squared, max_terms}, ctx);
    BigReal second = eval_weighted_series(
        {z, eval(set.a0, ctx), eval(set.b0, ctx), Kernel::Squared, max_terms}, ctx);
    return abs(first * second * machin_pi(ctx) - 1);
}

}  // namespace borpi
