#include "borpi/wz.hpp"

#include <array>
#include <string>

#include "borpi/errors.hpp"
#include "borpi/machin.hpp"

namespace borpi {

namespace {

RadicalExpr rat(long num, long den = 1) { return RadicalExpr::rational(num, den); }
RadicalExpr rsqrt(RadicalExpr e) { return RadicalExpr::sqrt(std::move(e)); }

constexpr Rational kHalf{1, 2};
constexpr Rational kOne{1, 1};

std::array<WzIdentitySpec, 5> build_registry() {
    RadicalExpr sqrt2 = rsqrt(rat(2));
    RadicalExpr sqrt3 = rsqrt(rat(3));

    // Identity 1: (1/2-4k)_n (1/2-2k)_n / ((1+2k)_n (1)_n), z = (3-2sqrt2)^2,
    // geom = (3sqrt2-4)^2 * 2^9/3^3
    WzIdentitySpec id1;
    id1.identity_id = 1;
    id1.upper1 = {kHalf, -4};
    id1.upper2 = {kHalf, -2};
    id1.lower1 = {kOne, 2};
    id1.argument = (rat(3) - rat(2) * sqrt2) * (rat(3) - rat(2) * sqrt2);
    id1.alpha = rat(16) * (rat(3) * sqrt2 - rat(4));
    id1.beta = rat(16) * (rat(13) - rat(9) * sqrt2);
    id1.gamma = rat(4) * (rat(5) * sqrt2 - rat(7));
    id1.geom = (rat(3) * sqrt2 - rat(4)) * (rat(3) * sqrt2 - rat(4)) * rat(512, 27);
    id1.rhs_num = {kOne, kHalf};
    id1.rhs_den_first = {{7, 12}, {11, 12}};
    id1.rhs_den_second = {{1, 12}, {5, 12}};

    // Identity 2: (1/2-2k)_n (1/2+2k)_n / ((1+4k)_n (1)_n), z = 1/2, geom = 16/27
    WzIdentitySpec id2;
    id2.identity_id = 2;
    id2.upper1 = {kHalf, -2};
    id2.upper2 = {kHalf, 2};
    id2.lower1 = {kOne, 4};
    id2.argument = rat(1, 2);
    id2.alpha = rat(1);
    id2.beta = rat(4);
    id2.gamma = rat(0);
    id2.geom = rat(16, 27);
    id2.rhs_num = {kOne, kHalf};
    id2.rhs_den_first = {{7, 12}, {11, 12}};
    id2.rhs_den_second = {{1, 12}, {5, 12}};

    // Identity 3: (1/2-2k)_n (1/2)_n / ((1+2k)_n (1)_n), z = (sqrt2-1)^2, geom = 1
    WzIdentitySpec id3;
    id3.identity_id = 3;
    id3.upper1 = {kHalf, -2};
    id3.upper2 = {kHalf, 0};
    id3.lower1 = {kOne, 2};
    id3.argument = (sqrt2 - rat(1)) * (sqrt2 - rat(1));
    id3.alpha = rat(8) - rat(4) * sqrt2;
    id3.beta = rat(8) * sqrt2 - rat(8);
    id3.gamma = rat(3) - rat(2) * sqrt2;
    id3.geom = rat(1);
    id3.rhs_num = {kOne, kHalf};
    id3.rhs_den_first = {{5, 8}, {7, 8}};
    id3.rhs_den_second = {{1, 8}, {3, 8}};

    // Identity 4: (1/2-k)_n (1/2+3k)_n / ((1+k)_n (1)_n), z = (2-sqrt3)/4,
    // geom = 4/(3sqrt3); right side carries (1)_k / (den)_k only
    WzIdentitySpec id4;
    id4.identity_id = 4;
    id4.upper1 = {kHalf, -1};
    id4.upper2 = {kHalf, 3};
    id4.lower1 = {kOne, 1};
    id4.argument = (rat(2) - sqrt3) / rat(4);
    id4.alpha = rat(3, 2) + sqrt3;
    id4.beta = rat(3, 2);
    id4.gamma = rat(1, 4);
    id4.geom = rat(4) / (rat(3) * sqrt3);
    id4.rhs_num = {kOne};
    id4.rhs_den_first = {{5, 6}};
    id4.rhs_den_second = {{1, 6}};

    // Identity 5: (1/2+4k)_n (1/2+2k)_n / ((1+4k)_n (1)_n), z = 2sqrt2-2,
    // geom = (3+2sqrt2)^2. The k = 0 product cannot pin the lower shift;
    // 1+4k is the unique one matching this right side, checked at k = 1..5.
    WzIdentitySpec id5;
    id5.identity_id = 5;
    id5.upper1 = {kHalf, 4};
    id5.upper2 = {kHalf, 2};
    id5.lower1 = {kOne, 4};
    id5.argument = rat(2) * sqrt2 - rat(2);
    id5.alpha = rat(3) * sqrt2 - rat(4);
    id5.beta = rat(8) * sqrt2 - rat(12);
    id5.gamma = sqrt2 - rat(3, 2);
    id5.geom = (rat(3) + rat(2) * sqrt2) * (rat(3) + rat(2) * sqrt2);
    id5.rhs_num = {kOne, kHalf};
    id5.rhs_den_first = {{5, 8}, {7, 8}};
    id5.rhs_den_second = {{1, 8}, {3, 8}};

    return {id1, id2, id3, id4, id5};
}

struct EvaluatedSpec {
    BigReal z;
    BigReal alpha, beta, gamma;
    BigReal geom;
};

// Left-side sum of one member at integer k.
BigReal member_sum(const WzIdentitySpec& spec, const EvaluatedSpec& ev, int member, int k,
                   long max_terms, const PrecisionContext& ctx) {
    BigReal u1 = BigReal::rational(spec.upper1.base.num, spec.upper1.base.den, ctx) +
                 spec.upper1.k_coeff * k;
    BigReal u2 = BigReal::rational(spec.upper2.base.num, spec.upper2.base.den, ctx) +
                 spec.upper2.k_coeff * k;
    BigReal l1 = BigReal::rational(spec.lower1.base.num, spec.lower1.base.den, ctx) +
                 spec.lower1.k_coeff * k;

    BigReal threshold = pow10(-ctx.working_digits() - 5, ctx);
    BigReal term = BigReal::integer(1, ctx);
    BigReal bracket = ev.beta * k + ev.gamma;  // alpha*n added per term
    BigReal sum = BigReal::integer(0, ctx);
    BigReal prev_mag = BigReal::integer(0, ctx);

    int below = 0;
    int growing = 0;
    for (long n = 0; n < max_terms; ++n) {
        BigReal weighted = member == 1 ? term : term * bracket;
        sum += weighted;

        BigReal mag = abs(weighted);
        if (mag < threshold) {
            if (++below >= 3) return sum;
        } else {
            below = 0;
        }
        if (n > 0 && mag >= prev_mag) {
            if (++growing >= 50)
                throw DivergenceError("identity " + std::to_string(spec.identity_id) +
                                      " member sum diverges at k = " + std::to_string(k));
        } else {
            growing = 0;
        }
        prev_mag = std::move(mag);

        term *= (u1 + n) * (u2 + n);
        term /= (l1 + n) * (n + 1);
        term *= ev.z;
        bracket += ev.alpha;
    }
    throw PrecisionError("identity " + std::to_string(spec.identity_id) +
                         " member sum needs more than " + std::to_string(max_terms) +
                         " terms at k = " + std::to_string(k));
}

// geom^k * prod_j prod(num + j) / prod(den + j), j = 0..k-1
BigReal rhs_factor(const WzIdentitySpec& spec, const EvaluatedSpec& ev, int member, int k,
                   const PrecisionContext& ctx) {
    const auto& dens = member == 1 ? spec.rhs_den_first : spec.rhs_den_second;
    BigReal factor = BigReal::integer(1, ctx);
    for (int j = 0; j < k; ++j) {
        factor *= ev.geom;  // absorbed per j: geom^k
        for (const Rational& p : spec.rhs_num)
            factor *= BigReal::rational(p.num + static_cast<long>(j) * p.den, p.den, ctx);
        for (const Rational& q : dens)
            factor /= BigReal::rational(q.num + static_cast<long>(j) * q.den, q.den, ctx);
    }
    return factor;
}

}  // namespace

const WzIdentitySpec& wz_identity_spec(int identity_id) {
    static const std::array<WzIdentitySpec, 5> registry = build_registry();
    if (identity_id < 1 || identity_id > 5)
        throw DomainError("identity must be 1..5, got " + std::to_string(identity_id));
    return registry[static_cast<size_t>(identity_id - 1)];
}

bool WzCheckResult::pass() const {
    if (!(product_residual <= product_tolerance)) return false;
    for (const auto& r : residuals)
        if (!(r.residual <= tolerance)) return false;
    return true;
}

WzCheckResult verify_wz_pair(int identity_id, std::span<const int> k_values,
                             const PrecisionContext& ctx, const WzOptions& opts) {
    const WzIdentitySpec& spec = wz_identity_spec(identity_id);
    for (int k : k_values)
        if (k < 0) throw DomainError("WZ check expects non-negative k");

    EvaluatedSpec ev{eval(spec.argument, ctx), eval(spec.alpha, ctx), eval(spec.beta, ctx),
                     eval(spec.gamma, ctx), eval(spec.geom, ctx)};

    WzCheckResult result;
    result.C1 = member_sum(spec, ev, 1, 0, opts.max_terms, ctx);
    result.C2 = member_sum(spec, ev, 2, 0, opts.max_terms, ctx);
    result.product_residual = abs(result.C1 * result.C2 * machin_pi(ctx) - 1);

    long tol_digits =
        opts.tolerance_digits >= 0 ? opts.tolerance_digits : ctx.working_digits() / 2;
    result.tolerance = pow10(-tol_digits, ctx);
    result.product_tolerance = pow10(-ctx.working_digits() + 10, ctx);

    for (int k : k_values) {
        if (k == 0) continue;  // k = 0 defines the constants
        for (int member : {1, 2}) {
            BigReal lhs = member_sum(spec, ev, member, k, opts.max_terms, ctx);
            const BigReal& c = member == 1 ? result.C1 : result.C2;
            BigReal expected = c * rhs_factor(spec, ev, member, k, ctx);
            result.residuals.push_back(WzResidual{k, member, abs(lhs / expected - 1)});
        }
    }
    return result;
}

}  // namespace borpi
