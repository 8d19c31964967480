#pragma once

#include <span>
#include <vector>

#include "borpi/bigreal.hpp"
#include "borpi/precision.hpp"
#include "borpi/radical.hpp"

namespace borpi {

// Pochhammer parameter that shifts linearly with the free parameter k:
// value(k) = base + k_coeff * k.
struct AffineParam {
    Rational base;
    long k_coeff = 0;
};

// Data of one identity pair with free parameter k. Both members share the
// series argument and the upper/lower parameters; they differ in the bracket
// weight [alpha*n + beta*k + gamma] (First member: weight 1) and in the
// denominator parameters of the right side's k-dependent Pochhammer ratio.
//
// Left side of member m at parameter k:
//   sum_n (u1)_n (u2)_n / ((l1)_n (1)_n) * z^n * (m == First ? 1 : bracket)
// Right side: C_m * geom^k * prod(rhs_num)_k / prod(rhs_den_m)_k.
struct WzIdentitySpec {
    int identity_id = 0;
    AffineParam upper1, upper2, lower1;
    RadicalExpr argument;             // z
    RadicalExpr alpha, beta, gamma;   // second-member bracket coefficients
    RadicalExpr geom;                 // per-unit-k geometric factor
    std::vector<Rational> rhs_num;
    std::vector<Rational> rhs_den_first;
    std::vector<Rational> rhs_den_second;
};

// Registry for identities 1..5. Throws DomainError otherwise.
const WzIdentitySpec& wz_identity_spec(int identity_id);

struct WzResidual {
    int k = 0;
    int member = 1;  // 1 or 2
    BigReal residual;
};

struct WzCheckResult {
    BigReal C1;                // first member left sum at k = 0
    BigReal C2;                // second member left sum at k = 0
    std::vector<WzResidual> residuals;
    BigReal product_residual;  // |C1 * C2 * pi - 1|
    BigReal tolerance;         // bound on the per-k residuals
    BigReal product_tolerance; // bound on the k = 0 product residual
    bool pass() const;
};

struct WzOptions {
    long max_terms = 4000;
    // per-k residual tolerance 10^(-tolerance_digits); <0 selects
    // working_digits/2 (the shifted sums lose digits to cancellation).
    // The k = 0 product is held to the tighter 10^(-working_digits+10).
    long tolerance_digits = -1;
};

// Determines C1 and C2 from k = 0, then checks the k-dependence of both
// members at each requested k > 0: residual_k = |LHS(k) / (C * RHS(k)) - 1|.
// k values must be non-negative (only finite Pochhammer products appear).
WzCheckResult verify_wz_pair(int identity_id, std::span<const int> k_values,
                             const PrecisionContext& ctx, const WzOptions& opts = {});

}  // namespace borpi
