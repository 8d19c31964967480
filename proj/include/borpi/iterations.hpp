#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "borpi/bigreal.hpp"
#include "borpi/initial_values.hpp"
#include "borpi/precision.hpp"

namespace borpi {

enum class Scheme { FullQuadratic, Simplified, BorweinQuadratic, BorweinQuartic };

// Names used on the command line: full, simplified, borwein2, borwein4.
Scheme scheme_from_name(std::string_view name);
std::string_view scheme_name(Scheme scheme);

// One quadratic descent step t = (1 - sqrt(1-x^2)) / (1 + sqrt(1-x^2)).
// Requires 0 < x < 1; the result is again in (0,1), roughly x^2/4.
BigReal quad_descend(const BigReal& x, const PrecisionContext& ctx);

// One quartic descent step with the fourth root of 1 - s^4; equal to two
// quadratic steps: quartic_descend(s) = sqrt(quad_descend(quad_descend(s^2))).
BigReal quartic_descend(const BigReal& s, const PrecisionContext& ctx);

// Per-scheme state. The power-of-two factors are kept as exact integer-valued
// BigReals and doubled (or quadrupled) each step.
struct FullQuadraticState {
    long n = 0;
    BigReal d, a, b;
};

struct SimplifiedState {
    long n = 0;
    BigReal d, a, c0;
    BigReal pow2;  // 2^n
};

struct BorweinQuadraticState {
    long n = 0;
    BigReal d, r, c0;
    BigReal pow2;  // 2^n
};

struct BorweinQuarticState {
    long n = 0;
    BigReal s, t, c0;
    BigReal pow2;  // 2^(2n+1)
};

using IterationState =
    std::variant<FullQuadraticState, SimplifiedState, BorweinQuadraticState, BorweinQuarticState>;

// Single steps. Update order is fixed: the descent value d_{n+1} (or s_{n+1})
// is computed first; the full scheme then updates b before a; the 2^n factors
// use the value of n from before the increment.
FullQuadraticState step_full_quadratic(const FullQuadraticState& st, const PrecisionContext& ctx);
SimplifiedState step_simplified(const SimplifiedState& st, const PrecisionContext& ctx);
BorweinQuadraticState step_borwein_quadratic(const BorweinQuadraticState& st,
                                             const PrecisionContext& ctx);
BorweinQuarticState step_borwein_quartic(const BorweinQuarticState& st,
                                         const PrecisionContext& ctx);

// Builds the starting state for a scheme from an initial-value set.
// Rejects degenerate d0 (outside the open interval (0,1)).
IterationState make_initial_state(Scheme scheme, const InitialValueSet& set,
                                  const PrecisionContext& ctx);

IterationState step(const IterationState& st, const PrecisionContext& ctx);

// The value converging to 1/pi: a_n, r_n or t_n depending on the scheme.
const BigReal& limit_estimate(const IterationState& st);
long iteration_index(const IterationState& st);

// Hard iteration cap: ceil(log2(target)) + 4 for the quadratic schemes,
// half that plus 3 for the quartic.
long iteration_cap(Scheme scheme, long target_digits);

// Default guard: 32 + 2 * planned iterations.
long default_guard_digits(Scheme scheme, long target_digits);

struct RunOptions {
    long max_iters = 0;     // 0: use iteration_cap
    long guard_digits = -1; // <0: use default_guard_digits
};

struct IterationSample {
    long n;             // iteration index after the step
    double est_digits;  // -log10 |estimate_n - estimate_{n-1}|
    double millis;      // wall time of the step
};

struct RunResult {
    Scheme scheme;
    int identity_id;  // 0 for a user-supplied set
    long target_digits = 0;
    long working_digits = 0;
    BigReal limit;  // final a_n / r_n / t_n, approximately 1/pi
    BigReal pi;     // reciprocal of limit
    long iterations_used = 0;
    std::vector<IterationSample> per_iteration;
};

// Runs a scheme until the extrapolated error of the next step, i.e. the
// last delta squared (quadratic) or to the fourth power (quartic) times a
// safety factor 100, falls below 10^(-target_digits). Throws
// ConvergenceError if the cap is hit first.
RunResult run(Scheme scheme, int identity_id, long target_digits, const RunOptions& opts = {});
RunResult run(Scheme scheme, const InitialValueSet& set, long target_digits,
              const RunOptions& opts = {});

}  // namespace borpi
