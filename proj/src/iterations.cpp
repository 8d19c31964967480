#include "borpi/iterations.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "borpi/errors.hpp"

namespace borpi {

Scheme scheme_from_name(std::string_view name) {
    if (name == "full") return Scheme::FullQuadratic;
    if (name == "simplified") return Scheme::Simplified;
    if (name == "borwein2") return Scheme::BorweinQuadratic;
    if (name == "borwein4") return Scheme::BorweinQuartic;
    throw DomainError("unknown scheme '" + std::string(name) +
                      "' (expected full|simplified|borwein2|borwein4)");
}

std::string_view scheme_name(Scheme scheme) {
    switch (scheme) {
        case Scheme::FullQuadratic: return "full";
        case Scheme::Simplified: return "simplified";
        case Scheme::BorweinQuadratic: return "borwein2";
        case Scheme::BorweinQuartic: return "borwein4";
    }
    return "?";
}

namespace {

void require_open_unit(const BigReal& x, const char* what) {
    if (!(x > 0 && x < 1))
        throw DomainError(std::string(what) + " must lie strictly between 0 and 1");
}

}  // namespace

BigReal quad_descend(const BigReal& x, const PrecisionContext& ctx) {
    require_open_unit(x, "quad_descend argument");
    // (1-u)/(1+u) with u = sqrt(1-x^2), computed as x^2/(1+u)^2: the
    // subtraction 1-u cancels catastrophically once x^2 < ulp(1), this form
    // keeps full relative accuracy all the way down
    BigReal u = sqrt(1 - x * x, ctx);
    BigReal one_plus = 1 + u;
    return x * x / (one_plus * one_plus);
}

BigReal quartic_descend(const BigReal& s, const PrecisionContext& ctx) {
    require_open_unit(s, "quartic_descend argument");
    // (1-q)/(1+q) with q = (1-s^4)^(1/4), written as s^4/((1+q)^2 (1+q^2))
    BigReal s2 = s * s;
    BigReal s4 = s2 * s2;
    BigReal q = root4(1 - s4, ctx);
    BigReal one_plus = 1 + q;
    return s4 / (one_plus * one_plus * (1 + q * q));
}

// d_{n+1} = descent(d_n)
// b_{n+1} = 2 b_n (1+d_{n+1})^3 / (1-d_{n+1})
// a_{n+1} = a_n (1+d_{n+1})^2 + b_{n+1} d_{n+1} / (2(1+d_{n+1}))
FullQuadraticState step_full_quadratic(const FullQuadraticState& st, const PrecisionContext& ctx) {
    BigReal d1 = quad_descend(st.d, ctx);
    BigReal one_plus = 1 + d1;
    BigReal b1 = 2 * st.b * one_plus * one_plus * one_plus / (1 - d1);
    BigReal a1 = st.a * one_plus * one_plus + b1 * d1 / (2 * one_plus);
    return FullQuadraticState{st.n + 1, std::move(d1), std::move(a1), std::move(b1)};
}

// a_{n+1} = a_n (1+d_{n+1})^2 + c0 2^n d_{n+1} (1-d_{n+1}), with the n from
// before the increment in the 2^n factor.
SimplifiedState step_simplified(const SimplifiedState& st, const PrecisionContext& ctx) {
    BigReal d1 = quad_descend(st.d, ctx);
    BigReal one_plus = 1 + d1;
    BigReal a1 = st.a * one_plus * one_plus + st.c0 * st.pow2 * d1 * (1 - d1);
    return SimplifiedState{st.n + 1, std::move(d1), std::move(a1), st.c0, st.pow2 * 2};
}

// r_{n+1} = r_n (1+d_{n+1})^2 - c0 2^n d_{n+1}
BorweinQuadraticState step_borwein_quadratic(const BorweinQuadraticState& st,
                                             const PrecisionContext& ctx) {
    BigReal d1 = quad_descend(st.d, ctx);
    BigReal one_plus = 1 + d1;
    BigReal r1 = st.r * one_plus * one_plus - st.c0 * st.pow2 * d1;
    return BorweinQuadraticState{st.n + 1, std::move(d1), std::move(r1), st.c0, st.pow2 * 2};
}

// t_{n+1} = (1+s_{n+1})^4 t_n - c0 2^(2n+1) s_{n+1} (1 + s_{n+1} + s_{n+1}^2)
BorweinQuarticState step_borwein_quartic(const BorweinQuarticState& st,
                                         const PrecisionContext& ctx) {
    BigReal s1 = quartic_descend(st.s, ctx);
    BigReal one_plus = 1 + s1;
    BigReal p2 = one_plus * one_plus;
    BigReal t1 = p2 * p2 * st.t - st.c0 * st.pow2 * s1 * (1 + s1 + s1 * s1);
    return BorweinQuarticState{st.n + 1, std::move(s1), std::move(t1), st.c0, st.pow2 * 4};
}

IterationState make_initial_state(Scheme scheme, const InitialValueSet& set,
                                  const PrecisionContext& ctx) {
    BigReal d0 = eval(set.d0, ctx);
    require_open_unit(d0, "initial d0");
    switch (scheme) {
        case Scheme::FullQuadratic:
            return FullQuadraticState{0, std::move(d0), eval(set.a0, ctx), eval(set.b0, ctx)};
        case Scheme::Simplified:
            return SimplifiedState{0, std::move(d0), eval(set.a0, ctx), eval(set.c0, ctx),
                                   BigReal::integer(1, ctx)};
        case Scheme::BorweinQuadratic:
            return BorweinQuadraticState{0, std::move(d0), eval(set.r0, ctx), eval(set.c0, ctx),
                                         BigReal::integer(1, ctx)};
        case Scheme::BorweinQuartic:
            return BorweinQuarticState{0, sqrt(d0, ctx), eval(set.r0, ctx), eval(set.c0, ctx),
                                       BigReal::integer(2, ctx)};
    }
    throw Error("unreachable");
}

IterationState step(const IterationState& st, const PrecisionContext& ctx) {
    return std::visit(
        [&](const auto& s) -> IterationState {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FullQuadraticState>)
                return step_full_quadratic(s, ctx);
            else if constexpr (std::is_same_v<T, SimplifiedState>)
                return step_simplified(s, ctx);
            else if constexpr (std::is_same_v<T, BorweinQuadraticState>)
                return step_borwein_quadratic(s, ctx);
            else
                return step_borwein_quartic(s, ctx);
        },
        st);
}

const BigReal& limit_estimate(const IterationState& st) {
    return std::visit(
        [](const auto& s) -> const BigReal& {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, FullQuadraticState> ||
                          std::is_same_v<T, SimplifiedState>)
                return s.a;
            else if constexpr (std::is_same_v<T, BorweinQuadraticState>)
                return s.r;
            else
                return s.t;
        },
        st);
}

long iteration_index(const IterationState& st) {
    return std::visit([](const auto& s) { return s.n; }, st);
}

long iteration_cap(Scheme scheme, long target_digits) {
    long log2_target = target_digits <= 1
                           ? 0
                           : static_cast<long>(std::ceil(std::log2(static_cast<double>(target_digits))));
    if (scheme == Scheme::BorweinQuartic) return (log2_target + 1) / 2 + 3;
    return log2_target + 4;
}

long default_guard_digits(Scheme scheme, long target_digits) {
    return 32 + 2 * iteration_cap(scheme, target_digits);
}

RunResult run(Scheme scheme, int identity_id, long target_digits, const RunOptions& opts) {
    RunResult result = run(scheme, identity_set(identity_id), target_digits, opts);
    result.identity_id = identity_id;
    return result;
}

RunResult run(Scheme scheme, const InitialValueSet& set, long target_digits,
              const RunOptions& opts) {
    if (target_digits < 1) throw DomainError("target_digits must be at least 1");
    long cap = opts.max_iters > 0 ? opts.max_iters : iteration_cap(scheme, target_digits);
    long guard = opts.guard_digits >= 0 ? opts.guard_digits
                                        : default_guard_digits(scheme, target_digits);
    PrecisionContext ctx = with_precision(target_digits, guard);

    IterationState state = make_initial_state(scheme, set, ctx);
    BigReal threshold = pow10(-target_digits, ctx);
    int order = scheme == Scheme::BorweinQuartic ? 4 : 2;

    RunResult result;
    result.scheme = scheme;
    result.identity_id = set.identity_id;
    result.target_digits = target_digits;
    result.working_digits = ctx.working_digits();

    bool converged = false;
    while (iteration_index(state) < cap) {
        auto t0 = std::chrono::steady_clock::now();
        IterationState next = step(state, ctx);
        auto t1 = std::chrono::steady_clock::now();

        BigReal delta = abs(limit_estimate(next) - limit_estimate(state));
        state = std::move(next);

        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        double est = -delta.log10_abs();
        double ceiling = static_cast<double>(ctx.working_digits()) + 10.0;
        result.per_iteration.push_back(
            IterationSample{iteration_index(state), std::min(est, ceiling), ms});

        // next-step error ~ delta^order; stop once that is safely below target
        BigReal extrapolated = delta * delta;
        if (order == 4) extrapolated *= extrapolated;
        if (extrapolated * 100 < threshold) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw ConvergenceError("no convergence after " + std::to_string(cap) +
                               " iterations; raise guard digits or the iteration cap");

    result.iterations_used = iteration_index(state);
    result.limit = limit_estimate(state);
    result.pi = 1 / result.limit;
    return result;
}

}  // namespace borpi
