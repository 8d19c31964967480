#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "borpi/errors.hpp"
#include "borpi/iterations.hpp"
#include "borpi/machin.hpp"
#include "test_util.hpp"

using namespace borpi;
using borpi::testutil::check_below;
using borpi::testutil::check_close_decimal;

TEST_CASE("quad_descend frozen values") {
    PrecisionContext ctx = with_precision(30, 0);
    BigReal inv_sqrt2 = 1 / sqrt(BigReal::integer(2, ctx), ctx);
    check_close_decimal(quad_descend(inv_sqrt2, ctx), "0.171572875253809902396622551581", ctx,
                        -28);
    BigReal sqrt2m1 = sqrt(BigReal::integer(2, ctx), ctx) - 1;
    check_close_decimal(quad_descend(sqrt2m1, ctx), "0.0470218995009911016709143036235", ctx,
                        -28);
    BigReal d1 = eval(identity_set(1).d0, ctx);
    check_close_decimal(quad_descend(d1, ctx), "0.00746966672950958190551115601083", ctx, -28);
}

TEST_CASE("quad_descend satisfies sqrt(1-x^2) = (1-t)/(1+t)") {
    PrecisionContext ctx = with_precision(40, 0);
    for (long num : {1L, 3L, 17L, 35L}) {
        BigReal x = BigReal::rational(num, 40, ctx);
        BigReal t = quad_descend(x, ctx);
        CHECK(t > 0);
        CHECK(t < 1);
        check_below(abs(sqrt(1 - x * x, ctx) - (1 - t) / (1 + t)), -36, ctx);
    }
}

TEST_CASE("quad_descend small-x asymptotics t ~ x^2/4") {
    PrecisionContext ctx = with_precision(30, 0);
    BigReal x = BigReal::rational(1, 1000000, ctx);
    BigReal t = quad_descend(x, ctx);
    CHECK(t > BigReal::from_decimal("2.4e-13", ctx));
    CHECK(t < BigReal::from_decimal("2.6e-13", ctx));
}

TEST_CASE("quad_descend domain errors") {
    PrecisionContext ctx = with_precision(20, 0);
    CHECK_THROWS_AS(quad_descend(BigReal::integer(0, ctx), ctx), DomainError);
    CHECK_THROWS_AS(quad_descend(BigReal::integer(1, ctx), ctx), DomainError);
    CHECK_THROWS_AS(quad_descend(BigReal::integer(2, ctx), ctx), DomainError);
    CHECK_THROWS_AS(quad_descend(BigReal::rational(-1, 2, ctx), ctx), DomainError);
}

TEST_CASE("quartic_descend frozen value and cross-check via two quadratic steps") {
    PrecisionContext ctx = with_precision(30, 0);
    BigReal s = sqrt(BigReal::integer(2, ctx), ctx) - 1;
    BigReal direct = quartic_descend(s, ctx);
    check_close_decimal(direct, "0.00373488546332513358613022412855", ctx, -28);

    BigReal d = s * s;  // 3 - 2 sqrt 2
    BigReal via_quad = sqrt(quad_descend(quad_descend(d, ctx), ctx), ctx);
    check_below(abs(direct - via_quad), -28, ctx);
}

TEST_CASE("quartic_descend small-s asymptotics t ~ s^4/8") {
    PrecisionContext ctx = with_precision(30, 0);
    BigReal s = BigReal::rational(1, 1000, ctx);
    BigReal t = quartic_descend(s, ctx);
    BigReal expected = BigReal::from_decimal("1.25e-13", ctx);
    check_below(abs(t - expected) / expected, -2, ctx);  // within 1%
}

TEST_CASE("quartic_descend contracts on sample points") {
    PrecisionContext ctx = with_precision(30, 0);
    for (const char* text : {"0.1", "0.4", "0.41421356"}) {
        BigReal s = BigReal::from_decimal(text, ctx);
        CHECK(quartic_descend(s, ctx) < s);
    }
}

// contraction bounds implied by t = x^2 / (1 + sqrt(1-x^2))^2; the divisor
// exceeds 3.9 only for x below sqrt(1 - (sqrt(3.9)-1)^2) ~ 0.223, and stays
// above 2.4 up to x = 0.8 (similarly 7.9 / 6.2 for the quartic map)
TEST_CASE("property: descent contraction rates") {
    std::mt19937_64 rng(31);
    PrecisionContext ctx = with_precision(40, 0);
    std::uniform_int_distribution<long> small(1, 2200);
    std::uniform_int_distribution<long> wide(1, 8000);
    for (int i = 0; i < 60; ++i) {
        BigReal x = BigReal::rational(small(rng), 10000, ctx);  // (0, 0.22]
        CHECK(quad_descend(x, ctx) < x * x / BigReal::from_decimal("3.9", ctx));
        BigReal y = BigReal::rational(wide(rng), 10000, ctx);  // (0, 0.8]
        CHECK(quad_descend(y, ctx) < y * y / BigReal::from_decimal("2.4", ctx));

        BigReal s = BigReal::rational(small(rng) * 39 / 22, 10000, ctx);  // (0, 0.39]
        BigReal s4 = s * s * s * s;
        CHECK(quartic_descend(s, ctx) < s4 / BigReal::from_decimal("7.9", ctx));
        BigReal u = BigReal::rational(wide(rng), 10000, ctx);  // (0, 0.8]
        BigReal u4 = u * u * u * u;
        CHECK(quartic_descend(u, ctx) < u4 / BigReal::from_decimal("6.2", ctx));
    }
}

TEST_CASE("one full-quadratic step from identity 2 lands on identity 1") {
    PrecisionContext ctx = with_precision(30, 0);
    auto st = std::get<FullQuadraticState>(
        make_initial_state(Scheme::FullQuadratic, identity_set(2), ctx));
    FullQuadraticState next = step_full_quadratic(st, ctx);
    CHECK(next.n == 1);
    check_close_decimal(next.d, "0.171572875253809902396622551581", ctx, -28);
    check_close_decimal(next.b, "3.88225099390856234248105876207", ctx, -27);
    check_close_decimal(next.a, "0.284271247461900976033774484194", ctx, -28);
    // exactly the identity 1 starting data
    check_below(abs(next.d - eval(identity_set(1).d0, ctx)), -27, ctx);
    check_below(abs(next.b - eval(identity_set(1).b0, ctx)), -27, ctx);
    check_below(abs(next.a - eval(identity_set(1).a0, ctx)), -27, ctx);
}

TEST_CASE("one simplified step from identity 2") {
    PrecisionContext ctx = with_precision(30, 0);
    auto st =
        std::get<SimplifiedState>(make_initial_state(Scheme::Simplified, identity_set(2), ctx));
    SimplifiedState next = step_simplified(st, ctx);
    check_close_decimal(next.a, "0.284271247461900976033774484194", ctx, -28);
    CHECK(next.pow2 == BigReal::integer(2, ctx));
}

TEST_CASE("borwein quadratic steps from identity 2") {
    PrecisionContext ctx = with_precision(30, 0);
    auto st = std::get<BorweinQuadraticState>(
        make_initial_state(Scheme::BorweinQuadratic, identity_set(2), ctx));
    BorweinQuadraticState r1 = step_borwein_quadratic(st, ctx);
    check_close_decimal(r1.r, "0.343145750507619804793245103161", ctx, -28);
    BorweinQuadraticState r2 = step_borwein_quadratic(r1, ctx);
    check_close_decimal(r2.r, "0.318412598514664150313461639272", ctx, -27);
    // error vs 1/pi is about 1.03e-4 at this point
    BigReal inv_pi = 1 / machin_pi(ctx);
    BigReal err = abs(r2.r - inv_pi);
    CHECK(err < BigReal::from_decimal("1.1e-4", ctx));
    CHECK(err > BigReal::from_decimal("0.9e-4", ctx));
}

TEST_CASE("quartic t0 = r0 before any step") {
    PrecisionContext ctx = with_precision(30, 0);
    for (int id = 1; id <= 5; ++id) {
        auto st = std::get<BorweinQuarticState>(
            make_initial_state(Scheme::BorweinQuartic, identity_set(id), ctx));
        CHECK(st.n == 0);
        check_below(abs(st.t - eval(identity_set(id).r0, ctx)), -28, ctx);
        check_below(abs(st.s * st.s - eval(identity_set(id).d0, ctx)), -28, ctx);
    }
}

TEST_CASE("full-quadratic invariant: b_n/(1-d_n^2) doubles each step") {
    PrecisionContext ctx = with_precision(60, 0);
    for (int id : {1, 4}) {
        auto st = std::get<FullQuadraticState>(
            make_initial_state(Scheme::FullQuadratic, identity_set(id), ctx));
        BigReal c0 = eval(identity_set(id).c0, ctx);
        BigReal expected = c0;
        for (int n = 0; n < 5; ++n) {
            st = step_full_quadratic(st, ctx);
            expected *= 2;
            BigReal ratio = st.b / (1 - st.d * st.d);
            check_below(abs(ratio - expected) / expected, -50, ctx);
        }
    }
}

TEST_CASE("d_n decreases strictly and stays in (0,1)") {
    PrecisionContext ctx = with_precision(60, 0);
    for (int id = 1; id <= 5; ++id) {
        auto st = std::get<BorweinQuadraticState>(
            make_initial_state(Scheme::BorweinQuadratic, identity_set(id), ctx));
        BigReal prev = st.d;
        for (int n = 0; n < 6; ++n) {
            st = step_borwein_quadratic(st, ctx);
            CHECK(st.d > 0);
            CHECK(st.d < prev);
            prev = st.d;
        }
    }
}

TEST_CASE("scheme equivalences over eight steps at 100 digits") {
    PrecisionContext ctx = with_precision(100, 0);
    for (int id = 1; id <= 5; ++id) {
        const InitialValueSet& set = identity_set(id);
        auto full =
            std::get<FullQuadraticState>(make_initial_state(Scheme::FullQuadratic, set, ctx));
        auto simp = std::get<SimplifiedState>(make_initial_state(Scheme::Simplified, set, ctx));
        auto bq2 = std::get<BorweinQuadraticState>(
            make_initial_state(Scheme::BorweinQuadratic, set, ctx));
        BigReal c0 = eval(set.c0, ctx);
        BigReal pow2_prev = BigReal::rational(1, 2, ctx);  // 2^(n-1)
        for (int n = 1; n <= 8; ++n) {
            full = step_full_quadratic(full, ctx);
            simp = step_simplified(simp, ctx);
            bq2 = step_borwein_quadratic(bq2, ctx);
            check_below(abs(full.a - simp.a), -80, ctx);
            BigReal substituted = bq2.r - c0 * pow2_prev * 2 * bq2.d * bq2.d;
            check_below(abs(substituted - simp.a), -80, ctx);
            pow2_prev *= 2;
        }
    }
}

TEST_CASE("quartic state matches every second quadratic state") {
    PrecisionContext ctx = with_precision(100, 0);
    for (int id = 1; id <= 5; ++id) {
        const InitialValueSet& set = identity_set(id);
        auto bq2 = std::get<BorweinQuadraticState>(
            make_initial_state(Scheme::BorweinQuadratic, set, ctx));
        auto bq4 =
            std::get<BorweinQuarticState>(make_initial_state(Scheme::BorweinQuartic, set, ctx));
        for (int n = 1; n <= 8; ++n) {
            bq4 = step_borwein_quartic(bq4, ctx);
            bq2 = step_borwein_quadratic(step_borwein_quadratic(bq2, ctx), ctx);
            check_below(abs(bq4.s - sqrt(bq2.d, ctx)), -80, ctx);
            check_below(abs(bq4.t - bq2.r), -80, ctx);
        }
    }
}

TEST_CASE("six full-quadratic steps from identity 2 give 60+ digits of 1/pi") {
    PrecisionContext ctx = with_precision(100, 0);
    auto st = std::get<FullQuadraticState>(
        make_initial_state(Scheme::FullQuadratic, identity_set(2), ctx));
    for (int n = 0; n < 6; ++n) st = step_full_quadratic(st, ctx);
    BigReal inv_pi = 1 / machin_pi(ctx);
    check_below(abs(st.a - inv_pi), -60, ctx);
}

TEST_CASE("run: simplified and full give identical 50-digit pi") {
    RunResult a = run(Scheme::Simplified, 3, 50);
    RunResult b = run(Scheme::FullQuadratic, 3, 50);
    CHECK(a.pi.to_fixed(50) == b.pi.to_fixed(50));
}

TEST_CASE("run: 200 digits against the machin oracle") {
    PrecisionContext ref_ctx = with_precision(220, 0);
    BigReal reference = machin_pi(ref_ctx);
    for (Scheme scheme : {Scheme::FullQuadratic, Scheme::Simplified, Scheme::BorweinQuadratic,
                          Scheme::BorweinQuartic}) {
        RunResult result = run(scheme, 2, 200);
        BigReal err = abs(result.pi - reference);
        check_below(err, -200, ref_ctx);
        CHECK(result.iterations_used <= iteration_cap(scheme, 200));
        CHECK(result.per_iteration.size() == static_cast<size_t>(result.iterations_used));
        // pi * limit = 1
        check_below(abs(result.pi * result.limit - 1), -195, ref_ctx);
    }
}

TEST_CASE("run: all schemes and identities converge to the same constant") {
    PrecisionContext ref_ctx = with_precision(80, 0);
    BigReal reference = machin_pi(ref_ctx);
    for (int id = 1; id <= 5; ++id)
        for (Scheme scheme : {Scheme::BorweinQuadratic, Scheme::BorweinQuartic}) {
            RunResult result = run(scheme, id, 60);
            check_below(abs(result.pi - reference), -60, ref_ctx);
        }
}

TEST_CASE("run input validation") {
    CHECK_THROWS_AS(run(Scheme::BorweinQuartic, 9, 100), DomainError);
    CHECK_THROWS_AS(run(Scheme::BorweinQuartic, 1, 0), DomainError);
}

TEST_CASE("run: per-iteration delta estimates are non-decreasing") {
    RunResult result = run(Scheme::BorweinQuadratic, 2, 150);
    for (size_t i = 1; i < result.per_iteration.size(); ++i)
        CHECK(result.per_iteration[i].est_digits >= result.per_iteration[i - 1].est_digits);
}

TEST_CASE("iteration caps") {
    CHECK(iteration_cap(Scheme::BorweinQuadratic, 1000) == 14);
    CHECK(iteration_cap(Scheme::BorweinQuartic, 1000) == 8);
    CHECK(iteration_cap(Scheme::BorweinQuadratic, 1) == 4);
    // an absurdly low cap trips the convergence error
    CHECK_THROWS_AS(run(Scheme::BorweinQuadratic, 2, 500, RunOptions{2, -1}), ConvergenceError);
}
