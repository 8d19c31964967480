#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "borpi/errors.hpp"
#include "borpi/machin.hpp"
#include "borpi/wz.hpp"
#include "test_util.hpp"

using namespace borpi;
using borpi::testutil::check_below;
using borpi::testutil::check_close_decimal;

TEST_CASE("registry bounds") {
    CHECK_THROWS_AS(wz_identity_spec(0), DomainError);
    CHECK_THROWS_AS(wz_identity_spec(6), DomainError);
}

TEST_CASE("identity 1 constants from k = 0") {
    PrecisionContext ctx = with_precision(50, 0);
    std::array<int, 1> ks{0};
    WzCheckResult res = verify_wz_pair(1, ks, ctx);
    check_close_decimal(res.C1, "1.007483720345084706163384", ctx, -23);
    check_close_decimal(res.C2, "0.3159454388749455252735455", ctx, -24);
    check_below(res.product_residual, -40, ctx);
    CHECK(res.residuals.empty());
    CHECK(res.pass());
}

TEST_CASE("k = 0 right-side factor is exactly one") {
    // (v)_0 = 1 for every parameter, so LHS(0) defines the constant; the
    // result must hold C1 and C2 equal to the plain identity sums
    PrecisionContext ctx = with_precision(50, 0);
    std::array<int, 2> ks{0, 1};
    for (int id = 1; id <= 5; ++id) {
        WzCheckResult res = verify_wz_pair(id, ks, ctx);
        CHECK(res.C1 > 0);
        CHECK(res.C2 > 0);
        check_below(res.product_residual, -40, ctx);
    }
}

TEST_CASE("identity 1 at k = 1 matches the explicit right-side factor") {
    PrecisionContext ctx = with_precision(50, 0);
    std::array<int, 1> ks{1};
    WzCheckResult res = verify_wz_pair(1, ks, ctx);
    REQUIRE(res.residuals.size() == 2);
    for (const auto& r : res.residuals) check_below(r.residual, -40, ctx);

    // frozen factor: (34 - 24 sqrt 2) * 512/27 * (1*(1/2)) / ((7/12)*(11/12))
    BigReal g = (34 - 24 * sqrt(BigReal::integer(2, ctx), ctx)) * 512 / 27;
    BigReal poch = BigReal::rational(1, 2, ctx) /
                   (BigReal::rational(7, 12, ctx) * BigReal::rational(11, 12, ctx));
    check_close_decimal(g * poch, "1.0439392401526594052", ctx, -18);
}

TEST_CASE("all five pairs verify at k = 1,2,3 at 50 digits") {
    PrecisionContext ctx = with_precision(50, 0);
    std::array<int, 4> ks{0, 1, 2, 3};
    for (int id = 1; id <= 5; ++id) {
        WzCheckResult res = verify_wz_pair(id, ks, ctx);
        REQUIRE(res.residuals.size() == 6);
        for (const auto& r : res.residuals) {
            CAPTURE(id);
            CAPTURE(r.k);
            CAPTURE(r.member);
            check_below(r.residual, -20, ctx);
        }
        check_below(res.product_residual, -40, ctx);
        CHECK(res.pass());
    }
}

TEST_CASE("product of constants reproduces 1/pi") {
    PrecisionContext ctx = with_precision(50, 0);
    BigReal inv_pi = 1 / machin_pi(ctx);
    std::array<int, 1> ks{0};
    for (int id = 1; id <= 5; ++id) {
        WzCheckResult res = verify_wz_pair(id, ks, ctx);
        check_below(abs(res.C1 * res.C2 - inv_pi), -45, ctx);
    }
}

TEST_CASE("negative k is rejected") {
    PrecisionContext ctx = with_precision(30, 0);
    std::array<int, 1> ks{-1};
    CHECK_THROWS_AS(verify_wz_pair(1, ks, ctx), DomainError);
}

TEST_CASE("term cap failure is reported") {
    PrecisionContext ctx = with_precision(50, 0);
    std::array<int, 1> ks{0};
    WzOptions opts;
    opts.max_terms = 10;  // identity 5 needs hundreds of terms
    CHECK_THROWS_AS(verify_wz_pair(5, ks, ctx, opts), PrecisionError);
}

TEST_CASE("tolerance override is honored") {
    PrecisionContext ctx = with_precision(50, 0);
    std::array<int, 2> ks{0, 1};
    WzOptions opts;
    opts.tolerance_digits = 1;  // absurdly lax
    WzCheckResult res = verify_wz_pair(3, ks, ctx, opts);
    CHECK(res.tolerance == pow10(-1, ctx));
    CHECK(res.pass());
}
