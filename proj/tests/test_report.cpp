#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "borpi/errors.hpp"
#include "borpi/machin.hpp"
#include "borpi/report.hpp"
#include "test_util.hpp"

using namespace borpi;

TEST_CASE("compare_digits against a high-precision reference") {
    PrecisionContext ctx = with_precision(1000, 20);
    BigReal pi = machin_pi(ctx);
    PrecisionContext ref_ctx = with_precision(1100, 20);
    std::string reference = machin_pi(ref_ctx).to_fixed(1050);
    CHECK(compare_digits(pi, reference) >= 1000);
}

TEST_CASE("compare_digits with short and mismatching references") {
    PrecisionContext ctx = with_precision(30, 0);
    BigReal pi = machin_pi(ctx);
    // integer part matches, first fractional digit matches, second does not
    CHECK(compare_digits(pi, "3.15") == 1);
    CHECK(compare_digits(pi, "3.14") == 2);
    CHECK(compare_digits(pi, "4.14") == 0);
    CHECK(compare_digits(pi, " 3.1415 9265 ") == 8);  // whitespace ignored
}

TEST_CASE("compare_digits rejects malformed references") {
    PrecisionContext ctx = with_precision(20, 0);
    BigReal pi = machin_pi(ctx);
    CHECK_THROWS_AS(compare_digits(pi, ""), ParseError);
    CHECK_THROWS_AS(compare_digits(pi, "   \n"), ParseError);
    CHECK_THROWS_AS(compare_digits(pi, "no digits here"), ParseError);
    CHECK_THROWS_AS(compare_digits(pi, "3,14159"), ParseError);
    CHECK_THROWS_AS(compare_digits(pi, ".123"), ParseError);
}

TEST_CASE("digit block layout: 10 per group, 50 per line") {
    PrecisionContext ctx = with_precision(120, 0);
    std::string digits = pi_digit_string(machin_pi(ctx), 100);
    std::string block = format_digit_block(digits);
    // first line is the integer part, then two full lines of five groups
    auto first_nl = block.find('\n');
    CHECK(block.substr(0, first_nl) == "3.");
    std::string second = block.substr(first_nl + 1, block.find('\n', first_nl + 1) - first_nl - 1);
    CHECK(second == "1415926535 8979323846 2643383279 5028841971 6939937510");
    CHECK(second.size() == 54);
}

TEST_CASE("run report JSON carries every field and round-trips") {
    RunResult result = run(Scheme::BorweinQuartic, 1, 80);
    nlohmann::json j = run_report_json(result, 80, "machin");
    std::string dumped = j.dump();
    nlohmann::json back = nlohmann::json::parse(dumped);

    CHECK(back["scheme"] == "borwein4");
    CHECK(back["identity"] == 1);
    CHECK(back["digits_requested"] == 80);
    CHECK(back["digits_verified"] == 80);
    CHECK(back["iterations"] == result.iterations_used);
    CHECK(back["oracle"] == "machin");
    std::string pi_text = back["pi"];
    CHECK(pi_text.substr(0, 10) == "3.14159265");
    CHECK(pi_text.size() == 82);  // "3." + 80 digits
    REQUIRE(back["per_iteration"].size() == result.per_iteration.size());
    for (size_t i = 0; i < result.per_iteration.size(); ++i) {
        CHECK(back["per_iteration"][i]["n"] == result.per_iteration[i].n);
        CHECK(back["per_iteration"][i]["est_digits"].get<double>() ==
              doctest::Approx(result.per_iteration[i].est_digits));
        CHECK(back["per_iteration"][i]["ms"].get<double>() >= 0.0);
    }
}

TEST_CASE("text report mentions the digits and convergence rows") {
    RunResult result = run(Scheme::BorweinQuadratic, 2, 60);
    std::string text = run_report_text(result, 60, "machin");
    CHECK(text.find("scheme:           borwein2") != std::string::npos);
    CHECK(text.find("digits verified:  60") != std::string::npos);
    CHECK(text.find("n=1") != std::string::npos);
    CHECK(text.find("3.") != std::string::npos);
    CHECK(text.find("1415926535") != std::string::npos);
}
