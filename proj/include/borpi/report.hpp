#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "borpi/bigreal.hpp"
#include "borpi/iterations.hpp"

namespace borpi {

// Counts how many leading fractional digits of pi_value match the reference
// decimal text ("3.14159...", whitespace ignored). Returns 0 when the integer
// parts disagree. Throws ParseError on an empty or malformed reference.
long compare_digits(const BigReal& pi_value, std::string_view reference_text);

// "3.1415..." with exactly fraction_digits digits after the point.
std::string pi_digit_string(const BigReal& pi_value, long fraction_digits);

// Conventional block layout: digits in groups of 10, 50 per line.
std::string format_digit_block(std::string_view pi_digits);

// Fixed-schema report of one compute run.
nlohmann::json run_report_json(const RunResult& result, long digits_verified,
                               std::string_view oracle);
std::string run_report_text(const RunResult& result, long digits_verified,
                            std::string_view oracle);

}  // namespace borpi
