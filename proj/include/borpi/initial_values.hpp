#pragma once

#include <filesystem>
#include <string_view>

#include "borpi/bigreal.hpp"
#include "borpi/precision.hpp"
#include "borpi/radical.hpp"

namespace borpi {

// One set of starting values {d0, b0, a0, c0, r0} for the iteration schemes,
// kept as exact radical expressions. The quartic scheme derives its own
// starting pair from these: s0 = sqrt(d0), t0 = r0.
struct InitialValueSet {
    int identity_id = 0;  // 1..5 for the built-in sets, 0 for user-supplied
    RadicalExpr d0, b0, a0, c0, r0;
};

// Built-in registry of the five known sets. Throws DomainError unless
// identity_id is in 1..5.
const InitialValueSet& identity_set(int identity_id);

// Residuals of the two algebraic relations every usable set satisfies:
//   c0 = b0 / (1 - d0^2)
//   a0 = r0 - c0 * d0^2 / 2
struct ConsistencyReport {
    BigReal c0_residual;
    BigReal a0_residual;
    BigReal tolerance;  // 10^(-working_digits + 4)
    bool pass() const { return c0_residual <= tolerance && a0_residual <= tolerance; }
};

ConsistencyReport consistency_check(const InitialValueSet& set, const PrecisionContext& ctx);

// Parses a user-supplied set. The text holds one assignment per line in the
// parse_radical grammar, blank lines and '#' comments ignored:
//
//   d0 = sqrt(2)/2
//   b0 = 1
//   a0 = 0
//   c0 = 2
//   r0 = 1/2
//
// All five keys are required, duplicates and unknown keys are rejected.
InitialValueSet parse_initial_value_set(std::string_view text);

InitialValueSet load_initial_value_set(const std::filesystem::path& file);

// Gate before running a user set: 0 < d0 < 1, r0 > 0, and the consistency
// residuals within tolerance. Throws DomainError with the residuals on failure.
void validate_initial_value_set(const InitialValueSet& set, const PrecisionContext& ctx);

}  // namespace borpi
