#pragma once

#include <mpfr.h>

namespace borpi {

// Governs the working precision of all real arithmetic. Precision is
// expressed in decimal digits: target_digits is what the caller asked for,
// guard_digits is the extra cushion carried to absorb rounding, and all
// values produced under a context hold working = target + guard digits.
//
// Contract: any single arithmetic operation performed under a context is
// correct to within 4 units in the last working-digit place.
class PrecisionContext {
public:
    long target_digits() const noexcept { return target_; }
    long guard_digits() const noexcept { return guard_; }
    long working_digits() const noexcept { return target_ + guard_; }

    // Binary precision used by the mpfr backend for this context.
    mpfr_prec_t prec_bits() const noexcept { return bits_; }

    friend PrecisionContext with_precision(long target_digits, long guard_digits);

private:
    PrecisionContext(long target, long guard, mpfr_prec_t bits)
        : target_(target), guard_(guard), bits_(bits) {}

    long target_;
    long guard_;
    mpfr_prec_t bits_;
};

// Builds a context. Rejects target_digits < 1 or guard_digits < 0.
PrecisionContext with_precision(long target_digits, long guard_digits);

}  // namespace borpi
