#include "borpi/precision.hpp"

#include <cmath>

#include "borpi/errors.hpp"

namespace borpi {

PrecisionContext with_precision(long target_digits, long guard_digits) {
    if (target_digits < 1) throw DomainError("target_digits must be at least 1");
    if (guard_digits < 0) throw DomainError("guard_digits must be non-negative");
    long working = target_digits + guard_digits;
    // bits to carry `working` decimal digits, plus slack so that a single
    // correctly rounded mpfr operation stays within the 4-ulp contract
    auto bits = static_cast<mpfr_prec_t>(
        std::ceil(static_cast<double>(working) * 3.3219280948873623) + 16);
    return PrecisionContext(target_digits, guard_digits, bits);
}

}  // namespace borpi
