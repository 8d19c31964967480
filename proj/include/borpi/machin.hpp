#pragma once

#include "borpi/bigreal.hpp"
#include "borpi/precision.hpp"

namespace borpi {

// Reference value of pi via Machin's formula
//   pi = 16*arctan(1/5) - 4*arctan(1/239)
// with the arctangents summed as plain Taylor series. Deliberately shares no
// code with the iteration schemes or the hypergeometric evaluator, so
// agreement with either is independent evidence. Correct to at least
// working_digits - 2.
BigReal machin_pi(const PrecisionContext& ctx);

// arctan(1/q) for integer q >= 2 by the Taylor series, summed until the
// terms drop below 10^(-working_digits - 5).
BigReal arctan_reciprocal(long q, const PrecisionContext& ctx);

}  // namespace borpi
