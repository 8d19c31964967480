#include "borpi/machin.hpp"

#include "borpi/errors.hpp"

namespace borpi {

BigReal arctan_reciprocal(long q, const PrecisionContext& ctx) {
    if (q < 2) throw DomainError("arctan_reciprocal expects q >= 2");
    BigReal x = BigReal::rational(1, q, ctx);
    BigReal x2 = x * x;
    BigReal threshold = pow10(-ctx.working_digits() - 5, ctx);

    // arctan(x) = x - x^3/3 + x^5/5 - ...
    BigReal power = x;  // x^(2j+1)
    BigReal sum = x;
    long j = 1;
    bool subtract = true;
    for (;;) {
        power *= x2;
        BigReal term = power / (2 * j + 1);
        if (term < threshold) break;
        if (subtract)
            sum -= term;
        else
            sum += term;
        subtract = !subtract;
        ++j;
    }
    return sum;
}

BigReal machin_pi(const PrecisionContext& ctx) {
    return 16 * arctan_reciprocal(5, ctx) - 4 * arctan_reciprocal(239, ctx);
}

}  // namespace borpi
