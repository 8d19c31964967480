#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>
#include <utility>

#include "borpi/errors.hpp"
#include "borpi/precision.hpp"

namespace borpi {

// Arbitrary-precision real number backed by mpfr. Values are immutable from
// the caller's point of view except through the compound operators, which
// update in place at the receiver's precision (used in hot summation loops).
//
// Binary operators produce a result at the larger of the operand precisions,
// so values created from a context keep its working precision through
// arbitrarily nested expressions. Non-finite results never escape: any
// operation that would produce NaN or an infinity throws DomainError.
class BigReal {
public:
    BigReal() { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_set_zero(v_, 1); }

    BigReal(const BigReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigReal(BigReal&& o) noexcept {
        v_[0] = o.v_[0];
        mpfr_init2(o.v_, MPFR_PREC_MIN);
        mpfr_set_zero(o.v_, 1);
    }

    BigReal& operator=(const BigReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigReal& operator=(BigReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigReal() { mpfr_clear(v_); }

    static BigReal integer(long value, const PrecisionContext& ctx);
    static BigReal rational(long num, long den, const PrecisionContext& ctx);
    // Parses a plain decimal literal such as "0.25" or "-3.5e-2".
    static BigReal from_decimal(std::string_view text, const PrecisionContext& ctx);

    mpfr_prec_t precision_bits() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // log10(|x|) as a double; very negative sentinel for zero.
    double log10_abs() const;

    // Decimal rendering with exactly fraction_digits digits after the point,
    // round-to-nearest. to_sci uses %Re scientific form.
    std::string to_fixed(long fraction_digits) const;
    std::string to_sci(int significant_digits) const;

    BigReal& operator+=(const BigReal& o);
    BigReal& operator-=(const BigReal& o);
    BigReal& operator*=(const BigReal& o);
    BigReal& operator/=(const BigReal& o);
    BigReal& operator*=(long m);
    BigReal& operator/=(long m);

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    friend BigReal operator+(const BigReal& a, long b);
    friend BigReal operator-(const BigReal& a, long b);
    friend BigReal operator*(const BigReal& a, long b);
    friend BigReal operator/(const BigReal& a, long b);
    friend BigReal operator+(long a, const BigReal& b);
    friend BigReal operator-(long a, const BigReal& b);
    friend BigReal operator*(long a, const BigReal& b);
    friend BigReal operator/(long a, const BigReal& b);
    friend BigReal operator-(const BigReal& a);

    friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const BigReal& a, const BigReal& b) { return !(a == b); }
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator<(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
    friend bool operator>(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
    friend bool operator<=(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
    friend bool operator>=(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

    friend BigReal sqrt(const BigReal& x, const PrecisionContext& ctx);
    friend BigReal root4(const BigReal& x, const PrecisionContext& ctx);
    friend BigReal abs(const BigReal& x);
    friend BigReal pow10(long exponent, const PrecisionContext& ctx);

private:
    explicit BigReal(mpfr_prec_t bits) { mpfr_init2(v_, bits); }

    void ensure_finite() const {
        if (!mpfr_number_p(v_)) throw DomainError("non-finite value produced");
    }

    mpfr_t v_;
};

// Square root under a context. Rejects negative input.
BigReal sqrt(const BigReal& x, const PrecisionContext& ctx);

// Fourth root under a context. Rejects negative input.
BigReal root4(const BigReal& x, const PrecisionContext& ctx);

BigReal abs(const BigReal& x);

// 10^exponent at the context's working precision (exponent may be negative).
BigReal pow10(long exponent, const PrecisionContext& ctx);

}  // namespace borpi
