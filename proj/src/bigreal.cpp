#include "borpi/bigreal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace borpi {

namespace {

mpfr_prec_t max_prec(const BigReal& a, const BigReal& b) {
    return std::max(a.precision_bits(), b.precision_bits());
}

}  // namespace

BigReal BigReal::integer(long value, const PrecisionContext& ctx) {
    BigReal r(ctx.prec_bits());
    mpfr_set_si(r.v_, value, MPFR_RNDN);
    return r;
}

BigReal BigReal::rational(long num, long den, const PrecisionContext& ctx) {
    if (den == 0) throw DomainError("rational with zero denominator");
    BigReal r(ctx.prec_bits());
    mpfr_set_si(r.v_, num, MPFR_RNDN);
    mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
    return r;
}

BigReal BigReal::from_decimal(std::string_view text, const PrecisionContext& ctx) {
    BigReal r(ctx.prec_bits());
    std::string buf(text);
    char* end = nullptr;
    mpfr_strtofr(r.v_, buf.c_str(), &end, 10, MPFR_RNDN);
    if (end == buf.c_str() || *end != '\0')
        throw ParseError("malformed decimal literal: '" + buf + "'");
    r.ensure_finite();
    return r;
}

double BigReal::log10_abs() const {
    if (mpfr_zero_p(v_)) return -1.0e18;
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_abs(t, v_, MPFR_RNDN);
    mpfr_log10(t, t, MPFR_RNDN);
    double r = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return r;
}

std::string BigReal::to_fixed(long fraction_digits) const {
    if (fraction_digits < 0) fraction_digits = 0;
    int n = mpfr_snprintf(nullptr, 0, "%.*Rf", static_cast<int>(fraction_digits), v_);
    std::vector<char> buf(static_cast<size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", static_cast<int>(fraction_digits), v_);
    return std::string(buf.data());
}

std::string BigReal::to_sci(int significant_digits) const {
    if (significant_digits < 1) significant_digits = 1;
    int n = mpfr_snprintf(nullptr, 0, "%.*Re", significant_digits - 1, v_);
    std::vector<char> buf(static_cast<size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Re", significant_digits - 1, v_);
    return std::string(buf.data());
}

BigReal& BigReal::operator+=(const BigReal& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    ensure_finite();
    return *this;
}

BigReal& BigReal::operator-=(const BigReal& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    ensure_finite();
    return *this;
}

BigReal& BigReal::operator*=(const BigReal& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    ensure_finite();
    return *this;
}

BigReal& BigReal::operator/=(const BigReal& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    ensure_finite();
    return *this;
}

BigReal& BigReal::operator*=(long m) {
    mpfr_mul_si(v_, v_, m, MPFR_RNDN);
    ensure_finite();
    return *this;
}

BigReal& BigReal::operator/=(long m) {
    if (m == 0) throw DomainError("division by zero");
    mpfr_div_si(v_, v_, m, MPFR_RNDN);
    ensure_finite();
    return *this;
}

BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(max_prec(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    r.ensure_finite();
    return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(max_prec(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    r.ensure_finite();
    return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(max_prec(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    r.ensure_finite();
    return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    BigReal r(max_prec(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    r.ensure_finite();
    return r;
}

BigReal operator+(const BigReal& a, long b) {
    BigReal r(a.precision_bits());
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    r.ensure_finite();
    return r;
}

BigReal operator-(const BigReal& a, long b) {
    BigReal r(a.precision_bits());
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    r.ensure_finite();
    return r;
}

BigReal operator*(const BigReal& a, long b) {
    BigReal r(a.precision_bits());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    r.ensure_finite();
    return r;
}

BigReal operator/(const BigReal& a, long b) {
    if (b == 0) throw DomainError("division by zero");
    BigReal r(a.precision_bits());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    r.ensure_finite();
    return r;
}

BigReal operator+(long a, const BigReal& b) { return b + a; }

BigReal operator-(long a, const BigReal& b) {
    BigReal r(b.precision_bits());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    r.ensure_finite();
    return r;
}

BigReal operator*(long a, const BigReal& b) { return b * a; }

BigReal operator/(long a, const BigReal& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    BigReal r(b.precision_bits());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    r.ensure_finite();
    return r;
}

BigReal operator-(const BigReal& a) {
    BigReal r(a.precision_bits());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

BigReal sqrt(const BigReal& x, const PrecisionContext& ctx) {
    if (x.sign() < 0) throw DomainError("sqrt of negative value");
    BigReal r(ctx.prec_bits());
    mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
    r.ensure_finite();
    return r;
}

BigReal root4(const BigReal& x, const PrecisionContext& ctx) {
    if (x.sign() < 0) throw DomainError("fourth root of negative value");
    BigReal r(ctx.prec_bits());
    mpfr_rootn_ui(r.v_, x.v_, 4, MPFR_RNDN);
    r.ensure_finite();
    return r;
}

BigReal abs(const BigReal& x) {
    BigReal r(x.precision_bits());
    mpfr_abs(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigReal pow10(long exponent, const PrecisionContext& ctx) {
    BigReal r(ctx.prec_bits());
    mpfr_set_si(r.v_, 10, MPFR_RNDN);
    mpfr_pow_si(r.v_, r.v_, exponent, MPFR_RNDN);
    r.ensure_finite();
    return r;
}

}  // namespace borpi
