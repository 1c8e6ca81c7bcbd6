/* SPDX-License-Identifier: Apache-2.0 */

#include "sumcert/real.hpp"

#include <cstdio>
#include <vector>

namespace sumcert {

Real::Real(mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_zero(x_, 1);
}

Real::Real(const Real& o) {
    mpfr_init2(x_, mpfr_get_prec(o.x_));
    mpfr_set(x_, o.x_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    x_[0] = o.x_[0];
    mpfr_init2(o.x_, MPFR_PREC_MIN);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(x_, mpfr_get_prec(o.x_));
        mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) {
        mpfr_swap(x_, o.x_);
    }
    return *this;
}

Real::~Real() {
    mpfr_clear(x_);
}

Real Real::of_long(long v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.x_, v, MPFR_RNDN); // exact for |v| < 2^prec
    return r;
}

Real Real::of_rational(const BigRational& q, mpfr_prec_t prec, mpfr_rnd_t rnd) {
    Real r(prec);
    mpfr_set_q(r.x_, q.raw(), rnd);
    return r;
}

std::string Real::decimal(int digits, mpfr_rnd_t rnd) const {
    if (digits < 1)
        digits = 1;
    const char* fmt = nullptr;
    switch (rnd) {
        case MPFR_RNDD: fmt = "%.*RDe"; break;
        case MPFR_RNDU: fmt = "%.*RUe"; break;
        default:        fmt = "%.*RNe"; break;
    }
    int n = mpfr_snprintf(nullptr, 0, fmt, digits - 1, x_);
    std::vector<char> buf(static_cast<size_t>(n) + 1);
    mpfr_snprintf(buf.data(), buf.size(), fmt, digits - 1, x_);
    return std::string(buf.data());
}

} // namespace sumcert
