/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <mpfr.h>

#include <compare>
#include <string>

#include "sumcert/rational.hpp"

namespace sumcert {

/// Value-semantic MPFR wrapper. A Real carries its own precision; it is
/// the endpoint type of Enclosure and is not used for uncertified
/// arithmetic anywhere in the library.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 64);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    static Real of_long(long v, mpfr_prec_t prec);
    static Real of_rational(const BigRational& q, mpfr_prec_t prec, mpfr_rnd_t rnd);

    mpfr_prec_t precision() const { return mpfr_get_prec(x_); }

    bool is_nan() const { return mpfr_nan_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.x_, b.x_) != 0; }
    friend std::strong_ordering operator<=>(const Real& a, const Real& b) {
        int c = mpfr_cmp(a.x_, b.x_);
        return c <=> 0;
    }
    friend bool operator<(const Real& a, const BigRational& q) { return mpfr_cmp_q(a.x_, q.raw()) < 0; }
    friend bool operator>(const Real& a, const BigRational& q) { return mpfr_cmp_q(a.x_, q.raw()) > 0; }
    friend bool operator<=(const Real& a, const BigRational& q) { return mpfr_cmp_q(a.x_, q.raw()) <= 0; }
    friend bool operator>=(const Real& a, const BigRational& q) { return mpfr_cmp_q(a.x_, q.raw()) >= 0; }

    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    /// Decimal string with `digits` significant digits, rounded in the
    /// given direction ("1.23456789012e-01" style, sign included).
    std::string decimal(int digits, mpfr_rnd_t rnd) const;

    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

private:
    mpfr_t x_;
};

} // namespace sumcert
