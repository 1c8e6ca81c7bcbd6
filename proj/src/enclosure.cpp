/* SPDX-License-Identifier: Apache-2.0 */

#include "sumcert/enclosure.hpp"

#include <algorithm>
#include <stdexcept>

namespace sumcert {

namespace {

mpfr_prec_t joint_prec(const Enclosure& a, const Enclosure& b) {
    return std::max(std::max(a.lo().precision(), a.hi().precision()),
                    std::max(b.lo().precision(), b.hi().precision()));
}

using binop_t = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// min over the four endpoint products rounded down / max rounded up
Enclosure endpoint_extrema(const Enclosure& a, const Enclosure& b, binop_t op) {
    mpfr_prec_t prec = joint_prec(a, b);
    Real lo(prec), hi(prec);
    mpfr_t t;
    mpfr_init2(t, prec);

    const Real* as[2] = {&a.lo(), &a.hi()};
    const Real* bs[2] = {&b.lo(), &b.hi()};
    bool first = true;
    for (const Real* x : as) {
        for (const Real* y : bs) {
            op(t, x->raw(), y->raw(), MPFR_RNDD);
            if (first || mpfr_cmp(t, lo.raw()) < 0)
                mpfr_set(lo.raw(), t, MPFR_RNDD);
            op(t, x->raw(), y->raw(), MPFR_RNDU);
            if (first || mpfr_cmp(t, hi.raw()) > 0)
                mpfr_set(hi.raw(), t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    return Enclosure(std::move(lo), std::move(hi));
}

} // namespace

Enclosure::Enclosure(Real lo, Real hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_.is_nan() || hi_.is_nan() || hi_ < lo_)
        throw std::invalid_argument("Enclosure: endpoints must satisfy lo <= hi");
}

Real Enclosure::width() const {
    Real w(std::max(lo_.precision(), hi_.precision()));
    mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
    return w;
}

bool Enclosure::contains(const BigRational& q) const {
    return lo_ <= q && hi_ >= q;
}

bool Enclosure::contains_zero() const {
    return lo_.sign() <= 0 && hi_.sign() >= 0;
}

bool Enclosure::overlaps(const Enclosure& o) const {
    return !(hi_ < o.lo_ || o.hi_ < lo_);
}

Enclosure Enclosure::operator-() const {
    Real lo(hi_.precision()), hi(lo_.precision());
    mpfr_neg(lo.raw(), hi_.raw(), MPFR_RNDD);
    mpfr_neg(hi.raw(), lo_.raw(), MPFR_RNDU);
    return Enclosure(std::move(lo), std::move(hi));
}

Enclosure operator+(const Enclosure& a, const Enclosure& b) {
    mpfr_prec_t prec = joint_prec(a, b);
    Real lo(prec), hi(prec);
    mpfr_add(lo.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
    mpfr_add(hi.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
    return Enclosure(std::move(lo), std::move(hi));
}

Enclosure operator-(const Enclosure& a, const Enclosure& b) {
    mpfr_prec_t prec = joint_prec(a, b);
    Real lo(prec), hi(prec);
    mpfr_sub(lo.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
    mpfr_sub(hi.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
    return Enclosure(std::move(lo), std::move(hi));
}

Enclosure operator*(const Enclosure& a, const Enclosure& b) {
    return endpoint_extrema(a, b, mpfr_mul);
}

Enclosure operator/(const Enclosure& a, const Enclosure& b) {
    if (b.contains_zero())
        throw std::domain_error("Enclosure: division by interval containing zero");
    return endpoint_extrema(a, b, mpfr_div);
}

Enclosure& Enclosure::operator+=(const Enclosure& o) {
    *this = *this + o;
    return *this;
}

Enclosure Enclosure::pow_int(long k) const {
    mpfr_prec_t prec = std::max(lo_.precision(), hi_.precision());
    if (k == 0)
        return Enclosure(Real::of_long(1, prec), Real::of_long(1, prec));
    if (k < 0) {
        if (contains_zero())
            throw std::domain_error("Enclosure: negative power of interval containing zero");
        Enclosure one(Real::of_long(1, prec), Real::of_long(1, prec));
        return one / pow_int(-k);
    }

    Real lo(prec), hi(prec);
    const bool even = k % 2 == 0;
    if (lo_.sign() >= 0) {
        mpfr_pow_si(lo.raw(), lo_.raw(), k, MPFR_RNDD);
        mpfr_pow_si(hi.raw(), hi_.raw(), k, MPFR_RNDU);
    } else if (hi_.sign() <= 0) {
        if (even) {
            mpfr_pow_si(lo.raw(), hi_.raw(), k, MPFR_RNDD);
            mpfr_pow_si(hi.raw(), lo_.raw(), k, MPFR_RNDU);
        } else {
            mpfr_pow_si(lo.raw(), lo_.raw(), k, MPFR_RNDD);
            mpfr_pow_si(hi.raw(), hi_.raw(), k, MPFR_RNDU);
        }
    } else { // straddles zero
        if (even) {
            mpfr_set_zero(lo.raw(), 1);
            Real t(prec);
            mpfr_pow_si(hi.raw(), hi_.raw(), k, MPFR_RNDU);
            mpfr_pow_si(t.raw(), lo_.raw(), k, MPFR_RNDU);
            if (t > hi)
                hi = t;
        } else {
            mpfr_pow_si(lo.raw(), lo_.raw(), k, MPFR_RNDD);
            mpfr_pow_si(hi.raw(), hi_.raw(), k, MPFR_RNDU);
        }
    }
    return Enclosure(std::move(lo), std::move(hi));
}

std::string Enclosure::to_string(int digits) const {
    return "[" + lo_.decimal(digits, MPFR_RNDD) + ", " + hi_.decimal(digits, MPFR_RNDU) + "]";
}

Enclosure hull(const Enclosure& a, const Enclosure& b) {
    Real lo = a.lo() < b.lo() || a.lo() == b.lo() ? a.lo() : b.lo();
    Real hi = a.hi() > b.hi() || a.hi() == b.hi() ? a.hi() : b.hi();
    return Enclosure(std::move(lo), std::move(hi));
}

Enclosure exp(const Enclosure& a) {
    Real lo(a.lo().precision()), hi(a.hi().precision());
    mpfr_exp(lo.raw(), a.lo().raw(), MPFR_RNDD);
    mpfr_exp(hi.raw(), a.hi().raw(), MPFR_RNDU);
    return Enclosure(std::move(lo), std::move(hi));
}

Enclosure log(const Enclosure& a) {
    if (a.lo().sign() <= 0)
        throw std::domain_error("Enclosure: log of interval not strictly positive");
    Real lo(a.lo().precision()), hi(a.hi().precision());
    mpfr_log(lo.raw(), a.lo().raw(), MPFR_RNDD);
    mpfr_log(hi.raw(), a.hi().raw(), MPFR_RNDU);
    return Enclosure(std::move(lo), std::move(hi));
}

Enclosure enclose_rational(const BigRational& q, mpfr_prec_t prec) {
    return Enclosure(Real::of_rational(q, prec, MPFR_RNDD),
                     Real::of_rational(q, prec, MPFR_RNDU));
}

Enclosure enclose_rational(const BigRational& q, const PrecisionContext& ctx) {
    return enclose_rational(q, ctx.bit_precision());
}

Enclosure enclose_long(long v, const PrecisionContext& ctx) {
    mpfr_prec_t prec = ctx.bit_precision();
    return Enclosure(Real::of_long(v, prec), Real::of_long(v, prec));
}

Enclosure pi_enclosure(const PrecisionContext& ctx) {
    mpfr_prec_t prec = ctx.bit_precision();
    Real lo(prec), hi(prec);
    mpfr_const_pi(lo.raw(), MPFR_RNDD);
    mpfr_const_pi(hi.raw(), MPFR_RNDU);
    return Enclosure(std::move(lo), std::move(hi));
}

} // namespace sumcert
