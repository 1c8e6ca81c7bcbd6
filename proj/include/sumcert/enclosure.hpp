/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <string>

#include "sumcert/precision.hpp"
#include "sumcert/rational.hpp"
#include "sumcert/real.hpp"

namespace sumcert {

/// A closed interval [lo, hi] guaranteed to contain an exact real value.
/// Every operation rounds outward (lo down, hi up), so the containment
/// property is preserved through arbitrary expression trees.
class Enclosure {
public:
    /// Endpoints must satisfy lo <= hi.
    Enclosure(Real lo, Real hi);

    const Real& lo() const { return lo_; }
    const Real& hi() const { return hi_; }

    /// hi - lo, rounded up.
    Real width() const;
    double width_double() const { return width().to_double(); }

    bool contains(const BigRational& q) const;
    bool contains_zero() const;
    bool overlaps(const Enclosure& o) const;
    /// Certified strict comparison: every point of *this is below every
    /// point of o.
    bool strictly_less_than(const Enclosure& o) const { return hi_ < o.lo_; }
    bool strictly_below(const BigRational& q) const { return hi_ < q; }
    bool strictly_above(const BigRational& q) const { return lo_ > q; }

    Enclosure operator-() const;
    friend Enclosure operator+(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator-(const Enclosure& a, const Enclosure& b);
    friend Enclosure operator*(const Enclosure& a, const Enclosure& b);
    /// Throws std::domain_error if b contains zero.
    friend Enclosure operator/(const Enclosure& a, const Enclosure& b);
    Enclosure& operator+=(const Enclosure& o);

    /// Integer power with full sign-case analysis; negative exponents
    /// require an interval excluding zero.
    Enclosure pow_int(long k) const;

    /// "[lo, hi]" with outward-rounded decimal endpoints.
    std::string to_string(int digits = 20) const;

private:
    Real lo_, hi_;
};

/// Smallest interval containing both arguments.
Enclosure hull(const Enclosure& a, const Enclosure& b);

/// Monotone elementary functions; log requires a strictly positive
/// interval.
Enclosure exp(const Enclosure& a);
Enclosure log(const Enclosure& a);

/// Tight enclosure of an exact rational at the context precision
/// (exact dyadics get a degenerate interval).
Enclosure enclose_rational(const BigRational& q, const PrecisionContext& ctx);
Enclosure enclose_rational(const BigRational& q, mpfr_prec_t prec);

Enclosure enclose_long(long v, const PrecisionContext& ctx);

/// Enclosure of pi at the context precision.
Enclosure pi_enclosure(const PrecisionContext& ctx);

} // namespace sumcert
