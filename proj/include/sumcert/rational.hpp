/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace sumcert {

using Integer = mpz_class;

/// Exact arbitrary-size rational. Always stored in lowest terms with a
/// positive denominator; every arithmetic operation is exact.
class BigRational {
public:
    BigRational() : q_(0) {}
    BigRational(long n) : q_(n) {}
    BigRational(long num, long den) : q_(num, den) { canonicalize(); }
    BigRational(Integer num, Integer den);
    explicit BigRational(const Integer& n) : q_(n) {}

    /// Parses "num/den" or a plain integer, base 10.
    explicit BigRational(const std::string& s);

    const Integer numerator() const { return q_.get_num(); }
    const Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    BigRational operator-() const;
    BigRational& operator+=(const BigRational& r) { q_ += r.q_; return *this; }
    BigRational& operator-=(const BigRational& r) { q_ -= r.q_; return *this; }
    BigRational& operator*=(const BigRational& r) { q_ *= r.q_; return *this; }
    BigRational& operator/=(const BigRational& r);

    friend BigRational operator+(BigRational a, const BigRational& b) { a += b; return a; }
    friend BigRational operator-(BigRational a, const BigRational& b) { a -= b; return a; }
    friend BigRational operator*(BigRational a, const BigRational& b) { a *= b; return a; }
    friend BigRational operator/(BigRational a, const BigRational& b) { a /= b; return a; }

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return mpq_equal(a.q_.get_mpq_t(), b.q_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        int c = mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t());
        return c <=> 0;
    }

    BigRational abs() const;
    BigRational reciprocal() const;

    /// "num/den", or just "num" when the denominator is 1.
    std::string to_string() const;

    double to_double() const { return q_.get_d(); }

    mpq_srcptr raw() const { return q_.get_mpq_t(); }

private:
    void canonicalize();

    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

/// Exact integer power. exp < 0 inverts (zero base then raises
/// std::domain_error).
BigRational rational_pow(const BigRational& base, long exp);

/// base^exp for exact integers, exp >= 0.
Integer integer_pow(const Integer& base, unsigned long exp);

/// Binomial coefficient C(n, k) as an exact integer.
Integer binomial(unsigned long n, unsigned long k);

/// k! as an exact integer.
Integer factorial(unsigned long k);

} // namespace sumcert
