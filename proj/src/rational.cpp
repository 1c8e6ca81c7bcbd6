/* SPDX-License-Identifier: Apache-2.0 */

#include "sumcert/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace sumcert {

BigRational::BigRational(Integer num, Integer den)
    : q_(std::move(num), std::move(den)) {
    canonicalize();
}

BigRational::BigRational(const std::string& s) : q_(0) {
    if (q_.set_str(s, 10) != 0)
        throw std::invalid_argument("BigRational: cannot parse '" + s + "'");
    canonicalize();
}

void BigRational::canonicalize() {
    if (sgn(q_.get_den()) == 0)
        throw std::domain_error("BigRational: zero denominator");
    q_.canonicalize();
}

BigRational BigRational::operator-() const {
    BigRational r;
    r.q_ = -q_;
    return r;
}

BigRational& BigRational::operator/=(const BigRational& r) {
    if (r.is_zero())
        throw std::domain_error("BigRational: division by zero");
    q_ /= r.q_;
    return *this;
}

BigRational BigRational::abs() const {
    BigRational r;
    r.q_ = ::abs(q_);
    return r;
}

BigRational BigRational::reciprocal() const {
    if (is_zero())
        throw std::domain_error("BigRational: reciprocal of zero");
    BigRational r;
    r.q_ = 1 / q_;
    return r;
}

std::string BigRational::to_string() const {
    if (is_integer())
        return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const BigRational& r) {
    return os << r.to_string();
}

BigRational rational_pow(const BigRational& base, long exp) {
    if (exp == 0)
        return BigRational(1);
    if (base.is_zero() && exp < 0)
        throw std::domain_error("rational_pow: zero base with negative exponent");

    unsigned long e = exp < 0 ? static_cast<unsigned long>(-(exp + 1)) + 1
                              : static_cast<unsigned long>(exp);
    Integer num = integer_pow(base.numerator(), e);
    Integer den = integer_pow(base.denominator(), e);
    // already coprime, but the ctor re-canonicalizes the sign either way
    return exp > 0 ? BigRational(std::move(num), std::move(den))
                   : BigRational(std::move(den), std::move(num));
}

Integer integer_pow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial(unsigned long k) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

} // namespace sumcert
