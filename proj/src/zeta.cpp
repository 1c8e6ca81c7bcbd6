/* SPDX-License-Identifier: Apache-2.0 */

#include "sumcert/zeta.hpp"

#include <algorithm>
#include <stdexcept>

#include "sumcert/bernoulli.hpp"
#include "sumcert/errors.hpp"

namespace sumcert {

void ZetaCombination::add_zeta(BigRational coeff, int s, BigRational q) {
    if (s < 2)
        throw std::domain_error("ZetaCombination: zeta argument s must be >= 2");
    if (q.sign() <= 0)
        throw std::domain_error("ZetaCombination: zeta shift q must be > 0");
    if (!coeff.is_zero())
        terms_.push_back({std::move(coeff), s, std::move(q)});
}

void ZetaCombination::add_pi_power(BigRational coeff, int power) {
    if (power < 2 || power % 2 != 0)
        throw std::domain_error("ZetaCombination: pi power must be even and >= 2");
    if (!coeff.is_zero())
        pi_terms_.push_back({std::move(coeff), power});
}

namespace {

// Euler-Maclaurin for f(x) = (x+q)^-s with a = N+q:
//
//   zeta(s,q) = sum_{j<N} (j+q)^-s + a^{1-s}/(s-1) + a^-s/2
//             + sum_{i=1}^{m} B_{2i}/(2i)! (s)_{2i-1} a^{-s-2i+1} + R_m
//
// Every even derivative of f is positive, so R_m has the sign of the
// first omitted correction term and smaller magnitude. For integer s and
// rational q the whole core is an exact rational; the remainder bracket
// is the only width the result carries before outward conversion.
struct EmResult {
    BigRational core;
    BigRational omitted; // first omitted correction term T_{m+1}
};

BigRational em_correction(int s, const BigRational& a, unsigned i) {
    // T_i = B_{2i}/(2i)! * s(s+1)...(s+2i-2) * a^{-(s+2i-1)}
    Integer rising(1);
    for (unsigned k = 0; k + 2 <= 2 * i; ++k)
        rising *= Integer(s) + Integer(k);
    BigRational factor = bernoulli(2 * i) * BigRational(rising, factorial(2 * i));
    return factor * rational_pow(a, -(s + static_cast<long>(2 * i) - 1));
}

EmResult em_core(int s, const BigRational& q, unsigned long N, unsigned m) {
    const Integer& num = q.numerator();
    const Integer& den = q.denominator();
    Integer den_pow = integer_pow(den, static_cast<unsigned long>(s));

    BigRational partial;
    for (unsigned long j = 0; j < N; ++j) {
        Integer base = num + Integer(static_cast<unsigned long>(j)) * den;
        partial += BigRational(den_pow, integer_pow(base, static_cast<unsigned long>(s)));
    }

    BigRational a = q + BigRational(Integer(N));
    BigRational integral = rational_pow(a, 1 - s) / BigRational(s - 1);
    BigRational half = rational_pow(a, -s) / BigRational(2);

    BigRational core = partial + integral + half;
    for (unsigned i = 1; i <= m; ++i)
        core += em_correction(s, a, i);

    return {std::move(core), em_correction(s, a, m + 1)};
}

// Outward conversion of exact rational endpoints, with enough bits that
// the conversion itself stays far below the width target even when the
// value is large (tiny q).
Enclosure convert_outward(const BigRational& lo, const BigRational& hi,
                          const PrecisionContext& ctx) {
    long mag = static_cast<long>(mpz_sizeinbase(hi.numerator().get_mpz_t(), 2)) -
               static_cast<long>(mpz_sizeinbase(hi.denominator().get_mpz_t(), 2));
    mpfr_prec_t prec = ctx.bit_precision() + static_cast<mpfr_prec_t>(std::max(0L, mag + 8));
    return Enclosure(Real::of_rational(lo, prec, MPFR_RNDD),
                     Real::of_rational(hi, prec, MPFR_RNDU));
}

} // namespace

Enclosure hurwitz_zeta(int s, const BigRational& q, const PrecisionContext& ctx) {
    if (s < 2)
        throw std::domain_error("hurwitz_zeta: s must be >= 2 (series diverges)");
    if (q.sign() <= 0)
        throw std::domain_error("hurwitz_zeta: q must be > 0");

    // width target 10^(8 - digits); remainder budget is half of it
    BigRational target = rational_pow(BigRational(10), 8 - ctx.decimal_digits);
    BigRational budget = target / BigRational(2);

    unsigned long N = static_cast<unsigned long>(std::max(10, ctx.decimal_digits));
    unsigned order = static_cast<unsigned>(ctx.decimal_digits) / 2;
    if (order % 2 != 0)
        ++order; // correction terms through B_{2m} with 2m = order
    unsigned m = order / 2;

    for (int attempt = 0; attempt < 24; ++attempt) {
        EmResult r = em_core(s, q, N, m);
        if (r.omitted.abs() <= budget) {
            BigRational lo = r.core + std::min(r.omitted, BigRational(0));
            BigRational hi = r.core + std::max(r.omitted, BigRational(0));
            return convert_outward(lo, hi, ctx);
        }
        N *= 2;
    }
    throw precision_error("hurwitz_zeta: width target unreachable", 0.0);
}

Enclosure riemann_zeta(int s, const PrecisionContext& ctx) {
    return hurwitz_zeta(s, BigRational(1), ctx);
}

std::pair<BigRational, int> even_zeta_pi_form(int k) {
    if (k < 2 || k % 2 != 0)
        throw std::domain_error("even_zeta_pi_form: no closed form for odd arguments");
    unsigned m = static_cast<unsigned>(k) / 2;
    // zeta(2m) = (-1)^{m+1} B_{2m} 2^{2m-1} pi^{2m} / (2m)!
    BigRational c = bernoulli(static_cast<unsigned>(k)) *
                    BigRational(integer_pow(Integer(2), static_cast<unsigned long>(k)),
                                2 * factorial(static_cast<unsigned long>(k)));
    if (m % 2 == 0)
        c = -c;
    return {c, k};
}

Enclosure eval_zeta_combination(const ZetaCombination& zc, const PrecisionContext& ctx) {
    Enclosure acc = enclose_rational(zc.constant(), ctx);
    for (const ZetaTerm& t : zc.zeta_terms())
        acc += enclose_rational(t.coeff, ctx) * hurwitz_zeta(t.s, t.q, ctx);
    if (!zc.pi_terms().empty()) {
        Enclosure pi = pi_enclosure(ctx);
        for (const PiTerm& t : zc.pi_terms())
            acc += enclose_rational(t.coeff, ctx) * pi.pow_int(t.power);
    }
    return acc;
}

} // namespace sumcert
