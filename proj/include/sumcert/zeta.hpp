/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <utility>
#include <vector>

#include "sumcert/enclosure.hpp"
#include "sumcert/precision.hpp"
#include "sumcert/rational.hpp"

namespace sumcert {

/// One Hurwitz-zeta summand coeff * zeta(s, q).
struct ZetaTerm {
    BigRational coeff;
    int s;         // >= 2
    BigRational q; // > 0
};

/// One coeff * pi^power summand (power even, >= 2).
struct PiTerm {
    BigRational coeff;
    int power;
};

/// Finite linear form  constant + sum coeff*zeta(s,q) + sum coeff*pi^power
/// with exact rational coefficients. Normal form for tail majorants and
/// closed-form bounds.
class ZetaCombination {
public:
    ZetaCombination() = default;

    void add_zeta(BigRational coeff, int s, BigRational q);
    void add_pi_power(BigRational coeff, int power);
    void add_constant(const BigRational& c) { constant_ += c; }

    const std::vector<ZetaTerm>& zeta_terms() const { return terms_; }
    const std::vector<PiTerm>& pi_terms() const { return pi_terms_; }
    const BigRational& constant() const { return constant_; }

private:
    std::vector<ZetaTerm> terms_;
    std::vector<PiTerm> pi_terms_;
    BigRational constant_;
};

/// Certified enclosure of zeta(s, q) = sum_{j>=0} (j+q)^-s for integer
/// s >= 2 and rational q > 0. Direct summation of the leading terms plus
/// an Euler-Maclaurin tail whose remainder is enclosed, not estimated;
/// resulting width <= 10^(8 - decimal_digits).
Enclosure hurwitz_zeta(int s, const BigRational& q, const PrecisionContext& ctx);

/// zeta(s) = zeta(s, 1).
Enclosure riemann_zeta(int s, const PrecisionContext& ctx);

/// Exact rational c with zeta(k) = c * pi^k for even k >= 2, via
/// zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!).
std::pair<BigRational, int> even_zeta_pi_form(int k);

Enclosure eval_zeta_combination(const ZetaCombination& zc, const PrecisionContext& ctx);

} // namespace sumcert
