/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <vector>

#include "sumcert/rational.hpp"

namespace sumcert {

/// Polynomial with exact rational coefficients, ascending degree.
/// The zero polynomial has degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigRational> coeffs);

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^k (zero beyond the degree).
    const BigRational& coeff(size_t k) const;

    BigRational eval(const BigRational& x) const;

    /// p(x + offset), expanded exactly via the binomial theorem.
    Polynomial shifted_arg(const BigRational& offset) const;

private:
    std::vector<BigRational> coeffs_;
};

} // namespace sumcert
