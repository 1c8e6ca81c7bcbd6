/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace sumcert {

/// Working precision for real arithmetic. All operations producing
/// Enclosures under a context round outward.
struct PrecisionContext {
    int decimal_digits;

    explicit PrecisionContext(int digits = 50) : decimal_digits(digits) {
        if (digits < 30)
            throw std::domain_error("PrecisionContext: decimal_digits must be >= 30");
    }

    /// Binary working precision: requested digits plus guard bits for
    /// intermediate cancellation.
    mpfr_prec_t bit_precision() const {
        return static_cast<mpfr_prec_t>(std::ceil(decimal_digits * 3.3219280948873623)) + 64;
    }
};

} // namespace sumcert
