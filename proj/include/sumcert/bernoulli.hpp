/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include "sumcert/rational.hpp"

namespace sumcert {

/// Exact Bernoulli number B_k under the convention B_1 = -1/2.
/// Values are memoized; the table is append-only and guarded by a lock,
/// so concurrent callers see the same exact rationals.
BigRational bernoulli(unsigned k);

} // namespace sumcert
