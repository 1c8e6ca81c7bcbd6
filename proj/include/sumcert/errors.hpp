/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <stdexcept>
#include <string>

namespace sumcert {

/// Thrown when a requested enclosure width cannot be reached at the
/// current working precision. Carries the best width actually achieved.
class precision_error : public std::runtime_error {
public:
    precision_error(const std::string& what, double best_width)
        : std::runtime_error(what), best_width_(best_width) {}

    double best_width() const noexcept { return best_width_; }

private:
    double best_width_;
};

} // namespace sumcert
