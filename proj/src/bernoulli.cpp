/* SPDX-License-Identifier: Apache-2.0 */

#include "sumcert/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace sumcert {

namespace {
std::mutex table_mutex;
std::vector<BigRational> table; // table[k] = B_k
}

BigRational bernoulli(unsigned k) {
    std::lock_guard<std::mutex> lock(table_mutex);
    if (table.empty()) {
        table.emplace_back(1);      // B_0
        table.emplace_back(-1, 2);  // B_1
    }
    // sum_{j=0}^{k} C(k+1, j) B_j = 0  for k >= 1
    while (table.size() <= k) {
        unsigned i = static_cast<unsigned>(table.size());
        BigRational acc;
        for (unsigned j = 0; j < i; ++j)
            acc += BigRational(binomial(i + 1, j)) * table[j];
        acc /= BigRational(Integer(i + 1));
        table.push_back(-acc);
    }
    return table[k];
}

} // namespace sumcert
