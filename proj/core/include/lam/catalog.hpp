#pragma once

#include <vector>

#include "lam/correspondence.hpp"

namespace lam {

/// MAC leaves whose endpoints have least common period exactly n, one per
/// orbit, sorted by major.
std::vector<MacData> catalog_period(int d, int n);

/// Every MAC leaf of period at most max_period, sorted by (period, major).
std::vector<MacData> catalog(int d, int max_period);

} // namespace lam
