#pragma once

#include <vector>

#include "esum/euler_reduce.hpp"

namespace esum {

// The 22 linear Euler sums of the reference value table (order 1).
const std::vector<EulerSumSpec>& tablo_specs();

// The five level-4 sums zH^(p,4)(5), p = 1..5.
const std::vector<EulerSumSpec>& hyper4_specs();

// The worked examples: hyper4 plus zH^(6,5)(6).
const std::vector<EulerSumSpec>& example_specs();

}  // namespace esum
