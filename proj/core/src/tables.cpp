#include "esum/tables.hpp"

namespace esum {

const std::vector<EulerSumSpec>& tablo_specs() {
  static const std::vector<EulerSumSpec> specs = {
      {1, 1, 2}, {1, 1, 3}, {1, 1, 4}, {1, 1, 5},
      {2, 1, 2}, {2, 1, 3}, {2, 1, 4}, {2, 1, 5},
      {3, 1, 2}, {3, 1, 3}, {3, 1, 4}, {3, 1, 6},
      {4, 1, 2}, {4, 1, 3}, {4, 1, 4}, {4, 1, 5},
      {5, 1, 2}, {5, 1, 4}, {5, 1, 5}, {5, 1, 6},
      {6, 1, 3}, {6, 1, 5},
  };
  return specs;
}

const std::vector<EulerSumSpec>& hyper4_specs() {
  static const std::vector<EulerSumSpec> specs = {
      {1, 4, 5}, {2, 4, 5}, {3, 4, 5}, {4, 4, 5}, {5, 4, 5},
  };
  return specs;
}

const std::vector<EulerSumSpec>& example_specs() {
  static const std::vector<EulerSumSpec> specs = [] {
    std::vector<EulerSumSpec> v = hyper4_specs();
    v.push_back({6, 5, 6});
    return v;
  }();
  return specs;
}

}  // namespace esum
