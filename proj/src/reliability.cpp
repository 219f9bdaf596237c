#include "rsmm/reliability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rsmm {

ReliabilityMatrix ReliabilityMatrix::from_hard_word(int q,
                                                    const std::vector<Fe>& word) {
  ReliabilityMatrix pi(q, static_cast<int>(word.size()));
  for (int j = 0; j < pi.n(); ++j)
    pi.at(word[static_cast<std::size_t>(j)], j) = 1.0;
  return pi;
}

std::vector<double> ReliabilityMatrix::log_floored(double floor_value) const {
  std::vector<double> out(p_.size());
  for (std::size_t i = 0; i < p_.size(); ++i)
    out[i] = std::log(std::max(p_[i], floor_value));
  return out;
}

}  // namespace rsmm
