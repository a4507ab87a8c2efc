#include "rsw/coloring.hpp"

namespace rsw {

Coloring Coloring::eventually_constant(const std::vector<uint64_t>& values, uint64_t tail_color,
                                       uint64_t k) {
  if (tail_color >= k) throw std::invalid_argument("tail color out of range");
  for (uint64_t v : values)
    if (v >= k) throw std::invalid_argument("color value out of range");
  uint64_t pre = values.size();
  std::vector<UpSet> classes;
  classes.reserve(k);
  for (uint64_t i = 0; i < k; ++i) {
    classes.push_back(UpSet::build(
        [&](uint64_t n) { return n < pre ? values[n] == i : tail_color == i; }, pre, 1));
  }
  return Coloring(std::move(classes));
}

}  // namespace rsw
