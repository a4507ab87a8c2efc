#include "rsw/sequence.hpp"

#include <stdexcept>

namespace rsw {

UpSet a_sigma(const SetSequence& seq, std::string_view sigma) {
  UpSet acc = UpSet::naturals();
  for (uint64_t i = 0; i < sigma.size(); ++i) {
    UpSet ai = seq.nth(i);
    acc = acc.intersect(sigma[i] == '1' ? ai : ai.complement());
    if (acc.is_empty()) break;  // further conjuncts cannot revive it
  }
  return acc;
}

const UpSet& Delta02::limit_upset() const {
  if (rule_) throw std::logic_error("rule-backed Delta02 has no UpSet limit");
  return limit_;
}

uint64_t Delta02::settle_stage() const {
  uint64_t s = 0;
  for (const auto& [key, _] : overrides_) s = std::max(s, key.second + 1);
  return s;
}

uint64_t Delta02::settle_index() const {
  uint64_t n = 0;
  for (const auto& [key, _] : overrides_) n = std::max(n, key.first + 1);
  return n;
}

}  // namespace rsw
