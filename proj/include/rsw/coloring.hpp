#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rsw/upset.hpp"

namespace rsw {

// A one-variable coloring c : omega -> {0..k-1} given by k UpSets that
// partition omega.
class Coloring {
 public:
  Coloring(std::vector<UpSet> classes) : classes_(std::move(classes)) {
    if (classes_.empty()) throw std::invalid_argument("coloring needs at least one class");
    UpSet seen = UpSet::empty();
    for (const auto& cls : classes_) {
      if (!seen.disjoint_with(cls)) throw std::invalid_argument("color classes must be disjoint");
      seen = seen.unite(cls);
    }
    if (!seen.is_cofinite() || !seen.complement().is_empty())
      throw std::invalid_argument("color classes must partition omega");
  }

  uint64_t k() const { return classes_.size(); }
  const std::vector<UpSet>& classes() const { return classes_; }
  const UpSet& color_class(uint64_t i) const { return classes_.at(i); }
  uint64_t at(uint64_t n) const {
    for (uint64_t i = 0; i < classes_.size(); ++i)
      if (classes_[i].contains(n)) return i;
    throw std::logic_error("coloring classes do not cover omega");
  }

  // Colorings that agree with an explicit value list below its length and
  // are constant beyond it.
  static Coloring eventually_constant(const std::vector<uint64_t>& values, uint64_t tail_color,
                                      uint64_t k);

 private:
  std::vector<UpSet> classes_;
};

// A stable two-variable coloring c : [omega]^2 -> {0,1} presented by the
// limit set (the limit color of n is limit(n)) and a finite override
// table on pairs (n, s) with n < s.
class StableColoring {
 public:
  StableColoring(UpSet limit, std::map<std::pair<uint64_t, uint64_t>, bool> overrides)
      : limit_(std::move(limit)), overrides_(std::move(overrides)) {
    for (const auto& [key, _] : overrides_)
      if (key.first >= key.second)
        throw std::invalid_argument("override pairs require n < s");
  }

  bool at(uint64_t n, uint64_t s) const {
    if (n >= s) throw std::invalid_argument("stable coloring takes pairs n < s");
    auto it = overrides_.find({n, s});
    if (it != overrides_.end()) return it->second;
    return limit_.contains(n);
  }
  const UpSet& limit() const { return limit_; }
  const std::map<std::pair<uint64_t, uint64_t>, bool>& overrides() const { return overrides_; }
  // Bound past every override coordinate.
  uint64_t settle_bound() const {
    uint64_t b = 0;
    for (const auto& [key, _] : overrides_) b = std::max(b, key.second + 1);
    return b;
  }

 private:
  UpSet limit_;
  std::map<std::pair<uint64_t, uint64_t>, bool> overrides_;
};

// An injection omega -> omega that permutes {0..m-1} and is the identity
// beyond (the only injections expressible by a finite displacement table
// over an identity tail).
class Injection {
 public:
  explicit Injection(std::vector<uint64_t> table) : table_(std::move(table)) {
    std::vector<bool> seen(table_.size(), false);
    for (uint64_t v : table_) {
      if (v >= table_.size() || seen[v])
        throw std::invalid_argument("displacement table must permute an initial segment");
      seen[v] = true;
    }
  }

  uint64_t at(uint64_t n) const { return n < table_.size() ? table_[n] : n; }
  uint64_t displacement() const { return table_.size(); }
  const std::vector<uint64_t>& table() const { return table_; }
  // Ground truth for range membership, by direct evaluation.
  bool in_range(uint64_t n) const {
    if (n >= table_.size()) return true;
    for (uint64_t v : table_)
      if (v == n) return true;
    return false;
  }

 private:
  std::vector<uint64_t> table_;
};

}  // namespace rsw
