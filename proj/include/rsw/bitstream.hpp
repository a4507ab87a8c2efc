#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

#include "rsw/upset.hpp"

namespace rsw {

// A registered rule computing a total 0/1 stream that is not ultimately
// periodic (interleavings produced by the reduction catalog).
class BitRule {
 public:
  virtual ~BitRule() = default;
  virtual bool at(uint64_t n) const = 0;
  virtual std::string family() const = 0;
};

// A total 0/1 stream: either the characteristic function of an UpSet or a
// registered rule.  Membership at every position is exact.
class BitStream {
 public:
  BitStream() : set_(UpSet::empty()), is_upset_(true) {}
  static BitStream from_upset(UpSet s) {
    BitStream b;
    b.set_ = std::move(s);
    b.is_upset_ = true;
    return b;
  }
  static BitStream from_rule(std::shared_ptr<const BitRule> rule) {
    BitStream b;
    b.rule_ = std::move(rule);
    b.is_upset_ = false;
    return b;
  }

  bool at(uint64_t n) const { return is_upset_ ? set_.contains(n) : rule_->at(n); }
  bool is_upset() const { return is_upset_; }
  const UpSet& upset() const {
    if (!is_upset_) throw std::logic_error("rule-backed bit stream has no UpSet form");
    return set_;
  }
  const BitRule* rule() const { return rule_.get(); }
  std::string prefix_word(uint64_t len) const {
    std::string out(len, '0');
    for (uint64_t i = 0; i < len; ++i)
      if (at(i)) out[i] = '1';
    return out;
  }

 private:
  UpSet set_;
  bool is_upset_;
  std::shared_ptr<const BitRule> rule_;
};

// A map from indices to a sparse vertex space (such as the chain of
// initial-segment codes of a stream), with an exact inverse.
class IndexMap {
 public:
  virtual ~IndexMap() = default;
  virtual uint64_t image(uint64_t n) const = 0;
  virtual std::optional<uint64_t> preimage(uint64_t v) const = 0;
  virtual std::string family() const = 0;
};

// A set of naturals presented either directly as an UpSet or as the image
// of an UpSet of indices under an IndexMap.  Cardinality and membership
// stay exact in both forms.
class SetValue {
 public:
  SetValue() : direct_(UpSet::empty()), is_direct_(true) {}
  static SetValue direct(UpSet s) {
    SetValue v;
    v.direct_ = std::move(s);
    return v;
  }
  static SetValue mapped(UpSet indices, std::shared_ptr<const IndexMap> map) {
    SetValue v;
    v.is_direct_ = false;
    v.direct_ = std::move(indices);
    v.map_ = std::move(map);
    return v;
  }

  bool is_direct() const { return is_direct_; }
  const UpSet& upset() const {
    if (!is_direct_) throw std::logic_error("mapped set has no direct UpSet form");
    return direct_;
  }
  const UpSet& indices() const { return direct_; }
  const IndexMap* map() const { return map_.get(); }
  std::shared_ptr<const IndexMap> map_ptr() const { return map_; }

  bool is_infinite() const { return direct_.is_infinite(); }
  bool contains(uint64_t v) const {
    if (is_direct_) return direct_.contains(v);
    auto n = map_->preimage(v);
    return n && direct_.contains(*n);
  }

 private:
  UpSet direct_;  // the set itself, or the index set when mapped
  bool is_direct_ = true;
  std::shared_ptr<const IndexMap> map_;
};

}  // namespace rsw
