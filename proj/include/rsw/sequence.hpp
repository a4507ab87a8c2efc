#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rsw/upset.hpp"

namespace rsw {

enum class Tail { Empty, Full };

// A rule computing one of the registered intensional set-sequence
// families.  Only families constructed by this repository's reduction
// catalog exist; arbitrary user rules are not accepted, which keeps every
// infinitude question about a sequence decidable.
class SequenceRule {
 public:
  virtual ~SequenceRule() = default;
  virtual UpSet nth(uint64_t i) const = 0;
  virtual std::string family() const = 0;
  // Exact cohesiveness decision for C against the whole family, when the
  // family supports one.  nullopt means "fall back to a horizon check".
  virtual std::optional<bool> cohesive_exact(const UpSet& c) const { return std::nullopt; }
};

// A sequence (A_i : i in omega) of UpSets: either extensional (a finite
// head followed by a constant tail of empty or full sets) or backed by a
// registered rule.
class SetSequence {
 public:
  SetSequence() : tail_(Tail::Empty) {}
  static SetSequence extensional(std::vector<UpSet> head, Tail tail) {
    SetSequence s;
    s.head_ = std::move(head);
    s.tail_ = tail;
    return s;
  }
  static SetSequence from_rule(std::shared_ptr<const SequenceRule> rule) {
    SetSequence s;
    s.rule_ = std::move(rule);
    return s;
  }

  bool is_extensional() const { return rule_ == nullptr; }
  const std::vector<UpSet>& head() const { return head_; }
  Tail tail() const { return tail_; }
  const SequenceRule* rule() const { return rule_.get(); }
  std::shared_ptr<const SequenceRule> rule_ptr() const { return rule_; }

  UpSet nth(uint64_t i) const {
    if (rule_) return rule_->nth(i);
    if (i < head_.size()) return head_[i];
    return tail_ == Tail::Empty ? UpSet::empty() : UpSet::naturals();
  }

 private:
  std::vector<UpSet> head_;
  Tail tail_;
  std::shared_ptr<const SequenceRule> rule_;
};

// A^sigma: the sigma-signed finite intersection over the sequence, with
// A^"" = omega.  sigma(i)=='1' picks A_i, '0' picks its complement.
UpSet a_sigma(const SetSequence& seq, std::string_view sigma);

// A rule computing a Delta02 approximation whose limit set is not itself
// ultimately periodic (used by the catalog for approximations over string
// codes).  The rule must answer exact finiteness questions about its
// limit.
class Delta02Rule {
 public:
  virtual ~Delta02Rule() = default;
  virtual uint64_t value(uint64_t n, uint64_t s) const = 0;
  virtual bool limit_contains(uint64_t n) const = 0;
  virtual bool limit_intersection_finite(const UpSet& u) const = 0;
  virtual std::string family() const = 0;
};

// An eventually-settled two-argument 0/1 approximation f with
// lim_s f(n, s) = Z(n).  The explicit form stores Z as an UpSet plus a
// finite override table; the catalog may also supply a registered rule.
class Delta02 {
 public:
  Delta02() : limit_(UpSet::naturals()) {}
  static Delta02 explicit_form(UpSet limit, std::map<std::pair<uint64_t, uint64_t>, bool> overrides) {
    Delta02 d;
    d.limit_ = std::move(limit);
    d.overrides_ = std::move(overrides);
    return d;
  }
  static Delta02 from_rule(std::shared_ptr<const Delta02Rule> rule) {
    Delta02 d;
    d.rule_ = std::move(rule);
    return d;
  }

  bool is_explicit() const { return rule_ == nullptr; }
  const UpSet& limit_upset() const;  // throws on rule-backed values
  const std::map<std::pair<uint64_t, uint64_t>, bool>& overrides() const { return overrides_; }
  const Delta02Rule* rule() const { return rule_.get(); }

  bool value(uint64_t n, uint64_t s) const {
    if (rule_) return rule_->value(n, s) != 0;
    auto it = overrides_.find({n, s});
    if (it != overrides_.end()) return it->second;
    return limit_.contains(n);
  }
  bool limit_contains(uint64_t n) const {
    return rule_ ? rule_->limit_contains(n) : limit_.contains(n);
  }
  bool limit_intersection_finite(const UpSet& u) const {
    return rule_ ? rule_->limit_intersection_finite(u) : limit_.intersect(u).is_finite();
  }
  bool limit_infinite() const {
    return rule_ ? !rule_->limit_intersection_finite(UpSet::naturals())
                 : limit_.is_infinite();
  }
  // Stage past every override's s coordinate (0 when none).
  uint64_t settle_stage() const;
  // Index past every override's n coordinate (0 when none).
  uint64_t settle_index() const;

 private:
  UpSet limit_;
  std::map<std::pair<uint64_t, uint64_t>, bool> overrides_;
  std::shared_ptr<const Delta02Rule> rule_;
};

}  // namespace rsw
