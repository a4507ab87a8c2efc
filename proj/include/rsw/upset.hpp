#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rsw {

// An ultimately periodic subset of the naturals, stored as two bit words.
//
//   member(n) = prefix[n]            if n < |prefix|
//   member(n) = period[n mod |period|]  otherwise
//
// The period is anchored at position 0 (absolute phase), so the word
// prefix="1", period="01" denotes {0} together with all odd numbers:
//
//   n        0 1 2 3 4 5 ...
//   bit      1 1 0 1 0 1 ...   (prefix bit, then period bits 01 01 ...)
//
// Values are kept in canonical form, which makes structural equality
// coincide with set equality:
//   - the period word is primitive (not a power of a shorter word), and
//   - the prefix is shortest possible: its last bit differs from the bit
//     the period produces at that position, or the prefix is empty.
//
// Every operation is exact.  "Infinite set" questions about these values
// (emptiness, finiteness, almost-containment) are all decidable.
class UpSet {
 public:
  // Canonicalizes; throws std::invalid_argument on an empty period or on
  // characters other than '0'/'1'.
  UpSet(std::string_view prefix, std::string_view period);
  UpSet() : UpSet("", "0") {}  // empty set

  static UpSet empty() { return UpSet("", "0"); }
  static UpSet naturals() { return UpSet("", "1"); }
  static UpSet singleton(uint64_t n);
  static UpSet from_elements(const std::vector<uint64_t>& elems);
  // [0, n)
  static UpSet below(uint64_t n);
  // (n, inf)
  static UpSet above(uint64_t n);
  // [n, inf)
  static UpSet from(uint64_t n);
  // {k : k mod m == r}
  static UpSet residue_class(uint64_t r, uint64_t m);
  // Builds the set {n : fn(n)} given that fn is (prefix_len, period_len)-
  // periodic: fn(n) == fn(n + period_len) for all n >= prefix_len.
  template <typename Fn>
  static UpSet build(Fn&& fn, uint64_t prefix_len, uint64_t period_len) {
    std::string pre(prefix_len, '0'), per(period_len, '0');
    for (uint64_t n = 0; n < prefix_len; ++n)
      if (fn(n)) pre[n] = '1';
    for (uint64_t j = 0; j < period_len; ++j) {
      uint64_t n = prefix_len + j;
      uint64_t r = n % period_len;
      if (fn(n)) per[r] = '1';
    }
    return UpSet(pre, per);
  }

  bool contains(uint64_t n) const {
    if (n < prefix_.size()) return prefix_[n] == '1';
    return period_[n % period_.size()] == '1';
  }

  const std::string& prefix() const { return prefix_; }
  const std::string& period() const { return period_; }

  bool is_empty() const { return prefix_.empty() && period_ == "0"; }
  bool is_finite() const { return period_ == "0"; }
  bool is_cofinite() const { return period_ == "1"; }
  bool is_infinite() const { return !is_finite(); }

  // Number of elements; nullopt when infinite.
  std::optional<uint64_t> cardinality() const;
  // Number of elements < n.
  uint64_t count_below(uint64_t n) const;
  // i-th smallest member (0-based); throws std::out_of_range past the
  // cardinality of a finite set.
  uint64_t nth_element(uint64_t i) const;
  std::optional<uint64_t> min_element() const;
  // Largest member of a finite set; throws on infinite or empty sets.
  uint64_t max_element_finite() const;
  // Least member that is >= n; nullopt when none exists.
  std::optional<uint64_t> next_at_least(uint64_t n) const;
  std::vector<uint64_t> first_elements(uint64_t count) const;

  UpSet complement() const;
  UpSet intersect(const UpSet& other) const;
  UpSet unite(const UpSet& other) const;
  UpSet minus(const UpSet& other) const { return intersect(other.complement()); }
  UpSet insert(uint64_t n) const { return unite(singleton(n)); }
  UpSet remove(uint64_t n) const { return minus(singleton(n)); }

  bool subset_of(const UpSet& other) const { return minus(other).is_empty(); }
  bool disjoint_with(const UpSet& other) const { return intersect(other).is_empty(); }
  // a \subseteq^* b : all but finitely many members of a lie in b.
  bool almost_subset_of(const UpSet& other) const { return minus(other).is_finite(); }

  // {a*n + b : n in this}.  Requires a >= 1.
  UpSet affine_image(uint64_t a, uint64_t b) const;
  // {n : a*n + b in this}.  Requires a >= 1.
  UpSet affine_preimage(uint64_t a, uint64_t b) const;

  bool operator==(const UpSet& other) const {
    return prefix_ == other.prefix_ && period_ == other.period_;
  }
  bool operator!=(const UpSet& other) const { return !(*this == other); }
  // Total order used for canonical enumeration: by period length, period
  // word, prefix length, prefix word.
  bool operator<(const UpSet& other) const;

  std::string to_string() const;  // "{prefix|period}"

 private:
  void canonicalize();

  std::string prefix_;
  std::string period_;  // nonempty
};

}  // namespace rsw
