#include "rsw/upset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rsw {

namespace {

constexpr uint64_t kMaxPeriod = 1u << 20;

void check_bits(std::string_view word) {
  for (char c : word)
    if (c != '0' && c != '1') throw std::invalid_argument("bit word must contain only '0'/'1'");
}

}  // namespace

UpSet::UpSet(std::string_view prefix, std::string_view period)
    : prefix_(prefix), period_(period) {
  if (period_.empty()) throw std::invalid_argument("period must be nonempty");
  check_bits(prefix_);
  check_bits(period_);
  canonicalize();
}

void UpSet::canonicalize() {
  // Reduce the period to its primitive root.  Because the period is
  // anchored at 0, a divisor d of |period| is an eventual period of the
  // set iff the word is a power of its length-d prefix, and the minimal
  // eventual period divides every other one.
  const uint64_t m = period_.size();
  for (uint64_t d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    bool is_power = true;
    for (uint64_t i = d; i < m && is_power; ++i)
      if (period_[i] != period_[i % d]) is_power = false;
    if (is_power) {
      period_.resize(d);
      break;
    }
  }
  // Drop prefix bits the period already produces.
  while (!prefix_.empty() &&
         prefix_.back() == period_[(prefix_.size() - 1) % period_.size()]) {
    prefix_.pop_back();
  }
}

UpSet UpSet::singleton(uint64_t n) {
  std::string pre(n + 1, '0');
  pre[n] = '1';
  return UpSet(pre, "0");
}

UpSet UpSet::from_elements(const std::vector<uint64_t>& elems) {
  if (elems.empty()) return empty();
  uint64_t mx = *std::max_element(elems.begin(), elems.end());
  std::string pre(mx + 1, '0');
  for (uint64_t e : elems) pre[e] = '1';
  return UpSet(pre, "0");
}

UpSet UpSet::below(uint64_t n) { return UpSet(std::string(n, '1'), "0"); }

UpSet UpSet::above(uint64_t n) { return UpSet(std::string(n + 1, '0'), "1"); }

UpSet UpSet::from(uint64_t n) { return UpSet(std::string(n, '0'), "1"); }

UpSet UpSet::residue_class(uint64_t r, uint64_t m) {
  if (m == 0 || r >= m) throw std::invalid_argument("residue_class requires r < m");
  std::string per(m, '0');
  per[r] = '1';
  return UpSet("", per);
}

std::optional<uint64_t> UpSet::cardinality() const {
  if (!is_finite()) return std::nullopt;
  return static_cast<uint64_t>(std::count(prefix_.begin(), prefix_.end(), '1'));
}

uint64_t UpSet::count_below(uint64_t n) const {
  uint64_t cnt = 0;
  uint64_t head = std::min<uint64_t>(n, prefix_.size());
  for (uint64_t i = 0; i < head; ++i)
    if (prefix_[i] == '1') ++cnt;
  if (n <= prefix_.size()) return cnt;
  uint64_t m = period_.size();
  uint64_t per_cycle = static_cast<uint64_t>(std::count(period_.begin(), period_.end(), '1'));
  // Positions prefix_.size() .. n-1, membership by absolute residue.
  uint64_t lo = prefix_.size();
  uint64_t full_from = (lo + m - 1) / m * m;  // first multiple of m >= lo
  for (uint64_t i = lo; i < std::min<uint64_t>(n, full_from); ++i)
    if (period_[i % m] == '1') ++cnt;
  if (n > full_from) {
    uint64_t span = n - full_from;
    cnt += (span / m) * per_cycle;
    for (uint64_t i = full_from + span / m * m; i < n; ++i)
      if (period_[i % m] == '1') ++cnt;
  }
  return cnt;
}

uint64_t UpSet::nth_element(uint64_t i) const {
  uint64_t seen = 0;
  for (uint64_t n = 0; n < prefix_.size(); ++n) {
    if (prefix_[n] == '1' && seen++ == i) return n;
  }
  if (is_finite()) throw std::out_of_range("nth_element: index beyond finite set");
  uint64_t m = period_.size();
  uint64_t per_cycle = static_cast<uint64_t>(std::count(period_.begin(), period_.end(), '1'));
  // Walk to the first aligned cycle boundary, then jump whole cycles.
  uint64_t n = prefix_.size();
  while (n % m != 0) {
    if (period_[n % m] == '1' && seen++ == i) return n;
    ++n;
  }
  uint64_t remaining = i - seen;
  n += (remaining / per_cycle) * m;
  remaining %= per_cycle;
  for (;; ++n) {
    if (period_[n % m] == '1') {
      if (remaining == 0) return n;
      --remaining;
    }
  }
}

std::optional<uint64_t> UpSet::min_element() const {
  if (is_empty()) return std::nullopt;
  return nth_element(0);
}

uint64_t UpSet::max_element_finite() const {
  auto card = cardinality();
  if (!card || *card == 0) throw std::out_of_range("max_element_finite: set infinite or empty");
  return nth_element(*card - 1);
}

std::optional<uint64_t> UpSet::next_at_least(uint64_t n) const {
  uint64_t skipped = count_below(n);
  if (is_finite() && skipped >= *cardinality()) return std::nullopt;
  return nth_element(skipped);
}

std::vector<uint64_t> UpSet::first_elements(uint64_t count) const {
  std::vector<uint64_t> out;
  auto card = cardinality();
  uint64_t total = card ? std::min<uint64_t>(*card, count) : count;
  out.reserve(total);
  for (uint64_t i = 0; i < total; ++i) out.push_back(nth_element(i));
  return out;
}

UpSet UpSet::complement() const {
  std::string pre = prefix_, per = period_;
  for (char& c : pre) c = (c == '1') ? '0' : '1';
  for (char& c : per) c = (c == '1') ? '0' : '1';
  return UpSet(pre, per);
}

namespace {

UpSet combine(const UpSet& a, const UpSet& b, bool(*op)(bool, bool)) {
  uint64_t off = std::max(a.prefix().size(), b.prefix().size());
  uint64_t la = a.period().size(), lb = b.period().size();
  uint64_t l = std::lcm(la, lb);
  if (l > kMaxPeriod) throw std::length_error("combined period too large");
  std::string pre(off, '0');
  for (uint64_t n = 0; n < off; ++n)
    if (op(a.contains(n), b.contains(n))) pre[n] = '1';
  std::string per(l, '0');
  // Every residue class mod l contains positions >= off, so the residue
  // table is determined by the operands' period words alone.
  for (uint64_t j = 0; j < l; ++j)
    if (op(a.period()[j % la] == '1', b.period()[j % lb] == '1')) per[j] = '1';
  return UpSet(pre, per);
}

}  // namespace

UpSet UpSet::intersect(const UpSet& other) const {
  return combine(*this, other, [](bool x, bool y) { return x && y; });
}

UpSet UpSet::unite(const UpSet& other) const {
  return combine(*this, other, [](bool x, bool y) { return x || y; });
}

UpSet UpSet::affine_image(uint64_t a, uint64_t b) const {
  if (a == 0) throw std::invalid_argument("affine_image requires a >= 1");
  uint64_t m = period_.size();
  if (a * m > kMaxPeriod) throw std::length_error("affine image period too large");
  // n = a*k + b is a member iff k is; the image is (a*|prefix| + b, a*m)-
  // periodic.
  uint64_t pre_len = a * prefix_.size() + b;
  return build(
      [&](uint64_t n) {
        if (n < b) return false;
        if ((n - b) % a != 0) return false;
        return contains((n - b) / a);
      },
      pre_len, a * m);
}

UpSet UpSet::affine_preimage(uint64_t a, uint64_t b) const {
  if (a == 0) throw std::invalid_argument("affine_preimage requires a >= 1");
  // k -> contains(a*k + b) is (|prefix|, |period|)-periodic in k because
  // a*(k + |period|) + b == a*k + b (mod |period|).
  uint64_t pre_len = prefix_.size();  // a*k + b >= prefix len once k >= it
  return build([&](uint64_t k) { return contains(a * k + b); }, pre_len,
               period_.size());
}

bool UpSet::operator<(const UpSet& other) const {
  if (period_.size() != other.period_.size()) return period_.size() < other.period_.size();
  if (period_ != other.period_) return period_ < other.period_;
  if (prefix_.size() != other.prefix_.size()) return prefix_.size() < other.prefix_.size();
  return prefix_ < other.prefix_;
}

std::string UpSet::to_string() const { return "{" + prefix_ + "|" + period_ + "}"; }

}  // namespace rsw
