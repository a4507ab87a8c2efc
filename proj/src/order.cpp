#include "rsw/order.hpp"

#include <stdexcept>

namespace rsw {

LinearOrder::LinearOrder(std::vector<OrderBlock> blocks) : blocks_(std::move(blocks)) {
  domain_ = UpSet::empty();
  for (const auto& b : blocks_) {
    UpSet part = b.kind == OrderBlock::Kind::Single ? UpSet::singleton(b.value) : b.set;
    if (!domain_.disjoint_with(part))
      throw std::invalid_argument("order blocks must be pairwise disjoint");
    domain_ = domain_.unite(part);
  }
}

LinearOrder LinearOrder::tripartite(const UpSet& asc_part, const std::vector<uint64_t>& middle,
                                    const UpSet& desc_part) {
  std::vector<OrderBlock> blocks;
  if (!asc_part.is_empty()) blocks.push_back(OrderBlock::asc(asc_part));
  for (uint64_t v : middle) blocks.push_back(OrderBlock::single(v));
  if (!desc_part.is_empty()) blocks.push_back(OrderBlock::desc(desc_part));
  return LinearOrder(std::move(blocks));
}

LinearOrder LinearOrder::finite(const std::vector<uint64_t>& elems_in_order) {
  std::vector<OrderBlock> blocks;
  blocks.reserve(elems_in_order.size());
  for (uint64_t v : elems_in_order) blocks.push_back(OrderBlock::single(v));
  return LinearOrder(std::move(blocks));
}

std::optional<size_t> LinearOrder::block_of(uint64_t x) const {
  for (size_t i = 0; i < blocks_.size(); ++i) {
    const auto& b = blocks_[i];
    if (b.kind == OrderBlock::Kind::Single ? b.value == x : b.set.contains(x)) return i;
  }
  return std::nullopt;
}

bool LinearOrder::less(uint64_t x, uint64_t y) const {
  auto bx = block_of(x), by = block_of(y);
  if (!bx || !by) throw std::invalid_argument("less: element outside the domain");
  if (*bx != *by) return *bx < *by;
  const auto& b = blocks_[*bx];
  switch (b.kind) {
    case OrderBlock::Kind::Asc: return x < y;
    case OrderBlock::Kind::Desc: return x > y;
    case OrderBlock::Kind::Single: return false;
  }
  return false;
}

namespace {

struct Parts {
  std::vector<UpSet> per_block;
  std::optional<size_t> unique_infinite;  // set when exactly one part is infinite
  size_t infinite_count = 0;
};

Parts split(const LinearOrder& order, const UpSet& s) {
  Parts p;
  for (const auto& b : order.blocks()) {
    UpSet part = b.kind == OrderBlock::Kind::Single
                     ? (s.contains(b.value) ? UpSet::singleton(b.value) : UpSet::empty())
                     : s.intersect(b.set);
    if (part.is_infinite()) {
      ++p.infinite_count;
      p.unique_infinite = p.per_block.size();
    }
    p.per_block.push_back(std::move(part));
  }
  if (p.infinite_count != 1) p.unique_infinite.reset();
  return p;
}

void require_in_domain(const LinearOrder& order, const UpSet& s) {
  if (!s.subset_of(order.domain()))
    throw std::invalid_argument("set is not a subset of the order's domain");
}

std::vector<uint64_t> all_elements(const UpSet& s) {
  return s.first_elements(*s.cardinality());
}

// Sequence predicate on the finite remainder: every numerically increasing
// pair must relate the required way under <_L.
bool finite_pairs_ok(const LinearOrder& order, const std::vector<uint64_t>& elems, bool ascending) {
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = i + 1; j < elems.size(); ++j) {
      bool ok = ascending ? order.less(elems[i], elems[j]) : order.less(elems[j], elems[i]);
      if (!ok) return false;
    }
  return true;
}

}  // namespace

bool chain_check(ChainVariant variant, const LinearOrder& order, const UpSet& s) {
  require_in_domain(order, s);
  if (s.is_finite()) return false;
  Parts parts = split(order, s);
  // An infinite part in two blocks is fatal for every variant: elements of
  // the later block would have infinitely many <_L-predecessors in S, and
  // for sequences the unbounded earlier part produces misordered pairs.
  if (!parts.unique_infinite) return false;
  size_t star = *parts.unique_infinite;
  const auto& star_block = order.blocks()[star];
  bool ascending = (variant == ChainVariant::AscSeq || variant == ChainVariant::AscChain);
  if (ascending && star_block.kind != OrderBlock::Kind::Asc) return false;
  if (!ascending && star_block.kind != OrderBlock::Kind::Desc) return false;

  if (variant == ChainVariant::AscChain) {
    // No elements after the infinite block; earlier finite parts are fine.
    for (size_t j = star + 1; j < parts.per_block.size(); ++j)
      if (!parts.per_block[j].is_empty()) return false;
    return true;
  }
  if (variant == ChainVariant::DescChain) {
    for (size_t j = 0; j < star; ++j)
      if (!parts.per_block[j].is_empty()) return false;
    return true;
  }

  // Sequences: the finite remainder must sit on the correct side of the
  // infinite part numerically and be internally well ordered.
  uint64_t star_min = *parts.per_block[star].min_element();
  std::vector<uint64_t> rest;
  for (size_t j = 0; j < parts.per_block.size(); ++j) {
    if (j == star) continue;
    if (variant == ChainVariant::AscSeq && j > star && !parts.per_block[j].is_empty()) return false;
    if (variant == ChainVariant::DescSeq && j < star && !parts.per_block[j].is_empty()) return false;
    for (uint64_t v : all_elements(parts.per_block[j])) rest.push_back(v);
  }
  for (uint64_t v : rest)
    if (v > star_min) return false;  // some infinite-part element lies numerically below it
  return finite_pairs_ok(order, rest, variant == ChainVariant::AscSeq);
}

bool stable_suborder_check(const LinearOrder& order, const UpSet& s) {
  require_in_domain(order, s);
  if (s.is_finite()) return false;
  Parts parts = split(order, s);
  // before_j / after_j: is the union of earlier / later parts infinite?
  size_t n = parts.per_block.size();
  std::vector<bool> before_inf(n, false), after_inf(n, false);
  bool acc = false;
  for (size_t j = 0; j < n; ++j) {
    before_inf[j] = acc;
    acc = acc || parts.per_block[j].is_infinite();
  }
  acc = false;
  for (size_t j = n; j-- > 0;) {
    after_inf[j] = acc;
    acc = acc || parts.per_block[j].is_infinite();
  }
  for (size_t j = 0; j < n; ++j) {
    const UpSet& part = parts.per_block[j];
    if (part.is_empty()) continue;
    switch (order.blocks()[j].kind) {
      case OrderBlock::Kind::Asc:
        // Predecessors inside the block are always finite, so elements are
        // fine when everything before is finite; otherwise every element
        // needs finitely many successors.
        if (before_inf[j] && (after_inf[j] || part.is_infinite())) return false;
        break;
      case OrderBlock::Kind::Desc:
        if (after_inf[j] && (before_inf[j] || part.is_infinite())) return false;
        break;
      case OrderBlock::Kind::Single:
        if (before_inf[j] && after_inf[j]) return false;
        break;
    }
  }
  return true;
}

std::string to_string(ChainVariant v) {
  switch (v) {
    case ChainVariant::AscSeq: return "asc_seq";
    case ChainVariant::DescSeq: return "desc_seq";
    case ChainVariant::AscChain: return "asc_chain";
    case ChainVariant::DescChain: return "desc_chain";
  }
  return "?";
}

}  // namespace rsw
