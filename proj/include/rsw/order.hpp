#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rsw/upset.hpp"

namespace rsw {

// One block of a block-structured linear order: either an UpSet taken in
// ascending numeric order, an UpSet taken in descending numeric order, or
// a single pinned element.
struct OrderBlock {
  enum class Kind { Asc, Desc, Single };
  Kind kind;
  UpSet set;           // Asc/Desc
  uint64_t value = 0;  // Single

  static OrderBlock asc(UpSet s) { return {Kind::Asc, std::move(s), 0}; }
  static OrderBlock desc(UpSet s) { return {Kind::Desc, std::move(s), 0}; }
  static OrderBlock single(uint64_t v) { return {Kind::Single, UpSet::empty(), v}; }
};

// A linear order on a subset of omega, presented as finitely many
// pairwise-disjoint blocks: every element of an earlier block is
// <_L-below every element of a later block.  An order of type
// omega + k + omega* is the special case [asc A, singles of the middle
// chain, desc D]; a finite order is a list of singles; images of the
// lexicographic construction on set sequences are runs of ascending
// blocks.  All chain, sequence, and stability predicates are decided in
// closed form from the block structure.
class LinearOrder {
 public:
  LinearOrder() = default;
  explicit LinearOrder(std::vector<OrderBlock> blocks);

  // A ascending, then the explicit middle chain in <_L order, then D
  // descending.
  static LinearOrder tripartite(const UpSet& asc_part, const std::vector<uint64_t>& middle,
                                const UpSet& desc_part);
  static LinearOrder finite(const std::vector<uint64_t>& elems_in_order);
  static LinearOrder omega() { return LinearOrder({OrderBlock::asc(UpSet::naturals())}); }
  static LinearOrder omega_star() { return LinearOrder({OrderBlock::desc(UpSet::naturals())}); }

  const std::vector<OrderBlock>& blocks() const { return blocks_; }
  const UpSet& domain() const { return domain_; }
  bool is_infinite() const { return domain_.is_infinite(); }

  bool domain_contains(uint64_t x) const { return domain_.contains(x); }
  // x <_L y; throws std::invalid_argument when either lies outside the
  // domain.
  bool less(uint64_t x, uint64_t y) const;
  std::optional<size_t> block_of(uint64_t x) const;

 private:
  std::vector<OrderBlock> blocks_;
  UpSet domain_;
};

enum class ChainVariant { AscSeq, DescSeq, AscChain, DescChain };

// Exact solution predicates.  S must be a subset of the domain (throws
// otherwise).  A sequence additionally requires numeric order and <_L to
// agree (AscSeq) or oppose (DescSeq); a chain only bounds the number of
// <_L-predecessors (AscChain) or <_L-successors (DescChain) inside S.
bool chain_check(ChainVariant variant, const LinearOrder& order, const UpSet& s);

// (S, <_L) is stable: every element has finitely many <_L-predecessors in
// S or finitely many <_L-successors in S.  Requires S infinite and inside
// the domain.
bool stable_suborder_check(const LinearOrder& order, const UpSet& s);

std::string to_string(ChainVariant v);

}  // namespace rsw
