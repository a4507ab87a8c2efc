#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rsw/bitstream.hpp"
#include "rsw/coloring.hpp"
#include "rsw/order.hpp"
#include "rsw/sequence.hpp"
#include "rsw/upset.hpp"

namespace rsw {

// Parametric neighbor description for every vertex v of a class:
//
//   N(v) = fixed
//        | union of  below_i intersect [0, v + shift_i)
//        | union of  above_i intersect (v + shift_i, inf)
//   minus {v}.
//
// Per-vertex slices of `below` terms are always finite, so within one
// class |N(v)| is infinite either for every member or for none, and the
// dichotomy checks below decide "for all v in the class" questions
// exactly.
struct ShiftedTerm {
  UpSet set;
  int64_t shift = 0;
};

struct NeighborShape {
  UpSet fixed = UpSet::empty();
  std::vector<ShiftedTerm> below;
  std::vector<ShiftedTerm> above;
};

struct VertexClass {
  UpSet members;
  NeighborShape shape;
};

struct CheckOutcome {
  bool ok = true;
  std::optional<uint64_t> witness;  // a vertex violating the condition
  std::string reason;
  static CheckOutcome pass() { return {}; }
  static CheckOutcome fail(uint64_t v, std::string why) { return {false, v, std::move(why)}; }
};

// An infinite graph with decidable structure.  Three families:
//
//   Classes  — vertex set an UpSet; finitely many explicitly-described
//              exceptional vertices plus finitely many vertex classes with
//              parametric neighbor shapes (the exactness certificate).
//   Modular  — locally finite shift-structured graphs: neighbors of v are
//              v + d for finitely many offsets d depending on v mod m
//              (paths, grids).
//   Cylinder — vertices are the codes of the initial segments of a bit
//              stream p; edges transport a base graph on omega through
//              n -> code(p restricted to n).
//
// All solution predicates are exact for every family.
class Graph {
 public:
  enum class Family { Classes, Modular, Cylinder };

  static Graph finite_support(UpSet vertices,
                              std::vector<std::pair<uint64_t, uint64_t>> edges);
  static Graph from_classes(UpSet vertices,
                            std::vector<std::pair<uint64_t, UpSet>> exceptional,
                            std::vector<VertexClass> classes);
  // Modular-local graph on `vertices`: for v with v mod m == r, the
  // neighbor candidates are v + d for d in offsets[r] (clipped to the
  // vertex set and to nonnegative values).  The offset table must already
  // be symmetric.
  static Graph modular(UpSet vertices, uint64_t modulus,
                       std::vector<std::vector<int64_t>> offsets);
  static Graph path();
  static Graph grid(uint64_t width);
  static Graph cylinder(BitStream p, std::shared_ptr<const Graph> base);

  // Constructors for the catalog's gadget families.
  static Graph order_comparability(const LinearOrder& order);
  static Graph stable_pairs(const StableColoring& coloring);
  static Graph color_components(const Coloring& coloring);

  Family family() const { return family_; }

  bool is_vertex(uint64_t v) const;
  bool edge(uint64_t u, uint64_t v) const;
  // The vertex set as an UpSet (throws for cylinders, whose vertex chain
  // is not ultimately periodic).
  const UpSet& vertices_upset() const;
  bool has_vertices_upset() const { return family_ != Family::Cylinder; }
  std::vector<uint64_t> vertices_below(uint64_t bound) const;

  // Exact neighbor set (throws for cylinders).
  UpSet neighbors(uint64_t v) const;
  bool locally_finite() const;
  // F = {x in V : N(x) finite}.
  UpSet finite_neighbor_vertices() const;
  // {v in V : |H cap N(v)| = infinity} for a direct UpSet H.
  UpSet infinite_neighbor_part(const UpSet& h) const;

  // Decides: for every v in scope, |H cap N(v)| <= threshold or infinite.
  // Scope is the whole vertex set or H itself.
  enum class Scope { AllVertices, SolutionOnly };
  CheckOutcome dichotomy(const SetValue& h, Scope scope, uint64_t threshold) const;

  // H subset of V, exactly.
  CheckOutcome contained_in_vertices(const SetValue& h) const;

  // True when some edge (or triangle) lies inside the direct set H.
  bool exists_edge_within(const UpSet& h) const;
  bool exists_triangle_within(const UpSet& h) const;

  // Cylinder accessors.
  const BitStream& cylinder_stream() const;
  const Graph& cylinder_base() const;
  uint64_t chain_code(uint64_t n) const;  // code of p restricted to n
  std::shared_ptr<const IndexMap> chain_map() const;
  // Converts a solution for the cylinder into base-graph indices; reports
  // failure when the set is not contained in the vertex chain.
  struct Transport {
    bool ok;
    UpSet base_set;
    std::string reason;
  };
  Transport transport_to_base(const SetValue& h) const;

  const std::vector<VertexClass>& classes() const { return classes_; }
  const std::vector<std::pair<uint64_t, UpSet>>& exceptional() const { return exceptional_; }
  uint64_t modulus() const { return modulus_; }
  const std::vector<std::vector<int64_t>>& offsets() const { return offsets_; }

 private:
  Graph() = default;
  const VertexClass* class_of(uint64_t v) const;
  const UpSet* exceptional_neighbors(uint64_t v) const;
  UpSet shape_neighbors(const NeighborShape& shape, uint64_t v) const;
  CheckOutcome dichotomy_classes(const SetValue& h, Scope scope, uint64_t threshold) const;
  CheckOutcome dichotomy_modular(const SetValue& h, Scope scope, uint64_t threshold) const;

  Family family_ = Family::Classes;
  UpSet vertices_ = UpSet::empty();

  // Classes family
  std::vector<std::pair<uint64_t, UpSet>> exceptional_;
  std::vector<VertexClass> classes_;

  // Modular family
  uint64_t modulus_ = 1;
  std::vector<std::vector<int64_t>> offsets_;

  // Cylinder family
  BitStream stream_;
  std::shared_ptr<const Graph> base_;
  std::shared_ptr<const IndexMap> chain_map_;
};

}  // namespace rsw
