#include "rsw/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rsw/machines.hpp"

namespace rsw {

namespace {

UpSet union_of(const std::vector<ShiftedTerm>& terms) {
  UpSet u = UpSet::empty();
  for (const auto& t : terms) u = u.unite(t.set);
  return u;
}

// {y : y < v + shift}, clamped to the naturals.
UpSet below_slice(const UpSet& s, uint64_t v, int64_t shift) {
  int64_t hi = static_cast<int64_t>(v) + shift;
  if (hi <= 0) return UpSet::empty();
  return s.intersect(UpSet::below(static_cast<uint64_t>(hi)));
}

// {y : y > v + shift}, clamped to the naturals.
UpSet above_slice(const UpSet& s, uint64_t v, int64_t shift) {
  int64_t lo = static_cast<int64_t>(v) + shift;
  if (lo < 0) return s;
  return s.intersect(UpSet::above(static_cast<uint64_t>(lo)));
}

int64_t max_shift_magnitude(const NeighborShape& shape) {
  int64_t m = 0;
  for (const auto& t : shape.below) m = std::max(m, std::abs(t.shift));
  for (const auto& t : shape.above) m = std::max(m, std::abs(t.shift));
  return m;
}

class ChainIndexMap : public IndexMap {
 public:
  explicit ChainIndexMap(BitStream p) : p_(std::move(p)) {}
  uint64_t image(uint64_t n) const override {
    uint64_t c = 0;
    for (uint64_t i = 0; i < n; ++i) {
      if (c > (uint64_t{1} << 62)) throw std::overflow_error("chain code exceeds 2^62");
      c = 2 * c + 1 + (p_.at(i) ? 1 : 0);
    }
    return c;
  }
  std::optional<uint64_t> preimage(uint64_t v) const override {
    std::string sigma = string_decode(v);
    for (uint64_t i = 0; i < sigma.size(); ++i)
      if ((sigma[i] == '1') != p_.at(i)) return std::nullopt;
    return sigma.size();
  }
  std::string family() const override { return "initial-segment-chain"; }
  const BitStream& stream() const { return p_; }

 private:
  BitStream p_;
};

}  // namespace

Graph Graph::from_classes(UpSet vertices, std::vector<std::pair<uint64_t, UpSet>> exceptional,
                          std::vector<VertexClass> classes) {
  Graph g;
  g.family_ = Family::Classes;
  g.vertices_ = std::move(vertices);
  g.exceptional_ = std::move(exceptional);
  g.classes_ = std::move(classes);
  return g;
}

Graph Graph::finite_support(UpSet vertices, std::vector<std::pair<uint64_t, uint64_t>> edges) {
  uint64_t bound = 0;
  for (auto& [u, v] : edges) {
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (!vertices.contains(u) || !vertices.contains(v))
      throw std::invalid_argument("edge endpoint outside the vertex set");
    if (u > v) std::swap(u, v);
    bound = std::max(bound, v + 1);
  }
  std::vector<std::pair<uint64_t, UpSet>> exceptional;
  for (uint64_t v = 0; v < bound; ++v) {
    if (!vertices.contains(v)) continue;
    std::vector<uint64_t> nbrs;
    for (const auto& [a, b] : edges) {
      if (a == v) nbrs.push_back(b);
      if (b == v) nbrs.push_back(a);
    }
    exceptional.emplace_back(v, UpSet::from_elements(nbrs));
  }
  std::vector<VertexClass> classes;
  UpSet rest = vertices.minus(UpSet::below(bound));
  classes.push_back({std::move(rest), NeighborShape{}});
  return from_classes(std::move(vertices), std::move(exceptional), std::move(classes));
}

Graph Graph::modular(UpSet vertices, uint64_t modulus, std::vector<std::vector<int64_t>> offsets) {
  if (modulus == 0 || offsets.size() != modulus)
    throw std::invalid_argument("modular graph needs one offset list per residue");
  for (uint64_t r = 0; r < modulus; ++r) {
    for (int64_t d : offsets[r]) {
      if (d == 0) throw std::invalid_argument("offset 0 would create a loop");
      uint64_t r2 = static_cast<uint64_t>(((static_cast<int64_t>(r) + d) % static_cast<int64_t>(modulus) +
                                           static_cast<int64_t>(modulus)) %
                                          static_cast<int64_t>(modulus));
      const auto& back = offsets[r2];
      if (std::find(back.begin(), back.end(), -d) == back.end())
        throw std::invalid_argument("modular offset table is not symmetric");
    }
  }
  Graph g;
  g.family_ = Family::Modular;
  g.vertices_ = std::move(vertices);
  g.modulus_ = modulus;
  g.offsets_ = std::move(offsets);
  return g;
}

Graph Graph::path() { return modular(UpSet::naturals(), 1, {{-1, 1}}); }

Graph Graph::grid(uint64_t width) {
  if (width < 2) throw std::invalid_argument("grid width must be at least 2");
  std::vector<std::vector<int64_t>> offsets(width);
  int64_t w = static_cast<int64_t>(width);
  for (uint64_t j = 0; j < width; ++j) {
    offsets[j] = {w, -w};
    if (j + 1 < width) offsets[j].push_back(1);
    if (j > 0) offsets[j].push_back(-1);
  }
  return modular(UpSet::naturals(), width, std::move(offsets));
}

Graph Graph::cylinder(BitStream p, std::shared_ptr<const Graph> base) {
  if (!base->has_vertices_upset() || !base->vertices_upset().is_cofinite() ||
      !base->vertices_upset().complement().is_empty())
    throw std::invalid_argument("cylinder base graph must have vertex set omega");
  Graph g;
  g.family_ = Family::Cylinder;
  g.stream_ = p;
  g.base_ = std::move(base);
  g.chain_map_ = std::make_shared<ChainIndexMap>(std::move(p));
  return g;
}

Graph Graph::order_comparability(const LinearOrder& order) {
  const auto& blocks = order.blocks();
  auto others = [&](size_t j, bool earlier) {
    UpSet u = UpSet::empty();
    for (size_t i = 0; i < blocks.size(); ++i) {
      if (earlier ? i >= j : i <= j) continue;
      u = u.unite(blocks[i].kind == OrderBlock::Kind::Single ? UpSet::singleton(blocks[i].value)
                                                             : blocks[i].set);
    }
    return u;
  };
  std::vector<std::pair<uint64_t, UpSet>> exceptional;
  std::vector<VertexClass> classes;
  for (size_t j = 0; j < blocks.size(); ++j) {
    UpSet before = others(j, true), after = others(j, false);
    switch (blocks[j].kind) {
      case OrderBlock::Kind::Asc: {
        NeighborShape shape;
        shape.fixed = blocks[j].set;
        shape.below.push_back({before, 0});
        shape.above.push_back({after, 0});
        classes.push_back({blocks[j].set, std::move(shape)});
        break;
      }
      case OrderBlock::Kind::Desc: {
        NeighborShape shape;
        shape.below.push_back({before, 0});
        shape.above.push_back({after, 0});
        classes.push_back({blocks[j].set, std::move(shape)});
        break;
      }
      case OrderBlock::Kind::Single: {
        uint64_t v = blocks[j].value;
        UpSet n = before.intersect(UpSet::below(v)).unite(after.intersect(UpSet::above(v)));
        exceptional.emplace_back(v, std::move(n));
        break;
      }
    }
  }
  return from_classes(order.domain(), std::move(exceptional), std::move(classes));
}

Graph Graph::stable_pairs(const StableColoring& coloring) {
  uint64_t bound = coloring.settle_bound();
  const UpSet& limit = coloring.limit();
  std::vector<std::pair<uint64_t, UpSet>> exceptional;
  for (uint64_t v = 0; v < bound; ++v) {
    UpSet n = limit.intersect(UpSet::below(v));
    if (limit.contains(v)) n = n.unite(UpSet::above(v));
    for (const auto& [key, bit] : coloring.overrides()) {
      auto [x, s] = key;
      if (s == v) n = bit ? n.insert(x) : n.remove(x);
      if (x == v) n = bit ? n.insert(s) : n.remove(s);
    }
    exceptional.emplace_back(v, std::move(n));
  }
  std::vector<VertexClass> classes;
  NeighborShape in_limit;
  in_limit.below.push_back({limit, 0});
  in_limit.above.push_back({UpSet::naturals(), 0});
  classes.push_back({limit.minus(UpSet::below(bound)), std::move(in_limit)});
  NeighborShape out_limit;
  out_limit.below.push_back({limit, 0});
  classes.push_back({limit.complement().minus(UpSet::below(bound)), std::move(out_limit)});
  return from_classes(UpSet::naturals(), std::move(exceptional), std::move(classes));
}

Graph Graph::color_components(const Coloring& coloring) {
  std::vector<VertexClass> classes;
  for (const auto& cls : coloring.classes()) {
    NeighborShape shape;
    shape.fixed = cls;
    classes.push_back({cls, std::move(shape)});
  }
  return from_classes(UpSet::naturals(), {}, std::move(classes));
}

const UpSet& Graph::vertices_upset() const {
  if (family_ == Family::Cylinder)
    throw std::logic_error("cylinder vertex chains are not ultimately periodic");
  return vertices_;
}

const VertexClass* Graph::class_of(uint64_t v) const {
  for (const auto& cls : classes_)
    if (cls.members.contains(v)) return &cls;
  return nullptr;
}

const UpSet* Graph::exceptional_neighbors(uint64_t v) const {
  for (const auto& [u, n] : exceptional_)
    if (u == v) return &n;
  return nullptr;
}

bool Graph::is_vertex(uint64_t v) const {
  if (family_ == Family::Cylinder) return chain_map_->preimage(v).has_value();
  return vertices_.contains(v);
}

UpSet Graph::shape_neighbors(const NeighborShape& shape, uint64_t v) const {
  UpSet n = shape.fixed;
  for (const auto& t : shape.below) n = n.unite(below_slice(t.set, v, t.shift));
  for (const auto& t : shape.above) n = n.unite(above_slice(t.set, v, t.shift));
  return n.remove(v);
}

UpSet Graph::neighbors(uint64_t v) const {
  switch (family_) {
    case Family::Classes: {
      if (!vertices_.contains(v)) throw std::invalid_argument("not a vertex");
      if (const UpSet* n = exceptional_neighbors(v)) return n->remove(v);
      const VertexClass* cls = class_of(v);
      if (!cls) throw std::logic_error("vertex classes do not cover the vertex set");
      return shape_neighbors(cls->shape, v);
    }
    case Family::Modular: {
      if (!vertices_.contains(v)) throw std::invalid_argument("not a vertex");
      std::vector<uint64_t> nbrs;
      for (int64_t d : offsets_[v % modulus_]) {
        int64_t u = static_cast<int64_t>(v) + d;
        if (u >= 0 && vertices_.contains(static_cast<uint64_t>(u)))
          nbrs.push_back(static_cast<uint64_t>(u));
      }
      return UpSet::from_elements(nbrs);
    }
    case Family::Cylinder:
      throw std::logic_error("cylinder neighbor sets are not ultimately periodic");
  }
  throw std::logic_error("unreachable");
}

bool Graph::edge(uint64_t u, uint64_t v) const {
  if (u == v) return false;
  switch (family_) {
    case Family::Classes:
      return is_vertex(u) && is_vertex(v) && neighbors(u).contains(v);
    case Family::Modular: {
      if (!is_vertex(u) || !is_vertex(v)) return false;
      for (int64_t d : offsets_[u % modulus_])
        if (static_cast<int64_t>(u) + d == static_cast<int64_t>(v)) return true;
      return false;
    }
    case Family::Cylinder: {
      auto m = chain_map_->preimage(u), n = chain_map_->preimage(v);
      return m && n && base_->edge(*m, *n);
    }
  }
  return false;
}

std::vector<uint64_t> Graph::vertices_below(uint64_t bound) const {
  std::vector<uint64_t> out;
  if (family_ == Family::Cylinder) {
    for (uint64_t n = 0;; ++n) {
      uint64_t c;
      try {
        c = chain_code(n);
      } catch (const std::overflow_error&) {
        break;
      }
      if (c >= bound) break;
      out.push_back(c);
    }
    return out;
  }
  for (uint64_t v = 0; v < bound; ++v)
    if (vertices_.contains(v)) out.push_back(v);
  return out;
}

bool Graph::locally_finite() const {
  switch (family_) {
    case Family::Modular:
      return true;
    case Family::Cylinder:
      return base_->locally_finite();
    case Family::Classes: {
      for (const auto& [v, n] : exceptional_)
        if (n.is_infinite()) return false;
      for (const auto& cls : classes_) {
        if (cls.members.is_empty()) continue;
        if (cls.shape.fixed.is_infinite()) return false;
        for (const auto& t : cls.shape.above)
          if (t.set.is_infinite()) return false;
      }
      return true;
    }
  }
  return false;
}

UpSet Graph::finite_neighbor_vertices() const {
  switch (family_) {
    case Family::Modular:
      return vertices_;
    case Family::Cylinder:
      throw std::logic_error("use transport for cylinder graphs");
    case Family::Classes: {
      UpSet f = UpSet::empty();
      for (const auto& cls : classes_) {
        UpSet tail = cls.shape.fixed.unite(union_of(cls.shape.above));
        if (tail.is_finite()) f = f.unite(cls.members);
      }
      for (const auto& [v, n] : exceptional_)
        if (n.is_finite()) f = f.insert(v);
      return f;
    }
  }
  throw std::logic_error("unreachable");
}

UpSet Graph::infinite_neighbor_part(const UpSet& h) const {
  switch (family_) {
    case Family::Modular:
      return UpSet::empty();
    case Family::Cylinder:
      throw std::logic_error("use transport for cylinder graphs");
    case Family::Classes: {
      UpSet part = UpSet::empty();
      for (const auto& cls : classes_) {
        UpSet tail = h.intersect(cls.shape.fixed.unite(union_of(cls.shape.above)));
        if (tail.is_infinite()) part = part.unite(cls.members);
      }
      for (const auto& [v, n] : exceptional_)
        if (h.intersect(n).is_infinite()) part = part.insert(v);
      return part;
    }
  }
  throw std::logic_error("unreachable");
}

CheckOutcome Graph::contained_in_vertices(const SetValue& h) const {
  if (family_ == Family::Cylinder) {
    if (!h.is_direct()) {
      if (h.map() == chain_map_.get()) return CheckOutcome::pass();
      return {false, std::nullopt, "solution mapped through a foreign index map"};
    }
    const UpSet& s = h.upset();
    if (s.is_infinite()) {
      // An infinite ultimately periodic set contains an arithmetic
      // progression, but chain codes double at each step, so only
      // finitely many can meet any progression.
      return {false, std::nullopt,
              "infinite ultimately periodic set cannot lie inside the vertex chain"};
    }
    for (uint64_t v : s.first_elements(*s.cardinality()))
      if (!is_vertex(v)) return CheckOutcome::fail(v, "not on the vertex chain");
    return CheckOutcome::pass();
  }
  if (!h.is_direct()) return {false, std::nullopt, "mapped solutions only arise for cylinders"};
  UpSet outside = h.upset().minus(vertices_);
  if (outside.is_empty()) return CheckOutcome::pass();
  return CheckOutcome::fail(*outside.min_element(), "element outside the vertex set");
}

Graph::Transport Graph::transport_to_base(const SetValue& h) const {
  if (family_ != Family::Cylinder) throw std::logic_error("transport requires a cylinder graph");
  if (!h.is_direct()) {
    if (h.map() == chain_map_.get()) return {true, h.indices(), ""};
    return {false, UpSet::empty(), "solution mapped through a foreign index map"};
  }
  const UpSet& s = h.upset();
  if (s.is_infinite())
    return {false, UpSet::empty(),
            "infinite ultimately periodic set cannot lie inside the vertex chain"};
  std::vector<uint64_t> idx;
  for (uint64_t v : s.first_elements(*s.cardinality())) {
    auto n = chain_map_->preimage(v);
    if (!n) return {false, UpSet::empty(), "set contains a non-initial-segment code"};
    idx.push_back(*n);
  }
  return {true, UpSet::from_elements(idx), ""};
}

CheckOutcome Graph::dichotomy(const SetValue& h, Scope scope, uint64_t threshold) const {
  switch (family_) {
    case Family::Classes:
      return dichotomy_classes(h, scope, threshold);
    case Family::Modular:
      return dichotomy_modular(h, scope, threshold);
    case Family::Cylinder: {
      Transport t = transport_to_base(h);
      if (!t.ok) return {false, std::nullopt, t.reason};
      return base_->dichotomy(SetValue::direct(t.base_set), scope, threshold);
    }
  }
  throw std::logic_error("unreachable");
}

CheckOutcome Graph::dichotomy_classes(const SetValue& hv, Scope scope, uint64_t c) const {
  if (!hv.is_direct()) return {false, std::nullopt, "mapped solutions only arise for cylinders"};
  const UpSet& h = hv.upset();
  auto explicit_ok = [&](uint64_t v) {
    UpSet t = h.intersect(neighbors(v));
    if (t.is_infinite()) return true;
    return *t.cardinality() <= c;
  };
  for (const auto& [v, n] : exceptional_) {
    if (scope == Scope::SolutionOnly && !h.contains(v)) continue;
    if (!explicit_ok(v)) return CheckOutcome::fail(v, "neighbor count in solution exceeds bound");
  }
  for (const auto& cls : classes_) {
    UpSet s = scope == Scope::SolutionOnly ? cls.members.intersect(h) : cls.members;
    if (s.is_empty()) continue;
    UpSet tail_inf = h.intersect(cls.shape.fixed.unite(union_of(cls.shape.above)));
    if (tail_inf.is_infinite()) continue;  // infinite branch holds class-wide
    UpSet t_below = h.intersect(union_of(cls.shape.below));
    if (t_below.is_infinite()) {
      if (s.is_finite()) {
        for (uint64_t v : s.first_elements(*s.cardinality()))
          if (!explicit_ok(v)) return CheckOutcome::fail(v, "neighbor count exceeds bound");
        continue;
      }
      // Counts grow without bound along the class, so a witness exists.
      for (uint64_t i = 0;; ++i) {
        uint64_t v = s.nth_element(i);
        if (!explicit_ok(v)) return CheckOutcome::fail(v, "neighbor count exceeds bound");
        if (i > 2'000'000) throw std::logic_error("witness scan failed to terminate");
      }
    }
    UpSet u = tail_inf.unite(t_below);
    int64_t pad = max_shift_magnitude(cls.shape) + 2;
    uint64_t bound = (u.is_empty() ? 0 : u.max_element_finite()) + static_cast<uint64_t>(pad);
    uint64_t i = 0;
    for (; i < 4'000'000; ++i) {
      if (s.is_finite() && i >= *s.cardinality()) break;
      uint64_t v = s.nth_element(i);
      if (v > bound) break;
      if (!explicit_ok(v)) return CheckOutcome::fail(v, "neighbor count exceeds bound");
    }
    // Settled region: above-slices are exhausted, below-slices saturated.
    auto beyond = s.next_at_least(bound + 1);
    if (beyond) {
      uint64_t settled = *h.intersect(cls.shape.fixed).unite(t_below).cardinality();
      if (settled > c)
        return CheckOutcome::fail(*beyond, "settled neighbor count exceeds bound");
    }
  }
  return CheckOutcome::pass();
}

CheckOutcome Graph::dichotomy_modular(const SetValue& hv, Scope scope, uint64_t c) const {
  if (!hv.is_direct()) return {false, std::nullopt, "mapped solutions only arise for cylinders"};
  const UpSet& h = hv.upset();
  UpSet scope_set = scope == Scope::SolutionOnly ? vertices_.intersect(h) : vertices_;
  uint64_t maxd = 1;
  for (const auto& row : offsets_)
    for (int64_t d : row) maxd = std::max<uint64_t>(maxd, static_cast<uint64_t>(std::abs(d)));
  uint64_t joint = std::lcm(std::lcm<uint64_t>(modulus_, h.period().size()),
                            std::lcm<uint64_t>(vertices_.period().size(), scope_set.period().size()));
  uint64_t settle =
      std::max({h.prefix().size(), vertices_.prefix().size(), scope_set.prefix().size()}) + maxd + 1;
  auto count_at = [&](uint64_t v) {
    uint64_t cnt = 0;
    for (int64_t d : offsets_[v % modulus_]) {
      int64_t u = static_cast<int64_t>(v) + d;
      if (u >= 0 && vertices_.contains(static_cast<uint64_t>(u)) && h.contains(static_cast<uint64_t>(u)))
        ++cnt;
    }
    return cnt;
  };
  for (uint64_t v = 0; v < settle + joint; ++v) {
    if (!scope_set.contains(v)) continue;
    if (count_at(v) > c) return CheckOutcome::fail(v, "neighbor count exceeds bound");
  }
  // One representative per residue class settles the periodic tail.
  for (uint64_t r = 0; r < joint; ++r) {
    auto v = scope_set.intersect(UpSet::residue_class(r, joint)).next_at_least(settle + joint);
    if (v && count_at(*v) > c) return CheckOutcome::fail(*v, "neighbor count exceeds bound");
  }
  return CheckOutcome::pass();
}

const BitStream& Graph::cylinder_stream() const {
  if (family_ != Family::Cylinder) throw std::logic_error("not a cylinder graph");
  return stream_;
}

const Graph& Graph::cylinder_base() const {
  if (family_ != Family::Cylinder) throw std::logic_error("not a cylinder graph");
  return *base_;
}

uint64_t Graph::chain_code(uint64_t n) const {
  if (family_ != Family::Cylinder) throw std::logic_error("not a cylinder graph");
  return chain_map_->image(n);
}

std::shared_ptr<const IndexMap> Graph::chain_map() const {
  if (family_ != Family::Cylinder) throw std::logic_error("not a cylinder graph");
  return chain_map_;
}

}  // namespace rsw
