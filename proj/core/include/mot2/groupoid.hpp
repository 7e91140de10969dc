#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mot2/groups.hpp"

namespace mot2 {

using Obj = std::size_t;
using Mor = std::size_t;

/// Compositions checked exhaustively up to this many composable triples;
/// above it a deterministic sample of this size is checked.
inline constexpr std::size_t kAssociativityExhaustiveLimit = 200000;

struct MorphismSpec {
  Obj source;
  Obj target;
};

/// An explicit finite groupoid with a full composition table.
/// Handles are cheap to copy and share immutable data.
class FiniteGroupoid {
 public:
  FiniteGroupoid();  // the trivial groupoid (one object, one morphism)

  /// compose(g, f) must return the index of g o f for target(f) == source(g).
  /// Validates identities, inverses and associativity; throws std::invalid_argument.
  static FiniteGroupoid build(std::size_t num_objects, std::vector<MorphismSpec> morphisms,
                              std::vector<Mor> identities, const std::function<Mor(Mor, Mor)>& compose,
                              std::string name = {});

  /// One object; morphism indices coincide with element indices.
  static FiniteGroupoid from_group(const FiniteGroup& g);
  /// n objects, every hom-set a copy of G.  Morphism (x -> y, g) has index (x*n + y)*|G| + g.
  static FiniteGroupoid connected(std::size_t n, const FiniteGroup& g);

  std::size_t num_objects() const;
  std::size_t num_morphisms() const;
  const std::string& name() const;
  Obj source(Mor f) const;
  Obj target(Mor f) const;
  Mor identity(Obj x) const;
  Mor inverse(Mor f) const;
  /// g o f; throws std::invalid_argument if not composable.
  Mor compose(Mor g, Mor f) const;

  /// Morphisms out of x sorted by (target, index); position of f within out(source(f)).
  std::span<const Mor> out(Obj x) const;
  std::size_t out_pos(Mor f) const;
  /// Morphisms into y sorted by (source, index); position of f within in(target(f)).
  std::span<const Mor> in(Obj y) const;
  std::size_t in_pos(Mor f) const;
  std::span<const Mor> hom(Obj x, Obj y) const;

  /// The group when this groupoid was made by from_group.
  const std::optional<FiniteGroup>& as_group() const;

  /// Connected components as sorted object lists, ordered by least object.
  const std::vector<std::vector<Obj>>& components() const;
  std::size_t component_of(Obj x) const;
  /// Spanning-tree arrows with their inverses plus vertex-group generators;
  /// every morphism is a composite of these.
  const std::vector<Mor>& generators() const;
  /// Vertex group at x as a permutation group (regular action on hom(x,x));
  /// element_morphism[i] is the morphism of group element i.
  struct VertexGroup {
    FiniteGroup group;
    std::vector<Mor> element_morphism;
  };
  VertexGroup vertex_group(Obj x) const;

  bool is_discrete() const;
  bool operator==(const FiniteGroupoid& other) const { return data_ == other.data_; }
  /// Same data, or the same object count, morphism records and composition table.
  bool same_structure(const FiniteGroupoid& other) const;

  struct Data;

 private:
  static std::shared_ptr<Data> build_data(std::size_t num_objects, std::vector<MorphismSpec> morphisms,
                                          std::vector<Mor> identities, const std::function<Mor(Mor, Mor)>& compose,
                                          std::string name);
  explicit FiniteGroupoid(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// G1 x G2, object (a, b) at a*|Obj G2| + b, morphism (f, g) at f*|Mor G2| + g.
FiniteGroupoid product_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b);
/// A + B with objects and morphisms of B shifted past those of A.
FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b);
/// H^op; morphisms keep their indices with source and target swapped.
FiniteGroupoid opposite_groupoid(const FiniteGroupoid& g);

class GroupoidFunctor {
 public:
  GroupoidFunctor() = default;
  /// Validates preservation of sources, targets, identities and composition.
  GroupoidFunctor(FiniteGroupoid source, FiniteGroupoid target, std::vector<Obj> on_objects,
                  std::vector<Mor> on_morphisms);

  static GroupoidFunctor identity(const FiniteGroupoid& g);
  /// The functor from g to the trivial groupoid.
  static GroupoidFunctor to_trivial(const FiniteGroupoid& g);
  /// Group homomorphism given on elements.
  static GroupoidFunctor from_group_hom(const FiniteGroup& src, const FiniteGroup& tgt, std::vector<std::size_t> images);
  /// H -> G for a subgroup, with H realized by subgroup_as_group.
  static GroupoidFunctor subgroup_inclusion(const Subgroup& h);

  const FiniteGroupoid& source() const { return source_; }
  const FiniteGroupoid& target() const { return target_; }
  Obj object(Obj x) const { return on_objects_[x]; }
  Mor morphism(Mor f) const { return on_morphisms_[f]; }
  const std::vector<Obj>& object_map() const { return on_objects_; }
  const std::vector<Mor>& morphism_map() const { return on_morphisms_; }

  GroupoidFunctor then(const GroupoidFunctor& next) const;  // next o this

 private:
  FiniteGroupoid source_, target_;
  std::vector<Obj> on_objects_;
  std::vector<Mor> on_morphisms_;
};

bool is_faithful(const GroupoidFunctor& f);
bool is_full(const GroupoidFunctor& f);
bool is_essentially_surjective(const GroupoidFunctor& f);
bool is_equivalence(const GroupoidFunctor& f);

/// Pairing (F, G): P -> A x B of two functors out of the same groupoid.
GroupoidFunctor pairing(const GroupoidFunctor& f, const GroupoidFunctor& g);

/// A pseudo-pullback square  P --q--> K, P --p--> H, with gamma: i p => u q.
struct MackeySquare {
  FiniteGroupoid apex;
  GroupoidFunctor p;  // to the source of i
  GroupoidFunctor q;  // to the source of u
  GroupoidFunctor i;
  GroupoidFunctor u;
  /// gamma[z] : i(p(z)) -> u(q(z)) in the common target.
  std::vector<Mor> gamma;
  /// Source triple (x, y, g) of each apex object.
  struct Triple {
    Obj x;
    Obj y;
    Mor g;
  };
  std::vector<Triple> triples;
};

/// Iso-comma of i: H -> G and u: K -> G: objects (x, y, g: i x -> u y),
/// morphisms (h, k) with u(k) g = g' i(h).
MackeySquare iso_comma(const GroupoidFunctor& i, const GroupoidFunctor& u);
/// Throws std::logic_error if gamma is not natural or not made of isomorphisms.
void verify_mackey_square(const MackeySquare& sq);

/// Full subgroupoid on the given objects, with its inclusion functor.
struct FullSubgroupoid {
  FiniteGroupoid groupoid;
  GroupoidFunctor inclusion;
};
FullSubgroupoid full_subgroupoid(const FiniteGroupoid& g, const std::vector<Obj>& objects);
/// Full subgroupoid on the least object of each component.
FullSubgroupoid skeleton(const FiniteGroupoid& g);

}  // namespace mot2
