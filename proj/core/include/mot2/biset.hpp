#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "mot2/groupoid.hpp"

namespace mot2 {

using Elem = std::size_t;

/// Element type (x, y): x an object of the left groupoid, y of the right one.
struct ElementType {
  Obj x;
  Obj y;
  bool operator==(const ElementType&) const = default;
  auto operator<=>(const ElementType&) const = default;
};

/// A finite G,H-biset: G acts on the left, H on the right.
/// g in G(x, x') sends elements of type (x, y) to type (x', y);
/// h in H(y', y) sends elements of type (x, y) to type (x, y').
class Biset {
 public:
  Biset();  // empty biset over trivial groupoids

  /// Validates functoriality of both actions and that they commute.
  static Biset build(FiniteGroupoid left, FiniteGroupoid right, std::vector<ElementType> types,
                     const std::function<Elem(Mor, Elem)>& act_left,
                     const std::function<Elem(Elem, Mor)>& act_right);

  const FiniteGroupoid& left() const;
  const FiniteGroupoid& right() const;
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  const ElementType& type(Elem s) const;
  const std::vector<ElementType>& types() const;

  /// g . s, requires source(g) == x(s).
  Elem act_left(Mor g, Elem s) const;
  /// s . h, requires target(h) == y(s).
  Elem act_right(Elem s, Mor h) const;
  /// g . s . h^-1 for loops g at x(s), h at y(s).
  Elem conjugate_by(Mor g, Elem s, Mor h) const;

  /// Same ambient groupoids (structurally).
  bool same_ambient(const Biset& other) const;
  /// Same handle, or same ambient, element types and actions.
  bool same_structure(const Biset& other) const;

 private:
  struct Data;
  explicit Biset(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// Type-preserving equivariant map source -> target.
class EquivariantMap {
 public:
  EquivariantMap() = default;
  /// Validates types and equivariance on generators.
  EquivariantMap(Biset source, Biset target, std::vector<Elem> images);

  static EquivariantMap identity(const Biset& s);

  const Biset& source() const { return source_; }
  const Biset& target() const { return target_; }
  Elem operator()(Elem s) const { return images_[s]; }
  const std::vector<Elem>& images() const { return images_; }

  bool is_bijective() const;
  /// next o this
  EquivariantMap then(const EquivariantMap& next) const;
  /// Inverse of a bijective map.
  EquivariantMap inverse() const;

 private:
  struct Unchecked {};
  EquivariantMap(Unchecked, Biset source, Biset target, std::vector<Elem> images);
  friend std::optional<EquivariantMap> extend_equivariantly(const Biset&, const Biset&,
                                                            const std::vector<std::pair<Elem, Elem>>&);
  Biset source_, target_;
  std::vector<Elem> images_;
};

/// The unique equivariant map sending each base s to its partner t, if one exists.
/// The bases must meet every orbit of the source.
std::optional<EquivariantMap> extend_equivariantly(const Biset& source, const Biset& target,
                                                   const std::vector<std::pair<Elem, Elem>>& base);

/// G(-, -): elements are morphisms f, of type (target f, source f).
Biset identity_biset(const FiniteGroupoid& g);

/// T x_B S for a A,B-biset T and a B,C-biset S.
struct TensorProduct {
  Biset result;
  Biset left_factor;
  Biset right_factor;
  /// class of the pair (t, s); requires y(t) == x(s).
  Elem class_of(Elem t, Elem s) const;
  /// A representing pair for each class.
  std::vector<std::pair<Elem, Elem>> representative;

  std::vector<std::size_t> pair_offset;  // first pair index of each t
  std::vector<std::size_t> right_pos;    // position of s among elements with its left object
  std::vector<Elem> pair_class;
};
TensorProduct tensor(const Biset& t, const Biset& s);
/// alpha x beta : T x S -> T' x S'.
EquivariantMap tensor_maps(const TensorProduct& source, const TensorProduct& target, const EquivariantMap& alpha,
                           const EquivariantMap& beta);

/// Coproduct with its two inclusions.
struct BisetSum {
  Biset result;
  EquivariantMap first;
  EquivariantMap second;
};
BisetSum biset_sum(const Biset& a, const Biset& b);
Biset empty_biset(const FiniteGroupoid& left, const FiniteGroupoid& right);

bool is_right_free(const Biset& s);
bool is_left_free(const Biset& s);

/// Orbits under both actions, each sorted, ordered by least element.
std::vector<std::vector<Elem>> orbits(const Biset& s);
/// Loops (g, h) at the type of s with g . s = s . h, sorted.
std::vector<std::pair<Mor, Mor>> stabilizer(const Biset& s, Elem e);

std::optional<EquivariantMap> is_isomorphic(const Biset& a, const Biset& b);

struct Pullback {
  Biset result;
  EquivariantMap first;   // to the source of alpha
  EquivariantMap second;  // to the source of beta
  std::vector<std::pair<Elem, Elem>> pairs;
};
/// Fiber product of alpha: W -> V and beta: W' -> V.
Pullback pullback(const EquivariantMap& alpha, const EquivariantMap& beta);

/// The sub-biset on a union of orbits, elements kept in the given order.
struct SubBiset {
  Biset result;
  EquivariantMap inclusion;
};
SubBiset sub_biset(const Biset& s, const std::vector<Elem>& elements);

/// Restriction along a: G' -> G (left) and b: H' -> H (right):
/// elements (x', y', s) with s of type (a x', b y').
Biset restrict_biset(const Biset& s, const GroupoidFunctor& a, const GroupoidFunctor& b);

/// Groups only. The left G1 x G2-set structure (g1, g2) . s = g1 s g2^-1.
struct BisetOrbit {
  Subgroup stabilizer;  // canonical conjugacy representative in G1 x G2
  std::vector<Elem> elements;
  Elem base_point;  // has stabilizer exactly `stabilizer`
};
struct OrbitDecomposition {
  DirectProduct product;
  std::vector<BisetOrbit> orbits;
};
OrbitDecomposition orbit_decomposition(const Biset& s);
/// (G1 x G2)/M with g1 . [a, b] . g2 = [g1 a, g2^-1 b]; cosets ordered by least element.
Biset transitive_biset(const DirectProduct& g1g2, const Subgroup& m);
/// The coset of (a, b) in transitive_biset(g1g2, m).
Elem transitive_biset_element(const DirectProduct& g1g2, const Subgroup& m, std::size_t pair);

/// G/K as a G,1-biset (left cosets xK, ordered by least element).
Biset coset_biset(const Subgroup& k);

/// {}_G G_H = G(i-, -) for H <= G, and {}_H G_G = G(-, i-).
Biset induction_biset(const Subgroup& h);
Biset restriction_biset(const Subgroup& h);
/// Both of the above over one shared copy of H.
struct InductionRestriction {
  Biset induction;
  Biset restriction;
  std::vector<std::size_t> embedding;  // element of H -> element of G
};
InductionRestriction induction_restriction(const Subgroup& h);

/// Associator (T x S) x R -> T x (S x R) on elements.
EquivariantMap associator(const TensorProduct& ts, const TensorProduct& ts_r, const TensorProduct& sr,
                          const TensorProduct& t_sr);
/// Id_A x T -> T, [f, t] |-> f . t.
EquivariantMap left_unitor(const TensorProduct& id_t);
/// T x Id_B -> T, [t, f] |-> t . f.
EquivariantMap right_unitor(const TensorProduct& t_id);

}  // namespace mot2
