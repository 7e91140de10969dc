#pragma once

#include <vector>

#include "mot2/biset.hpp"
#include "mot2/groupoid.hpp"

namespace mot2 {

/// A span H <-u- P -i-> G of groupoids. It realizes to a G,H-biset.
struct Span {
  GroupoidFunctor u;  // apex -> H
  GroupoidFunctor i;  // apex -> G

  const FiniteGroupoid& apex() const { return u.source(); }
  const FiniteGroupoid& left_foot() const { return u.target(); }   // H
  const FiniteGroupoid& right_foot() const { return i.target(); }  // G

  /// Throws std::invalid_argument when the legs have different sources.
  static Span make(GroupoidFunctor u, GroupoidFunctor i);
  static Span identity(const FiniteGroupoid& g);
};

bool is_right_faithful(const Span& s);
/// The pairing (u, i): P -> H x G is faithful.
bool is_jointly_faithful(const Span& s);

/// G(v-, -): a G,P-biset with elements (z, q: v z -> x) of type (target q, z).
struct InducedBiset {
  Biset biset;
  /// Element for z and a morphism q out of v(z).
  std::vector<std::size_t> offset;
  Elem element(const GroupoidFunctor& v, Obj z, Mor q) const;
};
InducedBiset induced_biset(const GroupoidFunctor& v);

/// H(-, v-): a P,H-biset with elements (z, q: y -> v z) of type (z, source q).
struct RestrictedBiset {
  Biset biset;
  std::vector<std::size_t> offset;
  Elem element(const GroupoidFunctor& v, Obj z, Mor q) const;
};
RestrictedBiset restricted_biset(const GroupoidFunctor& v);

/// R(s) = G(i-, -) x_P H(-, u-) with its factors kept for element lookups.
struct Realization {
  InducedBiset induced;
  RestrictedBiset restricted;
  TensorProduct product;
  const Biset& biset() const { return product.result; }
  /// The class [q, r] for q: i z -> x and r: y -> u z.
  Elem element(const Span& s, Obj z, Mor q, Mor r) const;
};
Realization realize_with_factors(const Span& s);
Biset realize(const Span& s);

/// The groupoid of elements of a G,H-biset S: objects are the elements s of type
/// (x, y); a morphism (h, g) with h: y -> y' and g: x -> x' goes from s to
/// g . s . h^-1.  The legs project to H and G.
struct GrothendieckConstruction {
  Biset biset;
  Span span;
  std::vector<std::size_t> offset;
  Mor morphism(Elem s, Mor h, Mor g) const;
};
GrothendieckConstruction grothendieck(const Biset& s);

/// z |-> [id, id] in R(s), p |-> (u p, i p).
GroupoidFunctor phi_comparison(const Span& s);
/// s |-> [id_x, id_y] at the object s of the groupoid of elements.
EquivariantMap varphi_iso(const Biset& s);

/// s2 o s1 for s1: H <- P1 -> M and s2: M <- P2 -> G, with apex the iso-comma of
/// the inner legs, skeletonized unless asked otherwise.
Span compose_spans(const Span& s2, const Span& s1, bool skeletonize = true);

}  // namespace mot2
