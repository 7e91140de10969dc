#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mot2/perm_bimodule.hpp"

namespace mot2 {

/// A finite left G-set, stored as a G,1-biset over the groupoids of a coset model.
class GSet {
 public:
  GSet() = default;
  /// action[g][x] = g.x. Throws std::invalid_argument unless it is a left action.
  GSet(const CosetModel& model, const std::vector<std::vector<std::size_t>>& action);
  static GSet cosets(const CosetModel& model, const Subgroup& k);
  /// b must be a biset over model.left() and the trivial groupoid.
  static GSet from_biset(const CosetModel& model, Biset b);

  const FiniteGroup& group() const { return group_; }
  const Biset& biset() const { return biset_; }
  std::size_t size() const { return biset_.size(); }
  std::size_t act(std::size_t g, std::size_t x) const { return biset_.act_left(g, x); }

 private:
  FiniteGroup group_;
  Biset biset_;
};
/// X + Y with the elements of X first.
GSet disjoint_union(const CosetModel& model, const GSet& x, const GSet& y);

/// Morphisms of the k-linear span category Sp_k(G): formal combinations of
/// spans of G-sets X <= W => Y up to isomorphism.
using SpanHom = TwoCell;

/// One span X <= G/M => Y per isomorphism class with transitive middle.
std::vector<MapSpan> span_category_hom(const CosetModel& model, const GSet& x, const GSet& y);
/// s2 o s1 by pullback.
SpanHom compose_span_homs(const SpanHom& s2, const SpanHom& s1);
/// Sum over fibers k[X] -> k[Y]; rows indexed by Y.
Matrix yoshida_functor(const SpanHom& s);

struct YoshidaPair {
  Subgroup source, target;  // G/K, G/L
  std::size_t hom_dimension = 0;
  std::size_t ideal_dimension = 0;
  std::size_t quotient_dimension = 0;
  std::size_t kernel_dimension = 0;  // of the Yoshida functor
  std::size_t double_cosets = 0;
  bool matches = false;  // quotient = |K\G/L| and ideal = kernel
};
struct YoshidaKernelReport {
  std::vector<Subgroup> objects;  // one K per conjugacy class, G/K
  std::vector<YoshidaPair> pairs;
  std::size_t closure_rounds = 0;
  bool all_match = false;
};
/// Closes the differences [G/K <= G/M => G/K] - [K:M] id (M <= K) under pre-
/// and post-composition with all basis spans between the objects G/K, and
/// compares the quotient with the double coset counts.
YoshidaKernelReport classical_yoshida_kernel_check(const FiniteGroup& g, const Field& field);

/// The Mackey functor H |-> Hom_kH(k[X], k[Y]) on the subgroups of G.
/// M(H) has the basis of H-orbit sums on pairs (y, x); a map is stored as its
/// |Y| x |X| matrix flattened row-major.
struct MackeyFunctorTable {
  FiniteGroup group;
  Field field;
  std::size_t source_size = 0;  // |X|
  std::size_t target_size = 0;  // |Y|
  std::vector<Subgroup> subgroups;
  /// Per subgroup: orbit of each flattened pair, and one pair per orbit.
  std::vector<std::vector<std::size_t>> orbit_of;
  std::vector<std::vector<std::size_t>> orbit_representative;
  /// Keyed by (H, K) with K <= H, as subgroup positions.
  std::map<std::pair<std::size_t, std::size_t>, Matrix> restriction;  // M(H) -> M(K)
  std::map<std::pair<std::size_t, std::size_t>, Matrix> transfer;     // M(K) -> M(H)
  /// Keyed by (g, H): M(H) -> M(gHg^-1), f |-> g f g^-1.
  std::map<std::pair<std::size_t, std::size_t>, Matrix> conjugation;

  std::size_t dimension(std::size_t h) const { return orbit_representative[h].size(); }
  std::size_t position(const Subgroup& h) const;
  /// Coordinates of an H-equivariant map; throws std::logic_error otherwise.
  Vector coordinates(std::size_t h, const Matrix& f) const;
  Matrix value(std::size_t h, const Vector& coordinates) const;
};

/// Restriction forgets equivariance; transfer is the relative trace
/// f |-> sum over h in H/K of h f h^-1; conjugation is f |-> g f g^-1.
MackeyFunctorTable hom_decategorify(const GSet& x, const GSet& y, const Field& field);

struct MackeyAxiomReport {
  bool functoriality = false;   // identities and composites of R, I, c
  bool iso_invariance = false;  // inner conjugations act trivially; c commutes with R and I
  bool mackey_formula = false;  // double coset formula for all K, L <= H
  bool cohomological = false;   // I^H_K R^H_K = [H:K] id
  std::vector<std::string> failures;
  bool all() const { return functoriality && iso_invariance && mackey_formula && cohomological; }
};
MackeyAxiomReport verify_mackey_axioms(const MackeyFunctorTable& t);

/// Splitting f |-> (f on X1, f on X2) identifies M_{X1+X2,Y} with
/// M_{X1,Y} + M_{X2,Y} compatibly with restriction and transfer.
bool verify_additivity(const CosetModel& model, const GSet& x1, const GSet& x2, const GSet& y, const Field& field);

}  // namespace mot2
