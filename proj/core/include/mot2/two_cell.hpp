#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mot2/biset.hpp"
#include "mot2/scalar.hpp"

namespace mot2 {

/// A span U <-beta- W -alpha-> V of equivariant maps between bisets over the
/// same pair of groupoids.
struct MapSpan {
  Biset middle;
  EquivariantMap to_source;  // beta
  EquivariantMap to_target;  // alpha

  static MapSpan make(EquivariantMap to_source, EquivariantMap to_target);
  /// [U = U -f-> V]
  static MapSpan from_map(const EquivariantMap& f);
  const Biset& source() const { return to_source.target(); }
  const Biset& target() const { return to_target.target(); }
};

/// Isomorphism invariant of a span with transitive middle: the least
/// (beta w, alpha w, stabilizer of w) over the points w of the middle.
struct SpanKey {
  Elem source_point;
  Elem target_point;
  std::vector<std::pair<Mor, Mor>> stabilizer;
  auto operator<=>(const SpanKey&) const = default;
};

/// Requires a transitive middle.
SpanKey transitive_key(const MapSpan& s);
/// One span per orbit of the middle.
std::vector<MapSpan> transitive_pieces(const MapSpan& s);

/// A formal linear combination of isomorphism classes of spans U => V.
/// Spans are split into orbits, so every stored span has transitive middle.
class TwoCell {
 public:
  struct Term {
    Scalar coefficient;
    MapSpan span;
  };

  TwoCell() = default;
  /// The zero 2-cell U => V.
  TwoCell(Field field, Biset source, Biset target);
  static TwoCell from_span(const Field& field, const MapSpan& s, const Scalar& coefficient);
  static TwoCell from_span(const Field& field, const MapSpan& s);
  static TwoCell from_map(const Field& field, const EquivariantMap& f);
  static TwoCell identity(const Field& field, const Biset& u);

  const Field& field() const { return field_; }
  const Biset& source() const { return source_; }
  const Biset& target() const { return target_; }
  const std::map<SpanKey, Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds c * [s], splitting s into transitive pieces.
  void add(const Scalar& c, const MapSpan& s);

  TwoCell operator+(const TwoCell& other) const;
  TwoCell operator-(const TwoCell& other) const;
  TwoCell operator-() const;
  TwoCell scaled(const Scalar& c) const;
  /// Same source and target bisets and the same coefficients on every class.
  bool operator==(const TwoCell& other) const;

  std::string to_string() const;

 private:
  void require_parallel(const TwoCell& other) const;
  Field field_;
  Biset source_, target_;
  std::map<SpanKey, Term> terms_;
};

/// after o before, by pullback of the inner legs.
TwoCell vcompose(const TwoCell& after, const TwoCell& before);
/// X x t : X x U => X x V
TwoCell whisker_left(const Biset& x, const TwoCell& t);
/// t x Y : U x Y => V x Y
TwoCell whisker_right(const TwoCell& t, const Biset& y);
/// outer x inner : X x U => X' x V
TwoCell hcompose(const TwoCell& outer, const TwoCell& inner);
/// t: U => V moved along isomorphisms U -> U' and V -> V'.
TwoCell transport(const TwoCell& t, const EquivariantMap& source_iso, const EquivariantMap& target_iso);

/// Induction and restriction along H <= G with the units and counits of
/// i_! -| i^* -| i_* (here i_! = i_*).
struct SubgroupAdjunctions {
  Subgroup subgroup;
  Field field;
  Biset id_g;         // G G_G
  Biset id_h;         // H H_H
  Biset induction;    // G G_H
  Biset restriction;  // H G_G
  TensorProduct restriction_induction;  // i^* i_! = H G_H
  TensorProduct induction_restriction;  // i_! i^* = G (G x_H G)_G
  TwoCell unit_left;     // Id_H => i^* i_!
  TwoCell counit_left;   // i_! i^* => Id_G
  TwoCell unit_right;    // Id_G => i_* i^*
  TwoCell counit_right;  // i^* i_* => Id_H
};
SubgroupAdjunctions adjunction_units(const Subgroup& h, const Field& field);

/// The four zig-zag composites, each with unitors and associators inserted;
/// they equal the identity on the named 1-cell exactly when the triangle laws hold.
struct TriangleComposites {
  TwoCell left_on_induction;    // (eps^l i_!)(i_! eta^l) on i_!
  TwoCell left_on_restriction;  // (i^* eps^l)(eta^l i^*) on i^*
  TwoCell right_on_induction;   // (i_* eps^r)(eta^r i_*) on i_*
  TwoCell right_on_restriction; // (eps^r i^*)(i^* eta^r) on i^*
};
TriangleComposites triangle_composites(const SubgroupAdjunctions& adj);

/// [G <=mu= G x_H G =mu=> G] - [G:H] id on Id_G.
TwoCell cohomological_2cell(const Subgroup& h, const Field& field);

/// The span of quotient maps (G1xG2)/N <= (G1xG2)/M => (G1xG2)/N minus [N:M] id.
/// Throws std::invalid_argument unless M <= N and pr1 is injective on N.
TwoCell delta_cell(const DirectProduct& g1g2, const Subgroup& m, const Subgroup& n, const Field& field);
/// The cohomological 2-cell of M <= N whiskered by G1 (as a G1,N-biset) and G2
/// (as an N,G2-biset), transported to (G1xG2)/N.
TwoCell delta_cell_by_whiskering(const DirectProduct& g1g2, const Subgroup& m, const Subgroup& n, const Field& field);

struct SeparabilitySection {
  TwoCell section;    // [G:H]^-1 eta^r
  TwoCell composite;  // eps^l o section
  /// composite - id, which equals [G:H]^-1 times the cohomological 2-cell.
  TwoCell defect;
};
/// Throws std::domain_error when [G:H] is not invertible in the field.
SeparabilitySection separability_section(const Subgroup& h, const Field& field);

}  // namespace mot2
