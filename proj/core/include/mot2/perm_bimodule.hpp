#pragma once

#include <map>
#include <memory>
#include <vector>

#include "mot2/biset.hpp"
#include "mot2/matrix.hpp"
#include "mot2/two_cell.hpp"

namespace mot2 {

/// k[U]: the free k-module on a biset, with the induced actions.
struct PermBimodule {
  Biset basis;
  Field field;
  std::size_t dimension() const { return basis.size(); }
};
PermBimodule linearize(const Biset& u, const Field& field);

/// Type-preserving and equivariant for both actions, checked on generators.
bool is_equivariant_matrix(const Biset& source, const Biset& target, const Matrix& m);

/// An equivariant k-linear map; column u of the matrix is the image of u.
class BimoduleMap {
 public:
  BimoduleMap() = default;
  /// Throws std::invalid_argument unless the matrix is equivariant.
  BimoduleMap(PermBimodule source, PermBimodule target, Matrix m);
  const PermBimodule& source() const { return source_; }
  const PermBimodule& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }
  /// next o this
  BimoduleMap then(const BimoduleMap& next) const;

 private:
  PermBimodule source_, target_;
  Matrix matrix_;
};

BimoduleMap linearize_map(const EquivariantMap& a, const Field& field);
/// Sum over fibers: u |-> sum of alpha(w) over w in beta^-1(u), extended linearly.
BimoduleMap linearize_2cell(const TwoCell& t);

/// A basis of the equivariant maps M -> N, from the nullspace of the
/// equivariance equations f(g.u) = g.f(u) and f(u.h) = f(u).h on generators.
std::vector<BimoduleMap> hom_space(const PermBimodule& m, const PermBimodule& n);

/// Transitive Gamma-sets Gamma/K realized as bisets over shared groupoids:
/// either left G-sets (G,1-bisets, Gamma = G) or G1,G2-bisets with
/// Gamma = G1 x G2 acting by (g1, g2).s = g1 s g2^-1.
class CosetModel {
 public:
  static CosetModel left_sets(const FiniteGroup& g);
  static CosetModel bisets(const DirectProduct& g1g2);

  const FiniteGroup& gamma() const;
  const FiniteGroupoid& left() const;
  const FiniteGroupoid& right() const;
  /// Gamma/K with cosets ordered by least element; cached per subgroup.
  const Biset& cosets(const Subgroup& k) const;
  Elem coset_of(const Subgroup& k, std::size_t x) const;
  /// x M |-> x gamma L; requires gamma^-1 M gamma <= L.
  EquivariantMap right_multiplication(const Subgroup& m, const Subgroup& l, std::size_t gamma) const;
  /// Objects allowed in the right-free setting: all subgroups for left sets,
  /// subgroups on which the first projection is injective for bisets.
  bool is_right_free_stabilizer(const Subgroup& k) const;

 private:
  struct Data;
  std::shared_ptr<Data> data_;
};

/// The span Gamma/K <=pr= Gamma/(K cap gamma L gamma^-1) =(.gamma)=> Gamma/L.
MapSpan double_coset_span(const CosetModel& model, const Subgroup& k, const Subgroup& l, std::size_t gamma);

struct DoubleCosetGenerator {
  std::size_t gamma;  // least element of its double coset K gamma L
  MapSpan span;
  BimoduleMap image;
};
/// One generator per double coset in K \ Gamma / L.
std::vector<DoubleCosetGenerator> double_coset_basis(const CosetModel& model, const Subgroup& k, const Subgroup& l,
                                                     const Field& field);

struct FullnessReport {
  std::size_t hom_dimension = 0;
  std::size_t double_cosets = 0;
  std::size_t image_rank = 0;
  bool images_equivariant = false;
  /// Images are independent and span the Hom space.
  bool full = false;
};
FullnessReport verify_P_fullness(const CosetModel& model, const Subgroup& k, const Subgroup& l, const Field& field);

/// Representatives of the isomorphism classes of spans Gamma/A <= Gamma/M => Gamma/B
/// with transitive middle, i.e. a basis of the 2-cells between them.
std::vector<MapSpan> transitive_span_basis(const CosetModel& model, const Subgroup& a, const Subgroup& b);

struct KernelReport {
  std::size_t cell_dimension = 0;    // 2-cells Gamma/K => Gamma/L
  std::size_t kernel_dimension = 0;  // of P on them
  std::size_t ideal_dimension = 0;   // span of post o delta o pre
  bool ideal_in_kernel = false;
  bool generated = false;  // ideal span equals the kernel
};
/// Compares ker P on the 2-cells Gamma/K => Gamma/L with the span of composites
/// post o delta(M <= N) o pre through every allowed Gamma/N.
KernelReport kernel_generation_check(const CosetModel& model, const Subgroup& k, const Subgroup& l, const Field& field);

}  // namespace mot2
