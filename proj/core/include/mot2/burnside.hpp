#pragma once

#include <string>
#include <vector>

#include "mot2/groups.hpp"
#include "mot2/matrix.hpp"
#include "mot2/perm_bimodule.hpp"
#include "mot2/polynomial.hpp"

namespace mot2 {

/// A finite-dimensional commutative unital algebra given by structure
/// constants: basis_i * basis_j = sum_k c_ij^k basis_k.
class CommutativeAlgebra {
 public:
  CommutativeAlgebra() = default;
  /// product[i][j] holds the coordinates of basis_i * basis_j.
  CommutativeAlgebra(Field field, std::vector<std::string> labels, std::vector<std::vector<Vector>> product,
                     Vector identity);

  const Field& field() const { return field_; }
  std::size_t dimension() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vector& identity() const { return identity_; }
  const Vector& product(std::size_t i, std::size_t j) const { return product_[i][j]; }

  Vector zero() const { return zero_vector(field_, dimension()); }
  Vector basis_vector(std::size_t i) const;
  Vector multiply(const Vector& a, const Vector& b) const;
  Vector add(const Vector& a, const Vector& b) const;
  Vector subtract(const Vector& a, const Vector& b) const;
  Vector scale(const Scalar& s, const Vector& a) const;
  Vector power(const Vector& a, const mpz_class& exponent) const;
  /// Matrix of x |-> a x.
  Matrix multiplication_matrix(const Vector& a) const;
  /// p(a) with p evaluated at the identity for the constant term.
  Vector evaluate(const Polynomial& p, const Vector& a) const;
  /// Least monic p with p(a) = 0 in the ideal with unit e (a e = a).
  Polynomial minimal_polynomial(const Vector& a, const Vector& e) const;

  bool is_idempotent(const Vector& e) const { return multiply(e, e) == e; }
  bool is_commutative() const;
  bool is_associative() const;  // on all basis triples
  bool is_unital() const;

  std::string format(const Vector& v) const;

 private:
  Field field_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Vector>> product_;
  Vector identity_;
};

/// A pair (H, a) with a in C_G(H), standing for its G-conjugacy class [H, a].
struct XBurBasisElement {
  Subgroup subgroup;
  std::size_t element;
};

struct CrossedBurnside {
  FiniteGroup group;
  std::vector<XBurBasisElement> basis;  // canonical representatives
  CommutativeAlgebra algebra;
  /// Position of the class of (h, a); requires a in C_G(h).
  std::size_t position(const Subgroup& h, std::size_t a) const;
};
/// Canonical representative of the class of (h, a): least (subgroup, element)
/// over the conjugates (g h g^-1, g a g^-1).
XBurBasisElement canonical_pair(const Subgroup& h, std::size_t a);
/// [K,b][H,a] = sum over g in K\G/H of [K cap gHg^-1, b gag^-1]; unit [G,1].
CrossedBurnside crossed_burnside(const FiniteGroup& g, const Field& field);

struct CenterAlgebra {
  FiniteGroup group;
  std::vector<std::vector<std::size_t>> classes;  // basis: class sums
  CommutativeAlgebra algebra;
  /// Coordinates of a central element of kG given on group elements;
  /// throws std::invalid_argument if it is not constant on classes.
  Vector from_group_algebra(const Vector& element) const;
  Vector to_group_algebra(const Vector& coordinates) const;
};
CenterAlgebra center_group_algebra(const FiniteGroup& g, const Field& field);

/// A linear map given by its matrix in the two bases, checked for unitality
/// and multiplicativity on construction.
class AlgebraHom {
 public:
  AlgebraHom() = default;
  /// Throws std::invalid_argument unless unital and multiplicative on all basis pairs.
  AlgebraHom(CommutativeAlgebra source, CommutativeAlgebra target, Matrix m);
  const CommutativeAlgebra& source() const { return source_; }
  const CommutativeAlgebra& target() const { return target_; }
  const Matrix& matrix() const { return matrix_; }
  Vector operator()(const Vector& a) const;
  bool is_surjective() const;

 private:
  CommutativeAlgebra source_, target_;
  Matrix matrix_;
};

struct Comparison {
  CrossedBurnside crossed;
  CenterAlgebra center;
  AlgebraHom rho;  // [H, a] |-> sum over x in G/H of x a x^-1
};
Comparison comparison_homomorphism(const FiniteGroup& g, const Field& field);

/// Complete orthogonal family of primitive idempotents with sum 1, in a fixed
/// order. Over F_p: split the Frobenius-fixed subalgebra {x : x^p = x}, whose
/// dimension is the number of primitive idempotents; over Q: split by the
/// factored minimal polynomial of a generic element, certified against the
/// dimension modulo the radical. Throws std::runtime_error if splitting fails.
std::vector<Vector> primitive_idempotents(const CommutativeAlgebra& a);

/// The sum of the primitive idempotents of the source whose image is a nonzero
/// summand of e; the unit for e = 1. Throws std::logic_error if the image is not e.
Vector lift_idempotent(const Vector& e, const AlgebraHom& rho);
/// Same, with the primitive idempotents of the source already computed.
Vector lift_idempotent(const Vector& e, const AlgebraHom& rho, const std::vector<Vector>& source_primitives);

struct BurnsideSubring {
  CommutativeAlgebra algebra;            // basis [H,1] for H up to conjugacy
  std::vector<std::size_t> embedding;    // positions in the crossed Burnside basis
};
/// Throws std::logic_error if the span of the [H,1] is not closed.
BurnsideSubring burnside_subring(const CrossedBurnside& x);

struct BlockSummary {
  Vector idempotent;                    // primitive central idempotent of kG
  Vector lift;                          // idempotent of xBur mapping to it
  std::vector<std::size_t> general;     // primitive idempotents of xBur mapping into it
};
struct HomSplitting {
  Subgroup source, target;  // k[G/K] -> k[G/L]
  std::size_t hom_dimension = 0;
  std::vector<std::size_t> pieces;  // dim b.Hom per block
  bool orthogonal = false;          // block actions are orthogonal idempotents summing to 1
  bool two_sided = false;           // b acts the same on either side and preserves Hom
  bool complete = false;            // piece dimensions sum to the Hom dimension
};
struct MotivicDecompositionReport {
  FiniteGroup group;
  Field field;
  std::size_t crossed_dimension = 0;
  std::size_t center_dimension = 0;
  std::vector<Vector> general_motives;  // primitive idempotents of xBur
  std::vector<std::size_t> vanishing;   // those with zero image
  std::vector<BlockSummary> blocks;
  std::vector<HomSplitting> splittings;  // over all pairs of transitive permutation modules
  bool burnside_images_trivial = false;  // rho of each Burnside-subring idempotent is 0 or 1
  bool ok = false;
};
MotivicDecompositionReport motivic_decomposition_report(const FiniteGroup& g, const Field& field);

/// Action of a central element of kG on k[X] for a left G-set X.
Matrix central_action(const CenterAlgebra& z, const Vector& coordinates, const Biset& x);

}  // namespace mot2
