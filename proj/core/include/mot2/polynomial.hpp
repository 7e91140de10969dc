#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mot2/matrix.hpp"
#include "mot2/scalar.hpp"

namespace mot2 {

/// A univariate polynomial over a Field, coefficients from degree 0 upwards
/// with no trailing zeros (the zero polynomial has none).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Field field, Vector coefficients);
  static Polynomial constant(const Field& f, const Scalar& c);
  /// t^degree
  static Polynomial monomial(const Field& f, std::size_t degree);

  const Field& field() const { return field_; }
  const Vector& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for zero.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  /// Coefficient of t^i (zero past the degree).
  Scalar operator[](std::size_t i) const;
  const Scalar& leading() const { return c_.back(); }
  Polynomial monic() const;
  Polynomial derivative() const;
  Scalar evaluate(const Scalar& x) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& s) const;
  bool operator==(const Polynomial& o) const { return field_ == o.field_ && c_ == o.c_; }

  std::string to_string() const;

 private:
  void trim();
  Field field_;
  Vector c_;
};

struct PolynomialDivision {
  Polynomial quotient, remainder;
};
/// Throws std::domain_error on division by zero.
PolynomialDivision divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
struct ExtendedGcd {
  Polynomial gcd, s, t;  // s a + t b = gcd, gcd monic
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);
/// base^exponent mod modulus.
Polynomial pow_mod(const Polynomial& base, const mpz_class& exponent, const Polynomial& modulus);

struct Factor {
  Polynomial factor;  // monic irreducible
  std::size_t multiplicity;
};
/// Monic irreducible factorization of a nonzero polynomial, factors sorted by
/// (degree, coefficients). Over F_p by Berlekamp's algorithm, over Q by
/// Zassenhaus (factor modulo a small prime, Hensel lift, recombine).
std::vector<Factor> factor(const Polynomial& f);

/// Square-free decomposition: f = lc * prod g_i^i with g_i monic, square-free, coprime.
std::vector<Factor> square_free_decomposition(const Polynomial& f);

}  // namespace mot2
