#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace mot2 {

/// Coefficient field: either the rationals or a prime field F_p.
class Field {
 public:
  Field() = default;  // the rationals

  static Field rational() { return Field(); }
  /// Throws std::invalid_argument unless p is prime and below 2^62.
  static Field prime(std::uint64_t p);
  /// Accepts "Q", "Fp:<p>" and the shorthand "F<p>".
  static Field parse(std::string_view spec);

  bool is_rational() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  std::uint64_t characteristic() const { return p_; }
  std::string to_string() const;

  bool operator==(const Field&) const = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime_number(std::uint64_t n);

/// An exact field element. F_p residues are kept in [0, p); rationals are
/// always canonical (lowest terms, positive denominator).
class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(const Field& field, long long value);
  Scalar(const Field& field, const mpq_class& value);
  Scalar(const Field& field, const mpz_class& value);

  static Scalar zero(const Field& f) { return Scalar(f, 0LL); }
  static Scalar one(const Field& f) { return Scalar(f, 1LL); }

  /// Parses "Fp:<p>:<residue>" or "Q:<num>/<den>".
  static Scalar parse(std::string_view text);

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// F_p residue; only meaningful over a prime field.
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  /// Rational value; only meaningful over Q.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  /// Throws std::domain_error on zero.
  Scalar inverse() const;

  /// this += a * b, without temporaries on the F_p path.
  void add_product(const Scalar& a, const Scalar& b);
  /// this -= a * b.
  void sub_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  bool operator==(const Scalar& other) const;
  bool operator!=(const Scalar& other) const { return !(*this == other); }
  /// Total order used only for canonical sorting (not the field order).
  bool operator<(const Scalar& other) const;

  /// "Fp:<p>:<residue>" or "Q:<num>/<den>".
  std::string to_string() const;
  /// Short human form: residue or "num/den".
  std::string to_short_string() const;

 private:
  void check_same_field(const Scalar& other) const;

  std::uint64_t p_ = 0;
  std::variant<std::uint64_t, mpq_class> value_ = mpq_class(0);
};

}  // namespace mot2
