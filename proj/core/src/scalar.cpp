#include "mot2/scalar.hpp"

#include <charconv>
#include <stdexcept>

namespace mot2 {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("not an unsigned integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (!is_prime_number(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  }
  if (p >= (1ULL << 62)) throw std::invalid_argument("prime too large");
  return Field(p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "Q") return rational();
  if (spec.starts_with("Fp:")) return prime(parse_u64(spec.substr(3)));
  if (spec.starts_with("F") && spec.size() > 1) return prime(parse_u64(spec.substr(1)));
  throw std::invalid_argument("invalid field spec '" + std::string(spec) + "' (expected Q or Fp:<p>)");
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "Fp:" + std::to_string(p_);
}

Scalar::Scalar(const Field& field, long long value) : p_(field.characteristic()) {
  if (p_ == 0) {
    value_ = mpq_class(static_cast<long>(value));
  } else {
    long long m = value % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    value_ = static_cast<std::uint64_t>(m);
  }
}

Scalar::Scalar(const Field& field, const mpq_class& value) : p_(field.characteristic()) {
  if (p_ == 0) {
    mpq_class q = value;
    q.canonicalize();
    value_ = std::move(q);
    return;
  }
  std::uint64_t num = reduce(value.get_num(), p_);
  std::uint64_t den = reduce(value.get_den(), p_);
  if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
  value_ = mul_mod(num, pow_mod(den, p_ - 2, p_), p_);
}

Scalar::Scalar(const Field& field, const mpz_class& value) : Scalar(field, mpq_class(value)) {}

Scalar Scalar::parse(std::string_view text) {
  if (text.starts_with("Fp:")) {
    auto rest = text.substr(3);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("malformed F_p scalar");
    Field f = Field::prime(parse_u64(rest.substr(0, colon)));
    std::uint64_t r = parse_u64(rest.substr(colon + 1));
    if (r >= f.characteristic()) throw std::invalid_argument("residue out of range");
    return Scalar(f, static_cast<long long>(r));
  }
  if (text.starts_with("Q:")) {
    mpq_class q;
    if (q.set_str(std::string(text.substr(2)), 10) != 0) throw std::invalid_argument("malformed rational");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    return Scalar(Field::rational(), q);
  }
  throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
}

Field Scalar::field() const { return Field(p_); }

bool Scalar::is_zero() const {
  if (p_ == 0) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const {
  if (p_ == 0) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint64_t>(value_) == 1;
}

void Scalar::check_same_field(const Scalar& other) const {
  if (p_ != other.p_) throw std::invalid_argument("scalar field mismatch");
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (p_ == 0) {
    auto& q = std::get<mpq_class>(r.value_);
    q = -q;
  } else {
    auto& v = std::get<std::uint64_t>(r.value_);
    v = v == 0 ? 0 : p_ - v;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same_field(other);
  if (p_ == 0) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v += std::get<std::uint64_t>(other.value_);
    if (v >= p_) v -= p_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  check_same_field(other);
  if (p_ == 0) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    std::uint64_t o = std::get<std::uint64_t>(other.value_);
    v = v >= o ? v - o : v + p_ - o;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same_field(other);
  if (p_ == 0) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v = mul_mod(v, std::get<std::uint64_t>(other.value_), p_);
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Scalar r = *this;
  if (p_ == 0) {
    auto& q = std::get<mpq_class>(r.value_);
    q = 1 / q;
  } else {
    auto& v = std::get<std::uint64_t>(r.value_);
    v = pow_mod(v, p_ - 2, p_);
  }
  return r;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  check_same_field(other);
  return *this *= other.inverse();
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  check_same_field(a);
  check_same_field(b);
  if (p_ == 0) {
    mpq_class t = std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_);
    std::get<mpq_class>(value_) += t;
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    v += mul_mod(std::get<std::uint64_t>(a.value_), std::get<std::uint64_t>(b.value_), p_);
    if (v >= p_) v -= p_;
  }
}

void Scalar::sub_product(const Scalar& a, const Scalar& b) {
  check_same_field(a);
  check_same_field(b);
  if (p_ == 0) {
    mpq_class t = std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_);
    std::get<mpq_class>(value_) -= t;
  } else {
    auto& v = std::get<std::uint64_t>(value_);
    std::uint64_t o = mul_mod(std::get<std::uint64_t>(a.value_), std::get<std::uint64_t>(b.value_), p_);
    v = v >= o ? v - o : v + p_ - o;
  }
}

bool Scalar::operator==(const Scalar& other) const {
  if (p_ != other.p_) return false;
  if (p_ == 0) return std::get<mpq_class>(value_) == std::get<mpq_class>(other.value_);
  return std::get<std::uint64_t>(value_) == std::get<std::uint64_t>(other.value_);
}

bool Scalar::operator<(const Scalar& other) const {
  if (p_ != other.p_) return p_ < other.p_;
  if (p_ == 0) return std::get<mpq_class>(value_) < std::get<mpq_class>(other.value_);
  return std::get<std::uint64_t>(value_) < std::get<std::uint64_t>(other.value_);
}

std::string Scalar::to_string() const {
  if (p_ == 0) {
    const auto& q = std::get<mpq_class>(value_);
    return "Q:" + q.get_num().get_str() + "/" + q.get_den().get_str();
  }
  return "Fp:" + std::to_string(p_) + ":" + std::to_string(std::get<std::uint64_t>(value_));
}

std::string Scalar::to_short_string() const {
  if (p_ == 0) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint64_t>(value_));
}

}  // namespace mot2
