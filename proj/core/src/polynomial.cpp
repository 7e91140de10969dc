#include "mot2/polynomial.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mot2 {

Polynomial::Polynomial(Field field, Vector coefficients) : field_(std::move(field)), c_(std::move(coefficients)) {
  for (const auto& s : c_)
    if (s.field() != field_) throw std::invalid_argument("coefficient over the wrong field");
  trim();
}

Polynomial Polynomial::constant(const Field& f, const Scalar& c) { return Polynomial(f, {c}); }

Polynomial Polynomial::monomial(const Field& f, std::size_t degree) {
  Vector c = zero_vector(f, degree + 1);
  c[degree] = Scalar::one(f);
  return Polynomial(f, std::move(c));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Polynomial::operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Scalar::zero(field_); }

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

Polynomial Polynomial::derivative() const {
  Vector d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Scalar(field_, static_cast<long long>(i)));
  return Polynomial(field_, std::move(d));
}

Scalar Polynomial::evaluate(const Scalar& x) const {
  Scalar acc = Scalar::zero(field_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Vector r = zero_vector(field_, std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o.scaled(Scalar(field_, -1LL)); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial(field_, {});
  Vector r = zero_vector(field_, c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j].add_product(c_[i], o.c_[j]);
  }
  return Polynomial(field_, std::move(r));
}

Polynomial Polynomial::scaled(const Scalar& s) const {
  Vector r = c_;
  for (auto& x : r) x *= s;
  return Polynomial(field_, std::move(r));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0 || !c_[i].is_one()) out << c_[i].to_short_string();
    if (i > 0) out << (c_[i].is_one() ? "" : "*") << "t" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return out.str();
}

PolynomialDivision divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Polynomial(f, {}), a};
  Vector rem = a.coefficients();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  Vector quo = zero_vector(f, rem.size() - db);
  const Scalar inv = b.leading().inverse();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i].is_zero()) continue;
    Scalar q = rem[i] * inv;
    quo[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j].sub_product(q, b.coefficients()[j]);
  }
  rem.resize(db);
  return {Polynomial(f, std::move(quo)), Polynomial(f, std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  const Field& f = a.field();
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(f, Scalar::one(f)), s1(f, {});
  Polynomial t0(f, {}), t1 = Polynomial::constant(f, Scalar::one(f));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar inv = r0.leading().inverse();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

Polynomial pow_mod(const Polynomial& base, const mpz_class& exponent, const Polynomial& modulus) {
  const Field& f = base.field();
  Polynomial result = divmod(Polynomial::constant(f, Scalar::one(f)), modulus).remainder;
  Polynomial b = divmod(base, modulus).remainder;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, modulus).remainder;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = divmod(result * b, modulus).remainder;
  }
  return result;
}

namespace {

Polynomial one(const Field& f) { return Polynomial::constant(f, Scalar::one(f)); }

bool factor_less(const Factor& a, const Factor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  const auto& x = a.factor.coefficients();
  const auto& y = b.factor.coefficients();
  for (std::size_t i = x.size(); i-- > 0;)
    if (x[i] != y[i]) return x[i] < y[i];
  return a.multiplicity < b.multiplicity;
}

// g(t) with g(t^p) = c, over F_p.
Polynomial pth_root(const Polynomial& c, std::uint64_t p) {
  Vector r;
  for (std::size_t i = 0; i < c.coefficients().size(); i += p) r.push_back(c.coefficients()[i]);
  return Polynomial(c.field(), std::move(r));
}

// Berlekamp: irreducible factors of a monic square-free polynomial over F_p.
std::vector<Polynomial> berlekamp(const Polynomial& f) {
  const Field& fld = f.field();
  const std::uint64_t p = fld.characteristic();
  const std::size_t n = static_cast<std::size_t>(f.degree());
  if (n <= 1) return {f};
  Polynomial xp = pow_mod(Polynomial::monomial(fld, 1), mpz_class(std::to_string(p)), f);
  // column i: t^(i p) mod f
  Matrix q(fld, n, n);
  Polynomial col = one(fld);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) q(j, i) = col[j];
    col = divmod(col * xp, f).remainder;
  }
  auto kernel = nullspace(q - Matrix::identity(fld, n));
  const std::size_t r = kernel.size();
  if (r == 1) return {f};
  std::vector<Polynomial> basis;
  for (auto& v : kernel) basis.emplace_back(fld, std::move(v));

  std::vector<Polynomial> factors{f};
  if (p <= 257) {
    for (const auto& v : basis) {
      if (factors.size() == r) break;
      std::vector<Polynomial> next;
      for (const auto& u : factors) {
        if (u.degree() == 1) {
          next.push_back(u);
          continue;
        }
        for (std::uint64_t s = 0; s < p; ++s) {
          Polynomial h = gcd(u, v - Polynomial::constant(fld, Scalar(fld, static_cast<long long>(s))));
          if (h.degree() >= 1) next.push_back(std::move(h));
        }
      }
      factors = std::move(next);
    }
  } else {
    std::mt19937_64 rng(0x5eedULL + n);
    const mpz_class half = (mpz_class(std::to_string(p)) - 1) / 2;
    while (factors.size() < r) {
      Polynomial w(fld, {});
      for (const auto& v : basis) w = w + v.scaled(Scalar(fld, mpz_class(std::to_string(rng() % p))));
      std::vector<Polynomial> next;
      for (const auto& u : factors) {
        if (u.degree() == 1) {
          next.push_back(u);
          continue;
        }
        Polynomial h = gcd(u, pow_mod(w, half, u) - one(fld));
        if (h.degree() >= 1 && h.degree() < u.degree()) {
          next.push_back(divmod(u, h).quotient.monic());
          next.push_back(std::move(h));
        } else {
          next.push_back(u);
        }
      }
      factors = std::move(next);
    }
  }
  if (factors.size() != r) throw std::logic_error("Berlekamp splitting incomplete");
  return factors;
}

// ---- integer polynomials for Zassenhaus ----

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  ztrim(r);
  return r;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, int sign = 1) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += sign * b[i];
  ztrim(r);
  return r;
}

// Coefficients reduced to [0, m).
ZPoly zmod(ZPoly a, const mpz_class& m) {
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
  }
  ztrim(a);
  return a;
}

// Coefficients reduced to (-m/2, m/2].
ZPoly zsymmetric(ZPoly a, const mpz_class& m) {
  a = zmod(std::move(a), m);
  const mpz_class half = m / 2;
  for (auto& c : a)
    if (c > half) c -= m;
  ztrim(a);
  return a;
}

// Division by a monic polynomial over Z.
std::pair<ZPoly, ZPoly> zdivmod_monic(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {{}, a};
  ZPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    mpz_class c = a[i];
    if (c == 0) continue;
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  a.resize(db);
  ztrim(a);
  ztrim(q);
  return {q, a};
}

Polynomial to_fp(const ZPoly& a, const Field& f) {
  Vector c;
  for (const auto& x : a) c.emplace_back(f, x);
  return Polynomial(f, std::move(c));
}

ZPoly from_fp(const Polynomial& a) {
  ZPoly r;
  for (const auto& c : a.coefficients()) r.emplace_back(std::to_string(c.residue()));
  return r;
}

struct Lifted {
  ZPoly g, h, s, t;
};

// One quadratic Hensel step from modulus m to m^2; f = g h, s g + t h = 1, h monic.
Lifted hensel_step(const mpz_class& m, const ZPoly& f, const Lifted& in) {
  const mpz_class mm = m * m;
  ZPoly e = zmod(zadd(f, zmul(in.g, in.h), -1), mm);
  auto [q, r] = zdivmod_monic(zmod(zmul(in.s, e), mm), in.h);
  q = zmod(q, mm);
  r = zmod(r, mm);
  Lifted out;
  out.g = zmod(zadd(zadd(in.g, zmul(in.t, e)), zmul(q, in.g)), mm);
  out.h = zmod(zadd(in.h, r), mm);
  ZPoly b = zmod(zadd(zadd(zmul(in.s, out.g), zmul(in.t, out.h)), ZPoly{1}, -1), mm);
  auto [c, d] = zdivmod_monic(zmod(zmul(in.s, b), mm), out.h);
  out.s = zmod(zadd(in.s, d, -1), mm);
  out.t = zmod(zadd(zadd(in.t, zmul(in.t, b), -1), zmul(zmod(c, mm), out.g), -1), mm);
  return out;
}

// Lifts monic factors of f mod p to factors mod p^(2^steps).
std::vector<ZPoly> multifactor_lift(const ZPoly& f, const std::vector<Polynomial>& factors, std::uint64_t p,
                                    std::size_t steps) {
  if (factors.size() == 1) {
    mpz_class m = p;
    for (std::size_t i = 0; i < steps; ++i) m *= m;
    return {zmod(f, m)};
  }
  const Field fp = Field::prime(p);
  const std::size_t half = factors.size() / 2;
  Polynomial g0 = one(fp), h0 = one(fp);
  for (std::size_t i = 0; i < factors.size(); ++i) (i < half ? g0 : h0) = (i < half ? g0 : h0) * factors[i];
  auto eg = extended_gcd(g0, h0);
  Lifted cur{from_fp(g0), from_fp(h0), from_fp(eg.s), from_fp(eg.t)};
  mpz_class m = p;
  for (std::size_t i = 0; i < steps; ++i) {
    cur = hensel_step(m, f, cur);
    m *= m;
  }
  std::vector<Polynomial> left(factors.begin(), factors.begin() + half), right(factors.begin() + half, factors.end());
  auto a = multifactor_lift(cur.g, left, p, steps);
  auto b = multifactor_lift(cur.h, right, p, steps);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Irreducible factors over Z of a monic square-free integer polynomial.
std::vector<ZPoly> zassenhaus_monic(const ZPoly& f) {
  const std::size_t n = f.size() - 1;
  if (n <= 1) return {f};
  // choose the prime with the fewest modular factors among a few candidates
  std::uint64_t best_p = 0;
  std::vector<Polynomial> best;
  std::size_t tried = 0;
  for (std::uint64_t p = 3; tried < 5 && p < 10000; p += 2) {
    if (!is_prime_number(p)) continue;
    const Field fp = Field::prime(p);
    Polynomial fbar = to_fp(f, fp);
    if (gcd(fbar, fbar.derivative()).degree() != 0) continue;
    ++tried;
    auto fs = berlekamp(fbar);
    if (best_p == 0 || fs.size() < best.size()) {
      best_p = p;
      best = std::move(fs);
    }
    if (best.size() == 1) return {f};
  }
  if (best_p == 0) throw std::logic_error("no suitable prime for factorization");

  mpz_class maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, mpz_class(abs(c)));
  mpz_class bound = maxc * (n + 1) * 4;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  std::size_t steps = 0;
  mpz_class m = best_p;
  while (m <= bound) {
    m *= m;
    ++steps;
  }
  auto lifted = multifactor_lift(f, best, best_p, steps);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<ZPoly> pool = lifted;
  for (std::size_t size = 1; 2 * size <= pool.size();) {
    bool found = false;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      ZPoly cand{1};
      for (auto i : pick) cand = zmod(zmul(cand, pool[i]), m);
      cand = zsymmetric(cand, m);
      auto [q, r] = zdivmod_monic(rest, cand);
      if (r.empty()) {
        result.push_back(cand);
        rest = q;
        for (std::size_t i = size; i-- > 0;) pool.erase(pool.begin() + static_cast<long>(pick[i]));
        found = true;
        break;
      }
      // next combination
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == pool.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (rest.size() > 1) result.push_back(rest);
  return result;
}

mpz_class content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// Irreducible monic factors over Q of a monic square-free rational polynomial.
std::vector<Polynomial> factor_rational_square_free(const Polynomial& f) {
  const Field q = f.field();
  if (f.degree() <= 1) return {f};
  mpz_class den = 1;
  for (const auto& c : f.coefficients()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.rational().get_den_mpz_t());
  ZPoly z;
  for (const auto& c : f.coefficients()) z.push_back(mpz_class(c.rational() * den));
  mpz_class cont = content(z);
  for (auto& c : z) c /= cont;
  const std::size_t n = z.size() - 1;
  const mpz_class lc = z.back();
  // monic transform: lc^(n-1) f(t / lc)
  ZPoly monic(n + 1);
  mpz_class power = 1;
  for (std::size_t i = n + 1; i-- > 0;) {
    // coefficient i gets lc^(n-1-i); computed downward from i = n - 1
    if (i == n) {
      monic[i] = 1;
      continue;
    }
    monic[i] = z[i] * power;
    power *= lc;
  }
  std::vector<Polynomial> out;
  for (const auto& g : zassenhaus_monic(monic)) {
    // back: g(lc t), then make monic over Q
    Vector c;
    mpz_class scale = 1;
    for (const auto& x : g) {
      c.emplace_back(q, mpq_class(x * scale));
      scale *= lc;
    }
    out.push_back(Polynomial(q, std::move(c)).monic());
  }
  return out;
}

}  // namespace

std::vector<Factor> square_free_decomposition(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("square-free decomposition of zero");
  const Field& fld = f.field();
  std::vector<Factor> out;
  Polynomial c = gcd(f, f.derivative());
  Polynomial w = divmod(f.monic(), c).quotient;
  for (std::size_t i = 1; w.degree() > 0; ++i) {
    Polynomial y = gcd(w, c);
    Polynomial z = divmod(w, y).quotient;
    if (z.degree() > 0) out.push_back({z.monic(), i});
    w = y;
    c = divmod(c, y).quotient;
  }
  if (c.degree() > 0) {
    const std::uint64_t p = fld.characteristic();
    for (auto& [g, m] : square_free_decomposition(pth_root(c.monic(), p))) out.push_back({g, m * p});
  }
  return out;
}

std::vector<Factor> factor(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("factorization of zero");
  std::vector<Factor> out;
  for (const auto& [g, m] : square_free_decomposition(f)) {
    auto parts = f.field().is_prime() ? berlekamp(g) : factor_rational_square_free(g);
    for (auto& h : parts) out.push_back({h.monic(), m});
  }
  std::sort(out.begin(), out.end(), factor_less);
  return out;
}

}  // namespace mot2
