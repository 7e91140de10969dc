#include "mot2/burnside.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace mot2 {

CommutativeAlgebra::CommutativeAlgebra(Field field, std::vector<std::string> labels,
                                       std::vector<std::vector<Vector>> product, Vector identity)
    : field_(std::move(field)), labels_(std::move(labels)), product_(std::move(product)), identity_(std::move(identity)) {
  const std::size_t n = labels_.size();
  if (product_.size() != n || identity_.size() != n) throw std::invalid_argument("structure constants of wrong size");
  for (const auto& row : product_) {
    if (row.size() != n) throw std::invalid_argument("structure constants of wrong size");
    for (const auto& v : row)
      if (v.size() != n) throw std::invalid_argument("structure constants of wrong size");
  }
}

Vector CommutativeAlgebra::basis_vector(std::size_t i) const {
  Vector v = zero();
  v[i] = Scalar::one(field_);
  return v;
}

Vector CommutativeAlgebra::multiply(const Vector& a, const Vector& b) const {
  Vector r = zero();
  const std::size_t n = dimension();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar c = a[i] * b[j];
      const Vector& p = product_[i][j];
      for (std::size_t k = 0; k < n; ++k)
        if (!p[k].is_zero()) r[k].add_product(c, p[k]);
    }
  }
  return r;
}

Vector CommutativeAlgebra::add(const Vector& a, const Vector& b) const {
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector CommutativeAlgebra::subtract(const Vector& a, const Vector& b) const {
  Vector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector CommutativeAlgebra::scale(const Scalar& s, const Vector& a) const {
  Vector r = a;
  for (auto& x : r) x *= s;
  return r;
}

Vector CommutativeAlgebra::power(const Vector& a, const mpz_class& exponent) const {
  Vector result = identity_;
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = multiply(result, result);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = multiply(result, a);
  }
  return result;
}

Matrix CommutativeAlgebra::multiplication_matrix(const Vector& a) const {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < dimension(); ++j) cols.push_back(multiply(a, basis_vector(j)));
  return Matrix::from_columns(field_, dimension(), cols);
}

namespace {

Vector evaluate_with_unit(const CommutativeAlgebra& alg, const Polynomial& p, const Vector& a, const Vector& unit) {
  Vector acc = alg.zero();
  const auto& c = p.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) acc = alg.add(alg.multiply(acc, a), alg.scale(c[i], unit));
  return acc;
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

}  // namespace

Vector CommutativeAlgebra::evaluate(const Polynomial& p, const Vector& a) const {
  return evaluate_with_unit(*this, p, a, identity_);
}

Polynomial CommutativeAlgebra::minimal_polynomial(const Vector& a, const Vector& e) const {
  std::vector<Vector> powers;
  Vector cur = e;
  while (true) {
    if (powers.empty()) {
      if (is_zero_vector(cur)) return Polynomial::constant(field_, Scalar::one(field_));
    } else {
      Matrix cols = Matrix::from_columns(field_, dimension(), powers);
      if (auto c = coordinates_in(cols, cur)) {
        Vector coeffs(powers.size() + 1, Scalar::zero(field_));
        for (std::size_t i = 0; i < powers.size(); ++i) coeffs[i] = -(*c)[i];
        coeffs.back() = Scalar::one(field_);
        return Polynomial(field_, std::move(coeffs));
      }
    }
    powers.push_back(cur);
    cur = multiply(cur, a);
  }
}

bool CommutativeAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < dimension(); ++i)
    for (std::size_t j = i + 1; j < dimension(); ++j)
      if (product_[i][j] != product_[j][i]) return false;
  return true;
}

bool CommutativeAlgebra::is_associative() const {
  const std::size_t n = dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (multiply(product_[i][j], basis_vector(k)) != multiply(basis_vector(i), product_[j][k])) return false;
  return true;
}

bool CommutativeAlgebra::is_unital() const {
  for (std::size_t i = 0; i < dimension(); ++i)
    if (multiply(identity_, basis_vector(i)) != basis_vector(i)) return false;
  return true;
}

std::string CommutativeAlgebra::format(const Vector& v) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    if (!v[i].is_one()) out << v[i].to_short_string() << "*";
    out << labels_[i];
  }
  return first ? "0" : out.str();
}

// ---- crossed Burnside algebra ----

namespace {

bool pair_less(const Subgroup& h1, std::size_t a1, const Subgroup& h2, std::size_t a2) {
  if (h1.elements() != h2.elements()) return h1.elements() < h2.elements();
  return a1 < a2;
}

std::string subgroup_label(const Subgroup& h) {
  const FiniteGroup& g = h.group();
  std::vector<std::size_t> gens;
  Subgroup cur = trivial_subgroup(g);
  for (auto e : h.elements())
    if (!cur.contains(e)) {
      gens.push_back(e);
      cur = generate_subgroup(g, gens);
    }
  if (gens.empty()) return "1";
  std::string s = "<";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + format_cycles(g.element(gens[i]));
  return s + ">";
}

}  // namespace

XBurBasisElement canonical_pair(const Subgroup& h, std::size_t a) {
  const FiniteGroup& G = h.group();
  XBurBasisElement best{h, a};
  for (std::size_t g = 1; g < G.order(); ++g) {
    Subgroup c = conjugate(h, g);
    std::size_t b = G.conj(g, a);
    if (pair_less(c, b, best.subgroup, best.element)) best = {std::move(c), b};
  }
  return best;
}

std::size_t CrossedBurnside::position(const Subgroup& h, std::size_t a) const {
  XBurBasisElement c = canonical_pair(h, a);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i].element == c.element && basis[i].subgroup == c.subgroup) return i;
  throw std::invalid_argument("pair is not a crossed Burnside basis element");
}

CrossedBurnside crossed_burnside(const FiniteGroup& g, const Field& field) {
  CrossedBurnside x;
  x.group = g;
  std::vector<XBurBasisElement> reps;
  for (const auto& h : all_subgroups(g)) {
    const Subgroup c_h = centralizer(h);
    for (auto a : c_h.elements()) {
      XBurBasisElement c = canonical_pair(h, a);
      if (c.subgroup == h && c.element == a) reps.push_back(std::move(c));
    }
  }
  std::sort(reps.begin(), reps.end(), [](const XBurBasisElement& p, const XBurBasisElement& q) {
    if (p.subgroup.order() != q.subgroup.order()) return p.subgroup.order() < q.subgroup.order();
    return pair_less(p.subgroup, p.element, q.subgroup, q.element);
  });
  x.basis = std::move(reps);
  const std::size_t n = x.basis.size();

  std::map<std::pair<std::vector<std::size_t>, std::size_t>, std::size_t> where;
  for (std::size_t i = 0; i < n; ++i) where[{x.basis[i].subgroup.elements(), x.basis[i].element}] = i;
  auto locate = [&](const Subgroup& h, std::size_t a) {
    XBurBasisElement c = canonical_pair(h, a);
    return where.at({c.subgroup.elements(), c.element});
  };

  std::vector<std::string> labels;
  for (const auto& b : x.basis) labels.push_back("[" + subgroup_label(b.subgroup) + "," + format_cycles(g.element(b.element)) + "]");
  std::vector<std::vector<Vector>> prod(n, std::vector<Vector>(n, zero_vector(field, n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Subgroup& k = x.basis[i].subgroup;
      const Subgroup& h = x.basis[j].subgroup;
      const std::size_t b = x.basis[i].element, a = x.basis[j].element;
      for (auto r : double_cosets(k, h))
        prod[i][j][locate(intersection(k, conjugate(h, r)), g.mul(b, g.conj(r, a)))] += Scalar::one(field);
    }
  Vector unit = zero_vector(field, n);
  unit[locate(whole_group(g), FiniteGroup::identity())] = Scalar::one(field);
  x.algebra = CommutativeAlgebra(field, std::move(labels), std::move(prod), std::move(unit));
  return x;
}

// ---- center of the group algebra ----

Vector CenterAlgebra::from_group_algebra(const Vector& element) const {
  Vector c;
  for (const auto& cls : classes) {
    c.push_back(element[cls.front()]);
    for (auto x : cls)
      if (element[x] != c.back()) throw std::invalid_argument("element is not central");
  }
  return c;
}

Vector CenterAlgebra::to_group_algebra(const Vector& coordinates) const {
  Vector e = zero_vector(algebra.field(), group.order());
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (auto x : classes[i]) e[x] = coordinates[i];
  return e;
}

CenterAlgebra center_group_algebra(const FiniteGroup& g, const Field& field) {
  CenterAlgebra z;
  z.group = g;
  z.classes = conjugacy_classes(g);
  const std::size_t n = z.classes.size();
  std::vector<std::size_t> class_of(g.order());
  for (std::size_t i = 0; i < n; ++i)
    for (auto x : z.classes[i]) class_of[x] = i;
  std::vector<std::string> labels;
  for (const auto& cls : z.classes) labels.push_back("K" + format_cycles(g.element(cls.front())));
  std::vector<std::vector<Vector>> prod(n, std::vector<Vector>(n, zero_vector(field, n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<long long> count(n, 0);
      for (auto a : z.classes[i])
        for (auto b : z.classes[j]) ++count[class_of[g.mul(a, b)]];
      for (std::size_t k = 0; k < n; ++k)
        prod[i][j][k] = Scalar(field, count[k] / static_cast<long long>(z.classes[k].size()));
    }
  Vector unit = zero_vector(field, n);
  unit[class_of[FiniteGroup::identity()]] = Scalar::one(field);
  z.algebra = CommutativeAlgebra(field, std::move(labels), std::move(prod), std::move(unit));
  return z;
}

// ---- homomorphisms ----

AlgebraHom::AlgebraHom(CommutativeAlgebra source, CommutativeAlgebra target, Matrix m)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(m)) {
  if (matrix_.rows() != target_.dimension() || matrix_.cols() != source_.dimension())
    throw std::invalid_argument("algebra map of wrong shape");
  if ((*this)(source_.identity()) != target_.identity()) throw std::invalid_argument("algebra map is not unital");
  for (std::size_t i = 0; i < source_.dimension(); ++i)
    for (std::size_t j = i; j < source_.dimension(); ++j)
      if ((*this)(source_.product(i, j)) != target_.multiply(matrix_.column(i), matrix_.column(j)))
        throw std::invalid_argument("algebra map is not multiplicative");
}

Vector AlgebraHom::operator()(const Vector& a) const { return matrix_ * std::span<const Scalar>(a); }

bool AlgebraHom::is_surjective() const { return rank(matrix_) == target_.dimension(); }

Comparison comparison_homomorphism(const FiniteGroup& g, const Field& field) {
  Comparison c{crossed_burnside(g, field), center_group_algebra(g, field), {}};
  std::vector<Vector> cols;
  for (const auto& b : c.crossed.basis) {
    Vector e = zero_vector(field, g.order());
    for (auto x : coset_representatives(b.subgroup, CosetSide::Left)) e[g.conj(x, b.element)] += Scalar::one(field);
    cols.push_back(c.center.from_group_algebra(e));
  }
  c.rho = AlgebraHom(c.crossed.algebra, c.center.algebra,
                     Matrix::from_columns(field, c.center.algebra.dimension(), cols));
  return c;
}

// ---- idempotents ----

namespace {

bool vector_less(const Vector& a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return b[i] < a[i];  // larger leading coordinates first
  return false;
}

// Splits the idempotent e along the primary decomposition of the minimal
// polynomial of y in eA.
std::vector<Vector> split_by(const CommutativeAlgebra& alg, const Vector& y, const Vector& e) {
  Polynomial mu = alg.minimal_polynomial(y, e);
  auto fs = factor(mu);
  if (fs.size() <= 1) return {e};
  std::vector<Vector> out;
  const Field& f = alg.field();
  for (const auto& [p, m] : fs) {
    Polynomial q = Polynomial::constant(f, Scalar::one(f));
    for (std::size_t i = 0; i < m; ++i) q = q * p;
    Polynomial cofactor = divmod(mu, q).quotient;
    auto eg = extended_gcd(cofactor, q);  // s cofactor + t q = 1
    Polynomial selector = divmod(eg.s * cofactor, mu).remainder;
    out.push_back(evaluate_with_unit(alg, selector, y, e));
  }
  return out;
}

std::vector<Vector> primitive_idempotents_fp(const CommutativeAlgebra& alg) {
  const Field& f = alg.field();
  const mpz_class p(std::to_string(f.characteristic()));
  const std::size_t n = alg.dimension();
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < n; ++i) {
    Vector b = alg.basis_vector(i);
    cols.push_back(alg.subtract(alg.power(b, p), b));
  }
  auto fixed = nullspace(Matrix::from_columns(f, n, cols));
  std::vector<Vector> idem{alg.identity()};
  for (const auto& b : fixed) {
    if (idem.size() == fixed.size()) break;
    std::vector<Vector> next;
    for (const auto& e : idem)
      for (auto& piece : split_by(alg, alg.multiply(b, e), e)) next.push_back(std::move(piece));
    idem = std::move(next);
  }
  if (idem.size() != fixed.size()) throw std::runtime_error("cannot split the Frobenius-fixed subalgebra");
  return idem;
}

std::vector<Vector> primitive_idempotents_q(const CommutativeAlgebra& alg) {
  const Field& f = alg.field();
  const std::size_t n = alg.dimension();
  // Tr(L_w) = sum_k w_k Tr(L_k); for w in eA this is also the trace on eA
  Vector traces(n, Scalar::zero(f));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) traces[k] += alg.product(k, j)[j];
  auto trace_of = [&](const Vector& w) {
    Scalar t = Scalar::zero(f);
    for (std::size_t k = 0; k < n; ++k)
      if (!w[k].is_zero()) t.add_product(w[k], traces[k]);
    return t;
  };

  std::vector<Vector> pending{alg.identity()};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vector> next;
    for (const auto& e : pending)
      for (auto& piece : split_by(alg, alg.multiply(alg.basis_vector(i), e), e)) next.push_back(std::move(piece));
    pending = std::move(next);
  }

  // Each piece e is certified primitive by an element y of eA whose minimal
  // polynomial is a power of one irreducible p with deg p = dim eA/rad(eA),
  // the latter being the rank of the trace form on eA.
  std::vector<Vector> out;
  std::mt19937_64 rng(20240601);
  while (!pending.empty()) {
    Vector e = std::move(pending.back());
    pending.pop_back();
    std::vector<Vector> spanning;
    for (std::size_t i = 0; i < n; ++i) spanning.push_back(alg.multiply(e, alg.basis_vector(i)));
    std::vector<Vector> local;
    for (auto pivot : rref(Matrix::from_columns(f, n, spanning)).pivots) local.push_back(spanning[pivot]);
    const std::size_t d = local.size();
    if (d == 1) {
      out.push_back(std::move(e));
      continue;
    }
    Matrix form(f, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) form(i, j) = trace_of(alg.multiply(local[i], local[j]));
    const std::size_t residue_degree = rank(form);
    bool settled = false;
    for (int attempt = 0; attempt < 64 && !settled; ++attempt) {
      const long long spread = 3LL << std::min(attempt, 40);
      Vector y = alg.zero();
      for (const auto& u : local)
        y = alg.add(y, alg.scale(Scalar(f, static_cast<long long>(rng() % (2 * spread + 1)) - spread), u));
      auto fs = factor(alg.minimal_polynomial(y, e));
      if (fs.size() > 1) {
        for (auto& piece : split_by(alg, y, e)) pending.push_back(std::move(piece));
        settled = true;
      } else if (static_cast<std::size_t>(fs[0].factor.degree()) == residue_degree) {
        out.push_back(std::move(e));
        settled = true;
      }
    }
    if (!settled) throw std::runtime_error("cannot split: no generic element found");
  }
  return out;
}

}  // namespace

std::vector<Vector> primitive_idempotents(const CommutativeAlgebra& a) {
  if (a.dimension() == 0) return {};
  auto out = a.field().is_prime() ? primitive_idempotents_fp(a) : primitive_idempotents_q(a);
  std::sort(out.begin(), out.end(), vector_less);
  return out;
}

Vector lift_idempotent(const Vector& e, const AlgebraHom& rho, const std::vector<Vector>& prims) {
  const auto& src = rho.source();
  const auto& tgt = rho.target();
  if (e == tgt.identity()) return src.identity();
  Vector lift = src.zero();
  for (const auto& f : prims) {
    Vector image = rho(f);
    if (is_zero_vector(image)) continue;
    if (tgt.multiply(image, e) == image) lift = src.add(lift, f);
  }
  if (rho(lift) != e || !src.is_idempotent(lift)) throw std::logic_error("idempotent does not lift");
  return lift;
}

Vector lift_idempotent(const Vector& e, const AlgebraHom& rho) {
  return lift_idempotent(e, rho, primitive_idempotents(rho.source()));
}

BurnsideSubring burnside_subring(const CrossedBurnside& x) {
  BurnsideSubring b;
  for (std::size_t i = 0; i < x.basis.size(); ++i)
    if (x.basis[i].element == FiniteGroup::identity()) b.embedding.push_back(i);
  const std::size_t n = b.embedding.size();
  const Field& f = x.algebra.field();
  std::vector<std::size_t> pos(x.basis.size(), n);
  for (std::size_t i = 0; i < n; ++i) pos[b.embedding[i]] = i;
  auto restrict_vector = [&](const Vector& v) {
    Vector r = zero_vector(f, n);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_zero()) continue;
      if (pos[k] == n) throw std::logic_error("Burnside subring is not closed");
      r[pos[k]] = v[k];
    }
    return r;
  };
  std::vector<std::string> labels;
  std::vector<std::vector<Vector>> prod(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(x.algebra.labels()[b.embedding[i]]);
    for (std::size_t j = 0; j < n; ++j) prod[i][j] = restrict_vector(x.algebra.product(b.embedding[i], b.embedding[j]));
  }
  b.algebra = CommutativeAlgebra(f, std::move(labels), std::move(prod), restrict_vector(x.algebra.identity()));
  return b;
}

Matrix central_action(const CenterAlgebra& z, const Vector& coordinates, const Biset& x) {
  const Field& f = z.algebra.field();
  Vector w = z.to_group_algebra(coordinates);
  Matrix m(f, x.size(), x.size());
  for (std::size_t g = 0; g < z.group.order(); ++g) {
    if (w[g].is_zero()) continue;
    for (Elem u = 0; u < x.size(); ++u) m(x.act_left(g, u), u) += w[g];
  }
  return m;
}

MotivicDecompositionReport motivic_decomposition_report(const FiniteGroup& g, const Field& field) {
  MotivicDecompositionReport r;
  r.group = g;
  r.field = field;
  Comparison c = comparison_homomorphism(g, field);
  const auto& xa = c.crossed.algebra;
  const auto& za = c.center.algebra;
  r.crossed_dimension = xa.dimension();
  r.center_dimension = za.dimension();
  r.general_motives = primitive_idempotents(xa);
  bool ok = c.rho.is_surjective();

  std::vector<Vector> images;
  for (std::size_t i = 0; i < r.general_motives.size(); ++i) {
    images.push_back(c.rho(r.general_motives[i]));
    if (is_zero_vector(images.back())) r.vanishing.push_back(i);
  }
  std::size_t assigned = r.vanishing.size();
  auto blocks = primitive_idempotents(za);
  for (const auto& b : blocks) {
    BlockSummary s;
    s.idempotent = b;
    s.lift = lift_idempotent(b, c.rho, r.general_motives);
    for (std::size_t i = 0; i < images.size(); ++i)
      if (!is_zero_vector(images[i]) && za.multiply(images[i], b) == images[i]) s.general.push_back(i);
    assigned += s.general.size();
    r.blocks.push_back(std::move(s));
  }
  ok = ok && assigned == r.general_motives.size();

  auto sub = burnside_subring(c.crossed);
  r.burnside_images_trivial = true;
  for (const auto& e : primitive_idempotents(sub.algebra)) {
    Vector full = xa.zero();
    for (std::size_t i = 0; i < e.size(); ++i) full[sub.embedding[i]] = e[i];
    Vector image = c.rho(full);
    if (!is_zero_vector(image) && image != za.identity()) r.burnside_images_trivial = false;
  }
  ok = ok && r.burnside_images_trivial;

  auto model = CosetModel::left_sets(g);
  auto reps = conjugacy_classes_of_subgroups(g);
  for (const auto& k : reps)
    for (const auto& l : reps) {
      HomSplitting hs;
      hs.source = k;
      hs.target = l;
      const Biset& x = model.cosets(k);
      const Biset& y = model.cosets(l);
      auto hom = hom_space(linearize(x, field), linearize(y, field));
      hs.hom_dimension = hom.size();
      std::vector<Matrix> on_x, on_y;
      for (const auto& b : r.blocks) {
        on_x.push_back(central_action(c.center, b.idempotent, x));
        on_y.push_back(central_action(c.center, b.idempotent, y));
      }
      hs.orthogonal = true;
      for (const auto* acts : {&on_x, &on_y}) {
        const std::size_t dim = (*acts)[0].rows();
        Matrix total(field, dim, dim);
        for (std::size_t i = 0; i < acts->size(); ++i) {
          total = total + (*acts)[i];
          for (std::size_t j = 0; j < acts->size(); ++j) {
            Matrix prod = (*acts)[i] * (*acts)[j];
            if (i == j ? !(prod == (*acts)[i]) : !prod.is_zero()) hs.orthogonal = false;
          }
        }
        if (!total.is_identity()) hs.orthogonal = false;
      }
      hs.two_sided = true;
      std::size_t sum = 0;
      for (std::size_t i = 0; i < r.blocks.size(); ++i) {
        std::vector<Vector> piece;
        for (const auto& f : hom) {
          Matrix left = on_y[i] * f.matrix();
          if (!(left == f.matrix() * on_x[i]) || !is_equivariant_matrix(x, y, left)) hs.two_sided = false;
          piece.push_back(left.entries());
        }
        hs.pieces.push_back(piece.empty() ? 0 : rank_of_vectors(field, piece));
        sum += hs.pieces.back();
      }
      hs.complete = sum == hs.hom_dimension;
      ok = ok && hs.orthogonal && hs.two_sided && hs.complete;
      r.splittings.push_back(std::move(hs));
    }
  r.ok = ok;
  return r;
}

}  // namespace mot2
