#include "mot2/mackey.hpp"

#include <algorithm>
#include <stdexcept>

namespace mot2 {

GSet::GSet(const CosetModel& model, const std::vector<std::vector<std::size_t>>& action) {
  const FiniteGroup& G = model.gamma();
  if (action.size() != G.order()) throw std::invalid_argument("action table needs one row per group element");
  const std::size_t n = action.empty() ? 0 : action[0].size();
  for (const auto& row : action) {
    if (row.size() != n) throw std::invalid_argument("action rows differ in length");
    for (auto x : row)
      if (x >= n) throw std::invalid_argument("action leaves the set");
  }
  for (std::size_t x = 0; x < n; ++x)
    if (action[FiniteGroup::identity()][x] != x) throw std::invalid_argument("identity does not act trivially");
  for (std::size_t a = 0; a < G.order(); ++a)
    for (std::size_t b = 0; b < G.order(); ++b)
      for (std::size_t x = 0; x < n; ++x)
        if (action[G.mul(a, b)][x] != action[a][action[b][x]]) throw std::invalid_argument("not a left action");
  group_ = G;
  biset_ = Biset::build(
      model.left(), model.right(), std::vector<ElementType>(n, ElementType{0, 0}),
      [&](Mor g, Elem x) { return action[g][x]; }, [](Elem x, Mor) { return x; });
}

GSet GSet::from_biset(const CosetModel& model, Biset b) {
  if (!b.left().same_structure(model.left()) || b.right().num_morphisms() != 1)
    throw std::invalid_argument("not a left G-set over this model");
  GSet out;
  out.group_ = model.gamma();
  out.biset_ = std::move(b);
  return out;
}

GSet GSet::cosets(const CosetModel& model, const Subgroup& k) { return from_biset(model, model.cosets(k)); }

GSet disjoint_union(const CosetModel& model, const GSet& x, const GSet& y) {
  return GSet::from_biset(model, biset_sum(x.biset(), y.biset()).result);
}

std::vector<MapSpan> span_category_hom(const CosetModel& model, const GSet& x, const GSet& y) {
  const FiniteGroup& G = model.gamma();
  auto subs = all_subgroups(G);
  std::map<SpanKey, MapSpan> found;
  std::vector<bool> seen(x.size() * y.size(), false);
  for (std::size_t p = 0; p < seen.size(); ++p) {
    if (seen[p]) continue;
    const std::size_t a = p / y.size(), b = p % y.size();
    std::vector<std::size_t> stab;
    for (std::size_t g = 0; g < G.order(); ++g) {
      seen[x.act(g, a) * y.size() + y.act(g, b)] = true;
      if (x.act(g, a) == a && y.act(g, b) == b) stab.push_back(g);
    }
    Subgroup s = Subgroup::trusted(G, std::move(stab));
    for (const auto& m : subs) {
      if (!m.is_subgroup_of(s)) continue;
      const Biset& w = model.cosets(m);
      auto reps = coset_representatives(m, CosetSide::Left);
      std::vector<Elem> to_x, to_y;
      for (auto r : reps) {
        to_x.push_back(x.act(r, a));
        to_y.push_back(y.act(r, b));
      }
      MapSpan span{w, EquivariantMap(w, x.biset(), std::move(to_x)), EquivariantMap(w, y.biset(), std::move(to_y))};
      found.emplace(transitive_key(span), std::move(span));
    }
  }
  std::vector<MapSpan> out;
  for (auto& [key, s] : found) out.push_back(std::move(s));
  return out;
}

SpanHom compose_span_homs(const SpanHom& s2, const SpanHom& s1) { return vcompose(s2, s1); }

Matrix yoshida_functor(const SpanHom& s) { return linearize_2cell(s).matrix(); }

namespace {

// Row echelon basis grown one vector at a time.
class SubspaceBuilder {
 public:
  SubspaceBuilder(Field f, std::size_t dim) : field_(std::move(f)), dim_(dim) {}
  bool add(Vector v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Scalar c = v[pivots_[i]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < dim_; ++j)
        if (!rows_[i][j].is_zero()) v[j].sub_product(c, rows_[i][j]);
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
    if (it == v.end()) return false;
    const Scalar inv = it->inverse();
    for (auto& s : v) s *= inv;
    pivots_.push_back(static_cast<std::size_t>(it - v.begin()));
    rows_.push_back(std::move(v));
    return true;
  }
  std::size_t dimension() const { return rows_.size(); }

 private:
  Field field_;
  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

struct HomBasis {
  std::vector<MapSpan> spans;
  std::vector<TwoCell> cells;
  std::map<SpanKey, std::size_t> index;
};

Vector span_coordinates(const TwoCell& t, const HomBasis& b, const Field& f) {
  Vector v = zero_vector(f, b.spans.size());
  for (const auto& [key, term] : t.terms()) {
    auto it = b.index.find(key);
    if (it == b.index.end()) throw std::logic_error("composite leaves the span basis");
    v[it->second] = term.coefficient;
  }
  return v;
}

}  // namespace

YoshidaKernelReport classical_yoshida_kernel_check(const FiniteGroup& g, const Field& f) {
  auto model = CosetModel::left_sets(g);
  YoshidaKernelReport report;
  report.objects = conjugacy_classes_of_subgroups(g);
  const std::size_t n = report.objects.size();
  std::vector<GSet> objs;
  for (const auto& k : report.objects) objs.push_back(GSet::cosets(model, k));

  std::vector<std::vector<HomBasis>> hom(n, std::vector<HomBasis>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto& h = hom[a][b];
      h.spans = span_category_hom(model, objs[a], objs[b]);
      for (std::size_t i = 0; i < h.spans.size(); ++i) {
        h.cells.push_back(TwoCell::from_span(f, h.spans[i]));
        h.index.emplace(transitive_key(h.spans[i]), i);
      }
    }

  std::vector<std::vector<SubspaceBuilder>> ideal;
  for (std::size_t a = 0; a < n; ++a) {
    ideal.emplace_back();
    for (std::size_t b = 0; b < n; ++b) ideal[a].emplace_back(f, hom[a][b].spans.size());
  }
  struct Pending {
    std::size_t a, b;
    TwoCell cell;
  };
  std::vector<Pending> frontier;
  auto offer = [&](std::size_t a, std::size_t b, const TwoCell& t, std::vector<Pending>& out) {
    if (t.is_zero()) return;
    if (ideal[a][b].add(span_coordinates(t, hom[a][b], f))) out.push_back({a, b, t});
  };

  for (std::size_t a = 0; a < n; ++a) {
    const Subgroup& k = report.objects[a];
    const Biset& bk = objs[a].biset();
    for (const auto& m : all_subgroups(g)) {
      if (!m.is_subgroup_of(k) || m == k) continue;
      EquivariantMap q = model.right_multiplication(m, k, FiniteGroup::identity());
      TwoCell diff = TwoCell::from_span(f, MapSpan{model.cosets(m), q, q}) -
                     TwoCell::identity(f, bk).scaled(Scalar(f, static_cast<long long>(index_in(k, m))));
      offer(a, a, diff, frontier);
    }
  }
  while (!frontier.empty()) {
    ++report.closure_rounds;
    std::vector<Pending> next;
    for (const auto& p : frontier)
      for (std::size_t c = 0; c < n; ++c) {
        for (const auto& post : hom[p.b][c].cells) offer(p.a, c, vcompose(post, p.cell), next);
        for (const auto& pre : hom[c][p.a].cells) offer(c, p.b, vcompose(p.cell, pre), next);
      }
    frontier = std::move(next);
  }

  report.all_match = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      YoshidaPair pr;
      pr.source = report.objects[a];
      pr.target = report.objects[b];
      pr.hom_dimension = hom[a][b].spans.size();
      pr.ideal_dimension = ideal[a][b].dimension();
      pr.quotient_dimension = pr.hom_dimension - pr.ideal_dimension;
      pr.double_cosets = double_cosets(pr.source, pr.target).size();
      std::vector<Vector> images;
      for (const auto& c : hom[a][b].cells) images.push_back(yoshida_functor(c).entries());
      pr.kernel_dimension = pr.hom_dimension - rank_of_vectors(f, images);
      pr.matches = pr.quotient_dimension == pr.double_cosets && pr.ideal_dimension == pr.kernel_dimension;
      report.all_match = report.all_match && pr.matches;
      report.pairs.push_back(std::move(pr));
    }
  return report;
}

std::size_t MackeyFunctorTable::position(const Subgroup& h) const {
  auto it = std::lower_bound(subgroups.begin(), subgroups.end(), h);
  if (it == subgroups.end() || !(*it == h)) throw std::invalid_argument("subgroup not in the table");
  return static_cast<std::size_t>(it - subgroups.begin());
}

Vector MackeyFunctorTable::coordinates(std::size_t h, const Matrix& f) const {
  const auto& orb = orbit_of[h];
  const auto& reps = orbit_representative[h];
  const Vector& e = f.entries();
  Vector v;
  for (auto r : reps) v.push_back(e[r]);
  for (std::size_t p = 0; p < e.size(); ++p)
    if (e[p] != v[orb[p]]) throw std::logic_error("map is not equivariant for this subgroup");
  return v;
}

Matrix MackeyFunctorTable::value(std::size_t h, const Vector& c) const {
  Matrix m(field, target_size, source_size);
  for (std::size_t p = 0; p < orbit_of[h].size(); ++p) m(p / source_size, p % source_size) = c[orbit_of[h][p]];
  return m;
}

namespace {

std::vector<std::size_t> small_generating_set(const Subgroup& h) {
  std::vector<std::size_t> gens;
  Subgroup current = trivial_subgroup(h.group());
  for (auto e : h.elements())
    if (!current.contains(e)) {
      gens.push_back(e);
      current = generate_subgroup(h.group(), gens);
    }
  return gens;
}

std::vector<std::size_t> left_coset_representatives_within(const Subgroup& big, const Subgroup& small) {
  const FiniteGroup& G = big.group();
  std::vector<bool> covered(G.order(), false);
  std::vector<std::size_t> reps;
  for (auto h : big.elements()) {
    if (covered[h]) continue;
    reps.push_back(h);
    for (auto k : small.elements()) covered[G.mul(h, k)] = true;
  }
  return reps;
}

// Representatives of L \ H / K for K, L <= H.
std::vector<std::size_t> double_cosets_within(const Subgroup& h, const Subgroup& l, const Subgroup& k) {
  const FiniteGroup& G = h.group();
  std::vector<bool> covered(G.order(), false);
  std::vector<std::size_t> reps;
  for (auto x : h.elements()) {
    if (covered[x]) continue;
    reps.push_back(x);
    for (auto a : l.elements())
      for (auto b : k.elements()) covered[G.mul(G.mul(a, x), b)] = true;
  }
  return reps;
}

}  // namespace

MackeyFunctorTable hom_decategorify(const GSet& x, const GSet& y, const Field& field) {
  MackeyFunctorTable t;
  const FiniteGroup& G = x.group();
  t.group = G;
  t.field = field;
  t.source_size = x.size();
  t.target_size = y.size();
  t.subgroups = all_subgroups(G);
  const std::size_t m = x.size(), pairs = x.size() * y.size();
  auto move_pair = [&](std::size_t g, std::size_t p) { return y.act(g, p / m) * m + x.act(g, p % m); };

  for (const auto& h : t.subgroups) {
    auto gens = small_generating_set(h);
    std::vector<std::size_t> orb(pairs, pairs);
    std::vector<std::size_t> reps;
    for (std::size_t p = 0; p < pairs; ++p) {
      if (orb[p] != pairs) continue;
      const std::size_t id = reps.size();
      reps.push_back(p);
      std::vector<std::size_t> stack{p};
      orb[p] = id;
      while (!stack.empty()) {
        auto q = stack.back();
        stack.pop_back();
        for (auto g : gens) {
          auto r = move_pair(g, q);
          if (orb[r] == pairs) {
            orb[r] = id;
            stack.push_back(r);
          }
        }
      }
    }
    t.orbit_of.push_back(std::move(orb));
    t.orbit_representative.push_back(std::move(reps));
  }

  // Image of a basis orbit sum of M(K) under sum over g in moves of g.(-).
  auto moved_sum = [&](std::size_t k, std::size_t orbit, const std::vector<std::size_t>& moves) {
    Matrix f(field, y.size(), x.size());
    for (std::size_t p = 0; p < pairs; ++p) {
      if (t.orbit_of[k][p] != orbit) continue;
      for (auto g : moves) {
        auto q = move_pair(g, p);
        f(q / m, q % m) += Scalar::one(field);
      }
    }
    return f;
  };

  for (std::size_t hi = 0; hi < t.subgroups.size(); ++hi) {
    const Subgroup& h = t.subgroups[hi];
    for (std::size_t ki = 0; ki < t.subgroups.size(); ++ki) {
      const Subgroup& k = t.subgroups[ki];
      if (!k.is_subgroup_of(h)) continue;
      Matrix res(field, t.dimension(ki), t.dimension(hi));
      for (std::size_t o = 0; o < t.dimension(ki); ++o)
        res(o, t.orbit_of[hi][t.orbit_representative[ki][o]]) = Scalar::one(field);
      t.restriction.emplace(std::pair{hi, ki}, std::move(res));

      auto reps = left_coset_representatives_within(h, k);
      Matrix tr(field, t.dimension(hi), t.dimension(ki));
      for (std::size_t o = 0; o < t.dimension(ki); ++o) {
        Vector c = t.coordinates(hi, moved_sum(ki, o, reps));
        for (std::size_t r = 0; r < c.size(); ++r) tr(r, o) = c[r];
      }
      t.transfer.emplace(std::pair{hi, ki}, std::move(tr));
    }
    for (std::size_t g = 0; g < G.order(); ++g) {
      std::size_t ci = t.position(conjugate(h, g));
      Matrix c(field, t.dimension(ci), t.dimension(hi));
      for (std::size_t o = 0; o < t.dimension(hi); ++o) {
        Vector v = t.coordinates(ci, moved_sum(hi, o, {g}));
        for (std::size_t r = 0; r < v.size(); ++r) c(r, o) = v[r];
      }
      t.conjugation.emplace(std::pair{g, hi}, std::move(c));
    }
  }
  return t;
}

MackeyAxiomReport verify_mackey_axioms(const MackeyFunctorTable& t) {
  MackeyAxiomReport r;
  r.functoriality = r.iso_invariance = r.mackey_formula = r.cohomological = true;
  const FiniteGroup& G = t.group;
  const auto& subs = t.subgroups;
  const std::size_t s = subs.size();
  auto fail = [&](bool& flag, std::string what) {
    flag = false;
    if (r.failures.size() < 20) r.failures.push_back(std::move(what));
  };
  auto R = [&](std::size_t h, std::size_t k) -> const Matrix& { return t.restriction.at({h, k}); };
  auto I = [&](std::size_t h, std::size_t k) -> const Matrix& { return t.transfer.at({h, k}); };
  auto C = [&](std::size_t g, std::size_t h) -> const Matrix& { return t.conjugation.at({g, h}); };
  auto name = [&](std::size_t h) { return subs[h].to_string(); };

  for (std::size_t h = 0; h < s; ++h) {
    if (!R(h, h).is_identity()) fail(r.functoriality, "restriction to itself is not the identity at " + name(h));
    if (!I(h, h).is_identity()) fail(r.functoriality, "transfer from itself is not the identity at " + name(h));
    if (!C(FiniteGroup::identity(), h).is_identity()) fail(r.functoriality, "c_1 is not the identity at " + name(h));
    for (std::size_t k = 0; k < s; ++k) {
      if (!subs[k].is_subgroup_of(subs[h])) continue;
      for (std::size_t l = 0; l < s; ++l) {
        if (!subs[l].is_subgroup_of(subs[k])) continue;
        if (!(R(k, l) * R(h, k) == R(h, l)))
          fail(r.functoriality, "restriction not transitive for " + name(l) + " <= " + name(k) + " <= " + name(h));
        if (!(I(h, k) * I(k, l) == I(h, l)))
          fail(r.functoriality, "transfer not transitive for " + name(l) + " <= " + name(k) + " <= " + name(h));
      }
      const Scalar index_scalar(t.field, static_cast<long long>(index_in(subs[h], subs[k])));
      if (!(I(h, k) * R(h, k) == Matrix::identity(t.field, t.dimension(h)).scaled(index_scalar)))
        fail(r.cohomological, "I R is not the index for " + name(k) + " <= " + name(h));
    }
  }

  for (std::size_t h = 0; h < s; ++h)
    for (std::size_t g = 0; g < G.order(); ++g) {
      const std::size_t gh = t.position(conjugate(subs[h], g));
      if (subs[h].contains(g) && !C(g, h).is_identity())
        fail(r.iso_invariance, "inner conjugation acts nontrivially on " + name(h));
      for (std::size_t g2 = 0; g2 < G.order(); ++g2)
        if (!(C(g2, gh) * C(g, h) == C(G.mul(g2, g), h)))
          fail(r.functoriality, "conjugations do not compose at " + name(h));
      for (std::size_t k = 0; k < s; ++k) {
        if (!subs[k].is_subgroup_of(subs[h])) continue;
        const std::size_t gk = t.position(conjugate(subs[k], g));
        if (!(C(g, k) * R(h, k) == R(gh, gk) * C(g, h)))
          fail(r.iso_invariance, "conjugation does not commute with restriction at " + name(k) + " <= " + name(h));
        if (!(C(g, h) * I(h, k) == I(gh, gk) * C(g, k)))
          fail(r.iso_invariance, "conjugation does not commute with transfer at " + name(k) + " <= " + name(h));
      }
    }

  for (std::size_t h = 0; h < s; ++h)
    for (std::size_t k = 0; k < s; ++k) {
      if (!subs[k].is_subgroup_of(subs[h])) continue;
      for (std::size_t l = 0; l < s; ++l) {
        if (!subs[l].is_subgroup_of(subs[h])) continue;
        Matrix lhs = R(h, l) * I(h, k);
        Matrix rhs(t.field, t.dimension(l), t.dimension(k));
        for (auto xg : double_cosets_within(subs[h], subs[l], subs[k])) {
          // I^L_{L cap xKx^-1} c_x R^K_{K cap x^-1 L x}
          const std::size_t inner = t.position(intersection(subs[k], conjugate(subs[l], G.inv(xg))));
          const std::size_t outer = t.position(intersection(subs[l], conjugate(subs[k], xg)));
          rhs = rhs + I(l, outer) * C(xg, inner) * R(k, inner);
        }
        if (!(lhs == rhs))
          fail(r.mackey_formula, "double coset formula fails for K=" + name(k) + ", L=" + name(l) + " in " + name(h));
      }
    }
  return r;
}

namespace {

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

}  // namespace

bool verify_additivity(const CosetModel& model, const GSet& x1, const GSet& x2, const GSet& y, const Field& field) {
  auto whole = hom_decategorify(disjoint_union(model, x1, x2), y, field);
  auto first = hom_decategorify(x1, y, field);
  auto second = hom_decategorify(x2, y, field);
  const std::size_t s = whole.subgroups.size();
  // split[h]: M_{X1+X2}(H) -> M_{X1}(H) + M_{X2}(H)
  std::vector<Matrix> split;
  for (std::size_t h = 0; h < s; ++h) {
    const std::size_t d1 = first.dimension(h), d2 = second.dimension(h);
    Matrix m(field, d1 + d2, whole.dimension(h));
    for (std::size_t o = 0; o < whole.dimension(h); ++o) {
      Vector e = zero_vector(field, whole.dimension(h));
      e[o] = Scalar::one(field);
      Matrix f = whole.value(h, e);
      Matrix f1(field, y.size(), x1.size()), f2(field, y.size(), x2.size());
      for (std::size_t i = 0; i < y.size(); ++i) {
        for (std::size_t j = 0; j < x1.size(); ++j) f1(i, j) = f(i, j);
        for (std::size_t j = 0; j < x2.size(); ++j) f2(i, j) = f(i, x1.size() + j);
      }
      Vector c1 = first.coordinates(h, f1), c2 = second.coordinates(h, f2);
      for (std::size_t r = 0; r < d1; ++r) m(r, o) = c1[r];
      for (std::size_t r = 0; r < d2; ++r) m(d1 + r, o) = c2[r];
    }
    if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
    split.push_back(std::move(m));
  }
  for (const auto& [key, res] : whole.restriction) {
    auto [h, k] = key;
    if (!(split[k] * res == block_diagonal(first.restriction.at(key), second.restriction.at(key)) * split[h]))
      return false;
    if (!(split[h] * whole.transfer.at(key) ==
          block_diagonal(first.transfer.at(key), second.transfer.at(key)) * split[k]))
      return false;
  }
  return true;
}

}  // namespace mot2
