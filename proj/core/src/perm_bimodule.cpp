#include "mot2/perm_bimodule.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace mot2 {

PermBimodule linearize(const Biset& u, const Field& field) { return PermBimodule{u, field}; }

namespace {

// Elements grouped by type.
std::map<ElementType, std::vector<Elem>> by_type(const Biset& s) {
  std::map<ElementType, std::vector<Elem>> out;
  for (Elem e = 0; e < s.size(); ++e) out[s.type(e)].push_back(e);
  return out;
}

}  // namespace

bool is_equivariant_matrix(const Biset& source, const Biset& target, const Matrix& m) {
  if (m.rows() != target.size() || m.cols() != source.size() || !source.same_ambient(target)) return false;
  for (Elem v = 0; v < target.size(); ++v)
    for (Elem u = 0; u < source.size(); ++u)
      if (!m(v, u).is_zero() && target.type(v) != source.type(u)) return false;
  auto targets = by_type(target);
  const auto& G = source.left();
  const auto& H = source.right();
  for (Elem u = 0; u < source.size(); ++u) {
    const auto& ty = source.type(u);
    auto it = targets.find(ty);
    if (it == targets.end()) continue;
    for (Mor g : G.generators()) {
      if (G.source(g) != ty.x) continue;
      Elem gu = source.act_left(g, u);
      for (Elem v : it->second)
        if (m(target.act_left(g, v), gu) != m(v, u)) return false;
    }
    for (Mor h : H.generators()) {
      if (H.target(h) != ty.y) continue;
      Elem uh = source.act_right(u, h);
      for (Elem v : it->second)
        if (m(target.act_right(v, h), uh) != m(v, u)) return false;
    }
  }
  return true;
}

BimoduleMap::BimoduleMap(PermBimodule source, PermBimodule target, Matrix m)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(m)) {
  if (source_.field != target_.field || matrix_.field() != source_.field)
    throw std::invalid_argument("bimodule map over mismatched fields");
  if (!is_equivariant_matrix(source_.basis, target_.basis, matrix_))
    throw std::invalid_argument("matrix is not an equivariant map");
}

BimoduleMap BimoduleMap::then(const BimoduleMap& next) const {
  if (!target_.basis.same_structure(next.source_.basis)) throw std::invalid_argument("bimodule maps do not compose");
  return BimoduleMap(source_, next.target_, next.matrix_ * matrix_);
}

BimoduleMap linearize_map(const EquivariantMap& a, const Field& field) {
  Matrix m(field, a.target().size(), a.source().size());
  for (Elem u = 0; u < a.source().size(); ++u) m(a(u), u) = Scalar::one(field);
  return BimoduleMap(linearize(a.source(), field), linearize(a.target(), field), std::move(m));
}

BimoduleMap linearize_2cell(const TwoCell& t) {
  const Field& f = t.field();
  Matrix m(f, t.target().size(), t.source().size());
  for (const auto& [key, term] : t.terms()) {
    const auto& s = term.span;
    for (Elem w = 0; w < s.middle.size(); ++w) m(s.to_target(w), s.to_source(w)) += term.coefficient;
  }
  return BimoduleMap(linearize(t.source(), f), linearize(t.target(), f), std::move(m));
}

std::vector<BimoduleMap> hom_space(const PermBimodule& mod_m, const PermBimodule& mod_n) {
  const Biset& U = mod_m.basis;
  const Biset& V = mod_n.basis;
  const Field& f = mod_m.field;
  if (mod_n.field != f || !U.same_ambient(V)) throw std::invalid_argument("hom_space: modules over different data");
  auto us = by_type(U);
  auto vs = by_type(V);
  // Unknown f[v, u] for each pair of equal type.
  std::vector<std::size_t> pos_u(U.size()), pos_v(V.size());
  std::map<ElementType, std::size_t> offset;
  std::size_t unknowns = 0;
  for (const auto& [ty, list] : us) {
    for (std::size_t k = 0; k < list.size(); ++k) pos_u[list[k]] = k;
    auto it = vs.find(ty);
    if (it == vs.end()) continue;
    for (std::size_t k = 0; k < it->second.size(); ++k) pos_v[it->second[k]] = k;
    offset[ty] = unknowns;
    unknowns += list.size() * it->second.size();
  }
  auto var = [&](Elem v, Elem u) { return offset.at(U.type(u)) + pos_v[v] * us.at(U.type(u)).size() + pos_u[u]; };

  std::vector<std::pair<std::size_t, std::size_t>> equations;  // x_a = x_b
  const auto& G = U.left();
  const auto& H = U.right();
  for (const auto& [ty, ulist] : us) {
    auto it = vs.find(ty);
    if (it == vs.end()) continue;
    for (Mor g : G.generators()) {
      if (G.source(g) != ty.x) continue;
      for (Elem u : ulist)
        for (Elem v : it->second) equations.emplace_back(var(V.act_left(g, v), U.act_left(g, u)), var(v, u));
    }
    for (Mor h : H.generators()) {
      if (H.target(h) != ty.y) continue;
      for (Elem u : ulist)
        for (Elem v : it->second) equations.emplace_back(var(V.act_right(v, h), U.act_right(u, h)), var(v, u));
    }
  }
  std::erase_if(equations, [](const auto& e) { return e.first == e.second; });
  std::sort(equations.begin(), equations.end());
  equations.erase(std::unique(equations.begin(), equations.end()), equations.end());

  Matrix system(f, equations.size(), unknowns);
  for (std::size_t r = 0; r < equations.size(); ++r) {
    system(r, equations[r].first) = Scalar::one(f);
    system(r, equations[r].second) = Scalar(f, -1LL);
  }
  std::vector<BimoduleMap> out;
  for (const Vector& sol : nullspace(system)) {
    Matrix m(f, V.size(), U.size());
    for (const auto& [ty, ulist] : us) {
      auto it = vs.find(ty);
      if (it == vs.end()) continue;
      for (Elem u : ulist)
        for (Elem v : it->second) m(v, u) = sol[var(v, u)];
    }
    out.emplace_back(mod_m, mod_n, std::move(m));
  }
  return out;
}

struct CosetModel::Data {
  FiniteGroup gamma;
  std::optional<DirectProduct> product;
  FiniteGroupoid left, right;
  struct Entry {
    Biset biset;
    std::vector<Elem> coset_of;
    std::vector<std::size_t> representative;
  };
  std::map<std::vector<std::size_t>, Entry> cache;

  const Entry& entry(const Subgroup& k) {
    auto it = cache.find(k.elements());
    if (it != cache.end()) return it->second;
    Entry e;
    auto cs = mot2::cosets(k, CosetSide::Left);
    e.coset_of.resize(gamma.order());
    for (std::size_t i = 0; i < cs.size(); ++i) {
      e.representative.push_back(cs[i].front());
      for (auto x : cs[i]) e.coset_of[x] = i;
    }
    std::vector<ElementType> types(cs.size(), ElementType{0, 0});
    const auto& G = gamma;
    if (product) {
      const auto& p = *product;
      e.biset = Biset::build(
          left, right, std::move(types),
          [&](Mor g1, Elem c) { return e.coset_of[G.mul(p.pair(g1, 0), e.representative[c])]; },
          [&](Elem c, Mor g2) { return e.coset_of[G.mul(p.pair(0, p.second.inv(g2)), e.representative[c])]; });
    } else {
      e.biset = Biset::build(
          left, right, std::move(types), [&](Mor g, Elem c) { return e.coset_of[G.mul(g, e.representative[c])]; },
          [](Elem c, Mor) { return c; });
    }
    return cache.emplace(k.elements(), std::move(e)).first->second;
  }
};

CosetModel CosetModel::left_sets(const FiniteGroup& g) {
  CosetModel m;
  m.data_ = std::make_shared<Data>();
  m.data_->gamma = g;
  m.data_->left = FiniteGroupoid::from_group(g);
  m.data_->right = FiniteGroupoid();
  return m;
}

CosetModel CosetModel::bisets(const DirectProduct& g1g2) {
  CosetModel m;
  m.data_ = std::make_shared<Data>();
  m.data_->gamma = g1g2.group;
  m.data_->product = g1g2;
  m.data_->left = FiniteGroupoid::from_group(g1g2.first);
  m.data_->right = FiniteGroupoid::from_group(g1g2.second);
  return m;
}

const FiniteGroup& CosetModel::gamma() const { return data_->gamma; }
const FiniteGroupoid& CosetModel::left() const { return data_->left; }
const FiniteGroupoid& CosetModel::right() const { return data_->right; }

const Biset& CosetModel::cosets(const Subgroup& k) const { return data_->entry(k).biset; }

Elem CosetModel::coset_of(const Subgroup& k, std::size_t x) const { return data_->entry(k).coset_of[x]; }

EquivariantMap CosetModel::right_multiplication(const Subgroup& m, const Subgroup& l, std::size_t gamma) const {
  const FiniteGroup& G = data_->gamma;
  for (auto x : m.elements())
    if (!l.contains(G.conj(G.inv(gamma), x))) throw std::invalid_argument("right multiplication is not well defined");
  const auto& em = data_->entry(m);
  std::vector<Elem> img;
  for (auto r : em.representative) img.push_back(coset_of(l, G.mul(r, gamma)));
  return EquivariantMap(em.biset, cosets(l), std::move(img));
}

bool CosetModel::is_right_free_stabilizer(const Subgroup& k) const {
  if (!data_->product) return true;
  for (auto e : k.elements())
    if (e != FiniteGroup::identity() && data_->product->pr1(e) == FiniteGroup::identity()) return false;
  return true;
}

MapSpan double_coset_span(const CosetModel& model, const Subgroup& k, const Subgroup& l, std::size_t gamma) {
  Subgroup n = intersection(k, conjugate(l, gamma));
  return MapSpan{model.cosets(n), model.right_multiplication(n, k, FiniteGroup::identity()),
                 model.right_multiplication(n, l, gamma)};
}

std::vector<DoubleCosetGenerator> double_coset_basis(const CosetModel& model, const Subgroup& k, const Subgroup& l,
                                                     const Field& field) {
  std::vector<DoubleCosetGenerator> out;
  for (auto gamma : double_cosets(k, l)) {
    MapSpan s = double_coset_span(model, k, l, gamma);
    BimoduleMap image = linearize_2cell(TwoCell::from_span(field, s));
    out.push_back({gamma, std::move(s), std::move(image)});
  }
  return out;
}

namespace {

Vector flatten(const Matrix& m) { return m.entries(); }

}  // namespace

FullnessReport verify_P_fullness(const CosetModel& model, const Subgroup& k, const Subgroup& l, const Field& field) {
  FullnessReport r;
  auto hom = hom_space(linearize(model.cosets(k), field), linearize(model.cosets(l), field));
  r.hom_dimension = hom.size();
  r.double_cosets = double_cosets(k, l).size();
  std::vector<Vector> images, combined;
  try {
    for (auto& gen : double_coset_basis(model, k, l, field)) images.push_back(flatten(gen.image.matrix()));
    r.images_equivariant = true;
  } catch (const std::invalid_argument&) {
    r.images_equivariant = false;
    return r;
  }
  r.image_rank = rank_of_vectors(field, images);
  for (const auto& h : hom) combined.push_back(flatten(h.matrix()));
  combined.insert(combined.end(), images.begin(), images.end());
  bool in_span = combined.empty() || rank_of_vectors(field, combined) == r.hom_dimension;
  r.full = in_span && r.image_rank == r.double_cosets && r.image_rank == r.hom_dimension;
  return r;
}

namespace {

std::vector<Subgroup> subgroups_within(const Subgroup& a) {
  std::vector<Subgroup> out;
  for (auto& m : all_subgroups(a.group()))
    if (m.is_subgroup_of(a)) out.push_back(std::move(m));
  return out;
}

}  // namespace

std::vector<MapSpan> transitive_span_basis(const CosetModel& model, const Subgroup& a, const Subgroup& b) {
  const FiniteGroup& G = model.gamma();
  std::map<SpanKey, MapSpan> found;
  for (const auto& m : subgroups_within(a))
    for (std::size_t gamma = 0; gamma < G.order(); ++gamma) {
      bool ok = true;
      for (auto x : m.elements())
        if (!b.contains(G.conj(G.inv(gamma), x))) {
          ok = false;
          break;
        }
      if (!ok) continue;
      MapSpan s{model.cosets(m), model.right_multiplication(m, a, FiniteGroup::identity()),
                model.right_multiplication(m, b, gamma)};
      found.emplace(transitive_key(s), std::move(s));
    }
  std::vector<MapSpan> out;
  for (auto& [key, s] : found) out.push_back(std::move(s));
  return out;
}

namespace {

// Coordinates of a 2-cell in a list of transitive span classes.
Vector coordinates(const TwoCell& t, const std::map<SpanKey, std::size_t>& index, const Field& f) {
  Vector v = zero_vector(f, index.size());
  for (const auto& [key, term] : t.terms()) {
    auto it = index.find(key);
    if (it == index.end()) throw std::logic_error("2-cell leaves the expected span basis");
    v[it->second] = term.coefficient;
  }
  return v;
}

}  // namespace

KernelReport kernel_generation_check(const CosetModel& model, const Subgroup& k, const Subgroup& l, const Field& f) {
  KernelReport r;
  auto basis = transitive_span_basis(model, k, l);
  r.cell_dimension = basis.size();
  std::map<SpanKey, std::size_t> index;
  std::vector<Vector> p_columns;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    index.emplace(transitive_key(basis[i]), i);
    p_columns.push_back(flatten(linearize_2cell(TwoCell::from_span(f, basis[i])).matrix()));
  }
  const std::size_t flat = model.cosets(k).size() * model.cosets(l).size();
  Matrix p_matrix = p_columns.empty() ? Matrix(f, flat, 0) : Matrix::from_columns(f, flat, p_columns);
  r.kernel_dimension = basis.size() - rank(p_matrix);

  std::vector<Vector> ideal;
  for (const auto& n : all_subgroups(model.gamma())) {
    if (!model.is_right_free_stabilizer(n)) continue;
    auto pre = transitive_span_basis(model, k, n);
    auto post = transitive_span_basis(model, n, l);
    if (pre.empty() || post.empty()) continue;
    const Biset& bn = model.cosets(n);
    for (const auto& m : subgroups_within(n)) {
      if (m == n) continue;
      EquivariantMap q = model.right_multiplication(m, n, FiniteGroup::identity());
      TwoCell delta = TwoCell::from_span(f, MapSpan{model.cosets(m), q, q}) -
                      TwoCell::identity(f, bn).scaled(Scalar(f, static_cast<long long>(index_in(n, m))));
      for (const auto& a : pre) {
        TwoCell moved = vcompose(delta, TwoCell::from_span(f, a));
        for (const auto& b : post) ideal.push_back(coordinates(vcompose(TwoCell::from_span(f, b), moved), index, f));
      }
    }
  }
  r.ideal_in_kernel = true;
  for (const auto& v : ideal) {
    Vector pv = p_matrix * std::span<const Scalar>(v);
    if (std::any_of(pv.begin(), pv.end(), [](const Scalar& s) { return !s.is_zero(); })) r.ideal_in_kernel = false;
  }
  r.ideal_dimension = rank_of_vectors(f, ideal);
  r.generated = r.ideal_in_kernel && r.ideal_dimension == r.kernel_dimension;
  return r;
}

}  // namespace mot2
