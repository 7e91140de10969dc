#include "mot2/biset.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mot2 {

struct Biset::Data {
  FiniteGroupoid left, right;
  std::vector<ElementType> types;
  std::vector<std::size_t> left_offset, right_offset;
  std::vector<Elem> left_table, right_table;
};

namespace {

std::size_t uf_find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void uf_union(std::vector<std::size_t>& parent, std::size_t a, std::size_t b) {
  a = uf_find(parent, a);
  b = uf_find(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

}  // namespace

Biset::Biset() : Biset(build(FiniteGroupoid(), FiniteGroupoid(), {}, nullptr, nullptr)) {}

Biset Biset::build(FiniteGroupoid left, FiniteGroupoid right, std::vector<ElementType> types,
                   const std::function<Elem(Mor, Elem)>& act_left, const std::function<Elem(Elem, Mor)>& act_right) {
  auto d = std::make_shared<Data>();
  d->left = std::move(left);
  d->right = std::move(right);
  d->types = std::move(types);
  const auto& G = d->left;
  const auto& H = d->right;
  const std::size_t n = d->types.size();
  for (const auto& t : d->types)
    if (t.x >= G.num_objects() || t.y >= H.num_objects()) throw std::invalid_argument("element type out of range");

  d->left_offset.resize(n);
  d->right_offset.resize(n);
  std::size_t lt = 0, rt = 0;
  for (Elem s = 0; s < n; ++s) {
    d->left_offset[s] = lt;
    lt += G.out(d->types[s].x).size();
    d->right_offset[s] = rt;
    rt += H.in(d->types[s].y).size();
  }
  d->left_table.resize(lt);
  d->right_table.resize(rt);
  for (Elem s = 0; s < n; ++s) {
    const auto& ty = d->types[s];
    auto outs = G.out(ty.x);
    for (std::size_t j = 0; j < outs.size(); ++j) {
      Elem r = act_left(outs[j], s);
      if (r >= n || d->types[r] != ElementType{G.target(outs[j]), ty.y})
        throw std::invalid_argument("left action lands in the wrong type");
      d->left_table[d->left_offset[s] + j] = r;
    }
    auto ins = H.in(ty.y);
    for (std::size_t j = 0; j < ins.size(); ++j) {
      Elem r = act_right(s, ins[j]);
      if (r >= n || d->types[r] != ElementType{ty.x, H.source(ins[j])})
        throw std::invalid_argument("right action lands in the wrong type");
      d->right_table[d->right_offset[s] + j] = r;
    }
  }
  Biset out(d);
  // Functoriality: identities act trivially and composites act as iterated
  // actions; checking one factor on generators suffices by induction.
  for (Elem s = 0; s < n; ++s) {
    const auto& ty = d->types[s];
    if (out.act_left(G.identity(ty.x), s) != s) throw std::invalid_argument("left identity acts nontrivially");
    if (out.act_right(s, H.identity(ty.y)) != s) throw std::invalid_argument("right identity acts nontrivially");
    for (Mor g : G.out(ty.x))
      for (Mor gen : G.generators()) {
        if (G.source(gen) != G.target(g)) continue;
        if (out.act_left(G.compose(gen, g), s) != out.act_left(gen, out.act_left(g, s)))
          throw std::invalid_argument("left action is not functorial");
      }
    for (Mor h : H.in(ty.y))
      for (Mor gen : H.generators()) {
        if (H.target(gen) != H.source(h)) continue;
        if (out.act_right(s, H.compose(h, gen)) != out.act_right(out.act_right(s, h), gen))
          throw std::invalid_argument("right action is not functorial");
      }
    for (Mor g : G.generators()) {
      if (G.source(g) != ty.x) continue;
      for (Mor h : H.generators()) {
        if (H.target(h) != ty.y) continue;
        if (out.act_right(out.act_left(g, s), h) != out.act_left(g, out.act_right(s, h)))
          throw std::invalid_argument("left and right actions do not commute");
      }
    }
  }
  return out;
}

const FiniteGroupoid& Biset::left() const { return data_->left; }
const FiniteGroupoid& Biset::right() const { return data_->right; }
std::size_t Biset::size() const { return data_->types.size(); }
const ElementType& Biset::type(Elem s) const { return data_->types[s]; }
const std::vector<ElementType>& Biset::types() const { return data_->types; }

Elem Biset::act_left(Mor g, Elem s) const {
  if (data_->left.source(g) != data_->types[s].x) throw std::invalid_argument("left action on wrong type");
  return data_->left_table[data_->left_offset[s] + data_->left.out_pos(g)];
}

Elem Biset::act_right(Elem s, Mor h) const {
  if (data_->right.target(h) != data_->types[s].y) throw std::invalid_argument("right action on wrong type");
  return data_->right_table[data_->right_offset[s] + data_->right.in_pos(h)];
}

Elem Biset::conjugate_by(Mor g, Elem s, Mor h) const { return act_right(act_left(g, s), data_->right.inverse(h)); }

bool Biset::same_ambient(const Biset& other) const {
  return data_->left.same_structure(other.data_->left) && data_->right.same_structure(other.data_->right);
}

bool Biset::same_structure(const Biset& other) const {
  if (data_ == other.data_) return true;
  if (types() != other.types() || !same_ambient(other)) return false;
  return data_->left_table == other.data_->left_table && data_->right_table == other.data_->right_table;
}

EquivariantMap::EquivariantMap(Unchecked, Biset source, Biset target, std::vector<Elem> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {}

EquivariantMap::EquivariantMap(Biset source, Biset target, std::vector<Elem> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (!source_.same_ambient(target_)) throw std::invalid_argument("equivariant map between different ambients");
  if (images_.size() != source_.size()) throw std::invalid_argument("equivariant map has wrong size");
  const auto& G = source_.left();
  const auto& H = source_.right();
  for (Elem s = 0; s < source_.size(); ++s) {
    Elem t = images_[s];
    if (t >= target_.size() || target_.type(t) != source_.type(s))
      throw std::invalid_argument("equivariant map does not preserve types");
  }
  for (Elem s = 0; s < source_.size(); ++s) {
    const auto& ty = source_.type(s);
    for (Mor g : G.generators())
      if (G.source(g) == ty.x && images_[source_.act_left(g, s)] != target_.act_left(g, images_[s]))
        throw std::invalid_argument("map is not left equivariant");
    for (Mor h : H.generators())
      if (H.target(h) == ty.y && images_[source_.act_right(s, h)] != target_.act_right(images_[s], h))
        throw std::invalid_argument("map is not right equivariant");
  }
}

EquivariantMap EquivariantMap::identity(const Biset& s) {
  std::vector<Elem> img(s.size());
  std::iota(img.begin(), img.end(), 0);
  return EquivariantMap(Unchecked{}, s, s, std::move(img));
}

bool EquivariantMap::is_bijective() const {
  if (source_.size() != target_.size()) return false;
  std::vector<bool> hit(target_.size(), false);
  for (Elem t : images_) {
    if (hit[t]) return false;
    hit[t] = true;
  }
  return true;
}

EquivariantMap EquivariantMap::then(const EquivariantMap& next) const {
  if (next.source_.size() != target_.size() || !target_.same_ambient(next.source_))
    throw std::invalid_argument("maps are not composable");
  std::vector<Elem> img;
  img.reserve(images_.size());
  for (Elem t : images_) img.push_back(next.images_[t]);
  return EquivariantMap(Unchecked{}, source_, next.target_, std::move(img));
}

EquivariantMap EquivariantMap::inverse() const {
  if (!is_bijective()) throw std::invalid_argument("map is not invertible");
  std::vector<Elem> img(images_.size());
  for (Elem s = 0; s < images_.size(); ++s) img[images_[s]] = s;
  return EquivariantMap(Unchecked{}, target_, source_, std::move(img));
}

std::optional<EquivariantMap> extend_equivariantly(const Biset& source, const Biset& target,
                                                   const std::vector<std::pair<Elem, Elem>>& base) {
  if (!source.same_ambient(target)) throw std::invalid_argument("extend_equivariantly: different ambients");
  const auto& G = source.left();
  const auto& H = source.right();
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> img(source.size(), unset);
  std::vector<Elem> queue;
  for (auto [s, t] : base) {
    if (source.type(s) != target.type(t)) return std::nullopt;
    if (img[s] != unset) {
      if (img[s] != t) return std::nullopt;
      continue;
    }
    img[s] = t;
    queue.push_back(s);
  }
  auto visit = [&](Elem s2, Elem t2) {
    if (img[s2] == unset) {
      img[s2] = t2;
      queue.push_back(s2);
      return true;
    }
    return img[s2] == t2;
  };
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Elem s = queue[qi];
    Elem t = img[s];
    const auto& ty = source.type(s);
    for (Mor g : G.generators())
      if (G.source(g) == ty.x && !visit(source.act_left(g, s), target.act_left(g, t))) return std::nullopt;
    for (Mor h : H.generators())
      if (H.target(h) == ty.y && !visit(source.act_right(s, h), target.act_right(t, h))) return std::nullopt;
  }
  if (std::find(img.begin(), img.end(), unset) != img.end())
    throw std::invalid_argument("extend_equivariantly: base points miss an orbit");
  return EquivariantMap(EquivariantMap::Unchecked{}, source, target, std::move(img));
}

Biset identity_biset(const FiniteGroupoid& g) {
  std::vector<ElementType> types;
  for (Mor f = 0; f < g.num_morphisms(); ++f) types.push_back({g.target(f), g.source(f)});
  return Biset::build(
      g, g, std::move(types), [&](Mor a, Elem f) { return g.compose(a, f); },
      [&](Elem f, Mor h) { return g.compose(f, h); });
}

Elem TensorProduct::class_of(Elem t, Elem s) const {
  if (right_factor.type(s).x != left_factor.type(t).y) throw std::invalid_argument("class_of: pair is not composable");
  return pair_class[pair_offset[t] + right_pos[s]];
}

TensorProduct tensor(const Biset& t, const Biset& s) {
  if (!t.right().same_structure(s.left())) throw std::invalid_argument("tensor: middle groupoids differ");
  const auto& A = t.left();
  const auto& B = t.right();
  const auto& C = s.right();
  TensorProduct out;
  out.left_factor = t;
  out.right_factor = s;
  std::vector<std::vector<Elem>> by_left(B.num_objects());
  out.right_pos.resize(s.size());
  for (Elem e = 0; e < s.size(); ++e) {
    auto& bucket = by_left[s.type(e).x];
    out.right_pos[e] = bucket.size();
    bucket.push_back(e);
  }
  out.pair_offset.resize(t.size());
  std::size_t total = 0;
  for (Elem a = 0; a < t.size(); ++a) {
    out.pair_offset[a] = total;
    total += by_left[t.type(a).y].size();
  }
  auto pair_index = [&](Elem a, Elem b) { return out.pair_offset[a] + out.right_pos[b]; };
  // (t, h.s) ~ (t.h, s): identify (a, b) with (a.h^-1, h.b) for h out of y(a).
  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  for (Elem a = 0; a < t.size(); ++a) {
    Obj y = t.type(a).y;
    for (Elem b : by_left[y])
      for (Mor h : B.generators()) {
        if (B.source(h) != y) continue;
        uf_union(parent, pair_index(a, b), pair_index(t.act_right(a, B.inverse(h)), s.act_left(h, b)));
      }
  }
  out.pair_class.assign(total, 0);
  std::vector<Elem> class_of_root(total, static_cast<Elem>(-1));
  std::vector<ElementType> types;
  for (Elem a = 0; a < t.size(); ++a)
    for (Elem b : by_left[t.type(a).y]) {
      std::size_t idx = pair_index(a, b);
      std::size_t r = uf_find(parent, idx);
      if (class_of_root[r] == static_cast<Elem>(-1)) {
        class_of_root[r] = types.size();
        types.push_back({t.type(a).x, s.type(b).y});
        out.representative.emplace_back(a, b);
      }
      out.pair_class[idx] = class_of_root[r];
    }
  out.result = Biset::build(
      A, C, std::move(types),
      [&](Mor g, Elem c) {
        auto [a, b] = out.representative[c];
        return out.class_of(t.act_left(g, a), b);
      },
      [&](Elem c, Mor k) {
        auto [a, b] = out.representative[c];
        return out.class_of(a, s.act_right(b, k));
      });
  return out;
}

EquivariantMap tensor_maps(const TensorProduct& source, const TensorProduct& target, const EquivariantMap& alpha,
                           const EquivariantMap& beta) {
  std::vector<Elem> img;
  img.reserve(source.result.size());
  for (auto [a, b] : source.representative) img.push_back(target.class_of(alpha(a), beta(b)));
  return EquivariantMap(source.result, target.result, std::move(img));
}

Biset empty_biset(const FiniteGroupoid& left, const FiniteGroupoid& right) {
  return Biset::build(left, right, {}, nullptr, nullptr);
}

BisetSum biset_sum(const Biset& a, const Biset& b) {
  if (!a.same_ambient(b)) throw std::invalid_argument("biset_sum: different ambients");
  const std::size_t na = a.size();
  std::vector<ElementType> types = a.types();
  types.insert(types.end(), b.types().begin(), b.types().end());
  Biset sum = Biset::build(
      a.left(), a.right(), std::move(types),
      [&](Mor g, Elem e) { return e < na ? a.act_left(g, e) : na + b.act_left(g, e - na); },
      [&](Elem e, Mor h) { return e < na ? a.act_right(e, h) : na + b.act_right(e - na, h); });
  std::vector<Elem> ia(na), ib(b.size());
  std::iota(ia.begin(), ia.end(), 0);
  std::iota(ib.begin(), ib.end(), na);
  return {sum, EquivariantMap(a, sum, std::move(ia)), EquivariantMap(b, sum, std::move(ib))};
}

bool is_right_free(const Biset& s) {
  const auto& H = s.right();
  for (Elem e = 0; e < s.size(); ++e) {
    Obj y = s.type(e).y;
    for (Mor h : H.hom(y, y))
      if (h != H.identity(y) && s.act_right(e, h) == e) return false;
  }
  return true;
}

bool is_left_free(const Biset& s) {
  const auto& G = s.left();
  for (Elem e = 0; e < s.size(); ++e) {
    Obj x = s.type(e).x;
    for (Mor g : G.hom(x, x))
      if (g != G.identity(x) && s.act_left(g, e) == e) return false;
  }
  return true;
}

std::vector<std::vector<Elem>> orbits(const Biset& s) {
  const auto& G = s.left();
  const auto& H = s.right();
  std::vector<std::size_t> parent(s.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (Elem e = 0; e < s.size(); ++e) {
    const auto& ty = s.type(e);
    for (Mor g : G.generators())
      if (G.source(g) == ty.x) uf_union(parent, e, s.act_left(g, e));
    for (Mor h : H.generators())
      if (H.target(h) == ty.y) uf_union(parent, e, s.act_right(e, h));
  }
  std::map<std::size_t, std::size_t> index;
  std::vector<std::vector<Elem>> out;
  for (Elem e = 0; e < s.size(); ++e) {
    auto [it, inserted] = index.emplace(uf_find(parent, e), out.size());
    if (inserted) out.emplace_back();
    out[it->second].push_back(e);
  }
  return out;
}

std::vector<std::pair<Mor, Mor>> stabilizer(const Biset& s, Elem e) {
  const auto& G = s.left();
  const auto& H = s.right();
  const auto& ty = s.type(e);
  std::vector<std::pair<Mor, Mor>> out;
  std::map<Elem, std::vector<Mor>> by_right_image;
  for (Mor h : H.hom(ty.y, ty.y)) by_right_image[s.act_right(e, h)].push_back(h);
  for (Mor g : G.hom(ty.x, ty.x)) {
    auto it = by_right_image.find(s.act_left(g, e));
    if (it == by_right_image.end()) continue;
    for (Mor h : it->second) out.emplace_back(g, h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<EquivariantMap> is_isomorphic(const Biset& a, const Biset& b) {
  if (!a.same_ambient(b) || a.size() != b.size()) return std::nullopt;
  auto oa = orbits(a);
  auto ob = orbits(b);
  if (oa.size() != ob.size()) return std::nullopt;
  std::vector<bool> used(ob.size(), false);
  std::vector<std::pair<Elem, Elem>> base;
  for (const auto& orbit : oa) {
    Elem s0 = orbit.front();
    auto stab = stabilizer(a, s0);
    bool matched = false;
    for (std::size_t j = 0; j < ob.size() && !matched; ++j) {
      if (used[j] || ob[j].size() != orbit.size()) continue;
      for (Elem t : ob[j]) {
        if (b.type(t) != a.type(s0) || stabilizer(b, t) != stab) continue;
        used[j] = true;
        base.emplace_back(s0, t);
        matched = true;
        break;
      }
    }
    if (!matched) return std::nullopt;
  }
  auto map = extend_equivariantly(a, b, base);
  if (!map || !map->is_bijective()) throw std::logic_error("orbit matching produced a non-isomorphism");
  return map;
}

Pullback pullback(const EquivariantMap& alpha, const EquivariantMap& beta) {
  if (!alpha.target().same_structure(beta.target())) throw std::invalid_argument("pullback: maps have different targets");
  const Biset& w = alpha.source();
  const Biset& w2 = beta.source();
  std::vector<std::vector<Elem>> fiber(alpha.target().size());
  std::vector<std::size_t> fiber_pos(w2.size());
  for (Elem e = 0; e < w2.size(); ++e) {
    fiber_pos[e] = fiber[beta(e)].size();
    fiber[beta(e)].push_back(e);
  }
  Pullback out;
  std::vector<std::size_t> offset(w.size());
  std::vector<ElementType> types;
  for (Elem e = 0; e < w.size(); ++e) {
    offset[e] = out.pairs.size();
    for (Elem f : fiber[alpha(e)]) {
      out.pairs.emplace_back(e, f);
      types.push_back(w.type(e));
    }
  }
  auto index = [&](Elem e, Elem f) { return offset[e] + fiber_pos[f]; };
  out.result = Biset::build(
      w.left(), w.right(), std::move(types),
      [&](Mor g, Elem p) {
        auto [e, f] = out.pairs[p];
        return index(w.act_left(g, e), w2.act_left(g, f));
      },
      [&](Elem p, Mor h) {
        auto [e, f] = out.pairs[p];
        return index(w.act_right(e, h), w2.act_right(f, h));
      });
  std::vector<Elem> p1, p2;
  for (auto [e, f] : out.pairs) {
    p1.push_back(e);
    p2.push_back(f);
  }
  out.first = EquivariantMap(out.result, w, std::move(p1));
  out.second = EquivariantMap(out.result, w2, std::move(p2));
  return out;
}

SubBiset sub_biset(const Biset& s, const std::vector<Elem>& elements) {
  constexpr Elem absent = static_cast<Elem>(-1);
  std::vector<Elem> position(s.size(), absent);
  std::vector<ElementType> types;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    position[elements[k]] = k;
    types.push_back(s.type(elements[k]));
  }
  auto local = [&](Elem e) {
    if (position[e] == absent) throw std::invalid_argument("sub_biset: element set is not invariant");
    return position[e];
  };
  Biset sub = Biset::build(
      s.left(), s.right(), std::move(types), [&](Mor g, Elem e) { return local(s.act_left(g, elements[e])); },
      [&](Elem e, Mor h) { return local(s.act_right(elements[e], h)); });
  return {sub, EquivariantMap(sub, s, elements)};
}

Biset restrict_biset(const Biset& s, const GroupoidFunctor& a, const GroupoidFunctor& b) {
  if (!a.target().same_structure(s.left()) || !b.target().same_structure(s.right()))
    throw std::invalid_argument("restrict_biset: functors do not land in the ambient groupoids");
  const auto& G2 = a.source();
  const auto& H2 = b.source();
  std::map<std::tuple<Obj, Obj, Elem>, Elem> index;
  struct Entry {
    Obj x, y;
    Elem e;
  };
  std::vector<Entry> entries;
  std::vector<ElementType> types;
  for (Obj x = 0; x < G2.num_objects(); ++x)
    for (Obj y = 0; y < H2.num_objects(); ++y)
      for (Elem e = 0; e < s.size(); ++e)
        if (s.type(e) == ElementType{a.object(x), b.object(y)}) {
          index.emplace(std::make_tuple(x, y, e), entries.size());
          entries.push_back({x, y, e});
          types.push_back({x, y});
        }
  return Biset::build(
      G2, H2, std::move(types),
      [&](Mor g, Elem p) {
        const auto& en = entries[p];
        return index.at({G2.target(g), en.y, s.act_left(a.morphism(g), en.e)});
      },
      [&](Elem p, Mor h) {
        const auto& en = entries[p];
        return index.at({en.x, H2.source(h), s.act_right(en.e, b.morphism(h))});
      });
}

namespace {

const FiniteGroup& require_group(const FiniteGroupoid& g) {
  if (!g.as_group()) throw std::invalid_argument("operation needs a group, not a general groupoid");
  return *g.as_group();
}

Subgroup pair_stabilizer(const Biset& s, const DirectProduct& gg, Elem e) {
  std::vector<std::size_t> elems;
  for (auto [g, h] : stabilizer(s, e)) elems.push_back(gg.pair(g, h));
  return Subgroup::trusted(gg.group, std::move(elems));
}

}  // namespace

OrbitDecomposition orbit_decomposition(const Biset& s) {
  const FiniteGroup& g1 = require_group(s.left());
  const FiniteGroup& g2 = require_group(s.right());
  OrbitDecomposition out{direct_product(g1, g2), {}};
  const auto& gg = out.product;
  for (auto& orbit : orbits(s)) {
    Elem s0 = orbit.front();
    Subgroup m = pair_stabilizer(s, gg, s0);
    Subgroup best = m;
    Elem best_point = s0;
    // Conjugating by c = (c1, c2) moves the base point to c1 s0 c2^-1.
    for (std::size_t c = 0; c < gg.group.order(); ++c) {
      Subgroup mc = conjugate(m, c);
      if (mc < best) {
        best = std::move(mc);
        best_point = s.conjugate_by(gg.pr1(c), s0, gg.pr2(c));
      }
    }
    out.orbits.push_back({std::move(best), std::move(orbit), best_point});
  }
  return out;
}

Biset transitive_biset(const DirectProduct& gg, const Subgroup& m) {
  auto cs = cosets(m, CosetSide::Left);
  std::vector<std::size_t> coset_of(gg.group.order());
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (auto e : cs[i]) coset_of[e] = i;
  const auto& G = gg.group;
  std::vector<ElementType> types(cs.size(), ElementType{0, 0});
  return Biset::build(
      FiniteGroupoid::from_group(gg.first), FiniteGroupoid::from_group(gg.second), std::move(types),
      [&](Mor g1, Elem c) { return coset_of[G.mul(gg.pair(g1, 0), cs[c].front())]; },
      [&](Elem c, Mor g2) { return coset_of[G.mul(gg.pair(0, gg.second.inv(g2)), cs[c].front())]; });
}

Elem transitive_biset_element(const DirectProduct& gg, const Subgroup& m, std::size_t pair) {
  std::size_t least = pair;
  for (auto e : m.elements()) least = std::min(least, gg.group.mul(pair, e));
  auto cs = cosets(m, CosetSide::Left);
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (cs[i].front() == least) return i;
  throw std::logic_error("coset not found");
}

Biset coset_biset(const Subgroup& k) {
  const auto& G = k.group();
  auto cs = cosets(k, CosetSide::Left);
  std::vector<std::size_t> coset_of(G.order());
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (auto e : cs[i]) coset_of[e] = i;
  std::vector<ElementType> types(cs.size(), ElementType{0, 0});
  return Biset::build(
      FiniteGroupoid::from_group(G), FiniteGroupoid(), std::move(types),
      [&](Mor g, Elem c) { return coset_of[G.mul(g, cs[c].front())]; }, [](Elem c, Mor) { return c; });
}

InductionRestriction induction_restriction(const Subgroup& h) {
  auto sg = subgroup_as_group(h);
  const auto& G = h.group();
  FiniteGroupoid big = FiniteGroupoid::from_group(G);
  FiniteGroupoid small = FiniteGroupoid::from_group(sg.group);
  const auto& emb = sg.embedding;
  std::vector<ElementType> types(G.order(), ElementType{0, 0});
  InductionRestriction out;
  out.induction = Biset::build(
      big, small, types, [&](Mor g, Elem e) { return G.mul(g, e); }, [&](Elem e, Mor k) { return G.mul(e, emb[k]); });
  out.restriction = Biset::build(
      small, big, types, [&](Mor k, Elem e) { return G.mul(emb[k], e); }, [&](Elem e, Mor g) { return G.mul(e, g); });
  out.embedding = emb;
  return out;
}

Biset induction_biset(const Subgroup& h) { return induction_restriction(h).induction; }

Biset restriction_biset(const Subgroup& h) { return induction_restriction(h).restriction; }

EquivariantMap associator(const TensorProduct& ts, const TensorProduct& ts_r, const TensorProduct& sr,
                          const TensorProduct& t_sr) {
  std::vector<Elem> img;
  for (auto [c, r] : ts_r.representative) {
    auto [t, s] = ts.representative[c];
    img.push_back(t_sr.class_of(t, sr.class_of(s, r)));
  }
  return EquivariantMap(ts_r.result, t_sr.result, std::move(img));
}

EquivariantMap left_unitor(const TensorProduct& id_t) {
  std::vector<Elem> img;
  for (auto [f, t] : id_t.representative) img.push_back(id_t.right_factor.act_left(f, t));
  return EquivariantMap(id_t.result, id_t.right_factor, std::move(img));
}

EquivariantMap right_unitor(const TensorProduct& t_id) {
  std::vector<Elem> img;
  for (auto [t, f] : t_id.representative) img.push_back(t_id.left_factor.act_right(t, f));
  return EquivariantMap(t_id.result, t_id.left_factor, std::move(img));
}

}  // namespace mot2
