#include "mot2/groupoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <tuple>

namespace mot2 {

struct FiniteGroupoid::Data {
  std::string name;
  std::size_t num_objects = 0;
  std::vector<MorphismSpec> morphisms;
  std::vector<Mor> identities;
  std::vector<Mor> inverses;
  std::vector<std::vector<Mor>> out, in;
  std::vector<std::size_t> out_pos, in_pos;
  std::vector<std::size_t> comp_offset;  // table row of f, indexed by out_pos of g
  std::vector<std::uint32_t> table;
  std::optional<FiniteGroup> group;
  std::vector<std::vector<Obj>> components;
  std::vector<std::size_t> component_of;
  std::vector<Mor> generators;
};

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

FiniteGroupoid::FiniteGroupoid() {
  static const FiniteGroupoid trivial = from_group(FiniteGroup());
  data_ = trivial.data_;
}

FiniteGroupoid FiniteGroupoid::build(std::size_t num_objects, std::vector<MorphismSpec> morphisms,
                                     std::vector<Mor> identities, const std::function<Mor(Mor, Mor)>& compose,
                                     std::string name) {
  return FiniteGroupoid(build_data(num_objects, std::move(morphisms), std::move(identities), compose, std::move(name)));
}

std::shared_ptr<FiniteGroupoid::Data> FiniteGroupoid::build_data(std::size_t num_objects,
                                                                 std::vector<MorphismSpec> morphisms,
                                                                 std::vector<Mor> identities,
                                                                 const std::function<Mor(Mor, Mor)>& compose,
                                                                 std::string name) {
  auto d = std::make_shared<Data>();
  d->name = std::move(name);
  d->num_objects = num_objects;
  d->morphisms = std::move(morphisms);
  d->identities = std::move(identities);
  const std::size_t m = d->morphisms.size();
  if (d->identities.size() != num_objects) throw std::invalid_argument("groupoid needs one identity per object");
  for (const auto& spec : d->morphisms)
    if (spec.source >= num_objects || spec.target >= num_objects)
      throw std::invalid_argument("morphism endpoint out of range");
  for (Obj x = 0; x < num_objects; ++x) {
    Mor id = d->identities[x];
    if (id >= m || d->morphisms[id].source != x || d->morphisms[id].target != x)
      throw std::invalid_argument("identity has wrong endpoints");
  }

  d->out.assign(num_objects, {});
  d->in.assign(num_objects, {});
  for (Mor f = 0; f < m; ++f) {
    d->out[d->morphisms[f].source].push_back(f);
    d->in[d->morphisms[f].target].push_back(f);
  }
  d->out_pos.assign(m, 0);
  d->in_pos.assign(m, 0);
  for (Obj x = 0; x < num_objects; ++x) {
    auto& o = d->out[x];
    std::stable_sort(o.begin(), o.end(), [&](Mor a, Mor b) { return d->morphisms[a].target < d->morphisms[b].target; });
    for (std::size_t i = 0; i < o.size(); ++i) d->out_pos[o[i]] = i;
    auto& n = d->in[x];
    std::stable_sort(n.begin(), n.end(), [&](Mor a, Mor b) { return d->morphisms[a].source < d->morphisms[b].source; });
    for (std::size_t i = 0; i < n.size(); ++i) d->in_pos[n[i]] = i;
  }

  d->comp_offset.assign(m, 0);
  std::size_t total = 0;
  for (Mor f = 0; f < m; ++f) {
    d->comp_offset[f] = total;
    total += d->out[d->morphisms[f].target].size();
  }
  d->table.resize(total);
  for (Mor f = 0; f < m; ++f) {
    const auto& row = d->out[d->morphisms[f].target];
    for (std::size_t j = 0; j < row.size(); ++j) {
      Mor g = row[j];
      Mor gf = compose(g, f);
      if (gf >= m || d->morphisms[gf].source != d->morphisms[f].source ||
          d->morphisms[gf].target != d->morphisms[g].target)
        throw std::invalid_argument("composite has wrong endpoints");
      d->table[d->comp_offset[f] + j] = static_cast<std::uint32_t>(gf);
    }
  }
  auto comp = [&](Mor g, Mor f) -> Mor { return d->table[d->comp_offset[f] + d->out_pos[g]]; };

  for (Mor f = 0; f < m; ++f) {
    const auto& spec = d->morphisms[f];
    if (comp(d->identities[spec.target], f) != f || comp(f, d->identities[spec.source]) != f)
      throw std::invalid_argument("identity law fails");
  }
  d->inverses.assign(m, m);
  for (Mor f = 0; f < m; ++f) {
    const auto& spec = d->morphisms[f];
    for (Mor g : d->out[spec.target]) {
      if (d->morphisms[g].target != spec.source) continue;
      if (comp(g, f) == d->identities[spec.source] && comp(f, g) == d->identities[spec.target]) {
        d->inverses[f] = g;
        break;
      }
    }
    if (d->inverses[f] == m) throw std::invalid_argument("morphism has no inverse");
  }

  std::size_t triples = 0;
  for (Mor f = 0; f < m && triples <= kAssociativityExhaustiveLimit; ++f)
    for (Mor g : d->out[d->morphisms[f].target]) triples += d->out[d->morphisms[g].target].size();
  auto check = [&](Mor f, Mor g, Mor h) {
    if (comp(h, comp(g, f)) != comp(comp(h, g), f)) throw std::invalid_argument("composition is not associative");
  };
  if (triples <= kAssociativityExhaustiveLimit) {
    for (Mor f = 0; f < m; ++f)
      for (Mor g : d->out[d->morphisms[f].target])
        for (Mor h : d->out[d->morphisms[g].target]) check(f, g, h);
  } else {
    std::mt19937_64 rng(0x5eed);
    for (std::size_t s = 0; s < kAssociativityExhaustiveLimit; ++s) {
      Mor f = rng() % m;
      const auto& og = d->out[d->morphisms[f].target];
      Mor g = og[rng() % og.size()];
      const auto& oh = d->out[d->morphisms[g].target];
      check(f, g, oh[rng() % oh.size()]);
    }
  }

  std::vector<std::size_t> parent(num_objects);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& spec : d->morphisms) {
    auto a = find_root(parent, spec.source), b = find_root(parent, spec.target);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  d->component_of.assign(num_objects, 0);
  std::map<std::size_t, std::size_t> comp_index;
  for (Obj x = 0; x < num_objects; ++x) {
    auto r = find_root(parent, x);
    auto [it, inserted] = comp_index.emplace(r, d->components.size());
    if (inserted) d->components.emplace_back();
    d->components[it->second].push_back(x);
    d->component_of[x] = it->second;
  }

  // Generators: a BFS tree from each component's least object (arrows and
  // their inverses), then enough loops at the root to generate its vertex
  // group.  Every morphism is a composite of these without inverting.
  for (const auto& c : d->components) {
    Obj root = c.front();
    std::vector<bool> reached(num_objects, false);
    reached[root] = true;
    std::vector<Obj> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (Mor f : d->out[queue[qi]]) {
        Obj t = d->morphisms[f].target;
        if (!reached[t]) {
          reached[t] = true;
          d->generators.push_back(f);
          d->generators.push_back(d->inverses[f]);
          queue.push_back(t);
        }
      }
    std::vector<Mor> loops;
    for (Mor f : d->out[root])
      if (d->morphisms[f].target == root) loops.push_back(f);
    std::vector<bool> in_span(m, false);
    std::vector<Mor> span{d->identities[root]};
    in_span[d->identities[root]] = true;
    std::vector<Mor> chosen;
    for (Mor f : loops) {
      if (in_span[f]) continue;
      chosen.push_back(f);
      for (std::size_t si = 0; si < span.size(); ++si)
        for (Mor s : chosen) {
          Mor x = comp(s, span[si]);
          if (!in_span[x]) {
            in_span[x] = true;
            span.push_back(x);
          }
        }
    }
    d->generators.insert(d->generators.end(), chosen.begin(), chosen.end());
  }
  return d;
}

FiniteGroupoid FiniteGroupoid::from_group(const FiniteGroup& g) {
  std::vector<MorphismSpec> specs(g.order(), MorphismSpec{0, 0});
  auto d = build_data(1, std::move(specs), {FiniteGroup::identity()}, [&](Mor a, Mor b) { return g.mul(a, b); },
                      g.name());
  d->group = g;
  d->generators = g.generators();
  return FiniteGroupoid(std::move(d));
}

FiniteGroupoid FiniteGroupoid::connected(std::size_t n, const FiniteGroup& g) {
  const std::size_t k = g.order();
  std::vector<MorphismSpec> specs;
  for (Obj x = 0; x < n; ++x)
    for (Obj y = 0; y < n; ++y)
      for (std::size_t e = 0; e < k; ++e) specs.push_back({x, y});
  std::vector<Mor> ids;
  for (Obj x = 0; x < n; ++x) ids.push_back((x * n + x) * k);
  return build(n, std::move(specs), std::move(ids), [&](Mor b, Mor a) {
    Obj x = a / k / n, z = b / k % n;
    return (x * n + z) * k + g.mul(b % k, a % k);
  });
}

std::size_t FiniteGroupoid::num_objects() const { return data_->num_objects; }
std::size_t FiniteGroupoid::num_morphisms() const { return data_->morphisms.size(); }
const std::string& FiniteGroupoid::name() const { return data_->name; }
Obj FiniteGroupoid::source(Mor f) const { return data_->morphisms[f].source; }
Obj FiniteGroupoid::target(Mor f) const { return data_->morphisms[f].target; }
Mor FiniteGroupoid::identity(Obj x) const { return data_->identities[x]; }
Mor FiniteGroupoid::inverse(Mor f) const { return data_->inverses[f]; }

Mor FiniteGroupoid::compose(Mor g, Mor f) const {
  if (data_->morphisms[f].target != data_->morphisms[g].source)
    throw std::invalid_argument("morphisms are not composable");
  return data_->table[data_->comp_offset[f] + data_->out_pos[g]];
}

std::span<const Mor> FiniteGroupoid::out(Obj x) const { return data_->out[x]; }
std::size_t FiniteGroupoid::out_pos(Mor f) const { return data_->out_pos[f]; }
std::span<const Mor> FiniteGroupoid::in(Obj y) const { return data_->in[y]; }
std::size_t FiniteGroupoid::in_pos(Mor f) const { return data_->in_pos[f]; }

std::span<const Mor> FiniteGroupoid::hom(Obj x, Obj y) const {
  const auto& o = data_->out[x];
  const auto& specs = data_->morphisms;
  auto lo = std::lower_bound(o.begin(), o.end(), y, [&](Mor f, Obj t) { return specs[f].target < t; });
  auto hi = std::upper_bound(lo, o.end(), y, [&](Obj t, Mor f) { return t < specs[f].target; });
  return {o.data() + (lo - o.begin()), static_cast<std::size_t>(hi - lo)};
}

const std::optional<FiniteGroup>& FiniteGroupoid::as_group() const { return data_->group; }
const std::vector<std::vector<Obj>>& FiniteGroupoid::components() const { return data_->components; }
std::size_t FiniteGroupoid::component_of(Obj x) const { return data_->component_of[x]; }
const std::vector<Mor>& FiniteGroupoid::generators() const { return data_->generators; }

FiniteGroupoid::VertexGroup FiniteGroupoid::vertex_group(Obj x) const {
  auto loops = hom(x, x);
  const std::size_t k = loops.size();
  std::map<Mor, std::size_t> pos;
  for (std::size_t j = 0; j < k; ++j) pos[loops[j]] = j;
  std::vector<Perm> gens;
  for (Mor f : loops) {
    Perm p(k);
    for (std::size_t j = 0; j < k; ++j) p[j] = static_cast<std::uint16_t>(pos.at(compose(f, loops[j])));
    gens.push_back(std::move(p));
  }
  VertexGroup out{FiniteGroup::from_generators(k, gens, k), {}};
  const std::size_t id_pos = pos.at(identity(x));
  for (std::size_t i = 0; i < out.group.order(); ++i) out.element_morphism.push_back(loops[out.group.element(i)[id_pos]]);
  return out;
}

bool FiniteGroupoid::is_discrete() const { return num_morphisms() == num_objects(); }

bool FiniteGroupoid::same_structure(const FiniteGroupoid& other) const {
  if (data_ == other.data_) return true;
  const Data& a = *data_;
  const Data& b = *other.data_;
  if (a.num_objects != b.num_objects || a.morphisms.size() != b.morphisms.size() || a.identities != b.identities)
    return false;
  for (std::size_t f = 0; f < a.morphisms.size(); ++f)
    if (a.morphisms[f].source != b.morphisms[f].source || a.morphisms[f].target != b.morphisms[f].target) return false;
  return a.table == b.table;
}

FiniteGroupoid product_groupoid(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const std::size_t nb = b.num_objects(), mb = b.num_morphisms();
  std::vector<MorphismSpec> specs;
  for (Mor f = 0; f < a.num_morphisms(); ++f)
    for (Mor g = 0; g < mb; ++g) specs.push_back({a.source(f) * nb + b.source(g), a.target(f) * nb + b.target(g)});
  std::vector<Mor> ids;
  for (Obj x = 0; x < a.num_objects(); ++x)
    for (Obj y = 0; y < nb; ++y) ids.push_back(a.identity(x) * mb + b.identity(y));
  return FiniteGroupoid::build(a.num_objects() * nb, std::move(specs), std::move(ids), [&](Mor s, Mor t) {
    return a.compose(s / mb, t / mb) * mb + b.compose(s % mb, t % mb);
  });
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const std::size_t na = a.num_objects(), ma = a.num_morphisms();
  std::vector<MorphismSpec> specs;
  for (Mor f = 0; f < ma; ++f) specs.push_back({a.source(f), a.target(f)});
  for (Mor f = 0; f < b.num_morphisms(); ++f) specs.push_back({na + b.source(f), na + b.target(f)});
  std::vector<Mor> ids;
  for (Obj x = 0; x < na; ++x) ids.push_back(a.identity(x));
  for (Obj x = 0; x < b.num_objects(); ++x) ids.push_back(ma + b.identity(x));
  return FiniteGroupoid::build(na + b.num_objects(), std::move(specs), std::move(ids), [&](Mor g, Mor f) {
    return f < ma ? a.compose(g, f) : ma + b.compose(g - ma, f - ma);
  });
}

FiniteGroupoid opposite_groupoid(const FiniteGroupoid& g) {
  std::vector<MorphismSpec> specs;
  for (Mor f = 0; f < g.num_morphisms(); ++f) specs.push_back({g.target(f), g.source(f)});
  std::vector<Mor> ids;
  for (Obj x = 0; x < g.num_objects(); ++x) ids.push_back(g.identity(x));
  return FiniteGroupoid::build(g.num_objects(), std::move(specs), std::move(ids),
                               [&](Mor b, Mor a) { return g.compose(a, b); });
}

GroupoidFunctor::GroupoidFunctor(FiniteGroupoid source, FiniteGroupoid target, std::vector<Obj> on_objects,
                                 std::vector<Mor> on_morphisms)
    : source_(std::move(source)),
      target_(std::move(target)),
      on_objects_(std::move(on_objects)),
      on_morphisms_(std::move(on_morphisms)) {
  if (on_objects_.size() != source_.num_objects() || on_morphisms_.size() != source_.num_morphisms())
    throw std::invalid_argument("functor data has wrong size");
  for (Obj x : on_objects_)
    if (x >= target_.num_objects()) throw std::invalid_argument("functor object image out of range");
  for (Mor f = 0; f < source_.num_morphisms(); ++f) {
    Mor img = on_morphisms_[f];
    if (img >= target_.num_morphisms() || target_.source(img) != on_objects_[source_.source(f)] ||
        target_.target(img) != on_objects_[source_.target(f)])
      throw std::invalid_argument("functor does not preserve endpoints");
  }
  for (Obj x = 0; x < source_.num_objects(); ++x)
    if (on_morphisms_[source_.identity(x)] != target_.identity(on_objects_[x]))
      throw std::invalid_argument("functor does not preserve identities");
  for (Mor f = 0; f < source_.num_morphisms(); ++f)
    for (Mor g : source_.out(source_.target(f)))
      if (on_morphisms_[source_.compose(g, f)] != target_.compose(on_morphisms_[g], on_morphisms_[f]))
        throw std::invalid_argument("functor does not preserve composition");
}

GroupoidFunctor GroupoidFunctor::identity(const FiniteGroupoid& g) {
  std::vector<Obj> objs(g.num_objects());
  std::iota(objs.begin(), objs.end(), 0);
  std::vector<Mor> mors(g.num_morphisms());
  std::iota(mors.begin(), mors.end(), 0);
  return GroupoidFunctor(g, g, std::move(objs), std::move(mors));
}

GroupoidFunctor GroupoidFunctor::to_trivial(const FiniteGroupoid& g) {
  return GroupoidFunctor(g, FiniteGroupoid(), std::vector<Obj>(g.num_objects(), 0),
                         std::vector<Mor>(g.num_morphisms(), 0));
}

GroupoidFunctor GroupoidFunctor::from_group_hom(const FiniteGroup& src, const FiniteGroup& tgt,
                                                std::vector<std::size_t> images) {
  return GroupoidFunctor(FiniteGroupoid::from_group(src), FiniteGroupoid::from_group(tgt), {0}, std::move(images));
}

GroupoidFunctor GroupoidFunctor::subgroup_inclusion(const Subgroup& h) {
  auto sg = subgroup_as_group(h);
  return from_group_hom(sg.group, h.group(), sg.embedding);
}

GroupoidFunctor GroupoidFunctor::then(const GroupoidFunctor& next) const {
  if (!target_.same_structure(next.source_)) throw std::invalid_argument("functors are not composable");
  std::vector<Obj> objs;
  for (Obj x : on_objects_) objs.push_back(next.on_objects_[x]);
  std::vector<Mor> mors;
  for (Mor f : on_morphisms_) mors.push_back(next.on_morphisms_[f]);
  return GroupoidFunctor(source_, next.target_, std::move(objs), std::move(mors));
}

bool is_faithful(const GroupoidFunctor& f) {
  const auto& s = f.source();
  for (Obj x = 0; x < s.num_objects(); ++x) {
    // Faithful on every hom-set iff faithful on every vertex group.
    for (Mor g : s.hom(x, x))
      if (g != s.identity(x) && f.morphism(g) == f.target().identity(f.object(x))) return false;
  }
  return true;
}

bool is_full(const GroupoidFunctor& f) {
  const auto& s = f.source();
  const auto& t = f.target();
  for (Obj x = 0; x < s.num_objects(); ++x)
    for (Obj y = 0; y < s.num_objects(); ++y) {
      auto target_hom = t.hom(f.object(x), f.object(y));
      std::vector<bool> hit(target_hom.size(), false);
      std::size_t count = 0;
      for (Mor g : s.hom(x, y)) {
        Mor img = f.morphism(g);
        std::size_t pos = static_cast<std::size_t>(std::find(target_hom.begin(), target_hom.end(), img) - target_hom.begin());
        if (!hit[pos]) {
          hit[pos] = true;
          ++count;
        }
      }
      if (count != target_hom.size()) return false;
    }
  return true;
}

bool is_essentially_surjective(const GroupoidFunctor& f) {
  const auto& t = f.target();
  std::vector<bool> hit(t.components().size(), false);
  for (Obj x : f.object_map()) hit[t.component_of(x)] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool is_equivalence(const GroupoidFunctor& f) {
  return is_faithful(f) && is_full(f) && is_essentially_surjective(f);
}

GroupoidFunctor pairing(const GroupoidFunctor& f, const GroupoidFunctor& g) {
  if (!f.source().same_structure(g.source())) throw std::invalid_argument("pairing needs a common source");
  FiniteGroupoid prod = product_groupoid(f.target(), g.target());
  const std::size_t nb = g.target().num_objects(), mb = g.target().num_morphisms();
  std::vector<Obj> objs;
  for (Obj x = 0; x < f.source().num_objects(); ++x) objs.push_back(f.object(x) * nb + g.object(x));
  std::vector<Mor> mors;
  for (Mor m = 0; m < f.source().num_morphisms(); ++m) mors.push_back(f.morphism(m) * mb + g.morphism(m));
  return GroupoidFunctor(f.source(), prod, std::move(objs), std::move(mors));
}

MackeySquare iso_comma(const GroupoidFunctor& i, const GroupoidFunctor& u) {
  if (!i.target().same_structure(u.target())) throw std::invalid_argument("iso_comma needs a common target");
  const auto& H = i.source();
  const auto& K = u.source();
  const auto& G = i.target();
  MackeySquare sq;
  sq.i = i;
  sq.u = u;
  std::map<std::tuple<Obj, Obj, Mor>, Obj> lookup;
  for (Obj x = 0; x < H.num_objects(); ++x)
    for (Obj y = 0; y < K.num_objects(); ++y)
      for (Mor g : G.hom(i.object(x), u.object(y))) {
        lookup.emplace(std::make_tuple(x, y, g), sq.triples.size());
        sq.triples.push_back({x, y, g});
      }
  const std::size_t n = sq.triples.size();
  // Morphisms out of object z: all pairs (h, k) with h out of x, k out of y.
  std::vector<std::size_t> offset(n + 1, 0);
  for (Obj z = 0; z < n; ++z) {
    const auto& t = sq.triples[z];
    offset[z + 1] = offset[z] + H.out(t.x).size() * K.out(t.y).size();
  }
  std::vector<MorphismSpec> specs;
  std::vector<Mor> hmor, kmor;
  specs.reserve(offset[n]);
  for (Obj z = 0; z < n; ++z) {
    const auto& t = sq.triples[z];
    for (Mor h : H.out(t.x))
      for (Mor k : K.out(t.y)) {
        Mor g2 = G.compose(G.compose(u.morphism(k), t.g), G.inverse(i.morphism(h)));
        Obj z2 = lookup.at(std::make_tuple(H.target(h), K.target(k), g2));
        specs.push_back({z, z2});
        hmor.push_back(h);
        kmor.push_back(k);
      }
  }
  auto index_of = [&](Obj z, Mor h, Mor k) {
    return offset[z] + H.out_pos(h) * K.out(sq.triples[z].y).size() + K.out_pos(k);
  };
  std::vector<Mor> ids;
  for (Obj z = 0; z < n; ++z) ids.push_back(index_of(z, H.identity(sq.triples[z].x), K.identity(sq.triples[z].y)));
  sq.apex = FiniteGroupoid::build(n, specs, std::move(ids), [&](Mor b, Mor a) {
    return index_of(specs[a].source, H.compose(hmor[b], hmor[a]), K.compose(kmor[b], kmor[a]));
  });
  std::vector<Obj> px, qy;
  for (const auto& t : sq.triples) {
    px.push_back(t.x);
    qy.push_back(t.y);
    sq.gamma.push_back(t.g);
  }
  sq.p = GroupoidFunctor(sq.apex, H, std::move(px), hmor);
  sq.q = GroupoidFunctor(sq.apex, K, std::move(qy), kmor);
  return sq;
}

void verify_mackey_square(const MackeySquare& sq) {
  const auto& G = sq.i.target();
  const auto& P = sq.apex;
  if (sq.gamma.size() != P.num_objects()) throw std::logic_error("gamma has wrong size");
  for (Obj z = 0; z < P.num_objects(); ++z) {
    Mor g = sq.gamma[z];
    if (G.source(g) != sq.i.object(sq.p.object(z)) || G.target(g) != sq.u.object(sq.q.object(z)))
      throw std::logic_error("gamma component has wrong endpoints");
    if (G.compose(G.inverse(g), g) != G.identity(G.source(g))) throw std::logic_error("gamma component not invertible");
  }
  for (Mor m = 0; m < P.num_morphisms(); ++m) {
    Obj z = P.source(m), z2 = P.target(m);
    Mor lhs = G.compose(sq.u.morphism(sq.q.morphism(m)), sq.gamma[z]);
    Mor rhs = G.compose(sq.gamma[z2], sq.i.morphism(sq.p.morphism(m)));
    if (lhs != rhs) throw std::logic_error("gamma is not natural");
  }
}

FullSubgroupoid full_subgroupoid(const FiniteGroupoid& g, const std::vector<Obj>& objects) {
  std::vector<Obj> objs = objects;
  std::sort(objs.begin(), objs.end());
  objs.erase(std::unique(objs.begin(), objs.end()), objs.end());
  std::map<Obj, Obj> new_obj;
  for (std::size_t i = 0; i < objs.size(); ++i) new_obj[objs[i]] = i;
  std::vector<Mor> old_mor;
  std::map<Mor, Mor> new_mor;
  for (Mor f = 0; f < g.num_morphisms(); ++f)
    if (new_obj.count(g.source(f)) && new_obj.count(g.target(f))) {
      new_mor[f] = old_mor.size();
      old_mor.push_back(f);
    }
  std::vector<MorphismSpec> specs;
  for (Mor f : old_mor) specs.push_back({new_obj.at(g.source(f)), new_obj.at(g.target(f))});
  std::vector<Mor> ids;
  for (Obj x : objs) ids.push_back(new_mor.at(g.identity(x)));
  FiniteGroupoid sub = FiniteGroupoid::build(objs.size(), std::move(specs), std::move(ids), [&](Mor b, Mor a) {
    return new_mor.at(g.compose(old_mor[b], old_mor[a]));
  });
  return {sub, GroupoidFunctor(sub, g, objs, old_mor)};
}

FullSubgroupoid skeleton(const FiniteGroupoid& g) {
  std::vector<Obj> reps;
  for (const auto& c : g.components()) reps.push_back(c.front());
  return full_subgroupoid(g, reps);
}

}  // namespace mot2
