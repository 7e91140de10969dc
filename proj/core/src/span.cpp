#include "mot2/span.hpp"

#include <stdexcept>

namespace mot2 {

Span Span::make(GroupoidFunctor u, GroupoidFunctor i) {
  if (!u.source().same_structure(i.source())) throw std::invalid_argument("span legs need a common source");
  return Span{std::move(u), std::move(i)};
}

Span Span::identity(const FiniteGroupoid& g) {
  return Span{GroupoidFunctor::identity(g), GroupoidFunctor::identity(g)};
}

bool is_right_faithful(const Span& s) { return is_faithful(s.i); }

bool is_jointly_faithful(const Span& s) { return is_faithful(pairing(s.u, s.i)); }

Elem InducedBiset::element(const GroupoidFunctor& v, Obj z, Mor q) const {
  if (v.target().source(q) != v.object(z)) throw std::invalid_argument("morphism does not start at v(z)");
  return offset[z] + v.target().out_pos(q);
}

InducedBiset induced_biset(const GroupoidFunctor& v) {
  const auto& P = v.source();
  const auto& G = v.target();
  InducedBiset out;
  std::vector<ElementType> types;
  std::vector<std::pair<Obj, Mor>> elems;
  for (Obj z = 0; z < P.num_objects(); ++z) {
    out.offset.push_back(types.size());
    for (Mor q : G.out(v.object(z))) {
      types.push_back({G.target(q), z});
      elems.push_back({z, q});
    }
  }
  out.biset = Biset::build(
      G, P, std::move(types),
      [&](Mor g, Elem e) { return out.element(v, elems[e].first, G.compose(g, elems[e].second)); },
      [&](Elem e, Mor p) { return out.element(v, P.source(p), G.compose(elems[e].second, v.morphism(p))); });
  return out;
}

Elem RestrictedBiset::element(const GroupoidFunctor& v, Obj z, Mor q) const {
  if (v.target().target(q) != v.object(z)) throw std::invalid_argument("morphism does not end at v(z)");
  return offset[z] + v.target().in_pos(q);
}

RestrictedBiset restricted_biset(const GroupoidFunctor& v) {
  const auto& P = v.source();
  const auto& H = v.target();
  RestrictedBiset out;
  std::vector<ElementType> types;
  std::vector<std::pair<Obj, Mor>> elems;
  for (Obj z = 0; z < P.num_objects(); ++z) {
    out.offset.push_back(types.size());
    for (Mor q : H.in(v.object(z))) {
      types.push_back({z, H.source(q)});
      elems.push_back({z, q});
    }
  }
  out.biset = Biset::build(
      P, H, std::move(types),
      [&](Mor p, Elem e) { return out.element(v, P.target(p), H.compose(v.morphism(p), elems[e].second)); },
      [&](Elem e, Mor h) { return out.element(v, elems[e].first, H.compose(elems[e].second, h)); });
  return out;
}

Elem Realization::element(const Span& s, Obj z, Mor q, Mor r) const {
  return product.class_of(induced.element(s.i, z, q), restricted.element(s.u, z, r));
}

Realization realize_with_factors(const Span& s) {
  Realization out{induced_biset(s.i), restricted_biset(s.u), {}};
  out.product = tensor(out.induced.biset, out.restricted.biset);
  return out;
}

Biset realize(const Span& s) { return realize_with_factors(s).product.result; }

Mor GrothendieckConstruction::morphism(Elem s, Mor h, Mor g) const {
  const auto& H = span.left_foot();
  const auto& G = span.right_foot();
  const auto& t = biset.type(s);
  if (H.source(h) != t.y || G.source(g) != t.x) throw std::invalid_argument("morphism does not start at the element");
  return offset[s] + H.out_pos(h) * G.out(t.x).size() + G.out_pos(g);
}

GrothendieckConstruction grothendieck(const Biset& s) {
  const auto& G = s.left();
  const auto& H = s.right();
  GrothendieckConstruction out;
  out.biset = s;
  std::vector<MorphismSpec> specs;
  std::vector<Mor> hmor, gmor;
  for (Elem e = 0; e < s.size(); ++e) {
    out.offset.push_back(specs.size());
    const auto& t = s.type(e);
    for (Mor h : H.out(t.y))
      for (Mor g : G.out(t.x)) {
        specs.push_back({e, s.act_right(s.act_left(g, e), H.inverse(h))});
        hmor.push_back(h);
        gmor.push_back(g);
      }
  }
  auto index_of = [&](Elem e, Mor h, Mor g) {
    const auto& t = s.type(e);
    return out.offset[e] + H.out_pos(h) * G.out(t.x).size() + G.out_pos(g);
  };
  std::vector<Mor> ids;
  for (Elem e = 0; e < s.size(); ++e) ids.push_back(index_of(e, H.identity(s.type(e).y), G.identity(s.type(e).x)));
  FiniteGroupoid apex = FiniteGroupoid::build(s.size(), specs, std::move(ids), [&](Mor b, Mor a) {
    return index_of(specs[a].source, H.compose(hmor[b], hmor[a]), G.compose(gmor[b], gmor[a]));
  });
  std::vector<Obj> uy, ix;
  for (const auto& t : s.types()) {
    uy.push_back(t.y);
    ix.push_back(t.x);
  }
  out.span = Span{GroupoidFunctor(apex, H, std::move(uy), std::move(hmor)),
                  GroupoidFunctor(apex, G, std::move(ix), std::move(gmor))};
  return out;
}

GroupoidFunctor phi_comparison(const Span& s) {
  const auto& P = s.apex();
  Realization r = realize_with_factors(s);
  GrothendieckConstruction gr = grothendieck(r.biset());
  std::vector<Obj> objs;
  for (Obj z = 0; z < P.num_objects(); ++z)
    objs.push_back(r.element(s, z, s.right_foot().identity(s.i.object(z)), s.left_foot().identity(s.u.object(z))));
  std::vector<Mor> mors;
  for (Mor p = 0; p < P.num_morphisms(); ++p) mors.push_back(gr.morphism(objs[P.source(p)], s.u.morphism(p), s.i.morphism(p)));
  return GroupoidFunctor(P, gr.span.apex(), std::move(objs), std::move(mors));
}

EquivariantMap varphi_iso(const Biset& s) {
  GrothendieckConstruction gr = grothendieck(s);
  Realization r = realize_with_factors(gr.span);
  std::vector<Elem> img;
  for (Elem e = 0; e < s.size(); ++e)
    img.push_back(r.element(gr.span, e, s.left().identity(s.type(e).x), s.right().identity(s.type(e).y)));
  EquivariantMap m(s, r.biset(), std::move(img));
  if (!m.is_bijective()) throw std::logic_error("comparison map is not bijective");
  return m;
}

Span compose_spans(const Span& s2, const Span& s1, bool skeletonize) {
  if (!s1.right_foot().same_structure(s2.left_foot())) throw std::invalid_argument("spans are not composable");
  MackeySquare sq = iso_comma(s1.i, s2.u);
  GroupoidFunctor u = sq.p.then(s1.u);
  GroupoidFunctor i = sq.q.then(s2.i);
  if (!skeletonize) return Span{std::move(u), std::move(i)};
  FullSubgroupoid sk = skeleton(sq.apex);
  return Span{sk.inclusion.then(u), sk.inclusion.then(i)};
}

}  // namespace mot2
