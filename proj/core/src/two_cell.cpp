#include "mot2/two_cell.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mot2 {

MapSpan MapSpan::make(EquivariantMap to_source, EquivariantMap to_target) {
  if (!to_source.source().same_structure(to_target.source()))
    throw std::invalid_argument("span legs need a common middle");
  Biset middle = to_source.source();
  return MapSpan{std::move(middle), std::move(to_source), std::move(to_target)};
}

MapSpan MapSpan::from_map(const EquivariantMap& f) {
  return MapSpan{f.source(), EquivariantMap::identity(f.source()), f};
}

SpanKey transitive_key(const MapSpan& s) {
  const Biset& w = s.middle;
  if (w.empty()) throw std::invalid_argument("transitive_key: empty middle");
  std::pair<Elem, Elem> best{s.to_source(0), s.to_target(0)};
  for (Elem e = 1; e < w.size(); ++e) best = std::min(best, {s.to_source(e), s.to_target(e)});
  SpanKey key{best.first, best.second, {}};
  bool found = false;
  for (Elem e = 0; e < w.size(); ++e) {
    if (std::make_pair(s.to_source(e), s.to_target(e)) != best) continue;
    auto stab = stabilizer(w, e);
    if (!found || stab < key.stabilizer) {
      key.stabilizer = std::move(stab);
      found = true;
    }
  }
  return key;
}

std::vector<MapSpan> transitive_pieces(const MapSpan& s) {
  auto orbit_list = orbits(s.middle);
  if (orbit_list.size() == 1) return {s};
  std::vector<MapSpan> out;
  for (const auto& orbit : orbit_list) {
    SubBiset sub = sub_biset(s.middle, orbit);
    out.push_back(MapSpan{sub.result, sub.inclusion.then(s.to_source), sub.inclusion.then(s.to_target)});
  }
  return out;
}

TwoCell::TwoCell(Field field, Biset source, Biset target)
    : field_(field), source_(std::move(source)), target_(std::move(target)) {
  if (!source_.same_ambient(target_)) throw std::invalid_argument("2-cell between bisets over different groupoids");
}

TwoCell TwoCell::from_span(const Field& field, const MapSpan& s, const Scalar& coefficient) {
  TwoCell t(field, s.source(), s.target());
  t.add(coefficient, s);
  return t;
}

TwoCell TwoCell::from_span(const Field& field, const MapSpan& s) { return from_span(field, s, Scalar::one(field)); }

TwoCell TwoCell::from_map(const Field& field, const EquivariantMap& f) { return from_span(field, MapSpan::from_map(f)); }

TwoCell TwoCell::identity(const Field& field, const Biset& u) { return from_map(field, EquivariantMap::identity(u)); }

void TwoCell::add(const Scalar& c, const MapSpan& s) {
  if (c.field() != field_) throw std::invalid_argument("coefficient from another field");
  if (!s.source().same_structure(source_) || !s.target().same_structure(target_))
    throw std::invalid_argument("span does not go between the bisets of this 2-cell");
  if (c.is_zero() || s.middle.empty()) return;
  for (auto& piece : transitive_pieces(s)) {
    SpanKey key = transitive_key(piece);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), Term{c, std::move(piece)});
      continue;
    }
    it->second.coefficient += c;
    if (it->second.coefficient.is_zero()) terms_.erase(it);
  }
}

void TwoCell::require_parallel(const TwoCell& other) const {
  if (field_ != other.field_ || !source_.same_structure(other.source_) || !target_.same_structure(other.target_))
    throw std::invalid_argument("2-cells are not parallel");
}

TwoCell TwoCell::operator+(const TwoCell& other) const {
  require_parallel(other);
  TwoCell out = *this;
  for (const auto& [key, term] : other.terms_) out.add(term.coefficient, term.span);
  return out;
}

TwoCell TwoCell::operator-(const TwoCell& other) const { return *this + (-other); }

TwoCell TwoCell::operator-() const { return scaled(Scalar(field_, -1LL)); }

TwoCell TwoCell::scaled(const Scalar& c) const {
  TwoCell out(field_, source_, target_);
  if (c.is_zero()) return out;
  out.terms_ = terms_;
  for (auto& [key, term] : out.terms_) term.coefficient *= c;
  return out;
}

bool TwoCell::operator==(const TwoCell& other) const {
  if (field_ != other.field_ || !source_.same_structure(other.source_) || !target_.same_structure(other.target_))
    return false;
  if (terms_.size() != other.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (a->first != b->first || a->second.coefficient != b->second.coefficient) return false;
  return true;
}

std::string TwoCell::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, term] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << term.coefficient.to_short_string() << "*[" << key.source_point << "<-" << term.span.middle.size() << "->"
       << key.target_point << " stab{";
    for (std::size_t k = 0; k < key.stabilizer.size(); ++k)
      os << (k ? "," : "") << "(" << key.stabilizer[k].first << "," << key.stabilizer[k].second << ")";
    os << "}]";
  }
  return os.str();
}

TwoCell vcompose(const TwoCell& after, const TwoCell& before) {
  if (after.field() != before.field()) throw std::invalid_argument("vcompose: different fields");
  if (!before.target().same_structure(after.source())) throw std::invalid_argument("vcompose: 2-cells do not meet");
  TwoCell out(after.field(), before.source(), after.target());
  for (const auto& [k1, t1] : before.terms())
    for (const auto& [k2, t2] : after.terms()) {
      Pullback pb = pullback(t1.span.to_target, t2.span.to_source);
      if (pb.result.empty()) continue;
      out.add(t1.coefficient * t2.coefficient,
              MapSpan{pb.result, pb.first.then(t1.span.to_source), pb.second.then(t2.span.to_target)});
    }
  return out;
}

TwoCell whisker_left(const Biset& x, const TwoCell& t) {
  TensorProduct xu = tensor(x, t.source());
  TensorProduct xv = tensor(x, t.target());
  TwoCell out(t.field(), xu.result, xv.result);
  EquivariantMap id = EquivariantMap::identity(x);
  for (const auto& [key, term] : t.terms()) {
    TensorProduct xw = tensor(x, term.span.middle);
    out.add(term.coefficient, MapSpan{xw.result, tensor_maps(xw, xu, id, term.span.to_source),
                                      tensor_maps(xw, xv, id, term.span.to_target)});
  }
  return out;
}

TwoCell whisker_right(const TwoCell& t, const Biset& y) {
  TensorProduct uy = tensor(t.source(), y);
  TensorProduct vy = tensor(t.target(), y);
  TwoCell out(t.field(), uy.result, vy.result);
  EquivariantMap id = EquivariantMap::identity(y);
  for (const auto& [key, term] : t.terms()) {
    TensorProduct wy = tensor(term.span.middle, y);
    out.add(term.coefficient, MapSpan{wy.result, tensor_maps(wy, uy, term.span.to_source, id),
                                      tensor_maps(wy, vy, term.span.to_target, id)});
  }
  return out;
}

TwoCell hcompose(const TwoCell& outer, const TwoCell& inner) {
  if (outer.field() != inner.field()) throw std::invalid_argument("hcompose: different fields");
  TensorProduct src = tensor(outer.source(), inner.source());
  TensorProduct tgt = tensor(outer.target(), inner.target());
  TwoCell out(outer.field(), src.result, tgt.result);
  for (const auto& [ko, to] : outer.terms())
    for (const auto& [ki, ti] : inner.terms()) {
      TensorProduct w = tensor(to.span.middle, ti.span.middle);
      out.add(to.coefficient * ti.coefficient,
              MapSpan{w.result, tensor_maps(w, src, to.span.to_source, ti.span.to_source),
                      tensor_maps(w, tgt, to.span.to_target, ti.span.to_target)});
    }
  return out;
}

TwoCell transport(const TwoCell& t, const EquivariantMap& source_iso, const EquivariantMap& target_iso) {
  if (!source_iso.is_bijective() || !target_iso.is_bijective())
    throw std::invalid_argument("transport needs isomorphisms");
  TwoCell out(t.field(), source_iso.target(), target_iso.target());
  for (const auto& [key, term] : t.terms())
    out.add(term.coefficient, MapSpan{term.span.middle, term.span.to_source.then(source_iso),
                                      term.span.to_target.then(target_iso)});
  return out;
}

namespace {

// Multiplication G x_H G -> G.
EquivariantMap multiplication(const TensorProduct& ind_res, const Biset& id_g, const FiniteGroup& g) {
  std::vector<Elem> img;
  for (auto [a, b] : ind_res.representative) img.push_back(g.mul(a, b));
  return EquivariantMap(ind_res.result, id_g, std::move(img));
}

// Id_H -> H G_H, k |-> [k, 1].
EquivariantMap inclusion_into_restricted(const TensorProduct& res_ind, const Biset& id_h,
                                         const std::vector<std::size_t>& embedding) {
  std::vector<Elem> img;
  for (Elem k = 0; k < id_h.size(); ++k) img.push_back(res_ind.class_of(embedding[k], FiniteGroup::identity()));
  return EquivariantMap(id_h, res_ind.result, std::move(img));
}

TwoCell chain(const std::vector<TwoCell>& cells) {
  TwoCell out = cells.front();
  for (std::size_t k = 1; k < cells.size(); ++k) out = vcompose(cells[k], out);
  return out;
}

}  // namespace

SubgroupAdjunctions adjunction_units(const Subgroup& h, const Field& field) {
  const FiniteGroup& G = h.group();
  InductionRestriction ir = induction_restriction(h);
  SubgroupAdjunctions a;
  a.subgroup = h;
  a.field = field;
  a.induction = ir.induction;
  a.restriction = ir.restriction;
  a.id_g = identity_biset(ir.induction.left());
  a.id_h = identity_biset(ir.induction.right());
  a.restriction_induction = tensor(a.restriction, a.induction);
  a.induction_restriction = tensor(a.induction, a.restriction);
  EquivariantMap mu = multiplication(a.induction_restriction, a.id_g, G);
  EquivariantMap iota = inclusion_into_restricted(a.restriction_induction, a.id_h, ir.embedding);
  a.unit_left = TwoCell::from_map(field, iota);
  a.counit_left = TwoCell::from_map(field, mu);
  a.unit_right = TwoCell::from_span(field, MapSpan{a.induction_restriction.result, mu,
                                                   EquivariantMap::identity(a.induction_restriction.result)});
  a.counit_right = TwoCell::from_span(field, MapSpan{a.id_h, iota, EquivariantMap::identity(a.id_h)});
  return a;
}

TriangleComposites triangle_composites(const SubgroupAdjunctions& a) {
  const Field& k = a.field;
  const Biset& I = a.induction;
  const Biset& R = a.restriction;
  const TensorProduct& RI = a.restriction_induction;
  const TensorProduct& IR = a.induction_restriction;
  TensorProduct i_id = tensor(I, a.id_h), id_i = tensor(a.id_g, I);
  TensorProduct r_id = tensor(R, a.id_g), id_r = tensor(a.id_h, R);
  TensorProduct ir_i = tensor(IR.result, I), i_ri = tensor(I, RI.result);
  TensorProduct ri_r = tensor(RI.result, R), r_ir = tensor(R, IR.result);
  EquivariantMap assoc_i = associator(IR, ir_i, RI, i_ri);  // (I R) I -> I (R I)
  EquivariantMap assoc_r = associator(RI, ri_r, IR, r_ir);  // (R I) R -> R (I R)

  TriangleComposites out;
  out.left_on_induction = chain({TwoCell::from_map(k, right_unitor(i_id).inverse()), whisker_left(I, a.unit_left),
                                 TwoCell::from_map(k, assoc_i.inverse()), whisker_right(a.counit_left, I),
                                 TwoCell::from_map(k, left_unitor(id_i))});
  out.left_on_restriction = chain({TwoCell::from_map(k, left_unitor(id_r).inverse()), whisker_right(a.unit_left, R),
                                   TwoCell::from_map(k, assoc_r), whisker_left(R, a.counit_left),
                                   TwoCell::from_map(k, right_unitor(r_id))});
  out.right_on_induction = chain({TwoCell::from_map(k, left_unitor(id_i).inverse()), whisker_right(a.unit_right, I),
                                  TwoCell::from_map(k, assoc_i), whisker_left(I, a.counit_right),
                                  TwoCell::from_map(k, right_unitor(i_id))});
  out.right_on_restriction = chain({TwoCell::from_map(k, right_unitor(r_id).inverse()), whisker_left(R, a.unit_right),
                                    TwoCell::from_map(k, assoc_r.inverse()), whisker_right(a.counit_right, R),
                                    TwoCell::from_map(k, left_unitor(id_r))});
  return out;
}

TwoCell cohomological_2cell(const Subgroup& h, const Field& field) {
  const FiniteGroup& G = h.group();
  InductionRestriction ir = induction_restriction(h);
  Biset id_g = identity_biset(ir.induction.left());
  TensorProduct gg = tensor(ir.induction, ir.restriction);
  EquivariantMap mu = multiplication(gg, id_g, G);
  TwoCell span = TwoCell::from_span(field, MapSpan{gg.result, mu, mu});
  return span - TwoCell::identity(field, id_g).scaled(Scalar(field, static_cast<long long>(index(h))));
}

namespace {

void check_delta_subgroups(const DirectProduct& gg, const Subgroup& m, const Subgroup& n) {
  if (!m.is_subgroup_of(n)) throw std::invalid_argument("delta cell needs M <= N");
  for (auto e : n.elements())
    if (e != FiniteGroup::identity() && gg.pr1(e) == FiniteGroup::identity())
      throw std::invalid_argument("delta cell needs pr1 injective on N");
}

}  // namespace

TwoCell delta_cell(const DirectProduct& gg, const Subgroup& m, const Subgroup& n, const Field& field) {
  check_delta_subgroups(gg, m, n);
  Biset bn = transitive_biset(gg, n);
  Biset bm = transitive_biset(gg, m);
  auto q = extend_equivariantly(bm, bn, {{transitive_biset_element(gg, m, 0), transitive_biset_element(gg, n, 0)}});
  if (!q) throw std::logic_error("quotient map does not exist");
  TwoCell span = TwoCell::from_span(field, MapSpan{bm, *q, *q});
  return span - TwoCell::identity(field, bn).scaled(Scalar(field, static_cast<long long>(index_in(n, m))));
}

TwoCell delta_cell_by_whiskering(const DirectProduct& gg, const Subgroup& m, const Subgroup& n, const Field& field) {
  check_delta_subgroups(gg, m, n);
  SubgroupAsGroup ng = subgroup_as_group(n);
  std::vector<std::size_t> m_elems;
  for (std::size_t k = 0; k < ng.group.order(); ++k)
    if (m.contains(ng.embedding[k])) m_elems.push_back(k);
  Subgroup m_in_n(ng.group, std::move(m_elems));
  TwoCell delta0 = cohomological_2cell(m_in_n, field);

  const FiniteGroup& G1 = gg.first;
  const FiniteGroup& G2 = gg.second;
  const FiniteGroupoid& n_gpd = delta0.source().left();
  const auto& emb = ng.embedding;
  // G1 as a G1,N-biset and G2 as an N,G2-biset, N acting through the projections.
  Biset b1 = Biset::build(
      FiniteGroupoid::from_group(G1), n_gpd, std::vector<ElementType>(G1.order(), ElementType{0, 0}),
      [&](Mor g, Elem x) { return G1.mul(g, x); }, [&](Elem x, Mor k) { return G1.mul(x, gg.pr1(emb[k])); });
  Biset b2 = Biset::build(
      n_gpd, FiniteGroupoid::from_group(G2), std::vector<ElementType>(G2.order(), ElementType{0, 0}),
      [&](Mor k, Elem y) { return G2.mul(gg.pr2(emb[k]), y); }, [&](Elem y, Mor g) { return G2.mul(y, g); });

  TwoCell whiskered = whisker_left(b1, whisker_right(delta0, b2));
  TensorProduct inner = tensor(delta0.source(), b2);
  TensorProduct outer = tensor(b1, inner.result);
  Elem base = outer.class_of(FiniteGroup::identity(), inner.class_of(FiniteGroup::identity(), FiniteGroup::identity()));
  Biset bn = transitive_biset(gg, n);
  auto iso = extend_equivariantly(outer.result, bn, {{base, transitive_biset_element(gg, n, 0)}});
  if (!iso || !iso->is_bijective()) throw std::logic_error("G1 x_N G2 is not (G1 x G2)/N");
  return transport(whiskered, *iso, *iso);
}

SeparabilitySection separability_section(const Subgroup& h, const Field& field) {
  Scalar idx(field, static_cast<long long>(index(h)));
  if (idx.is_zero()) throw std::domain_error("the index is not invertible in the field");
  SubgroupAdjunctions a = adjunction_units(h, field);
  SeparabilitySection out;
  out.section = a.unit_right.scaled(idx.inverse());
  out.composite = vcompose(a.counit_left, out.section);
  out.defect = out.composite - TwoCell::identity(field, a.id_g);
  return out;
}

}  // namespace mot2
