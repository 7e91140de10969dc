#include "mot2/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace mot2::sampling {


const std::vector<std::string> kSmallGroups = {"C1", "C2", "C3", "C4", "K4", "S3", "C6"};

std::size_t uniform(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

FiniteGroup random_group(Rng& rng) { return catalog_group(kSmallGroups[uniform(rng, kSmallGroups.size())]); }

const Subgroup& pick(Rng& rng, const std::vector<Subgroup>& v) { return v[uniform(rng, v.size())]; }

Biset random_group_biset(Rng& rng, const FiniteGroup& g1, const FiniteGroup& g2, bool right_free,
                         std::size_t max_orbits) {
  DirectProduct gg = direct_product(g1, g2);
  std::vector<Subgroup> candidates;
  for (auto& m : all_subgroups(gg.group)) {
    bool ok = true;
    if (right_free)
      for (auto e : m.elements())
        if (gg.pr1(e) == 0 && e != 0) ok = false;
    if (ok) candidates.push_back(std::move(m));
  }
  std::size_t count = 1 + uniform(rng, max_orbits);
  Biset s = transitive_biset(gg, pick(rng, candidates));
  for (std::size_t k = 1; k < count; ++k) s = biset_sum(s, transitive_biset(gg, pick(rng, candidates))).result;
  return s;
}

std::vector<std::vector<std::size_t>> all_homomorphisms(const FiniteGroup& src, const FiniteGroup& tgt) {
  const auto& gens = src.generators();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> choice(gens.size(), 0);
  for (;;) {
    // Extend the generator images along words; reject on conflict.
    std::vector<std::size_t> img(src.order(), static_cast<std::size_t>(-1));
    img[0] = 0;
    std::vector<std::size_t> queue{0};
    bool ok = true;
    for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
      std::size_t x = queue[qi];
      for (std::size_t k = 0; k < gens.size() && ok; ++k) {
        std::size_t y = src.mul(gens[k], x);
        std::size_t iy = tgt.mul(choice[k], img[x]);
        if (img[y] == static_cast<std::size_t>(-1)) {
          img[y] = iy;
          queue.push_back(y);
        } else if (img[y] != iy) {
          ok = false;
        }
      }
    }
    if (ok)
      for (std::size_t a = 0; a < src.order() && ok; ++a)
        for (std::size_t b = 0; b < src.order() && ok; ++b)
          if (img[src.mul(a, b)] != tgt.mul(img[a], img[b])) ok = false;
    if (ok) out.push_back(img);
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == tgt.order()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return out;
}

GroupoidFunctor fold_functor(std::size_t n, const FiniteGroup& g) {
  FiniteGroupoid c = FiniteGroupoid::connected(n, g);
  std::vector<Mor> mors;
  for (Mor f = 0; f < c.num_morphisms(); ++f) mors.push_back(f % g.order());
  return GroupoidFunctor(c, FiniteGroupoid::from_group(g), std::vector<Obj>(n, 0), std::move(mors));
}

Biset random_groupoid_biset(Rng& rng) {
  FiniteGroup g1 = random_group(rng), g2 = random_group(rng);
  Biset s = random_group_biset(rng, g1, g2, uniform(rng, 2) == 0, 2);
  GroupoidFunctor a = uniform(rng, 2) ? fold_functor(2, g1) : GroupoidFunctor::identity(s.left());
  GroupoidFunctor b = uniform(rng, 2) ? fold_functor(2, g2) : GroupoidFunctor::identity(s.right());
  return restrict_biset(s, a, b);
}

RandomSpan random_span_between(Rng& rng, const FiniteGroup& h, const FiniteGroup& g) {
  FiniteGroup k = random_group(rng);
  auto homs_h = all_homomorphisms(k, h);
  auto homs_g = all_homomorphisms(k, g);
  auto uh = homs_h[uniform(rng, homs_h.size())];
  auto ig = homs_g[uniform(rng, homs_g.size())];
  GroupoidFunctor u = GroupoidFunctor::from_group_hom(k, h, uh);
  GroupoidFunctor i(u.source(), FiniteGroupoid::from_group(g), {0}, ig);
  if (uniform(rng, 3) == 0) {
    // Precompose with a fold so the apex has two isomorphic objects.
    GroupoidFunctor fold = fold_functor(2, k);
    GroupoidFunctor fu(fold.source(), u.source(), fold.object_map(), fold.morphism_map());
    u = fu.then(u);
    i = fu.then(i);
  }
  return {u, i};
}

RandomSpan random_span(Rng& rng) {
  FiniteGroup h = random_group(rng);
  FiniteGroup g = random_group(rng);
  return random_span_between(rng, h, g);
}

std::optional<EquivariantMap> random_map(Rng& rng, const Biset& w, const Biset& u) {
  std::vector<std::pair<Elem, Elem>> base;
  for (const auto& orbit : orbits(w)) {
    Elem w0 = orbit.front();
    auto stab = stabilizer(w, w0);
    std::vector<Elem> candidates;
    for (Elem x = 0; x < u.size(); ++x) {
      if (u.type(x) != w.type(w0)) continue;
      auto su = stabilizer(u, x);
      if (std::includes(su.begin(), su.end(), stab.begin(), stab.end())) candidates.push_back(x);
    }
    if (candidates.empty()) return std::nullopt;
    base.emplace_back(w0, candidates[uniform(rng, candidates.size())]);
  }
  auto m = extend_equivariantly(w, u, base);
  if (!m) throw std::logic_error("random_map: stabilizer test admitted a non-map");
  return m;
}

TwoCell random_two_cell(Rng& rng, const Field& field, const Biset& u, const Biset& v) {
  TwoCell out(field, u, v);
  const std::size_t spans = 1 + uniform(rng, 3);
  const auto g1 = u.left().as_group();
  const auto g2 = u.right().as_group();
  if (!g1 || !g2) throw std::invalid_argument("random_two_cell needs group bisets");
  for (std::size_t k = 0, attempts = 0; k < spans && attempts < 50; ++attempts) {
    Biset w = random_group_biset(rng, *g1, *g2, false, 2);
    auto beta = random_map(rng, w, u);
    auto alpha = beta ? random_map(rng, w, v) : std::nullopt;
    if (!alpha) continue;
    out.add(Scalar(field, static_cast<long long>(uniform(rng, 5)) - 2), MapSpan{w, *beta, *alpha});
    ++k;
  }
  return out;
}

}  // namespace mot2::sampling
