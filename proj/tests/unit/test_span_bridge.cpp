#include <doctest.h>

#include "mot2/span.hpp"
#include "oracles.hpp"
#include "random_objects.hpp"

using namespace mot2;

namespace {
Subgroup generated(const FiniteGroup& g, std::initializer_list<const char*> cycles) {
  std::vector<std::size_t> gens;
  for (const char* c : cycles) gens.push_back(*g.index_of(parse_cycles(c, g.degree())));
  return generate_subgroup(g, gens);
}

Span from_random(const gen::RandomSpan& r) { return Span::make(r.u, r.i); }

// H <- H -> G for a subgroup, and its mirror G <- H -> H.
Span induction_span(const Subgroup& h) {
  auto inc = GroupoidFunctor::subgroup_inclusion(h);
  return Span::make(GroupoidFunctor::identity(inc.source()), inc);
}
Span restriction_span(const Subgroup& h) {
  auto inc = GroupoidFunctor::subgroup_inclusion(h);
  return Span::make(inc, GroupoidFunctor::identity(inc.source()));
}
// 1 <- G -> 1
Span collapse_span(const FiniteGroup& g) {
  auto p = FiniteGroupoid::from_group(g);
  return Span::make(GroupoidFunctor::to_trivial(p), GroupoidFunctor::to_trivial(p));
}
}  // namespace

TEST_CASE("realizing identity and one-sided spans") {
  auto s3 = FiniteGroupoid::from_group(catalog_group("S3"));
  CHECK(is_isomorphic(realize(Span::identity(s3)), identity_biset(s3)));

  auto c2 = catalog_group("C2");
  auto one = trivial_subgroup(c2);
  auto r = realize(restriction_span(one));
  CHECK(r.size() == 2);
  CHECK(r.left().num_morphisms() == 1);
  CHECK(r.right().num_morphisms() == 2);
  CHECK(is_right_free(r));

  auto h = generated(catalog_group("S3"), {"(1 2)"});
  auto ind = realize(induction_span(h));
  CHECK(ind.size() == 6);
  CHECK(is_right_free(ind));
  CHECK(is_isomorphic(ind, induction_biset(h)));
  CHECK(is_isomorphic(realize(restriction_span(h)), restriction_biset(h)));
}

TEST_CASE("groupoids of elements") {
  auto triv = grothendieck(identity_biset(FiniteGroupoid()));
  CHECK(triv.span.apex().num_objects() == 1);
  CHECK(triv.span.apex().num_morphisms() == 1);

  auto c2 = catalog_group("C2");
  auto regular = grothendieck(coset_biset(trivial_subgroup(c2)));
  const auto& a = regular.span.apex();
  CHECK(a.num_objects() == 2);
  CHECK(a.components().size() == 1);
  CHECK(a.vertex_group(0).group.order() == 1);

  auto point = grothendieck(coset_biset(whole_group(c2)));
  CHECK(point.span.apex().num_objects() == 1);
  CHECK(point.span.apex().vertex_group(0).group.order() == 2);
  for (const auto* g : {&triv, &regular, &point}) CHECK(is_jointly_faithful(g->span));
}

TEST_CASE("comparison functor examples") {
  auto s3 = catalog_group("S3");
  auto h = generated(s3, {"(1 2)"});
  auto rf = induction_span(h);
  CHECK(is_right_faithful(rf));
  CHECK(is_jointly_faithful(rf));
  CHECK(is_equivalence(phi_comparison(rf)));

  auto collapse = collapse_span(catalog_group("C2"));
  auto phi = phi_comparison(collapse);
  CHECK(is_full(phi));
  CHECK(is_essentially_surjective(phi));
  CHECK_FALSE(is_faithful(phi));
  CHECK_FALSE(is_jointly_faithful(collapse));

  CHECK(is_equivalence(phi_comparison(Span::identity(FiniteGroupoid::from_group(s3)))));
}

TEST_CASE("varphi examples") {
  auto c2 = FiniteGroupoid::from_group(catalog_group("C2"));
  auto m = varphi_iso(identity_biset(c2));
  CHECK(m.source().size() == 2);
  CHECK(m.is_bijective());
  auto h = generated(catalog_group("S3"), {"(1 2)"});
  CHECK(varphi_iso(induction_biset(h)).is_bijective());
  gen::Rng rng(31);
  auto s = gen::random_group_biset(rng, catalog_group("S3"), catalog_group("C2"), true, 3);
  CHECK(varphi_iso(s).is_bijective());
}

TEST_CASE("varphi is an isomorphism on random bisets") {
  gen::Rng rng(32);
  for (int trial = 0; trial < 60; ++trial) {
    Biset s = trial % 2 ? gen::random_groupoid_biset(rng)
                        : gen::random_group_biset(rng, gen::random_group(rng), gen::random_group(rng), false, 3);
    CHECK(varphi_iso(s).is_bijective());
  }
}

TEST_CASE("phi is an equivalence exactly for jointly faithful spans") {
  gen::Rng rng(33);
  int faithful = 0;
  for (int trial = 0; trial < 80; ++trial) {
    Span s = from_random(gen::random_span(rng));
    bool jf = is_jointly_faithful(s);
    faithful += jf;
    auto phi = phi_comparison(s);
    CHECK(is_full(phi));
    CHECK(is_essentially_surjective(phi));
    CHECK(is_equivalence(phi) == jf);
  }
  CHECK(faithful > 0);
  CHECK(faithful < 80);
}

TEST_CASE("right-faithful spans realize to right-free bisets") {
  gen::Rng rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    Span s = from_random(gen::random_span(rng));
    if (is_right_faithful(s)) CHECK(is_right_free(realize(s)));
  }
}

TEST_CASE("span composition examples") {
  auto s3 = catalog_group("S3");
  auto h = generated(s3, {"(1 2)"});
  auto id = Span::identity(FiniteGroupoid::from_group(s3));
  auto ind = induction_span(h);
  auto c = compose_spans(id, ind);
  CHECK(c.apex().num_objects() == 1);
  CHECK(c.apex().num_morphisms() == 2);
  CHECK(is_isomorphic(realize(c), realize(ind)));

  auto gg = compose_spans(ind, restriction_span(h));
  auto r = realize(gg);
  CHECK(r.size() == 18);
  CHECK(orbits(r).size() == 1);

  auto collapse = collapse_span(catalog_group("C2"));
  auto cc = compose_spans(collapse, collapse);
  CHECK(is_isomorphic(realize(cc), tensor(realize(collapse), realize(collapse)).result));
  CHECK(realize(cc).size() == oracle::tensor_size_by_closure(realize(collapse), realize(collapse)));

  auto raw = compose_spans(id, ind, false);
  CHECK(raw.apex().num_objects() == 6);
  CHECK(is_isomorphic(realize(raw), realize(c)));
}

TEST_CASE("composites of jointly faithful spans need not be jointly faithful") {
  auto c2 = FiniteGroupoid::from_group(catalog_group("C2"));
  auto to_one = GroupoidFunctor::to_trivial(c2);
  auto id = GroupoidFunctor::identity(c2);
  Span first = Span::make(to_one, id);   // 1 <- C2 = C2
  Span second = Span::make(id, to_one);  // C2 = C2 -> 1
  CHECK(is_jointly_faithful(first));
  CHECK(is_jointly_faithful(second));
  Span composite = compose_spans(second, first);
  CHECK_FALSE(is_jointly_faithful(composite));
}

TEST_CASE("realization preserves composition on random pairs") {
  gen::Rng rng(35);
  for (int trial = 0; trial < 40; ++trial) {
    FiniteGroup a = gen::random_group(rng), b = gen::random_group(rng), c = gen::random_group(rng);
    Span s1 = from_random(gen::random_span_between(rng, a, b));
    Span s2 = from_random(gen::random_span_between(rng, b, c));
    Biset lhs = realize(compose_spans(s2, s1));
    Biset rhs = tensor(realize(s2), realize(s1)).result;
    CHECK(is_isomorphic(lhs, rhs));
  }
}
