#include <doctest.h>

#include "mot2/groupoid.hpp"
#include "oracles.hpp"
#include "random_objects.hpp"

using namespace mot2;

namespace {
Subgroup generated(const FiniteGroup& g, std::initializer_list<const char*> cycles) {
  std::vector<std::size_t> gens;
  for (const char* c : cycles) gens.push_back(*g.index_of(parse_cycles(c, g.degree())));
  return generate_subgroup(g, gens);
}

// Every morphism is reachable as a composite of the listed generators.
bool generators_generate(const FiniteGroupoid& g) {
  std::vector<bool> seen(g.num_morphisms(), false);
  std::vector<Mor> stack;
  for (Obj x = 0; x < g.num_objects(); ++x) {
    seen[g.identity(x)] = true;
    stack.push_back(g.identity(x));
  }
  while (!stack.empty()) {
    Mor f = stack.back();
    stack.pop_back();
    for (Mor s : g.generators()) {
      if (g.source(s) != g.target(f)) continue;
      Mor c = g.compose(s, f);
      if (!seen[c]) {
        seen[c] = true;
        stack.push_back(c);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}
}  // namespace

TEST_CASE("groupoids from groups and disjoint unions") {
  auto s3 = FiniteGroupoid::from_group(catalog_group("S3"));
  CHECK(s3.num_objects() == 1);
  CHECK(s3.num_morphisms() == 6);
  auto c2 = FiniteGroupoid::from_group(catalog_group("C2"));
  auto u = disjoint_union(s3, c2);
  CHECK(u.num_objects() == 2);
  CHECK(u.num_morphisms() == 8);
  CHECK(u.components().size() == 2);
  CHECK(generators_generate(u));
}

TEST_CASE("connected groupoids") {
  auto g = FiniteGroupoid::connected(3, catalog_group("C2"));
  CHECK(g.num_objects() == 3);
  CHECK(g.num_morphisms() == 18);
  CHECK(g.components().size() == 1);
  CHECK(g.vertex_group(2).group.order() == 2);
  CHECK(generators_generate(g));
  auto sk = skeleton(g);
  CHECK(sk.groupoid.num_objects() == 1);
  CHECK(is_equivalence(sk.inclusion));
  CHECK(oracle::has_quasi_inverse(sk.inclusion));
}

TEST_CASE("build rejects malformed composition data") {
  // two morphisms on one object that do not form a group under the given law
  CHECK_THROWS_AS(FiniteGroupoid::build(1, {{0, 0}, {0, 0}}, {0}, [](Mor, Mor) { return Mor{0}; }),
                  std::invalid_argument);
  CHECK_THROWS_AS(FiniteGroupoid::build(1, {{0, 1}}, {0}, [](Mor, Mor) { return Mor{0}; }), std::invalid_argument);
}

TEST_CASE("functor properties on small examples") {
  auto s3 = catalog_group("S3");
  auto c2 = generated(s3, {"(1 2)"});
  auto inc = GroupoidFunctor::subgroup_inclusion(c2);
  CHECK(is_faithful(inc));
  CHECK_FALSE(is_full(inc));
  CHECK(is_essentially_surjective(inc));
  CHECK_FALSE(is_equivalence(inc));
  auto to_one = GroupoidFunctor::to_trivial(FiniteGroupoid::from_group(s3));
  CHECK_FALSE(is_faithful(to_one));
  CHECK(is_full(to_one));
  auto id = GroupoidFunctor::identity(FiniteGroupoid::from_group(s3));
  CHECK(is_equivalence(id));
  CHECK(oracle::has_quasi_inverse(id));
  CHECK_FALSE(oracle::has_quasi_inverse(inc));
  auto fold = gen::fold_functor(2, catalog_group("C3"));
  CHECK(is_equivalence(fold));
  CHECK(oracle::has_quasi_inverse(fold));
}

TEST_CASE("functors reject non-functorial data") {
  auto c2 = catalog_group("C2");
  auto c3 = catalog_group("C3");
  CHECK_THROWS(GroupoidFunctor::from_group_hom(c3, c2, {0, 1, 1}));
  CHECK_NOTHROW(GroupoidFunctor::from_group_hom(c3, c2, {0, 0, 0}));
}

TEST_CASE("is_equivalence agrees with the quasi-inverse oracle") {
  gen::Rng rng(20261014);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = gen::random_group(rng);
    auto b = gen::random_group(rng);
    auto homs = gen::all_homomorphisms(a, b);
    auto f = GroupoidFunctor::from_group_hom(a, b, homs[gen::uniform(rng, homs.size())]);
    if (trial % 3 == 0) f = gen::fold_functor(2, a).then(f);
    CHECK(is_equivalence(f) == oracle::has_quasi_inverse(f));
  }
}

TEST_CASE("iso-comma of C2 into S3 with itself") {
  auto s3 = catalog_group("S3");
  auto c2 = generated(s3, {"(1 2)"});
  auto inc = GroupoidFunctor::subgroup_inclusion(c2);
  auto sq = iso_comma(inc, inc);
  CHECK(sq.apex.num_objects() == 6);
  REQUIRE(sq.apex.components().size() == 2);
  std::vector<std::size_t> orders;
  for (const auto& comp : sq.apex.components()) orders.push_back(sq.apex.vertex_group(comp.front()).group.order());
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<std::size_t>{1, 2});
  CHECK_NOTHROW(verify_mackey_square(sq));
}

TEST_CASE("iso-comma of the trivial group into C2") {
  auto c2 = catalog_group("C2");
  auto inc = GroupoidFunctor::subgroup_inclusion(trivial_subgroup(c2));
  auto sq = iso_comma(inc, inc);
  CHECK(sq.apex.num_objects() == 2);
  CHECK(sq.apex.is_discrete());
  CHECK_NOTHROW(verify_mackey_square(sq));
}

TEST_CASE("iso-comma components count double cosets") {
  for (const char* name : {"S3", "D8", "A4"}) {
    auto g = catalog_group(name);
    auto subs = all_subgroups(g);
    for (std::size_t a = 0; a < subs.size(); a += 2)
      for (std::size_t b = 0; b < subs.size(); b += 3) {
        auto sq = iso_comma(GroupoidFunctor::subgroup_inclusion(subs[a]), GroupoidFunctor::subgroup_inclusion(subs[b]));
        CHECK(sq.apex.num_objects() == g.order());
        CHECK(sq.apex.components().size() == oracle::double_coset_count_by_orbits(subs[a], subs[b]));
        verify_mackey_square(sq);
      }
  }
}

TEST_CASE("random iso-commas are natural") {
  gen::Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    auto s = gen::random_span(rng);
    for (const auto* f : {&s.i, &s.u}) {
      auto sq = iso_comma(*f, *f);
      CHECK_NOTHROW(verify_mackey_square(sq));
      CHECK(sq.apex.num_objects() == f->source().num_objects() * f->source().num_objects() * f->target().num_morphisms());
    }
  }
}

TEST_CASE("products, opposites and pairing") {
  auto a = FiniteGroupoid::connected(2, catalog_group("C2"));
  auto b = FiniteGroupoid::from_group(catalog_group("C3"));
  auto p = product_groupoid(a, b);
  CHECK(p.num_objects() == 2);
  CHECK(p.num_morphisms() == 8 * 3);
  auto op = opposite_groupoid(a);
  for (Mor f = 0; f < a.num_morphisms(); ++f) {
    CHECK(op.source(f) == a.target(f));
    CHECK(op.target(f) == a.source(f));
  }
  auto pr = pairing(GroupoidFunctor::identity(a), GroupoidFunctor::identity(a));
  CHECK(is_faithful(pr));
  CHECK(is_essentially_surjective(pr));
  CHECK_FALSE(is_full(pr));
}
