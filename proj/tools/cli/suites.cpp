#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "config.hpp"
#include "mot2/sampling.hpp"
#include "mot2/span.hpp"
#include "mot2/two_cell.hpp"

namespace mot2::cli {

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed || c.skipped; });
}

std::size_t SuiteResult::skipped() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.skipped; }));
}

namespace {

std::string subgroup_name(std::size_t i) { return "H" + std::to_string(i); }

std::string pair_name(std::size_t i, std::size_t j) { return subgroup_name(i) + "," + subgroup_name(j); }

Check make_check(std::string name, bool passed, Json detail = Json::object()) {
  Check c;
  c.name = std::move(name);
  c.passed = passed;
  c.detail = std::move(detail);
  return c;
}

/// Runs body, turning a thrown exception into a failed check.
Check guarded(const std::string& name, const std::function<Check()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return make_check(name, false, Json{{"error", e.what()}});
  }
}

bool complete_family(const CommutativeAlgebra& a, const std::vector<Vector>& es) {
  Vector sum = a.zero();
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (!a.is_idempotent(es[i]) || es[i] == a.zero()) return false;
    for (std::size_t j = i + 1; j < es.size(); ++j)
      if (a.multiply(es[i], es[j]) != a.zero()) return false;
    sum = a.add(sum, es[i]);
  }
  return sum == a.identity();
}

// ---- biequivalence ----

std::vector<Check> biequivalence(const SuiteContext& c, sampling::Rng& rng) {
  // sample between small subgroups of the group, at most order 6 each
  std::vector<FiniteGroup> pool;
  for (const auto& h : conjugacy_classes_of_subgroups(c.group))
    if (h.order() <= 6) pool.push_back(subgroup_as_group(h).group);
  auto draw = [&]() -> const FiniteGroup& { return pool[sampling::uniform(rng, pool.size())]; };

  std::size_t bijective = 0, folded = 0;
  for (std::size_t n = 0; n < c.samples; ++n) {
    const FiniteGroup& g1 = draw();
    const FiniteGroup& g2 = draw();
    Biset s = sampling::random_group_biset(rng, g1, g2, sampling::uniform(rng, 2) == 0, 4);
    if (sampling::uniform(rng, 2) == 0) {
      s = restrict_biset(s, sampling::fold_functor(2, g1), GroupoidFunctor::identity(s.right()));
      ++folded;
    }
    if (varphi_iso(s).is_bijective()) ++bijective;
  }
  std::size_t agree = 0, faithful = 0;
  for (std::size_t n = 0; n < c.samples; ++n) {
    auto r = sampling::random_span_between(rng, draw(), draw());
    Span s = Span::make(r.u, r.i);
    const bool jf = is_jointly_faithful(s);
    faithful += jf;
    if (is_equivalence(phi_comparison(s)) == jf) ++agree;
  }
  return {make_check("biset round trip", bijective == c.samples,
                     Json{{"samples", c.samples}, {"bijective", bijective}, {"over_groupoids", folded}}),
          make_check("span equivalence iff jointly faithful", agree == c.samples,
                     Json{{"samples", c.samples}, {"agree", agree}, {"jointly_faithful", faithful}})};
}

// ---- adjunctions ----

std::vector<Check> adjunctions(const SuiteContext& c, const std::vector<Subgroup>& reps) {
  std::vector<Check> out;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const std::string name = "adjunctions " + subgroup_name(i);
    out.push_back(guarded(name, [&] {
      auto a = adjunction_units(reps[i], c.field);
      auto tri = triangle_composites(a);
      const bool frobenius = vcompose(a.counit_right, a.unit_left) == TwoCell::identity(c.field, a.id_h);
      const bool left1 = tri.left_on_induction == TwoCell::identity(c.field, a.induction);
      const bool left2 = tri.left_on_restriction == TwoCell::identity(c.field, a.restriction);
      const bool right1 = tri.right_on_induction == TwoCell::identity(c.field, a.induction);
      const bool right2 = tri.right_on_restriction == TwoCell::identity(c.field, a.restriction);
      return make_check(name, frobenius && left1 && left2 && right1 && right2,
                        Json{{"subgroup", to_json(reps[i])},
                             {"counit_right_after_unit_left", frobenius},
                             {"left_triangles", left1 && left2},
                             {"right_triangles", right1 && right2}});
    }));
  }
  return out;
}

// ---- yoshida ----

std::vector<Check> yoshida(const SuiteContext& c, const std::vector<Subgroup>& reps) {
  std::vector<Check> out;
  auto model = CosetModel::left_sets(c.group);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) {
      const std::string name = "rank formula " + pair_name(i, j);
      out.push_back(guarded(name, [&] {
        auto r = verify_P_fullness(model, reps[i], reps[j], c.field);
        return make_check(name, r.full && r.hom_dimension == r.double_cosets && r.images_equivariant,
                          Json{{"hom_dimension", r.hom_dimension}, {"double_cosets", r.double_cosets},
                               {"image_rank", r.image_rank}});
      }));
    }
  out.push_back(guarded("classical Yoshida quotient", [&] {
    auto r = classical_yoshida_kernel_check(c.group, c.field);
    Json pairs = Json::array();
    for (const auto& p : r.pairs)
      pairs.push_back(Json{{"source_order", p.source.order()}, {"target_order", p.target.order()},
                           {"hom_dimension", p.hom_dimension}, {"ideal_dimension", p.ideal_dimension},
                           {"quotient_dimension", p.quotient_dimension}, {"double_cosets", p.double_cosets},
                           {"matches", p.matches}});
    return make_check("classical Yoshida quotient", r.all_match,
                      Json{{"closure_rounds", r.closure_rounds}, {"pairs", pairs}});
  }));
  return out;
}

// ---- decat: the linearization of 2-cells ----

std::vector<Check> decat(const SuiteContext& c, const std::vector<Subgroup>& reps) {
  std::vector<Check> out;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const std::string name = "cohomological cell vanishes " + subgroup_name(i);
    out.push_back(guarded(name, [&] {
      return make_check(name, linearize_2cell(cohomological_2cell(reps[i], c.field)).matrix().is_zero());
    }));
  }
  auto model = CosetModel::left_sets(c.group);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) {
      const std::string name = "kernel generated " + pair_name(i, j);
      out.push_back(guarded(name, [&] {
        auto r = kernel_generation_check(model, reps[i], reps[j], c.field);
        return make_check(name, r.ideal_in_kernel && r.generated,
                          Json{{"cells", r.cell_dimension}, {"kernel", r.kernel_dimension},
                               {"ideal", r.ideal_dimension}});
      }));
    }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const Scalar idx(c.field, static_cast<long long>(index(reps[i])));
    if (idx.is_zero()) continue;
    const std::string name = "separability section " + subgroup_name(i);
    out.push_back(guarded(name, [&] {
      auto s = separability_section(reps[i], c.field);
      const bool linear_identity = linearize_2cell(s.composite).matrix().is_identity();
      const bool defect = s.defect == cohomological_2cell(reps[i], c.field).scaled(idx.inverse());
      return make_check(name, linear_identity && defect,
                        Json{{"index", index(reps[i])}, {"image_is_identity", linear_identity},
                             {"defect_is_cohomological", defect}});
    }));
  }
  return out;
}

// ---- mackey-axioms ----

std::vector<Check> mackey_axioms(const SuiteContext& c, const std::vector<Subgroup>& reps) {
  std::vector<Check> out;
  auto model = CosetModel::left_sets(c.group);
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (std::size_t j = 0; j < reps.size(); ++j) {
      const std::string name = "Mackey axioms " + pair_name(i, j);
      const std::size_t size = index(reps[i]) * index(reps[j]);
      if (size > kMackeyPairBound) {
        Check skip = make_check(name, false, Json{{"pair_size", size}, {"bound", kMackeyPairBound}});
        skip.skipped = true;
        out.push_back(std::move(skip));
        continue;
      }
      out.push_back(guarded(name, [&] {
        auto t = hom_decategorify(GSet::cosets(model, reps[i]), GSet::cosets(model, reps[j]), c.field);
        auto r = verify_mackey_axioms(t);
        const std::size_t whole = t.position(whole_group(c.group));
        return make_check(name, r.all(),
                          Json{{"dimension_at_group", t.dimension(whole)},
                               {"functoriality", r.functoriality},
                               {"iso_invariance", r.iso_invariance},
                               {"mackey_formula", r.mackey_formula},
                               {"cohomological", r.cohomological},
                               {"failures", r.failures}});
      }));
    }
  if (reps.size() >= 2) {
    out.push_back(guarded("additivity", [&] {
      auto x1 = GSet::cosets(model, reps.front());
      auto x2 = GSet::cosets(model, reps.back());
      return make_check("additivity", verify_additivity(model, x1, x2, GSet::cosets(model, reps[1]), c.field));
    }));
  }
  return out;
}

// ---- blocks ----

std::vector<Check> blocks(const SuiteContext& c) {
  std::vector<Check> out;
  out.push_back(guarded("comparison homomorphism", [&] {
    auto cmp = comparison_homomorphism(c.group, c.field);  // checks unit and products
    bool index_values = true;
    for (const auto& h : all_subgroups(c.group)) {
      Vector expected = cmp.center.algebra.scale(Scalar(c.field, static_cast<long long>(index(h))),
                                                 cmp.center.algebra.identity());
      if (cmp.rho(cmp.crossed.algebra.basis_vector(cmp.crossed.position(h, 0))) != expected) index_values = false;
    }
    const bool surjective = cmp.rho.is_surjective();
    return make_check("comparison homomorphism", surjective && index_values,
                      Json{{"unital_multiplicative", true}, {"surjective", surjective},
                           {"burnside_values_are_indices", index_values}});
  }));
  out.push_back(guarded("block decomposition", [&] {
    auto r = motivic_decomposition_report(c.group, c.field);
    auto cmp = comparison_homomorphism(c.group, c.field);
    const bool crossed_family = complete_family(cmp.crossed.algebra, r.general_motives);
    std::vector<Vector> block_idempotents;
    bool lifts = true;
    for (const auto& b : r.blocks) {
      block_idempotents.push_back(b.idempotent);
      if (cmp.rho(b.lift) != b.idempotent || !cmp.crossed.algebra.is_idempotent(b.lift)) lifts = false;
    }
    const bool center_family = complete_family(cmp.center.algebra, block_idempotents);
    bool splittings = true;
    for (const auto& s : r.splittings) splittings = splittings && s.orthogonal && s.two_sided && s.complete;
    return make_check("block decomposition", r.ok && crossed_family && center_family && lifts,
                      Json{{"blocks", r.blocks.size()}, {"primitive_idempotents_crossed", r.general_motives.size()},
                           {"vanishing", r.vanishing.size()}, {"complete_families", crossed_family && center_family},
                           {"lifts", lifts}, {"burnside_images_trivial", r.burnside_images_trivial},
                           {"hom_splittings", splittings}});
  }));
  return out;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const SuiteContext& context) {
  auto it = std::find(kSuiteNames.begin(), kSuiteNames.end(), name);
  if (it == kSuiteNames.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  const auto position = static_cast<std::uint64_t>(it - kSuiteNames.begin());
  sampling::Rng rng(context.seed * 1000003ULL + position);
  const auto reps = conjugacy_classes_of_subgroups(context.group);

  SuiteResult result;
  result.name = name;
  const auto start = std::chrono::steady_clock::now();
  if (name == "biequivalence") {
    result.checks = biequivalence(context, rng);
  } else if (name == "adjunctions") {
    result.checks = adjunctions(context, reps);
  } else if (name == "yoshida") {
    result.checks = yoshida(context, reps);
  } else if (name == "mackey-axioms") {
    result.checks = mackey_axioms(context, reps);
  } else if (name == "decat") {
    result.checks = decat(context, reps);
  } else {
    result.checks = blocks(context);
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace mot2::cli
