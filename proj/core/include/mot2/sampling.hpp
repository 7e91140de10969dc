#pragma once

// Seeded generators for sampled checks.
//
// Distributions: groups are drawn uniformly from kSmallGroups; bisets between
// groups are sums of 1 to 4 transitive pieces (G1 x G2)/M with M uniform among
// all subgroups of G1 x G2; groupoid bisets restrict such a biset along a fold
// functor from a 2-object groupoid; spans use homomorphisms enumerated from
// generator images and chosen uniformly.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mot2/biset.hpp"
#include "mot2/groupoid.hpp"
#include "mot2/groups.hpp"
#include "mot2/two_cell.hpp"

namespace mot2::sampling {

using Rng = std::mt19937_64;

extern const std::vector<std::string> kSmallGroups;  // orders <= 6

mot2::FiniteGroup random_group(Rng& rng);
const mot2::Subgroup& pick(Rng& rng, const std::vector<mot2::Subgroup>& v);
std::size_t uniform(Rng& rng, std::size_t n);  // in [0, n)

/// Sum of 1..max_orbits transitive G1,G2-bisets.
mot2::Biset random_group_biset(Rng& rng, const mot2::FiniteGroup& g1, const mot2::FiniteGroup& g2,
                               bool right_free, std::size_t max_orbits = 4);

/// All homomorphisms src -> tgt, as element image tables.
std::vector<std::vector<std::size_t>> all_homomorphisms(const mot2::FiniteGroup& src, const mot2::FiniteGroup& tgt);

/// The functor connected(n, G) -> G forgetting objects.
mot2::GroupoidFunctor fold_functor(std::size_t n, const mot2::FiniteGroup& g);

/// A biset over groupoids: random group biset restricted along fold functors.
mot2::Biset random_groupoid_biset(Rng& rng);

struct RandomSpan {
  mot2::GroupoidFunctor u;  // P -> H
  mot2::GroupoidFunctor i;  // P -> G
};
RandomSpan random_span(Rng& rng);
/// A span H <- K -> G through a random small group K.
RandomSpan random_span_between(Rng& rng, const mot2::FiniteGroup& h, const mot2::FiniteGroup& g);

/// A random equivariant map W -> U: each orbit of W goes to a uniformly chosen
/// point of U whose stabilizer contains the orbit's; nullopt if some orbit has none.
std::optional<mot2::EquivariantMap> random_map(Rng& rng, const mot2::Biset& w, const mot2::Biset& u);

/// Sum of 1..3 random spans U <= W => V with coefficients in [-2, 2]; the
/// middles are random bisets with at most two orbits.
mot2::TwoCell random_two_cell(Rng& rng, const mot2::Field& field, const mot2::Biset& u, const mot2::Biset& v);

}  // namespace mot2::sampling
