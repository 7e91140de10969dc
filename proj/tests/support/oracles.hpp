#pragma once

// Independent brute-force computations used to derive expected values.
// None of these share code paths with the algorithms under test beyond
// the basic group/groupoid tables.

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "mot2/biset.hpp"
#include "mot2/groupoid.hpp"
#include "mot2/groups.hpp"
#include "mot2/scalar.hpp"

namespace oracle {

/// Closure by repeatedly multiplying every pair of known permutations.
std::set<mot2::Perm> naive_closure(std::size_t degree, const std::vector<mot2::Perm>& gens);

/// Every subset of G that is closed under multiplication (|G| <= 16).
std::vector<std::vector<std::size_t>> subgroups_by_subsets(const mot2::FiniteGroup& g);
/// Number of classes of subgroups under conjugation, from the subset list.
std::size_t subgroup_class_count_by_subsets(const mot2::FiniteGroup& g);

/// |K\G/L| as the number of G-orbits on G/K x G/L.
std::size_t double_coset_count_by_orbits(const mot2::Subgroup& k, const mot2::Subgroup& l);
/// |H\G/H| as the inner product of the permutation character of G/H with itself.
std::size_t permutation_character_norm(const mot2::Subgroup& h);

/// Conjugacy classes computed as orbits of x |-> g x g^-1, sizes sorted.
std::vector<std::size_t> class_sizes(const mot2::FiniteGroup& g);

/// Attempts to build a quasi-inverse by choosing preimages object-wise and
/// then checks the functor laws and both natural isomorphisms directly.
bool has_quasi_inverse(const mot2::GroupoidFunctor& f);

/// Counts elements by direct enumeration of all pairs modulo the
/// equivalence generated by (t.h, s) ~ (t, h.s), via repeated relabeling.
std::size_t tensor_size_by_closure(const mot2::Biset& t, const mot2::Biset& s);

/// dim k[T] x_kB k[S]: all same-object pairs modulo the span of the relations
/// (t.h) x s - t x (h.s) for generators h, by rank of the relation matrix.
std::size_t tensor_dimension_by_quotient(const mot2::Biset& t, const mot2::Biset& s, const mot2::Field& field);

/// dim of equivariant maps k[U] -> k[V] as the number of orbits of the
/// simultaneous action on same-type pairs (v, u), found by flood fill over
/// every morphism.
std::size_t hom_dimension_by_pair_orbits(const mot2::Biset& u, const mot2::Biset& v);

/// Number of G-orbits on pairs (H, a) with H a subgroup found by subset
/// enumeration and a commuting with every element of H.
std::size_t commuting_pair_class_count(const mot2::FiniteGroup& g);
/// Conjugacy classes of cyclic subgroups, from the cyclic subgroups <x>.
std::size_t cyclic_subgroup_class_count(const mot2::FiniteGroup& g);

/// Structure constants c[i][j][k] as residues mod p.
using StructureTable = std::vector<std::vector<std::vector<std::uint64_t>>>;
/// Primitive idempotents of a commutative F_p-algebra by enumerating all
/// p^dim elements (p^dim <= 2^20): the idempotents e != 0 that have no
/// idempotent f other than 0 and e with e f = f. Sorted lexicographically.
std::vector<std::vector<std::uint64_t>> primitive_idempotents_by_enumeration(const StructureTable& c, std::uint64_t p);

/// Primitive central idempotents of QG as functions on G, searched among
/// class functions with values a/|G|, |a| <= |G| (for at most 4 classes).
/// Multiplication is convolution on G.
std::vector<std::vector<mpq_class>> central_idempotents_by_search(const mot2::FiniteGroup& g);

/// Whether a monic polynomial over F_p (coefficients from degree 0) has no
/// monic factor of degree 1..n/2, by trial division with every candidate.
bool irreducible_by_trial_division(const std::vector<std::uint64_t>& f, std::uint64_t p);

}  // namespace oracle
