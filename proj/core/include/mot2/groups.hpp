#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mot2 {

/// A permutation of {0, ..., degree-1} stored as its image tuple.
using Perm = std::vector<std::uint16_t>;

Perm identity_perm(std::size_t degree);
Perm compose_perms(const Perm& a, const Perm& b);  // (a*b)(x) = a(b(x))
Perm inverse_perm(const Perm& a);
/// Parses 1-based disjoint-cycle notation such as "(1 2)(3 4)" or "()".
Perm parse_cycles(std::string_view text, std::size_t degree);
std::string format_cycles(const Perm& p);

inline constexpr std::size_t kDefaultGroupBound = 10080;

/// A fully enumerated permutation group. Elements are sorted
/// lexicographically by image tuple, so the identity has index 0.
/// Copies are cheap handles sharing the same immutable data.
class FiniteGroup {
 public:
  FiniteGroup();  // trivial group of degree 1

  /// Throws std::invalid_argument on malformed generators and
  /// std::length_error when the closure exceeds max_order.
  static FiniteGroup from_generators(std::size_t degree, std::vector<Perm> generators,
                                     std::size_t max_order = kDefaultGroupBound, std::string name = {});

  std::size_t order() const;
  std::size_t degree() const;
  const std::string& name() const;
  const Perm& element(std::size_t g) const;
  const std::vector<Perm>& generator_perms() const;
  /// Generators as element indices.
  const std::vector<std::size_t>& generators() const;
  std::optional<std::size_t> index_of(const Perm& p) const;

  static constexpr std::size_t identity() { return 0; }
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;
  /// g x g^-1
  std::size_t conj(std::size_t g, std::size_t x) const { return mul(mul(g, x), inv(g)); }
  std::size_t element_order(std::size_t g) const;
  bool is_abelian() const;

  /// Same underlying data.
  bool operator==(const FiniteGroup& other) const { return data_ == other.data_; }

 private:
  struct Data;
  explicit FiniteGroup(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// A subgroup of a FiniteGroup, stored as a sorted set of element indices.
/// Subgroups of the same group are totally ordered by their element lists.
class Subgroup {
 public:
  Subgroup() = default;
  /// elements must already form a subgroup; closure is checked.
  Subgroup(FiniteGroup group, std::vector<std::size_t> elements);
  /// Skips the closure check; for element sets known to be subgroups.
  static Subgroup trusted(FiniteGroup group, std::vector<std::size_t> elements);

  const FiniteGroup& group() const { return group_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<std::size_t>& elements() const { return elements_; }
  bool contains(std::size_t g) const { return member_[g]; }
  bool is_subgroup_of(const Subgroup& other) const;
  std::string to_string() const;

  bool operator==(const Subgroup& other) const { return elements_ == other.elements_; }
  bool operator<(const Subgroup& other) const;

 private:
  struct Unchecked {};
  Subgroup(Unchecked, FiniteGroup group, std::vector<std::size_t> elements);
  FiniteGroup group_;
  std::vector<std::size_t> elements_;
  std::vector<bool> member_;
};

Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup generate_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& gens);

/// All subgroups, sorted by (order, element list).
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);
/// One canonically minimal representative per conjugacy class, sorted.
std::vector<Subgroup> conjugacy_classes_of_subgroups(const FiniteGroup& g);
/// Minimal member of the conjugacy class of h.
Subgroup canonical_conjugate(const Subgroup& h);
/// g h g^-1
Subgroup conjugate(const Subgroup& h, std::size_t g);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
bool are_conjugate(const Subgroup& a, const Subgroup& b);

enum class CosetSide { Left, Right };  // Left: gH, Right: Hg

/// Cosets of h, each sorted, ordered by minimal element (which is the representative).
std::vector<std::vector<std::size_t>> cosets(const Subgroup& h, CosetSide side);
std::vector<std::size_t> coset_representatives(const Subgroup& h, CosetSide side);
/// Double cosets K g L as sorted element lists ordered by their minimal element.
std::vector<std::vector<std::size_t>> double_coset_partition(const Subgroup& k, const Subgroup& l);
/// Minimal representatives of K\G/L.
std::vector<std::size_t> double_cosets(const Subgroup& k, const Subgroup& l);
std::size_t index(const Subgroup& h);
std::size_t index_in(const Subgroup& big, const Subgroup& small);

Subgroup centralizer(const Subgroup& h);
Subgroup element_centralizer(const FiniteGroup& g, std::size_t x);
Subgroup normalizer(const Subgroup& h);
/// Conjugacy classes of elements, each sorted, ordered by minimal element.
std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& g);

/// h as a group in its own right; embedding[i] is the parent index of element i.
struct SubgroupAsGroup {
  FiniteGroup group;
  std::vector<std::size_t> embedding;
};
SubgroupAsGroup subgroup_as_group(const Subgroup& h);

/// G1 x G2 acting on degree1 + degree2 points. The pair (a, b) has index
/// a * |G2| + b, matching the lexicographic element order.
struct DirectProduct {
  FiniteGroup group;
  FiniteGroup first;
  FiniteGroup second;
  std::size_t pair(std::size_t a, std::size_t b) const { return a * second.order() + b; }
  std::size_t pr1(std::size_t g) const { return g / second.order(); }
  std::size_t pr2(std::size_t g) const { return g % second.order(); }
};
DirectProduct direct_product(const FiniteGroup& g1, const FiniteGroup& g2);
/// {(h, h) : h in H} inside G x G for H <= G.
Subgroup diagonal_subgroup(const DirectProduct& gg, const Subgroup& h);

/// Built-in groups: C1..C8, K4, S3, S4, A4, D8, Q8.
FiniteGroup catalog_group(std::string_view name);
const std::vector<std::string>& catalog_names();
/// Accepts a catalog name or a definition like "S3 = perm(3): (1 2), (1 2 3)".
FiniteGroup parse_group_definition(std::string_view text, std::size_t max_order = kDefaultGroupBound);
std::string format_group_definition(const FiniteGroup& g);

}  // namespace mot2
