#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mot2/matrix.hpp"

namespace oracle {

using namespace mot2;

std::set<Perm> naive_closure(std::size_t degree, const std::vector<Perm>& gens) {
  std::set<Perm> known{identity_perm(degree)};
  known.insert(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Perm> current(known.begin(), known.end());
    for (const auto& a : current)
      for (const auto& b : current)
        if (known.insert(compose_perms(a, b)).second) grew = true;
  }
  return known;
}

std::vector<std::vector<std::size_t>> subgroups_by_subsets(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > 16) throw std::invalid_argument("subset oracle limited to order 16");
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;  // must contain the identity
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a)
      if (mask >> a & 1u)
        for (std::size_t b = 0; b < n && closed; ++b)
          if ((mask >> b & 1u) && !(mask >> g.mul(a, b) & 1u)) closed = false;
    if (!closed) continue;
    std::vector<std::size_t> s;
    for (std::size_t a = 0; a < n; ++a)
      if (mask >> a & 1u) s.push_back(a);
    out.push_back(std::move(s));
  }
  return out;
}

std::size_t subgroup_class_count_by_subsets(const FiniteGroup& g) {
  auto subs = subgroups_by_subsets(g);
  std::set<std::vector<std::size_t>> seen;
  std::size_t classes = 0;
  for (const auto& s : subs) {
    if (seen.count(s)) continue;
    ++classes;
    for (std::size_t x = 0; x < g.order(); ++x) {
      std::vector<std::size_t> c;
      for (auto e : s) c.push_back(g.mul(g.mul(x, e), g.inv(x)));
      std::sort(c.begin(), c.end());
      seen.insert(c);
    }
  }
  return classes;
}

namespace {
std::vector<std::size_t> coset_labels(const Subgroup& k) {
  const auto& g = k.group();
  std::vector<std::size_t> label(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::size_t least = x;
    for (auto e : k.elements()) least = std::min(least, g.mul(x, e));
    label[x] = least;
  }
  return label;
}
}  // namespace

std::size_t double_coset_count_by_orbits(const Subgroup& k, const Subgroup& l) {
  const auto& g = k.group();
  auto lk = coset_labels(k);
  auto ll = coset_labels(l);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::size_t orbits = 0;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b) {
      auto p = std::make_pair(lk[a], ll[b]);
      if (seen.count(p)) continue;
      ++orbits;
      for (std::size_t x = 0; x < g.order(); ++x) seen.emplace(lk[g.mul(x, a)], ll[g.mul(x, b)]);
    }
  return orbits;
}

std::size_t permutation_character_norm(const Subgroup& h) {
  const auto& g = h.group();
  auto lh = coset_labels(h);
  std::set<std::size_t> reps(lh.begin(), lh.end());
  std::size_t total = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::size_t fixed = 0;
    for (auto r : reps)
      if (lh[g.mul(x, r)] == r) ++fixed;
    total += fixed * fixed;
  }
  if (total % g.order() != 0) throw std::logic_error("character norm is not an integer");
  return total / g.order();
}

std::vector<std::size_t> class_sizes(const FiniteGroup& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::size_t> sizes;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::set<std::size_t> cls;
    for (std::size_t y = 0; y < g.order(); ++y) cls.insert(g.mul(g.mul(y, x), g.inv(y)));
    for (auto c : cls) seen[c] = true;
    sizes.push_back(cls.size());
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool has_quasi_inverse(const GroupoidFunctor& f) {
  const auto& A = f.source();
  const auto& B = f.target();
  // For every b pick some a and an isomorphism phi_b : F a -> b.
  std::vector<Obj> back(B.num_objects());
  std::vector<Mor> phi(B.num_objects());
  for (Obj b = 0; b < B.num_objects(); ++b) {
    bool found = false;
    for (Obj a = 0; a < A.num_objects() && !found; ++a) {
      auto h = B.hom(f.object(a), b);
      if (!h.empty()) {
        back[b] = a;
        phi[b] = h.front();
        found = true;
      }
    }
    if (!found) return false;
  }
  // G(beta) must be the unique alpha with F(alpha) = phi_b'^-1 beta phi_b.
  std::vector<Mor> gmor(B.num_morphisms());
  for (Mor beta = 0; beta < B.num_morphisms(); ++beta) {
    Obj b = B.source(beta), b2 = B.target(beta);
    Mor want = B.compose(B.inverse(phi[b2]), B.compose(beta, phi[b]));
    std::size_t hits = 0;
    for (Mor alpha : A.hom(back[b], back[b2]))
      if (f.morphism(alpha) == want) {
        gmor[beta] = alpha;
        ++hits;
      }
    if (hits != 1) return false;
  }
  GroupoidFunctor g;
  try {
    g = GroupoidFunctor(B, A, back, gmor);
  } catch (const std::invalid_argument&) {
    return false;
  }
  // F G => Id_B with components phi_b.
  for (Mor beta = 0; beta < B.num_morphisms(); ++beta) {
    Obj b = B.source(beta), b2 = B.target(beta);
    if (B.compose(beta, phi[b]) != B.compose(phi[b2], f.morphism(g.morphism(beta)))) return false;
  }
  // Id_A => G F with components psi_a the preimage of phi_{F a}^-1.
  std::vector<Mor> psi(A.num_objects());
  for (Obj a = 0; a < A.num_objects(); ++a) {
    Obj fa = f.object(a);
    Mor want = B.inverse(phi[fa]);
    std::size_t hits = 0;
    for (Mor alpha : A.hom(a, back[fa]))
      if (f.morphism(alpha) == want) {
        psi[a] = alpha;
        ++hits;
      }
    if (hits != 1) return false;
  }
  for (Mor alpha = 0; alpha < A.num_morphisms(); ++alpha) {
    Obj a = A.source(alpha), a2 = A.target(alpha);
    if (A.compose(psi[a2], alpha) != A.compose(g.morphism(f.morphism(alpha)), psi[a])) return false;
  }
  return true;
}

std::size_t tensor_size_by_closure(const Biset& t, const Biset& s) {
  const auto& B = t.right();
  std::map<std::pair<Elem, Elem>, std::size_t> label;
  std::size_t next = 0;
  for (Elem a = 0; a < t.size(); ++a)
    for (Elem b = 0; b < s.size(); ++b)
      if (t.type(a).y == s.type(b).x) label[{a, b}] = next++;
  // Relabel to the minimum over all morphisms until stable.
  for (bool changed = true; changed;) {
    changed = false;
    for (auto& [p, l] : label) {
      auto [a, b] = p;
      for (Mor h = 0; h < B.num_morphisms(); ++h) {
        if (B.source(h) != t.type(a).y) continue;
        // (a, b) ~ (a . h^-1, h . b)
        auto& other = label.at({t.act_right(a, B.inverse(h)), s.act_left(h, b)});
        std::size_t m = std::min(l, other);
        if (l != m || other != m) {
          l = other = m;
          changed = true;
        }
      }
    }
  }
  std::set<std::size_t> classes;
  for (auto& [p, l] : label) classes.insert(l);
  return classes.size();
}

std::size_t tensor_dimension_by_quotient(const Biset& t, const Biset& s, const Field& field) {
  const auto& B = t.right();
  std::map<std::pair<Elem, Elem>, std::size_t> column;
  for (Elem a = 0; a < t.size(); ++a)
    for (Elem b = 0; b < s.size(); ++b)
      if (t.type(a).y == s.type(b).x) column.emplace(std::pair{a, b}, column.size());
  std::vector<Vector> relations;
  for (Elem a = 0; a < t.size(); ++a)
    for (Mor h : B.generators()) {
      if (B.target(h) != t.type(a).y) continue;
      // (a . h, b) ~ (a, h . b)
      Elem ah = t.act_right(a, h);
      for (Elem b = 0; b < s.size(); ++b) {
        if (s.type(b).x != B.source(h)) continue;
        Vector r = zero_vector(field, column.size());
        r[column.at({ah, b})] += Scalar::one(field);
        r[column.at({a, s.act_left(h, b)})] -= Scalar::one(field);
        relations.push_back(std::move(r));
      }
    }
  return column.size() - rank_of_vectors(field, relations);
}

std::size_t hom_dimension_by_pair_orbits(const Biset& u, const Biset& v) {
  const auto& G = u.left();
  const auto& H = u.right();
  std::map<std::pair<Elem, Elem>, bool> seen;
  for (Elem a = 0; a < v.size(); ++a)
    for (Elem b = 0; b < u.size(); ++b)
      if (v.type(a) == u.type(b)) seen[{a, b}] = false;
  std::size_t count = 0;
  for (auto& [start, visited] : seen) {
    if (visited) continue;
    ++count;
    std::vector<std::pair<Elem, Elem>> stack{start};
    visited = true;
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      std::vector<std::pair<Elem, Elem>> next;
      for (Mor g = 0; g < G.num_morphisms(); ++g)
        if (G.source(g) == u.type(b).x) next.emplace_back(v.act_left(g, a), u.act_left(g, b));
      for (Mor h = 0; h < H.num_morphisms(); ++h)
        if (H.target(h) == u.type(b).y) next.emplace_back(v.act_right(a, h), u.act_right(b, h));
      for (auto& p : next) {
        bool& flag = seen.at(p);
        if (!flag) {
          flag = true;
          stack.push_back(p);
        }
      }
    }
  }
  return count;
}

}  // namespace oracle

namespace oracle {

namespace {

std::size_t conj_elem(const FiniteGroup& g, std::size_t x, std::size_t a) { return g.mul(g.mul(x, a), g.inv(x)); }

std::vector<std::size_t> conj_set(const FiniteGroup& g, std::size_t x, const std::vector<std::size_t>& s) {
  std::vector<std::size_t> out;
  for (auto e : s) out.push_back(conj_elem(g, x, e));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::size_t commuting_pair_class_count(const FiniteGroup& g) {
  std::set<std::pair<std::vector<std::size_t>, std::size_t>> seen;
  std::size_t classes = 0;
  for (const auto& h : subgroups_by_subsets(g))
    for (std::size_t a = 0; a < g.order(); ++a) {
      bool commutes = std::all_of(h.begin(), h.end(), [&](std::size_t x) { return g.mul(x, a) == g.mul(a, x); });
      if (!commutes || seen.count({h, a})) continue;
      ++classes;
      for (std::size_t x = 0; x < g.order(); ++x) seen.insert({conj_set(g, x, h), conj_elem(g, x, a)});
    }
  return classes;
}

std::size_t cyclic_subgroup_class_count(const FiniteGroup& g) {
  auto cyclic = [&](std::size_t x) {
    std::vector<std::size_t> s{0};
    for (std::size_t y = x; y != 0; y = g.mul(y, x)) s.push_back(y);
    std::sort(s.begin(), s.end());
    return s;
  };
  std::set<std::vector<std::size_t>> seen;
  std::size_t classes = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto c = cyclic(x);
    if (seen.count(c)) continue;
    ++classes;
    for (std::size_t y = 0; y < g.order(); ++y) seen.insert(conj_set(g, y, c));
  }
  return classes;
}

std::vector<std::vector<std::uint64_t>> primitive_idempotents_by_enumeration(const StructureTable& c, std::uint64_t p) {
  const std::size_t n = c.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= p;
    if (total > (1u << 20)) throw std::invalid_argument("too many elements to enumerate");
  }
  using V = std::vector<std::uint64_t>;
  auto mul = [&](const V& a, const V& b) {
    V r(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) r[k] = (r[k] + a[i] * b[j] % p * c[i][j][k]) % p;
    return r;
  };
  std::vector<V> idem;
  const V zero(n, 0);
  for (std::size_t code = 1; code < total; ++code) {
    V v(n);
    for (std::size_t i = 0, x = code; i < n; ++i, x /= p) v[i] = x % p;
    if (mul(v, v) == v) idem.push_back(v);
  }
  std::vector<V> prim;
  for (const auto& e : idem) {
    bool minimal = true;
    for (const auto& f : idem)
      if (f != e && mul(e, f) == f) minimal = false;
    if (minimal) prim.push_back(e);
  }
  std::sort(prim.begin(), prim.end());
  return prim;
}

std::vector<std::vector<mpq_class>> central_idempotents_by_search(const FiniteGroup& g) {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> done(g.order(), false);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::set<std::size_t> cls;
    for (std::size_t y = 0; y < g.order(); ++y) cls.insert(conj_elem(g, y, x));
    for (auto e : cls) done[e] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  if (classes.size() > 4) throw std::invalid_argument("too many classes to search");
  using F = std::vector<mpq_class>;
  auto convolve = [&](const F& a, const F& b) {
    F r(g.order(), 0);
    for (std::size_t x = 0; x < g.order(); ++x)
      if (a[x] != 0)
        for (std::size_t y = 0; y < g.order(); ++y)
          if (b[y] != 0) r[g.mul(x, y)] += a[x] * b[y];
    return r;
  };
  const long n = static_cast<long>(g.order());
  const long width = 2 * n + 1;
  long total = 1;
  for (std::size_t i = 0; i < classes.size(); ++i) total *= width;
  std::vector<F> idem;
  for (long code = 0; code < total; ++code) {
    F f(g.order(), 0);
    bool nonzero = false;
    long x = code;
    for (const auto& cls : classes) {
      mpq_class v(x % width - n, n);
      v.canonicalize();
      x /= width;
      nonzero = nonzero || v != 0;
      for (auto e : cls) f[e] = v;
    }
    if (nonzero && convolve(f, f) == f) idem.push_back(f);
  }
  std::vector<F> prim;
  for (const auto& e : idem) {
    bool minimal = true;
    for (const auto& f : idem)
      if (f != e && convolve(e, f) == f) minimal = false;
    if (minimal) prim.push_back(e);
  }
  return prim;
}

bool irreducible_by_trial_division(const std::vector<std::uint64_t>& f, std::uint64_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::size_t code = 0; code < count; ++code) {
      std::vector<std::uint64_t> q(d + 1, 1);
      for (std::size_t i = 0, x = code; i < d; ++i, x /= p) q[i] = x % p;
      std::vector<std::uint64_t> r = f;
      for (std::size_t top = deg; top >= d; --top) {
        const std::uint64_t lead = r[top];
        for (std::size_t i = 0; i <= d; ++i) r[top - d + i] = (r[top - d + i] + (p - lead) * q[i]) % p;
        if (top == d) break;
      }
      if (std::all_of(r.begin(), r.begin() + d, [](std::uint64_t v) { return v == 0; })) return false;
    }
  }
  return true;
}

}  // namespace oracle
