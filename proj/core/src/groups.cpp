#include "mot2/groups.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mot2 {

Perm identity_perm(std::size_t degree) {
  Perm p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint16_t>(i);
  return p;
}

Perm compose_perms(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm inverse_perm(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint16_t>(i);
  return r;
}

Perm parse_cycles(std::string_view text, std::size_t degree) {
  Perm p = identity_perm(degree);
  std::vector<bool> seen(degree, false);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw std::invalid_argument("empty permutation");
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in permutation '" + std::string(text) + "'");
    ++pos;
    std::vector<std::size_t> cycle;
    for (;;) {
      while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
      if (pos == text.size()) throw std::invalid_argument("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      std::size_t v = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
      if (ec != std::errc()) throw std::invalid_argument("bad point in cycle");
      pos = static_cast<std::size_t>(ptr - text.data());
      if (v < 1 || v > degree) throw std::invalid_argument("cycle point out of range");
      if (seen[v - 1]) throw std::invalid_argument("point repeated in permutation");
      seen[v - 1] = true;
      cycle.push_back(v - 1);
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      p[cycle[i]] = static_cast<std::uint16_t>(cycle[(i + 1) % cycle.size()]);
    skip_ws();
  }
  return p;
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

struct FiniteGroup::Data {
  std::size_t degree = 1;
  std::string name;
  std::vector<Perm> elements;
  std::map<Perm, std::size_t> lookup;
  std::vector<Perm> generator_perms;
  std::vector<std::size_t> generators;
  std::vector<std::uint32_t> table;  // empty when the group is too large
  std::vector<std::size_t> inverse;
};

namespace {
constexpr std::size_t kTableLimit = 1024;
}  // namespace

FiniteGroup::FiniteGroup() {
  static const FiniteGroup trivial = from_generators(1, {}, 1, "C1");
  data_ = trivial.data_;
}

FiniteGroup FiniteGroup::from_generators(std::size_t degree, std::vector<Perm> generators, std::size_t max_order,
                                         std::string name) {
  if (degree == 0) throw std::invalid_argument("group degree must be positive");
  if (degree > 65535) throw std::invalid_argument("group degree too large");
  for (const auto& g : generators) {
    if (g.size() != degree) throw std::invalid_argument("generator has wrong degree");
    std::vector<bool> hit(degree, false);
    for (auto x : g) {
      if (x >= degree || hit[x]) throw std::invalid_argument("generator is not a permutation");
      hit[x] = true;
    }
  }
  auto d = std::make_shared<Data>();
  d->degree = degree;
  d->name = std::move(name);
  d->generator_perms = generators;

  std::set<Perm> found{identity_perm(degree)};
  std::vector<Perm> frontier{identity_perm(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        Perm y = compose_perms(g, x);
        if (found.insert(y).second) {
          if (found.size() > max_order)
            throw std::length_error("group closure exceeds the order bound " + std::to_string(max_order));
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  d->elements.assign(found.begin(), found.end());
  for (std::size_t i = 0; i < d->elements.size(); ++i) d->lookup.emplace(d->elements[i], i);
  for (const auto& g : generators) d->generators.push_back(d->lookup.at(g));

  const std::size_t n = d->elements.size();
  d->inverse.resize(n);
  for (std::size_t i = 0; i < n; ++i) d->inverse[i] = d->lookup.at(inverse_perm(d->elements[i]));
  if (n <= kTableLimit) {
    d->table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        d->table[a * n + b] = static_cast<std::uint32_t>(d->lookup.at(compose_perms(d->elements[a], d->elements[b])));
  }
  return FiniteGroup(std::move(d));
}

std::size_t FiniteGroup::order() const { return data_->elements.size(); }
std::size_t FiniteGroup::degree() const { return data_->degree; }
const std::string& FiniteGroup::name() const { return data_->name; }
const Perm& FiniteGroup::element(std::size_t g) const { return data_->elements.at(g); }
const std::vector<Perm>& FiniteGroup::generator_perms() const { return data_->generator_perms; }
const std::vector<std::size_t>& FiniteGroup::generators() const { return data_->generators; }

std::optional<std::size_t> FiniteGroup::index_of(const Perm& p) const {
  auto it = data_->lookup.find(p);
  if (it == data_->lookup.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::mul(std::size_t a, std::size_t b) const {
  if (!data_->table.empty()) return data_->table[a * data_->elements.size() + b];
  return data_->lookup.at(compose_perms(data_->elements[a], data_->elements[b]));
}

std::size_t FiniteGroup::inv(std::size_t a) const { return data_->inverse[a]; }

std::size_t FiniteGroup::element_order(std::size_t g) const {
  std::size_t k = 1;
  for (std::size_t x = g; x != identity(); x = mul(x, g)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  const auto& gens = generators();
  for (auto a : gens)
    for (auto b : gens)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

Subgroup::Subgroup(FiniteGroup group, std::vector<std::size_t> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  member_.assign(group_.order(), false);
  for (auto e : elements_) {
    if (e >= group_.order()) throw std::invalid_argument("subgroup element out of range");
    member_[e] = true;
  }
  if (elements_.empty() || elements_.front() != FiniteGroup::identity())
    throw std::invalid_argument("subgroup must contain the identity");
  for (auto a : elements_) {
    if (!member_[group_.inv(a)]) throw std::invalid_argument("subgroup not closed under inverses");
    for (auto b : elements_)
      if (!member_[group_.mul(a, b)]) throw std::invalid_argument("subgroup not closed under composition");
  }
  if (group_.order() % elements_.size() != 0) throw std::logic_error("Lagrange violated");
}

Subgroup::Subgroup(Unchecked, FiniteGroup group, std::vector<std::size_t> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  member_.assign(group_.order(), false);
  for (auto e : elements_) member_[e] = true;
}

Subgroup Subgroup::trusted(FiniteGroup group, std::vector<std::size_t> elements) {
  return Subgroup(Unchecked{}, std::move(group), std::move(elements));
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  for (auto e : elements_)
    if (!other.contains(e)) return false;
  return true;
}

bool Subgroup::operator<(const Subgroup& other) const {
  if (elements_.size() != other.elements_.size()) return elements_.size() < other.elements_.size();
  return elements_ < other.elements_;
}

std::string Subgroup::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elements_.size(); ++i) os << (i ? ", " : "") << format_cycles(group_.element(elements_[i]));
  os << '}';
  return os.str();
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<std::size_t> all(g.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return Subgroup::trusted(g, std::move(all));
}

Subgroup trivial_subgroup(const FiniteGroup& g) { return Subgroup(g, {FiniteGroup::identity()}); }

namespace {
std::vector<std::size_t> closure(const FiniteGroup& g, std::vector<std::size_t> seed, const std::vector<std::size_t>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<std::size_t> out;
  std::vector<std::size_t> stack;
  auto add = [&](std::size_t x) {
    if (!in[x]) {
      in[x] = true;
      out.push_back(x);
      stack.push_back(x);
    }
  };
  add(FiniteGroup::identity());
  for (auto s : seed) add(s);
  while (!stack.empty()) {
    std::size_t x = stack.back();
    stack.pop_back();
    for (auto s : gens) add(g.mul(s, x));
  }
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

Subgroup generate_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& gens) {
  return Subgroup::trusted(g, closure(g, gens, gens));
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> queue;
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto c = closure(g, {x}, {x});
    if (seen.insert(c).second) queue.push_back(std::move(c));
  }
  // Adjoin one element at a time until nothing new appears.
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const auto base = queue[qi];
    std::vector<bool> in(g.order(), false);
    for (auto e : base) in[e] = true;
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (in[x]) continue;
      std::vector<std::size_t> gens = base;
      gens.push_back(x);
      auto c = closure(g, gens, gens);
      if (seen.insert(c).second) queue.push_back(std::move(c));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.push_back(Subgroup::trusted(g, s));
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup conjugate(const Subgroup& h, std::size_t g) {
  const auto& grp = h.group();
  std::vector<std::size_t> e;
  e.reserve(h.order());
  for (auto x : h.elements()) e.push_back(grp.conj(g, x));
  return Subgroup::trusted(grp, std::move(e));
}

Subgroup canonical_conjugate(const Subgroup& h) {
  Subgroup best = h;
  for (std::size_t g = 0; g < h.group().order(); ++g) {
    Subgroup c = conjugate(h, g);
    if (c < best) best = std::move(c);
  }
  return best;
}

bool are_conjugate(const Subgroup& a, const Subgroup& b) {
  return a.order() == b.order() && canonical_conjugate(a) == canonical_conjugate(b);
}

std::vector<Subgroup> conjugacy_classes_of_subgroups(const FiniteGroup& g) {
  std::set<std::vector<std::size_t>> reps;
  std::vector<Subgroup> out;
  for (const auto& h : all_subgroups(g)) {
    Subgroup c = canonical_conjugate(h);
    if (reps.insert(c.elements()).second) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<std::size_t> e;
  for (auto x : a.elements())
    if (b.contains(x)) e.push_back(x);
  return Subgroup::trusted(a.group(), std::move(e));
}

std::vector<std::vector<std::size_t>> cosets(const Subgroup& h, CosetSide side) {
  const auto& g = h.group();
  std::vector<bool> done(g.order(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<std::size_t> c;
    for (auto y : h.elements()) c.push_back(side == CosetSide::Left ? g.mul(x, y) : g.mul(y, x));
    std::sort(c.begin(), c.end());
    for (auto y : c) done[y] = true;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::size_t> coset_representatives(const Subgroup& h, CosetSide side) {
  std::vector<std::size_t> reps;
  for (const auto& c : cosets(h, side)) reps.push_back(c.front());
  return reps;
}

std::vector<std::vector<std::size_t>> double_coset_partition(const Subgroup& k, const Subgroup& l) {
  const auto& g = k.group();
  std::vector<bool> done(g.order(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<std::size_t> c;
    for (auto a : k.elements())
      for (auto b : l.elements()) {
        std::size_t y = g.mul(g.mul(a, x), b);
        if (!done[y]) {
          done[y] = true;
          c.push_back(y);
        }
      }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::size_t> double_cosets(const Subgroup& k, const Subgroup& l) {
  std::vector<std::size_t> reps;
  for (const auto& c : double_coset_partition(k, l)) reps.push_back(c.front());
  return reps;
}

std::size_t index(const Subgroup& h) { return h.group().order() / h.order(); }

std::size_t index_in(const Subgroup& big, const Subgroup& small) {
  if (!small.is_subgroup_of(big)) throw std::invalid_argument("index_in: not a subgroup");
  return big.order() / small.order();
}

Subgroup centralizer(const Subgroup& h) {
  const auto& g = h.group();
  std::vector<std::size_t> e;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto y : h.elements())
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    if (ok) e.push_back(x);
  }
  return Subgroup::trusted(g, std::move(e));
}

Subgroup element_centralizer(const FiniteGroup& g, std::size_t x) {
  std::vector<std::size_t> e;
  for (std::size_t y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) e.push_back(y);
  return Subgroup::trusted(g, std::move(e));
}

Subgroup normalizer(const Subgroup& h) {
  const auto& g = h.group();
  std::vector<std::size_t> e;
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto y : h.elements())
      if (!h.contains(g.conj(x, y))) {
        ok = false;
        break;
      }
    if (ok) e.push_back(x);
  }
  return Subgroup::trusted(g, std::move(e));
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<bool> done(g.order(), false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<std::size_t> c;
    for (std::size_t y = 0; y < g.order(); ++y) {
      std::size_t z = g.conj(y, x);
      if (!done[z]) {
        done[z] = true;
        c.push_back(z);
      }
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

SubgroupAsGroup subgroup_as_group(const Subgroup& h) {
  const auto& g = h.group();
  // Keep a small generating set: add an element only if it enlarges the span.
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> span{FiniteGroup::identity()};
  for (auto e : h.elements()) {
    if (std::binary_search(span.begin(), span.end(), e)) continue;
    chosen.push_back(e);
    span = closure(g, chosen, chosen);
  }
  std::vector<Perm> gens;
  for (auto e : chosen) gens.push_back(g.element(e));
  SubgroupAsGroup out{FiniteGroup::from_generators(g.degree(), gens, g.order()), {}};
  out.embedding.resize(out.group.order());
  for (std::size_t i = 0; i < out.group.order(); ++i) out.embedding[i] = *g.index_of(out.group.element(i));
  return out;
}

DirectProduct direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const std::size_t d1 = g1.degree(), d2 = g2.degree();
  auto embed = [&](const Perm& p, bool first) {
    Perm r = identity_perm(d1 + d2);
    if (first)
      for (std::size_t i = 0; i < d1; ++i) r[i] = p[i];
    else
      for (std::size_t i = 0; i < d2; ++i) r[d1 + i] = static_cast<std::uint16_t>(d1 + p[i]);
    return r;
  };
  std::vector<Perm> gens;
  for (const auto& p : g1.generator_perms()) gens.push_back(embed(p, true));
  for (const auto& p : g2.generator_perms()) gens.push_back(embed(p, false));
  std::string name = (g1.name().empty() ? "G1" : g1.name()) + "x" + (g2.name().empty() ? "G2" : g2.name());
  DirectProduct out{FiniteGroup::from_generators(d1 + d2, gens, g1.order() * g2.order(), name), g1, g2};
  if (out.group.order() != g1.order() * g2.order()) throw std::logic_error("direct product has wrong order");
  for (std::size_t a = 0; a < g1.order(); ++a)
    for (std::size_t b = 0; b < g2.order(); ++b) {
      Perm p = embed(g1.element(a), true);
      Perm q = embed(g2.element(b), false);
      if (*out.group.index_of(compose_perms(p, q)) != out.pair(a, b))
        throw std::logic_error("direct product index convention broken");
    }
  return out;
}

Subgroup diagonal_subgroup(const DirectProduct& gg, const Subgroup& h) {
  std::vector<std::size_t> e;
  for (auto x : h.elements()) e.push_back(gg.pair(x, x));
  return Subgroup::trusted(gg.group, std::move(e));
}

namespace {
struct CatalogEntry {
  const char* name;
  std::size_t degree;
  std::vector<const char*> gens;
};

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"C1", 1, {}},
      {"C2", 2, {"(1 2)"}},
      {"C3", 3, {"(1 2 3)"}},
      {"C4", 4, {"(1 2 3 4)"}},
      {"C5", 5, {"(1 2 3 4 5)"}},
      {"C6", 6, {"(1 2 3 4 5 6)"}},
      {"C7", 7, {"(1 2 3 4 5 6 7)"}},
      {"C8", 8, {"(1 2 3 4 5 6 7 8)"}},
      {"K4", 4, {"(1 2)(3 4)", "(1 3)(2 4)"}},
      {"S3", 3, {"(1 2)", "(1 2 3)"}},
      {"S4", 4, {"(1 2)", "(1 2 3 4)"}},
      {"A4", 4, {"(1 2 3)", "(1 2)(3 4)"}},
      {"D8", 4, {"(1 2 3 4)", "(1 3)"}},
      {"Q8", 8, {"(1 2 4 7)(3 6 8 5)", "(1 3 4 8)(2 5 7 6)"}},
  };
  return entries;
}
}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& e : catalog()) n.emplace_back(e.name);
    return n;
  }();
  return names;
}

FiniteGroup catalog_group(std::string_view name) {
  for (const auto& e : catalog()) {
    if (name != e.name) continue;
    std::vector<Perm> gens;
    for (const char* c : e.gens) gens.push_back(parse_cycles(c, e.degree));
    return FiniteGroup::from_generators(e.degree, gens, kDefaultGroupBound, e.name);
  }
  throw std::invalid_argument("unknown group '" + std::string(name) + "'");
}

namespace {
std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}
}  // namespace

FiniteGroup parse_group_definition(std::string_view text, std::size_t max_order) {
  text = trim(text);
  auto eq = text.find('=');
  if (eq == std::string_view::npos) return catalog_group(text);
  std::string name(trim(text.substr(0, eq)));
  auto rest = trim(text.substr(eq + 1));
  if (!rest.starts_with("perm(")) throw std::invalid_argument("expected 'perm(<degree>)' in group definition");
  auto close = rest.find(')');
  if (close == std::string_view::npos) throw std::invalid_argument("unterminated degree");
  std::size_t degree = 0;
  auto digits = trim(rest.substr(5, close - 5));
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), degree);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw std::invalid_argument("bad degree in group definition");
  rest = trim(rest.substr(close + 1));
  std::vector<Perm> gens;
  if (!rest.empty()) {
    if (rest.front() != ':') throw std::invalid_argument("expected ':' before generators");
    rest = trim(rest.substr(1));
    // Generators are separated by commas outside parentheses.
    std::size_t depth = 0, start = 0;
    for (std::size_t i = 0; i <= rest.size(); ++i) {
      if (i == rest.size() || (rest[i] == ',' && depth == 0)) {
        auto piece = trim(rest.substr(start, i - start));
        if (!piece.empty()) gens.push_back(parse_cycles(piece, degree));
        start = i + 1;
      } else if (rest[i] == '(') {
        ++depth;
      } else if (rest[i] == ')') {
        if (depth == 0) throw std::invalid_argument("unbalanced parentheses");
        --depth;
      }
    }
  }
  return FiniteGroup::from_generators(degree, gens, max_order, name);
}

std::string format_group_definition(const FiniteGroup& g) {
  std::string out = (g.name().empty() ? std::string("G") : g.name()) + " = perm(" + std::to_string(g.degree()) + ")";
  const auto& gens = g.generator_perms();
  if (!gens.empty()) {
    out += ":";
    for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : " ") + format_cycles(gens[i]);
  }
  return out;
}

}  // namespace mot2
