// Acceptance run: one line per criterion, exit code 0 iff all pass.
// Expected counts come from the brute-force oracles in tests/support.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mot2/burnside.hpp"
#include "mot2/mackey.hpp"
#include "mot2/span.hpp"
#include "mot2/two_cell.hpp"
#include "oracles.hpp"
#include "random_objects.hpp"

using namespace mot2;

namespace {

const Field kQ = Field::rational();
const Field kF2 = Field::prime(2);
const Field kF3 = Field::prime(3);

struct Outcome {
  bool passed = true;
  std::ostringstream detail;
  std::string first_failure;

  void require(bool ok, const std::string& what) {
    if (!ok && passed) first_failure = what;
    passed = passed && ok;
  }
};

std::vector<FiniteGroup> groups(std::initializer_list<const char*> names) {
  std::vector<FiniteGroup> out;
  for (const char* n : names) out.push_back(catalog_group(n));
  return out;
}

std::vector<FiniteGroup> full_catalog() {
  std::vector<FiniteGroup> out;
  for (const auto& n : catalog_names()) out.push_back(catalog_group(n));
  return out;
}

std::string where(const FiniteGroup& g, const Subgroup& h) { return g.name() + " H=" + h.to_string(); }

// 1. For every H <= G: eps^r o eta^l = id and the four triangle composites are identities.
void adjunction_laws(Outcome& o) {
  std::size_t pairs = 0;
  for (const auto& g : full_catalog())
    for (const auto& h : all_subgroups(g)) {
      auto a = adjunction_units(h, kQ);
      auto tri = triangle_composites(a);
      o.require(vcompose(a.counit_right, a.unit_left) == TwoCell::identity(kQ, a.id_h), "Frobenius " + where(g, h));
      o.require(tri.left_on_induction == TwoCell::identity(kQ, a.induction), "left triangle " + where(g, h));
      o.require(tri.left_on_restriction == TwoCell::identity(kQ, a.restriction), "left triangle " + where(g, h));
      o.require(tri.right_on_induction == TwoCell::identity(kQ, a.induction), "right triangle " + where(g, h));
      o.require(tri.right_on_restriction == TwoCell::identity(kQ, a.restriction), "right triangle " + where(g, h));
      ++pairs;
    }
  o.detail << pairs << " subgroup pairs over the catalog, eps^r o eta^l = id and 4 triangle identities";
}

// 2. P of the cohomological 2-cell is the zero matrix.
void cohomological_kernel(Outcome& o) {
  std::size_t cells = 0, nonzero_cells = 0;
  for (const auto& g : full_catalog())
    for (const auto& h : all_subgroups(g))
      for (const Field& f : {kF2, kF3, kQ}) {
        TwoCell c = cohomological_2cell(h, f);
        nonzero_cells += !c.is_zero();
        o.require(linearize_2cell(c).matrix().is_zero(), "P nonzero at " + where(g, h) + " over " + f.to_string());
        ++cells;
      }
  o.detail << cells << " cells over F2, F3, Q (" << nonzero_cells << " nonzero as 2-cells), all map to 0";
}

// 3. dim Hom(k[G/K], k[G/L]) = |K\G/L| and the double coset maps form a basis.
void rank_formula(Outcome& o) {
  std::size_t pairs = 0;
  for (const auto& g : groups({"C2", "C3", "C4", "C5", "C6", "C7", "C8", "S3", "D8", "Q8", "A4", "S4"})) {
    auto model = CosetModel::left_sets(g);
    auto subs = all_subgroups(g);
    for (const auto& k : subs)
      for (const auto& l : subs) {
        auto r = verify_P_fullness(model, k, l, kQ);
        const std::size_t expected = oracle::double_coset_count_by_orbits(k, l);
        const std::string at = g.name() + " K=" + k.to_string() + " L=" + l.to_string();
        o.require(r.hom_dimension == expected, "Hom dimension at " + at);
        o.require(r.double_cosets == expected, "double coset count at " + at);
        o.require(r.image_rank == expected && r.images_equivariant && r.full, "double coset basis at " + at);
        ++pairs;
      }
  }
  o.detail << pairs << " subgroup pairs in C2..C8, S3, D8, Q8, A4, S4";
}

// 4. Sp_k(G) modulo the ideal of I R - index relations has Hom dimensions |K\G/L|.
void classical_yoshida(Outcome& o) {
  std::size_t pairs = 0;
  for (const auto& g : groups({"C2", "C4", "S3", "A4"}))
    for (const Field& f : {kQ, kF2, kF3}) {
      auto r = classical_yoshida_kernel_check(g, f);
      o.require(r.all_match, g.name() + " over " + f.to_string());
      for (const auto& p : r.pairs) {
        const std::size_t expected = oracle::double_coset_count_by_orbits(p.source, p.target);
        o.require(p.quotient_dimension == expected,
                  g.name() + " quotient dimension over " + f.to_string() + " K=" + p.source.to_string() +
                      " L=" + p.target.to_string());
        ++pairs;
      }
    }
  o.detail << pairs << " object pairs of C2, C4, S3, A4 over Q, F2, F3";
}

// 5. varphi_S is an isomorphism; Phi(s) is an equivalence iff s is jointly faithful.
void biequivalence(Outcome& o) {
  gen::Rng rng(20240505);
  std::size_t bijective = 0;
  for (int n = 0; n < 200; ++n) bijective += varphi_iso(gen::random_groupoid_biset(rng)).is_bijective();
  o.require(bijective == 200, "varphi not bijective");
  std::size_t agree = 0, faithful = 0;
  for (int n = 0; n < 200; ++n) {
    auto r = gen::random_span(rng);
    Span s = Span::make(r.u, r.i);
    GroupoidFunctor phi = phi_comparison(s);
    const bool jf = is_jointly_faithful(s);
    const bool equivalence = oracle::has_quasi_inverse(phi);
    faithful += jf;
    agree += (equivalence == jf && is_equivalence(phi) == equivalence);
  }
  o.require(agree == 200, "equivalence and joint faithfulness disagree");
  o.detail << bijective << "/200 bisets round trip; " << agree << "/200 spans agree (" << faithful
           << " jointly faithful)";
}

// 6. The Hom-decategorification of S3 passes the Mackey axioms, with I R = index.
void mackey_axioms(Outcome& o) {
  const FiniteGroup s3 = catalog_group("S3");
  auto model = CosetModel::left_sets(s3);
  const auto subs = all_subgroups(s3);
  std::size_t tables = 0;
  for (const Field& f : {kQ, kF2, kF3})
    for (const auto& k : subs)
      for (const auto& l : subs) {
        auto t = hom_decategorify(GSet::cosets(model, k), GSet::cosets(model, l), f);
        auto r = verify_mackey_axioms(t);
        const std::string at = "X=S3/" + k.to_string() + " Y=S3/" + l.to_string() + " over " + f.to_string();
        o.require(r.functoriality && r.iso_invariance && r.mackey_formula, "axioms at " + at);
        o.require(r.cohomological, "I R != index at " + at);
        ++tables;
      }
  o.detail << tables << " tables (X, Y over k[S3/H], fields Q, F2, F3), axioms (A)-(D) and I R = index";
}

// 7. rho is unital, multiplicative, surjective, with rho([H,1]) = [G:H].
void comparison_map(Outcome& o) {
  std::size_t checked = 0;
  for (const auto& g : full_catalog())
    for (const Field& f : {kQ, kF2, kF3}) {
      const std::string at = g.name() + " over " + f.to_string();
      Comparison c;
      try {
        c = comparison_homomorphism(g, f);
      } catch (const std::exception& e) {
        o.require(false, at + ": " + e.what());
        continue;
      }
      const auto& xa = c.crossed.algebra;
      const auto& za = c.center.algebra;
      o.require(c.rho(xa.identity()) == za.identity(), "not unital at " + at);
      for (std::size_t i = 0; i < xa.dimension(); ++i)
        for (std::size_t j = 0; j < xa.dimension(); ++j)
          o.require(c.rho(xa.product(i, j)) == za.multiply(c.rho.matrix().column(i), c.rho.matrix().column(j)),
                    "not multiplicative at " + at);
      o.require(rank(c.rho.matrix()) == za.dimension(), "not surjective at " + at);
      for (const auto& h : all_subgroups(g))
        o.require(c.rho(xa.basis_vector(c.crossed.position(h, 0))) ==
                      za.scale(Scalar(f, static_cast<long long>(index(h))), za.identity()),
                  "rho([H,1]) != index at " + at);
      ++checked;
    }
  o.detail << checked << " (group, field) cases over the catalog and Q, F2, F3";
}

std::vector<std::vector<std::uint64_t>> residues(const std::vector<Vector>& vs) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& v : vs) {
    std::vector<std::uint64_t> r;
    for (const auto& s : v) r.push_back(s.residue());
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

oracle::StructureTable table_of(const CommutativeAlgebra& a) {
  const std::size_t n = a.dimension();
  oracle::StructureTable t(n, std::vector<std::vector<std::uint64_t>>(n, std::vector<std::uint64_t>(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) t[i][j][k] = a.product(i, j)[k].residue();
  return t;
}

// 8. Central idempotent counts of kS3 (oracle first, then the splitting algorithm) and lifts.
void blocks_and_lifting(Outcome& o) {
  const FiniteGroup s3 = catalog_group("S3");
  std::ostringstream counts;
  for (const Field& f : {kF3, kF2, kQ}) {
    auto c = comparison_homomorphism(s3, f);
    const auto& za = c.center.algebra;
    auto found = primitive_idempotents(za);
    std::size_t expected = 0;
    if (f.is_prime()) {
      auto brute = oracle::primitive_idempotents_by_enumeration(table_of(za), f.characteristic());
      expected = brute.size();
      o.require(residues(found) == brute, "idempotents differ from enumeration over " + f.to_string());
    } else {
      auto brute = oracle::central_idempotents_by_search(s3);
      expected = brute.size();
      std::vector<std::vector<mpq_class>> mine;
      for (const auto& e : found) {
        std::vector<mpq_class> v;
        for (const auto& s : c.center.to_group_algebra(e)) v.push_back(s.rational());
        mine.push_back(v);
      }
      std::sort(mine.begin(), mine.end());
      std::sort(brute.begin(), brute.end());
      o.require(mine == brute, "idempotents differ from bounded search over Q");
    }
    const std::size_t target = f.is_rational() ? 3 : (f.characteristic() == 2 ? 2 : 1);
    o.require(expected == target, "oracle count over " + f.to_string());
    o.require(found.size() == target, "algorithm count over " + f.to_string());
    for (const auto& e : found) {
      try {
        Vector lift = lift_idempotent(e, c.rho);
        o.require(c.crossed.algebra.is_idempotent(lift) && c.rho(lift) == e, "bad lift over " + f.to_string());
      } catch (const std::exception& ex) {
        o.require(false, std::string("no lift over ") + f.to_string() + ": " + ex.what());
      }
    }
    counts << (counts.tellp() ? ", " : "") << f.to_string() << ": " << found.size();
  }
  o.detail << "S3 block counts " << counts.str() << "; every block idempotent lifts";
}

// 9. Every Hom space between the k[S3/H] over F2 splits under the two block idempotents.
void block_factorization(Outcome& o) {
  const FiniteGroup s3 = catalog_group("S3");
  auto z = center_group_algebra(s3, kF2);
  auto blocks = primitive_idempotents(z.algebra);
  o.require(blocks.size() == 2, "expected 2 blocks");
  auto model = CosetModel::left_sets(s3);
  const auto subs = all_subgroups(s3);
  std::size_t spaces = 0, total_dimension = 0;
  for (const auto& k : subs)
    for (const auto& l : subs) {
      const Biset& x = model.cosets(k);
      const Biset& y = model.cosets(l);
      auto hom = hom_space(linearize(x, kF2), linearize(y, kF2));
      const std::string at = "K=" + k.to_string() + " L=" + l.to_string();
      std::vector<Matrix> on_x, on_y;
      for (const auto& b : blocks) {
        on_x.push_back(central_action(z, b, x));
        on_y.push_back(central_action(z, b, y));
      }
      for (const auto* acts : {&on_x, &on_y}) {
        const auto& a = *acts;
        o.require(a.size() == 2 && (a[0] + a[1]).is_identity(), "blocks do not sum to 1 at " + at);
        o.require(a.size() == 2 && (a[0] * a[1]).is_zero() && (a[1] * a[0]).is_zero(), "not orthogonal at " + at);
        for (const auto& m : a) o.require(m * m == m, "not idempotent at " + at);
      }
      std::size_t sum = 0;
      std::vector<Vector> all_pieces;
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        std::vector<Vector> piece;
        for (const auto& f : hom) {
          const Matrix left = on_y[i] * f.matrix();
          o.require(left == f.matrix() * on_x[i], "block acts differently on the two sides at " + at);
          o.require(is_equivariant_matrix(x, y, left), "piece not equivariant at " + at);
          piece.push_back(left.entries());
          all_pieces.push_back(left.entries());
        }
        sum += piece.empty() ? 0 : rank_of_vectors(kF2, piece);
      }
      o.require(sum == hom.size(), "piece dimensions do not sum at " + at);
      o.require(hom.empty() || rank_of_vectors(kF2, all_pieces) == hom.size(), "pieces do not span at " + at);
      total_dimension += hom.size();
      ++spaces;
    }
  o.detail << spaces << " Hom spaces (total dimension " << total_dimension
           << ") split orthogonally under 2 block idempotents";
}

// 10. C2 <= S3 over F2: eps^l o sigma = id in 2-cells modulo the cohomological
// 2-cell, which acts as zero for cohomological Mackey 2-functors; P(eps^l o sigma) = I.
void separability(Outcome& o) {
  const FiniteGroup s3 = catalog_group("S3");
  std::vector<std::size_t> gens{*s3.index_of(parse_cycles("(1 2)", 3))};
  const Subgroup c2 = generate_subgroup(s3, gens);
  auto s = separability_section(c2, kF2);
  const TwoCell id = TwoCell::identity(kF2, s.composite.source());
  const TwoCell coh = cohomological_2cell(c2, kF2);
  const Scalar inv = Scalar(kF2, 3LL).inverse();
  o.require(s.composite - id == coh.scaled(inv), "defect is not [G:H]^-1 times the cohomological cell");
  o.require(s.defect == coh.scaled(inv), "reported defect differs");
  o.require(linearize_2cell(s.composite).matrix().is_identity(), "P(eps^l o sigma) != I");
  o.require(linearize_2cell(coh).matrix().is_zero(), "cohomological cell not in the kernel");
  o.detail << "eps^l o sigma = id + 3^-1 (cohomological cell), i.e. id modulo the cohomological ideal"
           << (s.composite == id ? " (literally id)" : " (not literally id as a span combination)")
           << "; P(eps^l o sigma) = I";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"Frobenius and adjunction laws", adjunction_laws},
      {"cohomological kernel", cohomological_kernel},
      {"rank formula", rank_formula},
      {"classical Yoshida", classical_yoshida},
      {"biequivalence round trips", biequivalence},
      {"Hom-decategorification", mackey_axioms},
      {"comparison homomorphism", comparison_map},
      {"blocks and lifting", blocks_and_lifting},
      {"block factorization", block_factorization},
      {"separability section", separability},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %2zu %s: %s (%.2f s)\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.str().c_str(), seconds);
    if (!o.passed) std::printf("       first failure: %s\n", o.first_failure.c_str());
    std::fflush(stdout);
    all = all && o.passed;
  }
  return all ? 0 : 1;
}
