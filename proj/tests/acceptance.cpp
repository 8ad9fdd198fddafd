// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracle.hpp"
#include "tamed/report.hpp"

using namespace tamed;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void fail(const std::string& what) {
    if (ok) detail << what;
    ok = false;
  }
};

std::vector<CatalogEntry> all_entries() {
  std::vector<CatalogEntry> out;
  std::set<std::string> seen;
  auto add = [&](CatalogEntry e) {
    if (seen.insert(e.label).second) out.push_back(std::move(e));
  };
  for (const auto& s : catalog()) add(build_entry(s.id));
  for (const auto& r : regression_rows()) add(build_entry(r.id, r.params));
  return out;
}

bool integrable_j(const CatalogEntry& e) { return e.j && is_integrable(e.algebra, *e.j); }

std::vector<RForm> closed_one_forms(const LieAlgebra& g) {
  auto inputs = form_basis(g.dimension(), 1);
  std::vector<RForm> images;
  for (const auto& f : inputs) images.push_back(ce_d(g, f));
  return kernel_of_map(inputs, images);
}

// 1. regression table
void table(Outcome& o) {
  RegressionTable t = regression_table(regression_table_entries());
  int bad = 0;
  for (const auto& l : t.lines)
    if (!l.match) {
      ++bad;
      o.fail(l.label + " " + l.check + ": expected " + l.expected + ", computed " + l.computed);
    }
  if (o.ok) o.detail << t.lines.size() << " rows match";
}

// 2. twisted closed 1-forms on nilpotent algebras
void twisted(Outcome& o) {
  std::vector<std::pair<std::string, LieAlgebra>> algs = {{"heisenberg", build_heisenberg().algebra},
                                                          {"filiform4", build_filiform4().algebra}};
  for (auto [s, t] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}}) {
    CatalogEntry e = build_OT(s, t);
    algs.emplace_back(e.label + " nilradical", subalgebra_algebra(e.algebra, nilradical(e.algebra)));
  }
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  int trials = 0;
  for (const auto& [name, g] : algs) {
    auto closed = closed_one_forms(g);
    for (int k = 0; k < 20; ++k) {
      RForm theta(g.dimension(), 1);
      while (theta.is_zero())
        for (const auto& c : closed) {
          Rational r(num(rng), den(rng));
          r.canonicalize();
          theta += c * r;
        }
      auto sol = solve_twisted_closed(g, theta);
      RForm lhs = ce_d(g, theta) - wedge(theta, theta);
      bool ok = sol.size() == 1 && lhs.is_zero();
      if (ok) {
        // sol[0] is proportional to theta
        Mask m = theta.terms().begin()->first;
        Rational f = sol[0].coeff(m) / theta.coeff(m);
        ok = sol[0] == theta * f;
      }
      if (!ok) o.fail(name + ": solution space is not span{theta}");
      ++trials;
    }
  }
  if (o.ok) o.detail << trials << " random closed 1-forms on " << algs.size() << " algebras";
}

// 3. obstruction characters
void obstruction(Outcome& o) {
  int found = 0, refused = 0;
  for (const auto& e : all_entries()) {
    const LieAlgebra& g = e.algebra;
    if (!is_solvable(g)) continue;
    if (is_nilpotent(g)) {
      Subspace all = whole(g);
      try {
        find_obstruction_character(weight_decomposition(restricted_action(g, all, all)), g, all);
        o.fail(e.label + ": nilpotent input was accepted");
      } catch (const Error& err) {
        if (err.code() != ErrorCode::TypeIInput) o.fail(e.label + ": wrong error " + err.what());
        ++refused;
      }
      continue;
    }
    if (is_type_I(g)) continue;
    Subspace c = nilpotent_complement(g, e.complement);
    Subspace n = nilradical(g);
    WeightDecomposition d = weight_decomposition(restricted_action(g, c, n));
    ObstructionCharacter oc = find_obstruction_character(d, g, n);
    auto ref = oracle::weights(g, c, n);
    if (ref.size() != d.spaces.size()) o.fail(e.label + ": weight count differs from the reference");
    if (!oracle::obstruction_holds(g, ref, oc.alpha.values)) o.fail(e.label + ": returned character fails a condition");
    ++found;
  }
  if (o.ok) o.detail << found << " characters verified, " << refused << " nilpotent inputs refused";
}

// 4. closed forms have dd^c-closed (1,1)-parts
void hermitian_symplectic(Outcome& o) {
  int forms = 0, algs = 0;
  for (const auto& e : all_entries()) {
    if (!integrable_j(e)) continue;
    ++algs;
    for (const auto& w : closed_two_forms(e.algebra).basis) {
      if (!ddc(e.algebra, *e.j, real_11_part(*e.j, w)).is_zero()) o.fail(e.label + ": dd^c of a (1,1)-part is nonzero");
      ++forms;
    }
  }
  if (o.ok) o.detail << forms << " closed basis forms on " << algs << " algebras";
}

// 5. dJ theta - J theta ^ theta on OT(s,1)
void ot_formula(Outcome& o) {
  int flipped = 0;
  for (int s = 1; s <= 3; ++s) {
    CatalogEntry e = build_OT(s, 1);
    const int n = e.algebra.dimension();
    // basis a_1..a_s, b_1..b_s, c_1, c_2
    RForm theta(n, 1), sum_beta(n, 1), pairs(n, 2);
    for (int i = 0; i < s; ++i) {
      theta += RForm::basis(n, i);
      sum_beta += RForm::basis(n, s + i);
      pairs += RForm::monomial(n, {i, s + i});
    }
    RForm jtheta = act_J(*e.j, theta);
    if (jtheta != sum_beta) o.fail("J theta differs from the sum of the dual B forms");
    RForm lhs = ce_d(e.algebra, jtheta) - wedge(jtheta, theta);
    RForm rhs = -pairs - wedge(sum_beta, theta);
    if (lhs != rhs) o.fail("formula fails for s = " + std::to_string(s));
    if (s > 1 && lhs.is_zero()) o.fail("expression vanishes for s = " + std::to_string(s));
    // dd^c(w ^ conj w) = (dJ theta - J theta ^ theta) ^ w ^ conj w for w = c^1 + i c^2
    CForm w = complexify(RForm::basis(n, 2 * s)) + complexify(RForm::basis(n, 2 * s + 1)) * Gaussian::i();
    CForm ww = wedge(w, conj(w));
    CForm got = ddc(e.algebra, *e.j, ww), want = wedge(complexify(lhs), ww);
    if (got != want) {
      if (got == -want) ++flipped;
      o.fail("dd^c identity fails for s = " + std::to_string(s));
    }
  }
  if (flipped) o.detail << "; it holds with the opposite sign in " << flipped << " of 3 cases";
  if (o.ok) o.detail << "s = 1, 2, 3";
}

// 6. kernels against evaluation-based ranks
void kernels(Outcome& o) {
  int closed = 0, skt = 0;
  for (const auto& e : all_entries()) {
    if (e.algebra.dimension() > 8) continue;
    if (closed_two_forms(e.algebra).dimension != oracle::closed_two_form_dimension(e.algebra))
      o.fail(e.label + ": closed 2-form dimension differs");
    ++closed;
    if (!integrable_j(e)) continue;
    FormSpace sp = ddc_closed_11_forms(e.algebra, ComplexStructure(e.algebra, *e.j));
    if (sp.dimension != oracle::ddc_closed_11_dimension(e.algebra, *e.j)) o.fail(e.label + ": dd^c-closed (1,1) dimension differs");
    ++skt;
  }
  if (o.ok) o.detail << closed << " closed-form spaces, " << skt << " dd^c spaces";
}

RMatrix random_invertible(std::mt19937& rng, int n, int lo, int hi) {
  std::uniform_int_distribution<int> v(lo, hi);
  while (true) {
    RMatrix p(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        p(i, j) = Rational(v(rng), 1 + std::abs(v(rng)) % 3);
        p(i, j).canonicalize();
      }
    if (determinant(p) != 0) return p;
  }
}

RMatrix block_diagonal(const std::vector<RMatrix>& blocks) {
  int n = 0;
  for (const auto& b : blocks) n += b.rows();
  RMatrix m(n, n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return m;
}

RMatrix structured(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> v(-3, 3), pick(0, 2);
  std::vector<RMatrix> blocks;
  int left = n;
  while (left > 0) {
    int kind = pick(rng);
    if (kind == 2 && left >= 4) {
      // rotation pair with a Jordan coupling
      Rational a = v(rng), b = v(rng) == 0 ? 1 : v(rng);
      RMatrix r = RMatrix::from_rows({{a, -b, 1, 0}, {b, a, 0, 1}, {0, 0, a, -b}, {0, 0, b, a}}, 4);
      blocks.push_back(r);
      left -= 4;
    } else if (kind == 1 && left >= 2) {
      Rational a = v(rng), b = v(rng) == 0 ? 2 : v(rng);
      blocks.push_back(RMatrix::from_rows({{a, -b}, {b, a}}, 2));
      left -= 2;
    } else {
      int size = std::min(left, 1 + std::abs(v(rng)));
      RMatrix j(size, size);
      Rational lambda(v(rng), 2);
      lambda.canonicalize();
      for (int i = 0; i < size; ++i) {
        j(i, i) = lambda;
        if (i + 1 < size) j(i, i + 1) = 1;
      }
      blocks.push_back(j);
      left -= size;
    }
  }
  RMatrix p = random_invertible(rng, n, -2, 2);
  return *inverse(p) * block_diagonal(blocks) * p;
}

// 7. Jordan-Chevalley
void jordan(Outcome& o) {
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> dim(1, 8), v(-3, 3);
  int nontrivial = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = dim(rng);
    RMatrix m(n, n);
    if (trial % 2) {
      m = structured(rng, n);
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = v(rng);
    }
    JordanPair jp = jordan_chevalley(m);
    auto s = oracle::to_dense(jp.s), nn = oracle::to_dense(jp.n), md = oracle::to_dense(m);
    bool sum_ok = jp.s + jp.n == m;
    bool commute = oracle::multiply(s, nn) == oracle::multiply(nn, s);
    auto power = oracle::identity(n);
    for (int k = 0; k < n; ++k) power = oracle::multiply(power, nn);
    bool nilp = oracle::is_zero(power);
    bool semisimple = oracle::is_zero(oracle::evaluate(oracle::squarefree(oracle::charpoly(s)), s));
    if (!(sum_ok && commute && nilp && semisimple)) o.fail("matrix " + std::to_string(trial) + " fails an invariant");
    if (!jp.n.is_zero()) ++nontrivial;
  }
  if (o.ok) o.detail << "200 matrices, " << nontrivial << " with nonzero nilpotent part";
}

// 8. verdicts under change of basis
void conjugation(Outcome& o) {
  std::mt19937 rng(5);
  int runs = 0;
  for (const auto& base : {build_s_minus1_0(), build_OT(2, 1)}) {
    ComplexStructure j0(base.algebra, *base.j);
    VerdictKind t0 = decide_taming(base.algebra, j0).kind;
    VerdictKind s0 = decide_skt(base.algebra, j0).kind;
    const int n = base.algebra.dimension();
    for (int k = 0; k < 10; ++k) {
      RMatrix p = random_invertible(rng, n, -2, 2);
      LieAlgebra g = base.algebra.change_basis(p);
      RMatrix jn = *inverse(p) * *base.j * p;
      ComplexStructure j(g, jn);
      Verdict t = decide_taming(g, j), s = decide_skt(g, j);
      if (t.kind != t0 || s.kind != s0) o.fail(base.label + ": verdict changed under conjugation " + std::to_string(k));
      if (!verify_verdict(g, jn, closed_two_forms(g), t).empty()) o.fail(base.label + ": conjugated certificate fails");
      ++runs;
    }
  }
  if (o.ok) o.detail << runs << " conjugations";
}

// 9. nilpotent sanity
void heisenberg_line(Outcome& o) {
  CatalogEntry e = build_heisenberg_r(true);
  Verdict v = decide_taming(e.algebra, ComplexStructure(e.algebra, *e.j));
  if (v.kind == VerdictKind::Exists) o.fail("a taming form was reported");
  if (o.ok) o.detail << "taming " << verdict_name(v.kind);
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Outcome&)> run;
  };
  std::vector<Criterion> all = {
      {"regression table", table},
      {"twisted closed 1-forms", twisted},
      {"obstruction characters", obstruction},
      {"(1,1)-parts of closed forms are dd^c-closed", hermitian_symplectic},
      {"OT(s,1) Lee-form identity", ot_formula},
      {"form spaces vs reference ranks", kernels},
      {"Jordan-Chevalley invariants", jordan},
      {"basis invariance", conjugation},
      {"Heisenberg plus a line", heisenberg_line},
  };
  int failed = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      all[i].run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << i + 1 << "] " << all[i].name << " (" << o.detail.str() << ", " << secs << " s)"
              << std::endl;
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
