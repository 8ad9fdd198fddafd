#include "doctest.h"
#include "tamed/catalog.hpp"

using namespace tamed;

namespace {

CForm sum_of_parts(const BigradedForm& b, int n, int k) {
  CForm out(n, k);
  for (const auto& [pq, f] : b.parts) out += f;
  return out;
}

}  // namespace

TEST_CASE("integrability") {
  CatalogEntry good = build_heisenberg_r(true);
  CatalogEntry bad = build_heisenberg_r(false);
  CHECK(is_integrable(good.algebra, *good.j));
  CHECK_FALSE(is_integrable(bad.algebra, *bad.j));
  // N(e1, e2) = -e3 for J e1 = e3, J e2 = e4
  Vec<Rational> n12 = nijenhuis(bad.algebra, *bad.j, unit_vector(4, 0), unit_vector(4, 1));
  CHECK(n12 == Vec<Rational>{0, 0, -1, 0});
  CHECK(ComplexStructure(good.algebra, *good.j).is_integrable());
  for (const char* id : {"ot", "s-1-0", "nakamura", "tt30-r", "aa6-int", "ex41"}) {
    CatalogEntry e = build_entry(id);
    CHECK(is_integrable(e.algebra, *e.j));
  }
  CatalogEntry aa = build_aa6(1, 2);
  CHECK_FALSE(is_integrable(aa.algebra, *aa.j));
  CHECK(is_integrable(build_aa6(0, 0).algebra, *build_aa6(0, 0).j));
}

TEST_CASE("J squared must be minus the identity") {
  LieAlgebra t = build_torus(2).algebra;
  CHECK_THROWS_AS(ComplexStructure(t, RMatrix::identity(2)), Error);
  CHECK_THROWS_AS(require_complex_square(RMatrix::from_rows({{0, 1}, {1, 0}}, 2)), Error);
  CHECK_NOTHROW(require_complex_square(RMatrix::from_rows({{0, -1}, {1, 0}}, 2)));
}

TEST_CASE("abelian complex structures") {
  CatalogEntry h = build_heisenberg_r(true);
  CHECK(is_abelian_J(h.algebra, *h.j));
  CatalogEntry s = build_s_minus1_0();
  CHECK(is_abelian_J(s.algebra, *s.j));
  CatalogEntry ot = build_OT(1, 1);
  CHECK_FALSE(is_abelian_J(ot.algebra, *ot.j));
}

TEST_CASE("J on forms squares to the sign of the degree") {
  CatalogEntry e = build_OT(1, 2);
  const RMatrix& j = *e.j;
  int n = e.algebra.dimension();
  for (int k = 0; k <= 3; ++k)
    for (const auto& f : form_basis(n, k)) {
      RForm twice = act_J(j, act_J(j, f));
      CHECK(twice == (k % 2 ? -f : f));
    }
}

TEST_CASE("bigrading") {
  CatalogEntry e = build_OT(1, 1);
  const RMatrix& j = *e.j;
  const int n = 4;
  CForm one = complexify(RForm::basis(n, 0));
  CHECK(to_10(j, one) + to_01(j, one) == one);
  CHECK(conj(to_10(j, one)) == to_01(j, one));
  for (int k = 1; k <= 3; ++k)
    for (const auto& f : form_basis(n, k)) {
      CForm c = complexify(f);
      BigradedForm b = bigrade(j, c);
      CHECK(sum_of_parts(b, n, k) == c);
      for (const auto& [pq, part] : b.parts) {
        CHECK(pq.first + pq.second == k);
        CHECK(bigrade(j, part).parts.size() == 1);
        CHECK(b.part(pq.second, pq.first) == conj(part));
      }
    }
  // the real (1,1) part is J-invariant and idempotent
  for (const auto& f : form_basis(n, 2)) {
    RForm p = real_11_part(j, f);
    CHECK(pullback(j, p) == p);
    CHECK(real_11_part(j, p) == p);
  }
}

TEST_CASE("d of a (1,0)-form has no (0,2) part exactly when J is integrable") {
  auto worst = [](const CatalogEntry& e) {
    const int n = e.algebra.dimension();
    bool any = false;
    for (const auto& f : form_basis(n, 1)) {
      CForm a = to_10(*e.j, complexify(f));
      if (a.is_zero()) continue;
      any = any || !bigrade(*e.j, ce_d(e.algebra, a)).part(0, 2).is_zero();
    }
    return any;
  };
  CHECK_FALSE(worst(build_heisenberg_r(true)));
  CHECK_FALSE(worst(build_OT(2, 1)));
  CHECK(worst(build_heisenberg_r(false)));
}

TEST_CASE("del and delbar split d on integrable structures") {
  CatalogEntry e = build_OT(1, 1);
  for (const auto& f : form_basis(4, 1)) {
    CForm a = to_10(*e.j, complexify(f));
    CHECK(del(e.algebra, *e.j, a, 1, 0) + delbar(e.algebra, *e.j, a, 1, 0) == ce_d(e.algebra, a));
  }
}

TEST_CASE("dd^c is -2i del delbar on (1,1)-forms") {
  for (int s = 1; s <= 3; ++s) {
    CatalogEntry e = build_OT(s, 1);
    const int n = e.algebra.dimension();
    for (int a = 0; a + 1 < n; a += 2) {
      CForm w = complexify(RForm::basis(n, a)) + complexify(RForm::basis(n, a + 1)) * Gaussian::i();
      CForm ww = wedge(w, conj(w));
      CForm ddbar = del(e.algebra, *e.j, delbar(e.algebra, *e.j, ww, 1, 1), 1, 2);
      CHECK(ddc(e.algebra, *e.j, ww) == ddbar * Gaussian(0, -2));
    }
  }
}

TEST_CASE("dd^c anticommutes and kills closed (1,1)-parts") {
  for (const char* id : {"ot", "s-1-0", "heis-r", "nakamura"}) {
    CatalogEntry e = build_entry(id);
    const RMatrix& j = *e.j;
    const int n = e.algebra.dimension();
    for (const auto& f : form_basis(n, 1)) {
      CHECK(ce_d(e.algebra, dc(e.algebra, j, f)) == -dc(e.algebra, j, ce_d(e.algebra, f)));
      CHECK(ddc(e.algebra, j, f) == ce_d(e.algebra, dc(e.algebra, j, f)));
    }
    for (const auto& w : closed_two_forms(e.algebra).basis) CHECK(ddc(e.algebra, j, real_11_part(j, w)).is_zero());
  }
}
