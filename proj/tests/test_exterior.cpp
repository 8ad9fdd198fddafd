#include <random>

#include "doctest.h"
#include "tamed/exterior.hpp"

using namespace tamed;

namespace {

RForm random_form(std::mt19937& rng, int n, int k, int terms) {
  RForm f(n, k);
  std::uniform_int_distribution<int> idx(0, n - 1), val(-3, 3);
  for (int t = 0; t < terms; ++t) {
    Mask m = 0;
    while (popcount(m) < k) m |= bit(idx(rng));
    Rational c(val(rng), 1 + std::abs(val(rng)));
    c.canonicalize();
    f.add(m, c);
  }
  return f;
}

std::vector<Rational> random_vec(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> val(-4, 4);
  std::vector<Rational> v(n);
  for (auto& x : v) x = val(rng);
  return v;
}

// direct shuffle definition of (a ^ b)(v_1..v_{p+q})
Rational shuffle_eval(const RForm& a, const RForm& b, const std::vector<std::vector<Rational>>& vs) {
  const int p = a.degree(), q = b.degree(), k = p + q;
  Rational total = 0;
  for (Mask pick = 0; pick < bit(k); ++pick) {
    if (popcount(pick) != p) continue;
    std::vector<std::vector<Rational>> left, right;
    std::vector<int> order;
    for (int i = 0; i < k; ++i)
      if (pick & bit(i)) {
        left.push_back(vs[i]);
        order.push_back(i);
      }
    for (int i = 0; i < k; ++i)
      if (!(pick & bit(i))) {
        right.push_back(vs[i]);
        order.push_back(i);
      }
    int inv = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (order[i] > order[j]) ++inv;
    Rational term = evaluate(a, std::span<const std::vector<Rational>>(left)) * evaluate(b, std::span<const std::vector<Rational>>(right));
    total += (inv % 2 ? -term : term);
  }
  return total;
}

}  // namespace

TEST_CASE("wedge basics") {
  RForm e1 = RForm::basis(4, 0), e2 = RForm::basis(4, 1), e3 = RForm::basis(4, 2);
  CHECK(wedge(e1, e1).is_zero());
  CHECK(wedge(e1, e2) == -wedge(e2, e1));
  CHECK(wedge(e1 + e2, e3) == RForm::monomial(4, {0, 2}) + RForm::monomial(4, {1, 2}));
  CHECK(RForm::monomial(4, {1, 0}) == -RForm::monomial(4, {0, 1}));
  RForm top = RForm::monomial(4, {0, 1, 2, 3});
  RForm over = wedge(top, e1);
  CHECK(over.is_zero());
}

TEST_CASE("evaluate pairs with vectors") {
  RForm e12 = RForm::monomial(3, {0, 1});
  std::vector<Rational> x1{1, 0, 0}, x2{0, 1, 0};
  CHECK(evaluate(e12, {x1, x2}) == 1);
  CHECK(evaluate(e12, {x2, x1}) == -1);
  CHECK(evaluate(e12, {x1, x1}) == 0);
  CHECK_THROWS_AS(evaluate(e12, {x1}), Error);
}

TEST_CASE("complexify and conjugation") {
  RForm half = RForm::monomial(3, {0, 1}, Rational(1, 2));
  CForm c = complexify(half);
  CHECK(c.coeff(bit(0) | bit(1)) == Gaussian(Rational(1, 2)));
  CHECK(conj(c) == c);
  CHECK(complexify(RForm(3, 2)).is_zero());
  CForm w = CForm::basis(2, 0) + CForm::basis(2, 1) * Gaussian::i();
  CHECK(conj(conj(w)) == w);
  CHECK(real_part(w) == RForm::basis(2, 0));
  CHECK(imag_part(w) == RForm::basis(2, 1));
}

TEST_CASE("random algebra laws up to n = 12") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + trial % 9;
    std::uniform_int_distribution<int> deg(0, 3);
    int p = deg(rng), q = deg(rng), r = deg(rng);
    RForm a = random_form(rng, n, p, 4), b = random_form(rng, n, q, 4), c = random_form(rng, n, r, 4);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    RForm ba = wedge(b, a);
    CHECK(wedge(a, b) == ((p * q) % 2 ? -ba : ba));
    CForm ca = complexify(a) + complexify(b.degree() == p ? b : a) * Gaussian::i();
    CForm cb = complexify(c) * Gaussian(1, 2);
    CHECK(conj(wedge(ca, cb)) == wedge(conj(ca), conj(cb)));
  }
}

TEST_CASE("evaluation of a wedge matches the shuffle sum") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 5;
    RForm a = random_form(rng, n, 1 + trial % 2, 3), b = random_form(rng, n, 1 + trial % 3, 3);
    if (a.degree() + b.degree() > n) continue;
    std::vector<std::vector<Rational>> vs;
    for (int i = 0; i < a.degree() + b.degree(); ++i) vs.push_back(random_vec(rng, n));
    CHECK(evaluate(wedge(a, b), std::span<const std::vector<Rational>>(vs)) == shuffle_eval(a, b, vs));
  }
}

TEST_CASE("zeros are never stored") {
  RForm f(3, 1);
  f.add(bit(0), 2);
  f.add(bit(0), -2);
  CHECK(f.is_zero());
  CHECK(f == RForm(3, 1));
  CHECK_THROWS_AS(f.add(bit(0) | bit(1), 1), Error);
}
