#include "tamed/cxstruct.hpp"

namespace tamed {

namespace {

bool all_zero(const Vec<Rational>& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

template <class S>
Form<S> pullback_impl(const RMatrix& p, const Form<S>& a) {
  const int n = a.dimension();
  if (p.rows() != n || p.cols() != n) throw Error(ErrorCode::DimensionMismatch, "pullback matrix");
  // P^* e^i = sum_j P(i,j) e^j
  std::vector<Form<S>> img;
  img.reserve(n);
  for (int i = 0; i < n; ++i) {
    Form<S> f(n, 1);
    for (int j = 0; j < n; ++j)
      if (sgn(p(i, j)) != 0) f.add(bit(j), ScalarOps<S>::from_rational(p(i, j)));
    img.push_back(std::move(f));
  }
  Form<S> out(n, a.degree());
  for (const auto& [m, c] : a.terms()) {
    Form<S> prod = Form<S>::constant(n, c);
    for (int idx : mask_indices(m)) {
      prod = wedge(prod, img[idx]);
      if (prod.is_zero()) break;
    }
    if (!prod.is_zero()) out += prod;
  }
  return out;
}

template <class S>
Form<S> act_J_impl(const RMatrix& j, const Form<S>& a) {
  Form<S> out = pullback_impl(j, a);
  if (a.degree() & 1) out = -out;
  return out;
}

template <class S>
Form<S> dc_impl(const LieAlgebra& g, const RMatrix& j, const Form<S>& a) {
  // J_k = (-1)^k P, J_k^{-1} = P, so d^c = (-1)^k P d P on k-forms
  Form<S> out = pullback_impl(j, ce_d(g, pullback_impl(j, a)));
  if (a.degree() & 1) out = -out;
  return out;
}

}  // namespace

void require_complex_square(const RMatrix& j) {
  if (j.rows() != j.cols()) throw Error(ErrorCode::DimensionMismatch, "J must be square");
  if (j.rows() % 2 != 0) throw Error(ErrorCode::JSquaredNotMinusId, "odd dimension");
  RMatrix sq = j * j;
  sq += RMatrix::identity(j.rows());
  if (!sq.is_zero()) throw Error(ErrorCode::JSquaredNotMinusId, "J^2 != -id");
}

ComplexStructure::ComplexStructure(const LieAlgebra& g, RMatrix j) : j_(std::move(j)) {
  if (j_.rows() != g.dimension()) throw Error(ErrorCode::DimensionMismatch, "J dimension differs from algebra");
  require_complex_square(j_);
  integrable_ = tamed::is_integrable(g, j_);
}

Vec<Rational> nijenhuis(const LieAlgebra& g, const RMatrix& j, const Vec<Rational>& x, const Vec<Rational>& y) {
  Vec<Rational> jx = j * x;
  Vec<Rational> jy = j * y;
  Vec<Rational> out = g.bracket(jx, jy);
  Vec<Rational> a = g.bracket(x, y);
  Vec<Rational> b = j * g.bracket(jx, y);
  Vec<Rational> c = j * g.bracket(x, jy);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= a[k] + b[k] + c[k];
  return out;
}

bool is_integrable(const LieAlgebra& g, const RMatrix& j) {
  require_complex_square(j);
  const int n = g.dimension();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (!all_zero(nijenhuis(g, j, unit_vector(n, a), unit_vector(n, b)))) return false;
  return true;
}

bool is_abelian_J(const LieAlgebra& g, const RMatrix& j) {
  require_complex_square(j);
  const int n = g.dimension();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (g.bracket(j.column(a), j.column(b)) != g.structure(a, b)) return false;
    }
  return true;
}

RForm pullback(const RMatrix& p, const RForm& a) { return pullback_impl(p, a); }
CForm pullback(const RMatrix& p, const CForm& a) { return pullback_impl(p, a); }
RForm act_J(const RMatrix& j, const RForm& a) { return act_J_impl(j, a); }
CForm act_J(const RMatrix& j, const CForm& a) { return act_J_impl(j, a); }

CForm to_10(const RMatrix& j, const CForm& a) {
  // (1,0) forms satisfy w∘J = i w; projector (a - i P^*a)/2
  CForm pa = pullback(j, a);
  return (a - pa * Gaussian::i()) * Gaussian(Rational(1, 2));
}

CForm to_01(const RMatrix& j, const CForm& a) {
  CForm pa = pullback(j, a);
  return (a + pa * Gaussian::i()) * Gaussian(Rational(1, 2));
}

CForm BigradedForm::part(int p, int q) const {
  auto it = parts.find({p, q});
  if (it != parts.end()) return it->second;
  return CForm(form.dimension(), p + q);
}

BigradedForm bigrade(const RMatrix& j, const CForm& a) {
  const int n = a.dimension();
  const int k = a.degree();
  std::vector<CForm> p10, p01;
  for (int i = 0; i < n; ++i) {
    CForm e = CForm::basis(n, i);
    p10.push_back(to_10(j, e));
    p01.push_back(to_01(j, e));
  }
  std::vector<CForm> by_p(k + 1, CForm(n, k));
  for (const auto& [m, c] : a.terms()) {
    // expand the product of (pi10 + pi01)(e^i) keeping track of the (1,0) count
    std::vector<CForm> partial{CForm::constant(n, c)};
    int step = 0;
    for (int idx : mask_indices(m)) {
      ++step;
      std::vector<CForm> next(step + 1, CForm(n, step));
      for (int p = 0; p < static_cast<int>(partial.size()); ++p) {
        if (partial[p].is_zero()) continue;
        next[p + 1] += wedge(partial[p], p10[idx]);
        next[p] += wedge(partial[p], p01[idx]);
      }
      partial = std::move(next);
    }
    for (int p = 0; p <= k; ++p) by_p[p] += partial[p];
  }
  BigradedForm out;
  out.form = a;
  for (int p = 0; p <= k; ++p)
    if (!by_p[p].is_zero()) out.parts.emplace(std::make_pair(p, k - p), by_p[p]);
  return out;
}

RForm real_11_part(const RMatrix& j, const RForm& a) {
  if (a.degree() != 2) throw Error(ErrorCode::DegreeMismatch, "real (1,1) part needs a 2-form");
  return (a + pullback(j, a)) * Rational(1, 2);
}

RForm dc(const LieAlgebra& g, const RMatrix& j, const RForm& a) { return dc_impl(g, j, a); }
CForm dc(const LieAlgebra& g, const RMatrix& j, const CForm& a) { return dc_impl(g, j, a); }
RForm ddc(const LieAlgebra& g, const RMatrix& j, const RForm& a) { return ce_d(g, dc_impl(g, j, a)); }
CForm ddc(const LieAlgebra& g, const RMatrix& j, const CForm& a) { return ce_d(g, dc_impl(g, j, a)); }

CForm del(const LieAlgebra& g, const RMatrix& j, const CForm& a, int p, int q) {
  return bigrade(j, ce_d(g, a)).part(p + 1, q);
}

CForm delbar(const LieAlgebra& g, const RMatrix& j, const CForm& a, int p, int q) {
  return bigrade(j, ce_d(g, a)).part(p, q + 1);
}

}  // namespace tamed
