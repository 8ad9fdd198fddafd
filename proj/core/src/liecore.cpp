#include "tamed/liecore.hpp"

#include <random>

namespace tamed {

namespace {

template <class S>
S lift(const Rational& r) {
  return ScalarOps<S>::from_rational(r);
}

bool vec_is_zero(const Vec<Rational>& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace

Vec<Rational> unit_vector(int n, int i) {
  Vec<Rational> v(n, Rational(0));
  v[i] = 1;
  return v;
}

LieAlgebra::LieAlgebra(int dimension, std::vector<std::string> names, const std::vector<BracketEntry>& brackets, bool validate)
    : n_(dimension), names_(std::move(names)) {
  if (n_ <= 0 || n_ > kMaxDimension) throw Error(ErrorCode::InvalidArgument, "dimension out of range");
  if (names_.empty())
    for (int i = 0; i < n_; ++i) names_.push_back("e" + std::to_string(i + 1));
  if (static_cast<int>(names_.size()) != n_) throw Error(ErrorCode::DimensionMismatch, "number of basis names differs from dimension");
  table_.assign(static_cast<std::size_t>(n_) * n_, Vec<Rational>(n_, Rational(0)));
  for (const auto& b : brackets) {
    if (b.i < 0 || b.j < 0 || b.i >= n_ || b.j >= n_) throw Error(ErrorCode::DimensionMismatch, "bracket index out of range");
    if (b.i == b.j) {
      for (const auto& t : b.terms)
        if (sgn(t.coeff) != 0) throw Error(ErrorCode::InvalidArgument, "[e_i, e_i] must vanish");
      continue;
    }
    auto& fwd = table_[static_cast<std::size_t>(b.i) * n_ + b.j];
    auto& bwd = table_[static_cast<std::size_t>(b.j) * n_ + b.i];
    for (const auto& t : b.terms) {
      if (t.k < 0 || t.k >= n_) throw Error(ErrorCode::DimensionMismatch, "bracket term index out of range");
      fwd[t.k] += t.coeff;
      bwd[t.k] -= t.coeff;
    }
  }
  ad_.reserve(n_);
  for (int i = 0; i < n_; ++i) {
    RMatrix m(n_, n_);
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) m(k, j) = structure(i, j)[k];
    ad_.push_back(std::move(m));
  }
  // d e^k = - sum_{i<j} c^k_ij e^i ∧ e^j
  d1_.assign(n_, RForm(n_, n_ >= 2 ? 2 : n_));
  if (n_ >= 2) {
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        const auto& c = structure(i, j);
        for (int k = 0; k < n_; ++k)
          if (sgn(c[k]) != 0) d1_[k].add(bit(i) | bit(j), Rational(-c[k]));
      }
  }
  if (validate) {
    auto jr = check_jacobi(*this);
    if (!jr.ok)
      throw Error(ErrorCode::JacobiViolation, "Jacobi identity fails on (" + names_[jr.i] + ", " + names_[jr.j] + ", " + names_[jr.k] + ")");
  }
}

int LieAlgebra::index_of(const std::string& name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  throw Error(ErrorCode::InvalidArgument, "no basis element named " + name);
}

Vec<Rational> LieAlgebra::bracket(const Vec<Rational>& x, const Vec<Rational>& y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_) throw Error(ErrorCode::DimensionMismatch, "bracket arguments");
  Vec<Rational> out(n_, Rational(0));
  for (int i = 0; i < n_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (sgn(y[j]) == 0 || i == j) continue;
      Rational f = x[i] * y[j];
      const auto& c = structure(i, j);
      for (int k = 0; k < n_; ++k)
        if (sgn(c[k]) != 0) out[k] += f * c[k];
    }
  }
  return out;
}

Vec<Gaussian> LieAlgebra::bracket(const Vec<Gaussian>& x, const Vec<Gaussian>& y) const {
  if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_) throw Error(ErrorCode::DimensionMismatch, "bracket arguments");
  Vec<Gaussian> out(n_, Gaussian());
  for (int i = 0; i < n_; ++i) {
    if (is_zero(x[i])) continue;
    for (int j = 0; j < n_; ++j) {
      if (is_zero(y[j]) || i == j) continue;
      Gaussian f = x[i] * y[j];
      const auto& c = structure(i, j);
      for (int k = 0; k < n_; ++k)
        if (sgn(c[k]) != 0) out[k] += f * Gaussian(c[k]);
    }
  }
  return out;
}

RMatrix LieAlgebra::ad(const Vec<Rational>& x) const {
  RMatrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    if (sgn(x[i]) != 0) m += ad_[i] * x[i];
  return m;
}

std::vector<BracketEntry> LieAlgebra::entries() const {
  std::vector<BracketEntry> out;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      const auto& c = structure(i, j);
      BracketEntry e{i, j, {}};
      for (int k = 0; k < n_; ++k)
        if (sgn(c[k]) != 0) e.terms.push_back({k, c[k]});
      if (!e.terms.empty()) out.push_back(std::move(e));
    }
  return out;
}

LieAlgebra LieAlgebra::change_basis(const RMatrix& p) const {
  if (p.rows() != n_ || p.cols() != n_) throw Error(ErrorCode::DimensionMismatch, "change of basis matrix");
  auto inv = inverse(p);
  if (!inv) throw Error(ErrorCode::InvalidArgument, "change of basis matrix is singular");
  std::vector<BracketEntry> br;
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b) {
      Vec<Rational> v = (*inv) * bracket(p.column(a), p.column(b));
      BracketEntry e{a, b, {}};
      for (int k = 0; k < n_; ++k)
        if (sgn(v[k]) != 0) e.terms.push_back({k, v[k]});
      if (!e.terms.empty()) br.push_back(std::move(e));
    }
  std::vector<std::string> names;
  for (const auto& s : names_) names.push_back(s + "'");
  return LieAlgebra(n_, std::move(names), br, false);
}

JacobiResult check_jacobi(const LieAlgebra& g) {
  const int n = g.dimension();
  JacobiResult r;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec<Rational> s = g.ad(i) * g.structure(j, k);
        Vec<Rational> t = g.ad(j) * g.structure(k, i);
        Vec<Rational> u = g.ad(k) * g.structure(i, j);
        for (int c = 0; c < n; ++c) s[c] += t[c] + u[c];
        if (!vec_is_zero(s)) {
          r.ok = false;
          r.i = i;
          r.j = j;
          r.k = k;
          r.value = std::move(s);
          return r;
        }
      }
  return r;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(const LieAlgebra& g, const std::vector<Vec<Rational>>& spanning) : n_(g.dimension()) {
  for (const auto& v : spanning)
    if (static_cast<int>(v.size()) != n_) throw Error(ErrorCode::DimensionMismatch, "subspace vector dimension");
  basis_ = echelon_basis(spanning, n_);
  for (const auto& b : basis_) {
    int p = 0;
    while (sgn(b[p]) == 0) ++p;
    pivots_.push_back(p);
  }
  subalgebra_ = true;
  abelian_ = true;
  for (std::size_t a = 0; a < basis_.size() && subalgebra_; ++a)
    for (std::size_t b = a + 1; b < basis_.size(); ++b) {
      auto br = g.bracket(basis_[a], basis_[b]);
      if (!vec_is_zero(br)) abelian_ = false;
      if (!contains(br)) {
        subalgebra_ = false;
        break;
      }
    }
  if (!subalgebra_) abelian_ = false;
  ideal_ = subalgebra_;
  for (int i = 0; i < n_ && ideal_; ++i)
    for (const auto& b : basis_)
      if (!contains(g.ad(i) * b)) {
        ideal_ = false;
        break;
      }
}

std::vector<RVector> Subspace::basis_vectors() const {
  std::vector<RVector> out;
  for (const auto& b : basis_) out.push_back(RVector::from_coordinates(b));
  return out;
}

Vec<Rational> Subspace::coordinates(const Vec<Rational>& v) const {
  Vec<Rational> c(basis_.size());
  for (std::size_t r = 0; r < basis_.size(); ++r) c[r] = v[pivots_[r]];
  return c;
}

bool Subspace::contains(const Vec<Rational>& v) const {
  if (static_cast<int>(v.size()) != n_) throw Error(ErrorCode::DimensionMismatch, "subspace membership");
  Vec<Rational> rest = v;
  for (std::size_t r = 0; r < basis_.size(); ++r) {
    Rational f = rest[pivots_[r]];
    if (sgn(f) == 0) continue;
    for (int k = 0; k < n_; ++k) rest[k] -= f * basis_[r][k];
  }
  return vec_is_zero(rest);
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

Subspace whole(const LieAlgebra& g) {
  std::vector<Vec<Rational>> vs;
  for (int i = 0; i < g.dimension(); ++i) vs.push_back(unit_vector(g.dimension(), i));
  return Subspace(g, vs);
}

Subspace sum(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  auto vs = a.basis();
  vs.insert(vs.end(), b.basis().begin(), b.basis().end());
  return Subspace(g, vs);
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  std::vector<Vec<Rational>> vs;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      auto br = g.bracket(x, y);
      if (!vec_is_zero(br)) vs.push_back(std::move(br));
    }
  return Subspace(g, vs);
}

Series derived_and_central_series(const LieAlgebra& g) {
  Series s;
  Subspace full = whole(g);
  s.derived.push_back(full);
  for (;;) {
    Subspace next = bracket_span(g, s.derived.back(), s.derived.back());
    if (next == s.derived.back()) break;
    s.derived.push_back(next);
    if (next.dimension() == 0) break;
  }
  s.lower_central.push_back(full);
  for (;;) {
    Subspace next = bracket_span(g, full, s.lower_central.back());
    if (next == s.lower_central.back()) break;
    s.lower_central.push_back(next);
    if (next.dimension() == 0) break;
  }
  return s;
}

bool is_solvable(const LieAlgebra& g) { return derived_and_central_series(g).derived.back().dimension() == 0; }
bool is_nilpotent(const LieAlgebra& g) { return derived_and_central_series(g).lower_central.back().dimension() == 0; }

bool is_unimodular(const LieAlgebra& g) {
  for (int i = 0; i < g.dimension(); ++i) {
    Rational tr = 0;
    for (int k = 0; k < g.dimension(); ++k) tr += g.ad(i)(k, k);
    if (sgn(tr) != 0) return false;
  }
  return true;
}

Subspace center(const LieAlgebra& g) {
  const int n = g.dimension();
  RMatrix m(n * n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) m(j * n + k, i) = g.structure(i, j)[k];
  return Subspace(g, kernel(m));
}

namespace {

// basis of span(a) ∩ span(b)
std::vector<Vec<Rational>> intersect(const std::vector<Vec<Rational>>& a, const std::vector<Vec<Rational>>& b, int n) {
  if (a.empty() || b.empty()) return {};
  std::vector<Vec<Rational>> cols = a;
  for (const auto& v : b) {
    Vec<Rational> neg = v;
    for (auto& x : neg) x = -x;
    cols.push_back(std::move(neg));
  }
  std::vector<Vec<Rational>> out;
  for (const auto& coeffs : kernel(RMatrix::from_columns(cols, n))) {
    Vec<Rational> v(n);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (int r = 0; r < n; ++r) v[r] += coeffs[i] * a[i][r];
    out.push_back(std::move(v));
  }
  return echelon_basis(out, n);
}

}  // namespace

std::optional<Subspace> abelian_ideal_of_codimension_one(const LieAlgebra& g) {
  const int n = g.dimension();
  if (n == 0) return std::nullopt;
  // ker(phi) is abelian iff every structure 2-form e^k([.,.]) is phi ^ psi_k
  Subspace derived = bracket_span(g, whole(g), whole(g));
  std::vector<Vec<Rational>> candidates =
      derived.dimension() == 0 ? std::vector<Vec<Rational>>{} : kernel(RMatrix::from_rows(derived.basis(), n));
  if (derived.dimension() == 0)
    for (int i = 0; i < n; ++i) candidates.push_back(unit_vector(n, i));
  for (int k = 0; k < n && !candidates.empty(); ++k) {
    RMatrix w(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) w(i, j) = g.structure(i, j)[k];
    int r = rank(w);
    if (r == 0) continue;
    if (r > 2) return std::nullopt;
    std::vector<Vec<Rational>> image;
    for (int c = 0; c < n; ++c) image.push_back(w.column(c));
    candidates = intersect(candidates, echelon_basis(image, n), n);
  }
  if (candidates.empty()) return std::nullopt;
  Subspace a(g, kernel(RMatrix::from_rows({candidates.front()}, n)));
  if (!a.is_abelian() || !a.is_ideal()) return std::nullopt;
  return a;
}

Subspace nilradical(const LieAlgebra& g, std::uint64_t seed) {
  if (!is_solvable(g)) throw Error(ErrorCode::NotSolvable, "derived series does not reach 0");
  const int n = g.dimension();
  std::vector<Rational> traces;  // tr(ad_i M) for all constraint matrices M
  std::vector<Vec<Rational>> rows;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-20, 20);
  // Weights of ad vanish on [g,g]; the common kernel of the nonzero ones is the
  // nilradical, and tr(ad_x ad_y^k) = sum m_l l(x) l(y)^k separates them for generic y.
  for (int attempt = 0; attempt < 16; ++attempt) {
    Vec<Rational> y(n);
    for (auto& c : y) c = coef(rng);
    RMatrix ady = g.ad(y);
    RMatrix power = RMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
      Vec<Rational> row(n);
      for (int i = 0; i < n; ++i) {
        RMatrix prod = g.ad(i) * power;
        Rational tr = 0;
        for (int d = 0; d < n; ++d) tr += prod(d, d);
        row[i] = tr;
      }
      rows.push_back(std::move(row));
      power = power * ady;
    }
    Subspace cand(g, kernel(RMatrix::from_rows(rows, n)));
    bool ok = cand.is_ideal();
    for (const auto& b : cand.basis())
      if (ok && !is_nilpotent(g.ad(b))) ok = false;
    if (ok) return cand;
  }
  throw Error(ErrorCode::NotSolvable, "nilradical computation did not stabilise");
}

// ---------------------------------------------------------------------------

namespace {

template <class S>
Form<S> ce_d_impl(const LieAlgebra& g, const Form<S>& a) {
  const int n = g.dimension();
  if (a.dimension() != n) throw Error(ErrorCode::DimensionMismatch, "form dimension differs from algebra");
  if (a.degree() + 1 > n) return Form<S>(n, n);
  Form<S> out(n, a.degree() + 1);
  for (const auto& [m, c] : a.terms()) {
    int r = 0;
    for (int idx : mask_indices(m)) {
      Mask rest = m ^ bit(idx);
      bool odd = (r++ & 1) != 0;
      for (const auto& [dm, dc] : g.d_basis(idx).terms()) {
        int s = wedge_sign(dm, rest);
        if (s == 0) continue;
        S v = c * lift<S>(dc);
        if ((s < 0) != odd) v = -v;
        out.add(dm | rest, v);
      }
    }
  }
  return out;
}

}  // namespace

RForm ce_d(const LieAlgebra& g, const RForm& a) { return ce_d_impl(g, a); }
CForm ce_d(const LieAlgebra& g, const CForm& a) { return ce_d_impl(g, a); }

std::vector<RForm> form_basis(int dimension, int degree) {
  std::vector<RForm> out;
  std::vector<Mask> masks;
  // ascending masks of the given popcount
  if (degree == 0) {
    out.push_back(RForm::constant(dimension, 1));
    return out;
  }
  Mask m = (Mask{1} << degree) - 1;
  const Mask limit = dimension == 64 ? ~Mask{0} : (Mask{1} << dimension);
  while (m < limit || (dimension == 64 && m != 0)) {
    RForm f(dimension, degree);
    f.add(m, 1);
    out.push_back(std::move(f));
    // next mask with the same popcount (Gosper)
    Mask c = m & (~m + 1);
    Mask r = m + c;
    if (r == 0) break;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

std::vector<RForm> solve_twisted_closed(const LieAlgebra& g, const RForm& theta) {
  const int n = g.dimension();
  if (theta.dimension() != n) throw Error(ErrorCode::DimensionMismatch, "theta dimension");
  if (theta.degree() != 1) throw Error(ErrorCode::DegreeMismatch, "theta must be a 1-form");
  if (!is_nilpotent(g)) throw Error(ErrorCode::NotNilpotent, "algebra is not nilpotent");
  if (theta.is_zero()) throw Error(ErrorCode::ThetaZero, "theta must be nonzero");
  if (!ce_d(g, theta).is_zero()) throw Error(ErrorCode::ThetaNotClosed, "d theta != 0");
  auto inputs = form_basis(n, 1);
  std::vector<RForm> images;
  for (const auto& e : inputs) images.push_back(ce_d(g, e) - wedge(e, theta));
  return echelon_forms(kernel_of_map(inputs, images));
}

RMatrix restricted_ad(const LieAlgebra& g, const Vec<Rational>& x, const Subspace& h) {
  RMatrix adx = g.ad(x);
  const int k = h.dimension();
  RMatrix out(k, k);
  for (int c = 0; c < k; ++c) {
    Vec<Rational> img = adx * h.basis()[c];
    if (!h.contains(img)) throw Error(ErrorCode::InvalidArgument, "subspace is not invariant under ad_x");
    Vec<Rational> co = h.coordinates(img);
    for (int r = 0; r < k; ++r) out(r, c) = co[r];
  }
  return out;
}

}  // namespace tamed
