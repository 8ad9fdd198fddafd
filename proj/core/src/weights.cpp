#include "tamed/weights.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <random>
#include <sstream>

namespace tamed {

namespace {

using MatC = Eigen::MatrixXcd;
using cd = std::complex<double>;

double loose(double tol) { return std::max(tol * 1e3, 1e-12); }

MatC to_eigen(const RMatrix& m) {
  MatC out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = cd(m(r, c).get_d(), 0.0);
  return out;
}

CVec to_cvec(const Vec<Gaussian>& v) {
  CVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].to_complex();
  return out;
}

Gaussian round_gaussian(cd z) {
  return Gaussian(approximate_rational(z.real(), 1000000), approximate_rational(z.imag(), 1000000));
}

int pivot_of(const Vec<Gaussian>& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) return static_cast<int>(i);
  return -1;
}

// ---- exact regime -------------------------------------------------------

struct ExactPiece {
  std::vector<Vec<Gaussian>> basis;  // echelon in the ambient coordinates
  std::vector<Gaussian> alpha;
};

// Matrix of m restricted to the span of an echelon basis (nullopt if not invariant).
std::optional<CMatrix> restrict_exact(const CMatrix& m, const std::vector<Vec<Gaussian>>& basis) {
  const int k = static_cast<int>(basis.size());
  const int d = m.rows();
  std::vector<int> piv;
  for (const auto& b : basis) piv.push_back(pivot_of(b));
  CMatrix a(k, k);
  for (int c = 0; c < k; ++c) {
    Vec<Gaussian> img = m * basis[c];
    Vec<Gaussian> rest = img;
    for (int r = 0; r < k; ++r) {
      a(r, c) = img[piv[r]];
      if (is_zero(a(r, c))) continue;
      for (int t = 0; t < d; ++t) rest[t] -= a(r, c) * basis[r][t];
    }
    for (const auto& x : rest)
      if (!is_zero(x)) return std::nullopt;
  }
  return a;
}

Vec<Gaussian> combine(const std::vector<Vec<Gaussian>>& basis, const Vec<Gaussian>& coeffs, int d) {
  Vec<Gaussian> v(d, Gaussian());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    if (is_zero(coeffs[c])) continue;
    for (int t = 0; t < d; ++t) v[t] += coeffs[c] * basis[c][t];
  }
  return v;
}

// ---- exact eigenvalues ---------------------------------------------------

constexpr int kBits = 1024;

struct BigComplex {
  mpf_class re{0, kBits}, im{0, kBits};
};

BigComplex mul(const BigComplex& a, const BigComplex& b) {
  BigComplex r;
  r.re = a.re * b.re - a.im * b.im;
  r.im = a.re * b.im + a.im * b.re;
  return r;
}

BigComplex horner(const std::vector<mpf_class>& c, const BigComplex& z) {
  BigComplex acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = mul(acc, z);
    acc.re += *it;
  }
  return acc;
}

// simple root of p near z, to high precision
BigComplex newton(const Polynomial& p, cd z0) {
  auto lift = [](const Polynomial& q) {
    std::vector<mpf_class> out(q.coeffs().size(), mpf_class(0, kBits));
    for (std::size_t i = 0; i < out.size(); ++i) mpf_set_q(out[i].get_mpf_t(), q.coeffs()[i].get_mpq_t());
    return out;
  };
  const std::vector<mpf_class> c = lift(p), dc = lift(p.derivative());
  BigComplex z;
  z.re = z0.real();
  z.im = z0.imag();
  mpf_class eps(1, kBits);
  mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), kBits - 64);
  for (int it = 0; it < 200; ++it) {
    BigComplex f = horner(c, z), df = horner(dc, z);
    mpf_class n2 = df.re * df.re + df.im * df.im;
    if (n2 == 0) break;
    BigComplex step;
    step.re = (f.re * df.re + f.im * df.im) / n2;
    step.im = (f.im * df.re - f.re * df.im) / n2;
    z.re -= step.re;
    z.im -= step.im;
    if (abs(step.re) + abs(step.im) < eps * (1 + abs(z.re) + abs(z.im))) break;
  }
  return z;
}

// rational with a short continued fraction close to x
Rational recover(const mpf_class& x) {
  mpq_class q(x);
  mpz_class h_prev = 1, h, k_prev = 0, k = 1;
  mpz_class whole;
  mpz_fdiv_q(whole.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  h = whole;
  mpq_class frac = q - whole;
  const mpz_class huge = mpz_class(1) << 200;
  while (frac != 0) {
    mpq_class v = 1 / frac;
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    if (a > huge) break;
    frac = v - a;
    mpz_class hn = a * h + h_prev, kn = a * k + k_prev;
    h_prev = h;
    h = hn;
    k_prev = k;
    k = kn;
  }
  Rational r(h, k);
  r.canonicalize();
  return r;
}

// eigenvalues of a rational matrix that lie in Q(i)
std::vector<Gaussian> gaussian_eigenvalues(const RMatrix& s) {
  Polynomial p = squarefree_part(characteristic_polynomial(s));
  Eigen::ComplexEigenSolver<MatC> es(to_eigen(s), false);
  std::vector<Gaussian> out;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    cd z = es.eigenvalues()(i);
    std::vector<Gaussian> tries{round_gaussian(z)};
    BigComplex r = newton(p, z);
    tries.emplace_back(recover(r.re), recover(r.im));
    for (const auto& g : tries)
      if (is_zero(p.evaluate(g)) && std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  }
  return out;
}

std::optional<std::vector<ExactPiece>> exact_split(const std::vector<RMatrix>& rsemis, int d) {
  std::vector<CMatrix> semis;
  for (const auto& s : rsemis) semis.push_back(complexify(s));
  std::vector<ExactPiece> pieces(1);
  for (int i = 0; i < d; ++i) {
    Vec<Gaussian> e(d, Gaussian());
    e[i] = Gaussian(1);
    pieces[0].basis.push_back(std::move(e));
  }
  for (std::size_t j = 0; j < semis.size(); ++j) {
    const CMatrix& s = semis[j];
    const std::vector<Gaussian> cands = gaussian_eigenvalues(rsemis[j]);
    std::vector<ExactPiece> next;
    for (const auto& piece : pieces) {
      auto a = restrict_exact(s, piece.basis);
      if (!a) return std::nullopt;
      const int k = a->rows();
      int total = 0;
      for (const auto& lam : cands) {
        CMatrix shifted = *a;
        for (int i = 0; i < k; ++i) shifted(i, i) -= lam;
        auto ker = kernel(shifted);
        if (ker.empty()) continue;
        total += static_cast<int>(ker.size());
        ExactPiece p;
        p.alpha = piece.alpha;
        p.alpha.push_back(lam);
        std::vector<Vec<Gaussian>> vs;
        for (const auto& kv : ker) vs.push_back(combine(piece.basis, kv, d));
        p.basis = echelon_basis(vs, d);
        next.push_back(std::move(p));
      }
      if (total != k) return std::nullopt;
    }
    pieces = std::move(next);
  }
  return pieces;
}

// Basis of the piece adapted to the joint flag of the nilpotent parts, so that
// every action matrix is upper triangular in it.
std::vector<Vec<Gaussian>> flag_basis(const ExactPiece& p, const std::vector<CMatrix>& action, int d) {
  const int k = static_cast<int>(p.basis.size());
  std::vector<CMatrix> nil;
  for (std::size_t j = 0; j < action.size(); ++j) {
    CMatrix m = action[j];
    for (int i = 0; i < d; ++i) m(i, i) -= p.alpha[j];
    auto a = restrict_exact(m, p.basis);
    if (!a) throw Error(ErrorCode::NotNilpotentImage, "weight space is not invariant under the action");
    nil.push_back(std::move(*a));
  }
  std::vector<Vec<Gaussian>> chosen;  // in piece coordinates
  while (static_cast<int>(chosen.size()) < k) {
    CMatrix q = CMatrix::identity(k);
    if (!chosen.empty()) {
      auto ann = kernel(CMatrix::from_rows(chosen, k));
      q = CMatrix::from_rows(ann, k);
    }
    std::vector<Vec<Gaussian>> rows;
    for (const auto& a : nil) {
      CMatrix qa = q * a;
      for (int r = 0; r < qa.rows(); ++r) rows.push_back(qa.row(r));
    }
    std::vector<Vec<Gaussian>> level;
    if (rows.empty()) {
      for (int i = 0; i < k; ++i) {
        Vec<Gaussian> e(k, Gaussian());
        e[i] = Gaussian(1);
        level.push_back(std::move(e));
      }
    } else {
      level = kernel(CMatrix::from_rows(rows, k));
    }
    std::size_t before = chosen.size();
    for (auto& v : level) {
      auto trial = chosen;
      trial.push_back(v);
      if (echelon_basis(trial, k).size() == trial.size()) chosen.push_back(std::move(v));
    }
    if (chosen.size() == before) throw Error(ErrorCode::NotNilpotentImage, "action on a weight space is not triangularisable");
  }
  std::vector<Vec<Gaussian>> out;
  for (const auto& c : chosen) out.push_back(combine(p.basis, c, d));
  return out;
}

// ---- float regime -------------------------------------------------------

struct FloatPiece {
  MatC basis;  // d x k, orthonormal columns
  std::vector<cd> alpha;
};

std::vector<FloatPiece> float_split(const std::vector<MatC>& semis, int d, double tol) {
  std::vector<FloatPiece> pieces(1);
  pieces[0].basis = MatC::Identity(d, d);
  const double ctol = std::max(1e-6, loose(tol));
  for (const auto& s : semis) {
    std::vector<FloatPiece> next;
    for (const auto& piece : pieces) {
      const MatC& b = piece.basis;
      const int k = static_cast<int>(b.cols());
      MatC a = b.adjoint() * s * b;
      Eigen::ComplexEigenSolver<MatC> es(a, false);
      std::vector<cd> ev(es.eigenvalues().data(), es.eigenvalues().data() + k);
      std::sort(ev.begin(), ev.end(), [](cd x, cd y) { return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag(); });
      std::vector<std::vector<cd>> clusters;
      for (cd z : ev) {
        bool placed = false;
        for (auto& c : clusters)
          if (std::abs(c.front() - z) <= ctol * std::max(1.0, std::abs(z))) {
            c.push_back(z);
            placed = true;
            break;
          }
        if (!placed) clusters.push_back({z});
      }
      for (const auto& c : clusters) {
        cd mean(0, 0);
        for (cd z : c) mean += z;
        mean /= static_cast<double>(c.size());
        MatC shifted = a - mean * MatC::Identity(k, k);
        Eigen::JacobiSVD<MatC> svd(shifted, Eigen::ComputeFullV);
        const int m = static_cast<int>(c.size());
        MatC v = svd.matrixV().rightCols(m);
        FloatPiece p;
        p.basis = b * v;
        MatC restricted = p.basis.adjoint() * s * p.basis;
        p.alpha = piece.alpha;
        p.alpha.push_back(restricted.trace() / static_cast<double>(m));
        next.push_back(std::move(p));
      }
    }
    pieces = std::move(next);
  }
  return pieces;
}

CVec numeric_bracket(const LieAlgebra& g, const CVec& x, const CVec& y) {
  const int n = g.dimension();
  CVec out(n, cd(0, 0));
  for (int i = 0; i < n; ++i) {
    if (x[i] == cd(0, 0)) continue;
    for (int j = 0; j < n; ++j) {
      if (i == j || y[j] == cd(0, 0)) continue;
      const auto& c = g.structure(i, j);
      for (int k = 0; k < n; ++k)
        if (sgn(c[k]) != 0) out[k] += x[i] * y[j] * c[k].get_d();
    }
  }
  return out;
}

double norm(const CVec& v) {
  double s = 0;
  for (auto z : v) s += std::norm(z);
  return std::sqrt(s);
}

bool brackets_vanish(const WeightSpace& a, const WeightSpace& b, const LieAlgebra& g, const Subspace& space, bool exact, double tol) {
  if (exact) {
    for (const auto& x : a.basis)
      for (const auto& y : b.basis) {
        auto br = g.bracket(embed(space, x), embed(space, y));
        for (const auto& z : br)
          if (!is_zero(z)) return false;
      }
    return true;
  }
  for (const auto& x : a.numeric_basis)
    for (const auto& y : b.numeric_basis) {
      auto ex = embed(space, x);
      auto ey = embed(space, y);
      if (norm(numeric_bracket(g, ex, ey)) > loose(tol) * std::max(1.0, norm(ex) * norm(ey))) return false;
    }
  return true;
}

Rational re_norm2(const Character& c) {
  Rational s = 0;
  for (const auto& z : c.exact) s += z.re * z.re;
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

JordanPair jordan_chevalley(const RMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "Jordan decomposition of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return {m, m};
  Polynomial q = squarefree_part(characteristic_polynomial(m));
  Polynomial dq = q.derivative();
  RMatrix s = m;
  // Newton iteration on q(S) = 0; converges in about log2(n) steps
  for (int iter = 0; iter < 64; ++iter) {
    RMatrix qs = q.evaluate(s);
    if (qs.is_zero()) break;
    auto inv = inverse(dq.evaluate(s));
    if (!inv) throw Error(ErrorCode::InvalidArgument, "Jordan iteration hit a singular derivative");
    s -= (*inv) * qs;
  }
  return {s, m - s};
}

bool Character::is_trivial(double tol) const {
  if (is_exact) {
    for (const auto& z : exact)
      if (!is_zero(z)) return false;
    return true;
  }
  for (auto z : values)
    if (std::abs(z) > loose(tol)) return false;
  return true;
}

bool Character::has_nonzero_real_part(double tol) const {
  if (is_exact) {
    for (const auto& z : exact)
      if (sgn(z.re) != 0) return true;
    return false;
  }
  for (auto z : values)
    if (std::abs(z.real()) > loose(tol) * std::max(1.0, std::abs(z))) return true;
  return false;
}

Character Character::conj() const {
  Character c = *this;
  for (auto& z : c.values) z = std::conj(z);
  for (auto& z : c.exact) z = z.conj();
  return c;
}

Character Character::real_doubled() const {
  Character c = *this;
  for (auto& z : c.values) z = cd(2 * z.real(), 0);
  for (auto& z : c.exact) z = Gaussian(Rational(2 * z.re));
  return c;
}

Character Character::doubled() const {
  Character c = *this;
  for (auto& z : c.values) z *= 2.0;
  for (auto& z : c.exact) z = z * Gaussian(2);
  return c;
}

bool Character::same_as(const Character& o, double tol) const {
  if (is_exact && o.is_exact) return exact == o.exact;
  if (values.size() != o.values.size()) return false;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (std::abs(values[i] - o.values[i]) > std::max(1e-6, loose(tol)) * std::max(1.0, std::abs(values[i]))) return false;
  return true;
}

std::string to_string(const Character& c) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    if (i) os << ", ";
    if (c.is_exact)
      os << to_string(c.exact[i]);
    else
      os << c.values[i].real() << (c.values[i].imag() < 0 ? "" : "+") << c.values[i].imag() << "i";
  }
  os << ")";
  return os.str();
}

const WeightSpace* WeightDecomposition::find(const Character& a) const {
  for (const auto& w : spaces)
    if (w.alpha.same_as(a, tolerance)) return &w;
  return nullptr;
}

WeightDecomposition weight_decomposition(const std::vector<RMatrix>& action, const WeightOptions& opt) {
  WeightDecomposition out;
  out.tolerance = opt.tolerance;
  if (action.empty()) throw Error(ErrorCode::InvalidArgument, "weight decomposition needs at least one action matrix");
  const int d = action.front().rows();
  out.ambient_dimension = d;
  for (const auto& a : action)
    if (a.rows() != d || a.cols() != d) throw Error(ErrorCode::DimensionMismatch, "action matrices differ in shape");
  if (d == 0) return out;

  std::vector<RMatrix> semis;
  for (const auto& a : action) semis.push_back(jordan_chevalley(a).s);
  for (const auto& s : semis)
    for (const auto& a : action)
      if (!commutator(s, a).is_zero())
        throw Error(ErrorCode::NotNilpotentImage, "semisimple parts do not commute with the action");

  std::vector<CMatrix> caction;
  for (const auto& a : action) caction.push_back(complexify(a));

  if (auto pieces = exact_split(semis, d)) {
    out.exact = true;
    for (const auto& p : *pieces) {
      WeightSpace w;
      w.alpha.is_exact = true;
      w.alpha.exact = p.alpha;
      for (const auto& z : p.alpha) w.alpha.values.push_back(z.to_complex());
      w.basis = flag_basis(p, caction, d);
      for (const auto& b : w.basis) w.numeric_basis.push_back(to_cvec(b));
      out.spaces.push_back(std::move(w));
    }
  } else {
    out.exact = false;
    std::vector<MatC> fs;
    for (const auto& s : semis) fs.push_back(to_eigen(s));
    for (const auto& p : float_split(fs, d, opt.tolerance)) {
      WeightSpace w;
      w.alpha.values = p.alpha;
      for (int c = 0; c < p.basis.cols(); ++c) {
        CVec v(d);
        for (int r = 0; r < d; ++r) v[r] = p.basis(r, c);
        w.numeric_basis.push_back(std::move(v));
      }
      out.spaces.push_back(std::move(w));
    }
  }
  std::sort(out.spaces.begin(), out.spaces.end(), [](const WeightSpace& a, const WeightSpace& b) {
    const auto& x = a.alpha.values;
    const auto& y = b.alpha.values;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].real() != y[i].real()) return x[i].real() < y[i].real();
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].imag() != y[i].imag()) return x[i].imag() < y[i].imag();
    return false;
  });
  return out;
}

std::vector<RMatrix> restricted_action(const LieAlgebra& g, const Subspace& domain, const Subspace& space) {
  std::vector<RMatrix> out;
  for (const auto& x : domain.basis()) out.push_back(restricted_ad(g, x, space));
  return out;
}

Vec<Gaussian> embed(const Subspace& space, const Vec<Gaussian>& coords) {
  Vec<Gaussian> v(space.ambient_dimension(), Gaussian());
  for (std::size_t r = 0; r < coords.size(); ++r) {
    if (is_zero(coords[r])) continue;
    for (int t = 0; t < space.ambient_dimension(); ++t)
      if (sgn(space.basis()[r][t]) != 0) v[t] += coords[r] * Gaussian(space.basis()[r][t]);
  }
  return v;
}

CVec embed(const Subspace& space, const CVec& coords) {
  CVec v(space.ambient_dimension(), cd(0, 0));
  for (std::size_t r = 0; r < coords.size(); ++r)
    for (int t = 0; t < space.ambient_dimension(); ++t) v[t] += coords[r] * space.basis()[r][t].get_d();
  return v;
}

bool is_nilpotent_subalgebra(const LieAlgebra& g, const Subspace& s) {
  if (!s.is_subalgebra()) return false;
  Subspace cur = s;
  while (cur.dimension() > 0) {
    Subspace next = bracket_span(g, s, cur);
    if (next.dimension() == cur.dimension()) return false;
    cur = next;
  }
  return true;
}

Subspace cartan_subalgebra(const LieAlgebra& g, std::uint64_t seed) {
  const int n = g.dimension();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-20, 20);
  std::optional<Subspace> best;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Vec<Rational> y(n);
    for (auto& c : y) c = coef(rng);
    RMatrix ady = g.ad(y);
    RMatrix p = ady;
    for (int k = 1; k < n; ++k) p = p * ady;
    Subspace f(g, kernel(p));
    if (!is_nilpotent_subalgebra(g, f)) continue;
    if (!best || f.dimension() < best->dimension()) best = f;
  }
  if (!best) throw Error(ErrorCode::InvalidArgument, "no regular element found");
  return *best;
}

Subspace nilpotent_complement(const LieAlgebra& g, const std::optional<Subspace>& declared, std::uint64_t seed) {
  Subspace n = nilradical(g, seed);
  if (declared) {
    if (!is_nilpotent_subalgebra(g, *declared)) throw Error(ErrorCode::NotAComplement, "declared complement is not a nilpotent subalgebra");
    if (sum(g, *declared, n).dimension() != g.dimension()) throw Error(ErrorCode::NotAComplement, "complement + nilradical != g");
    return *declared;
  }
  Subspace c = cartan_subalgebra(g, seed);
  if (sum(g, c, n).dimension() != g.dimension()) throw Error(ErrorCode::NotAComplement, "Cartan subalgebra does not complement the nilradical");
  return c;
}

bool is_type_I_rep(const std::vector<RMatrix>& action, const WeightOptions& opt) {
  auto wd = weight_decomposition(action, opt);
  for (const auto& w : wd.spaces)
    if (w.alpha.has_nonzero_real_part(opt.tolerance)) return false;
  return true;
}

bool is_type_I(const LieAlgebra& g, const WeightOptions& opt) {
  if (is_solvable(g)) {
    Subspace c = cartan_subalgebra(g, opt.seed);
    return is_type_I_rep(restricted_action(g, c, whole(g)), opt);
  }
  // outside the solvable setting: sample ad on basis elements and random combinations
  const int n = g.dimension();
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  for (int t = 0; t < n + 8; ++t) {
    Vec<Rational> x(n);
    if (t < n)
      x = unit_vector(n, t);
    else
      for (auto& c : x) c = coef(rng);
    Eigen::ComplexEigenSolver<MatC> es(to_eigen(g.ad(x)), false);
    for (int i = 0; i < n; ++i) {
      cd z = es.eigenvalues()(i);
      if (std::abs(z.real()) > loose(opt.tolerance) * std::max(1.0, std::abs(z))) return false;
    }
  }
  return true;
}

bool satisfies_obstruction_conditions(const WeightDecomposition& decomp, const LieAlgebra& g, const Subspace& space, const Character& alpha) {
  if (!alpha.has_nonzero_real_part(decomp.tolerance)) return false;
  const WeightSpace* va = decomp.find(alpha);
  if (!va || va->dimension() == 0) return false;
  const WeightSpace* vb = decomp.find(alpha.conj());
  if (!vb) return true;  // V_conj(alpha) = 0, bracket vacuous
  return brackets_vanish(*va, *vb, g, space, decomp.exact, decomp.tolerance);
}

ObstructionCharacter find_obstruction_character(const WeightDecomposition& decomp, const LieAlgebra& g, const Subspace& space) {
  std::vector<const WeightSpace*> cands;
  for (const auto& w : decomp.spaces)
    if (w.alpha.has_nonzero_real_part(decomp.tolerance)) cands.push_back(&w);
  if (cands.empty()) throw Error(ErrorCode::TypeIInput, "every character has zero real part");

  // start from the smallest real part; ties prefer larger |Im|, then Im > 0
  auto key_less = [&](const WeightSpace* a, const WeightSpace* b) {
    const auto& x = a->alpha;
    const auto& y = b->alpha;
    if (decomp.exact) {
      Rational rx = re_norm2(x), ry = re_norm2(y);
      if (rx != ry) return rx < ry;
      Rational ix = 0, iy = 0;
      for (const auto& z : x.exact) ix += z.im * z.im;
      for (const auto& z : y.exact) iy += z.im * z.im;
      if (ix != iy) return ix > iy;
      for (std::size_t i = 0; i < x.exact.size(); ++i)
        if (x.exact[i].im != y.exact[i].im) return x.exact[i].im > y.exact[i].im;
      return false;
    }
    double rx = 0, ry = 0, ix = 0, iy = 0;
    for (auto z : x.values) rx += z.real() * z.real(), ix += z.imag() * z.imag();
    for (auto z : y.values) ry += z.real() * z.real(), iy += z.imag() * z.imag();
    if (std::abs(rx - ry) > 1e-9 * std::max(1.0, rx)) return rx < ry;
    if (std::abs(ix - iy) > 1e-9 * std::max(1.0, ix)) return ix > iy;
    for (std::size_t i = 0; i < x.values.size(); ++i)
      if (x.values[i].imag() != y.values[i].imag()) return x.values[i].imag() > y.values[i].imag();
    return false;
  };
  const WeightSpace* cur = *std::min_element(cands.begin(), cands.end(), key_less);

  ObstructionCharacter out;
  for (std::size_t step = 0; step <= decomp.spaces.size(); ++step) {
    out.trail.push_back(cur->alpha);
    const WeightSpace* bar = decomp.find(cur->alpha.conj());
    if (!bar || brackets_vanish(*cur, *bar, g, space, decomp.exact, decomp.tolerance)) {
      out.alpha = cur->alpha;
      out.iterations = static_cast<int>(step);
      return out;
    }
    // [V_a, V_abar] lies in V_{a + abar}; it is nonzero, so that weight occurs
    Character next = cur->alpha.real_doubled();
    const WeightSpace* w = decomp.find(next);
    if (!w) throw Error(ErrorCode::InvalidArgument, "doubled character " + to_string(next) + " missing from the decomposition");
    cur = w;
  }
  throw Error(ErrorCode::InvalidArgument, "character iteration did not terminate");
}

}  // namespace tamed
