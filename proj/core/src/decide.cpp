#include "tamed/decide.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace tamed {

namespace {

using MatD = Eigen::MatrixXd;
using VecD = Eigen::VectorXd;

MatD to_double(const RMatrix& m) {
  MatD out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_d();
  return out;
}

bool all_zero(const Vec<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

std::vector<Vec<Rational>> rationalise(const VecD& v, long max_den) {
  std::vector<Vec<Rational>> out;
  double scale = v.cwiseAbs().maxCoeff();
  if (scale <= 0) return out;
  for (long den : {4L, 16L, 100L, 1000L, max_den}) {
    if (den > max_den) continue;
    Vec<Rational> r(v.size());
    for (int i = 0; i < v.size(); ++i) r[i] = approximate_rational(v(i) / scale, den);
    if (!all_zero(r) && std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  return out;
}

struct Search {
  const LieAlgebra& g;
  const RMatrix& j;
  const FormSpace& space;
  const DecideOptions& opt;
  std::vector<RMatrix> grams;

  std::optional<std::vector<Rational>> isotropic(const Vec<Rational>& x) const {
    if (all_zero(x)) return std::nullopt;
    std::vector<Rational> ev;
    for (const auto& s : grams) {
      Rational q = quadratic(s, x);
      if (sgn(q) != 0) return std::nullopt;
      ev.push_back(q);
    }
    return ev;
  }

  bool try_direction(const Vec<Rational>& x, const std::string& route, Verdict& v) const {
    auto ev = isotropic(x);
    if (!ev) return false;
    v.kind = VerdictKind::NotExists;
    v.direction = x;
    v.evaluations = std::move(*ev);
    v.route = route;
    return true;
  }

  bool rank_one(Verdict& v) const {
    const int n = g.dimension();
    // common radical of all the symmetric forms
    {
      std::vector<Vec<Rational>> rows;
      for (const auto& s : grams)
        for (int r = 0; r < n; ++r) rows.push_back(s.row(r));
      auto ker = rows.empty() ? std::vector<Vec<Rational>>{unit_vector(n, 0)} : kernel(RMatrix::from_rows(rows, n));
      for (const auto& x : ker)
        if (try_direction(x, "common-radical", v)) return true;
    }
    std::vector<std::pair<std::string, std::vector<Vec<Rational>>>> groups;
    {
      std::vector<Vec<Rational>> coords;
      for (int i = 0; i < n; ++i) coords.push_back(unit_vector(n, i));
      groups.emplace_back("coordinate", std::move(coords));
    }
    groups.emplace_back("center", center(g).basis());
    auto series = derived_and_central_series(g);
    for (auto it = series.lower_central.rbegin(); it != series.lower_central.rend(); ++it)
      if (it->dimension() > 0) {
        groups.emplace_back("lower-central", it->basis());
        break;
      }
    if (series.derived.size() > 1) groups.emplace_back("derived", series.derived[1].basis());
    if (is_solvable(g)) {
      try {
        groups.emplace_back("nilradical", nilradical(g, opt.seed).basis());
        Subspace c = nilpotent_complement(g, std::nullopt, opt.seed);
        if (c.dimension() > 0) {
          WeightOptions wo{opt.tolerance, opt.seed};
          auto wd = weight_decomposition(restricted_action(g, c, whole(g)), wo);
          if (wd.exact) {
            std::vector<Vec<Rational>> vs;
            for (const auto& w : wd.spaces) {
              if (!w.alpha.has_nonzero_real_part(opt.tolerance)) continue;
              for (const auto& b : w.basis) {
                Vec<Rational> re(n), im(n);
                for (int i = 0; i < n; ++i) {
                  re[i] = b[i].re;
                  im[i] = b[i].im;
                }
                vs.push_back(std::move(re));
                vs.push_back(std::move(im));
              }
            }
            groups.emplace_back("weight-space", std::move(vs));
          }
        }
      } catch (const Error&) {
        // no weight candidates for this algebra
      }
    }
    for (const auto& [name, vs] : groups)
      for (const auto& x : vs)
        if (try_direction(x, name, v)) return true;
    return false;
  }

  std::optional<std::vector<Rational>> round_feasible(const VecD& c) const {
    double scale = c.cwiseAbs().maxCoeff();
    if (scale <= 0) return std::nullopt;
    for (long den : {1L, 4L, 16L, 100L, 1000L, opt.max_denominator}) {
      if (den > opt.max_denominator) continue;
      std::vector<Rational> q(c.size());
      for (int i = 0; i < c.size(); ++i) q[i] = approximate_rational(c(i) / scale, den);
      if (is_positive_definite(taming_gram(space, j, q))) return q;
    }
    return std::nullopt;
  }

  // Subgradient ascent on the smallest eigenvalue over the unit-trace slice.
  bool ascent(Verdict& v, VecD& best_c, double& best_f) const {
    const int b = static_cast<int>(grams.size());
    const int n = g.dimension();
    std::vector<MatD> s;
    VecD t(b);
    for (int k = 0; k < b; ++k) {
      s.push_back(to_double(grams[k]));
      t(k) = s.back().trace();
    }
    const double tn = t.norm();
    VecD c0 = t / (tn * tn);
    MatD z;
    if (b > 1) {
      Eigen::HouseholderQR<MatD> qr(t);
      MatD q = qr.householderQ() * MatD::Identity(b, b);
      z = q.rightCols(b - 1);
    } else {
      z = MatD::Zero(1, 0);
    }
    std::mt19937_64 rng(opt.seed);
    std::normal_distribution<double> normal(0.0, 1.0 / tn);
    best_f = -std::numeric_limits<double>::infinity();
    best_c = c0;
    auto eval = [&](const VecD& c, VecD& grad, VecD& vec) {
      MatD m = MatD::Zero(n, n);
      for (int k = 0; k < b; ++k) m += c(k) * s[k];
      Eigen::SelfAdjointEigenSolver<MatD> es(m);
      vec = es.eigenvectors().col(0);
      grad.resize(b);
      for (int k = 0; k < b; ++k) grad(k) = vec.dot(s[k] * vec);
      return es.eigenvalues()(0);
    };
    for (int r = 0; r < opt.restarts; ++r) {
      VecD y = VecD::Zero(z.cols());
      if (r > 0)
        for (int i = 0; i < y.size(); ++i) y(i) = normal(rng);
      double local_best = -std::numeric_limits<double>::infinity();
      VecD local_c = c0;
      for (int it = 0; it < opt.iterations; ++it) {
        VecD c = c0 + z * y;
        VecD grad, vec;
        double f = eval(c, grad, vec);
        if (f > local_best) {
          local_best = f;
          local_c = c;
        }
        if (z.cols() == 0) break;
        VecD gy = z.transpose() * grad;
        double gn = gy.norm();
        if (gn < 1e-14) break;
        y += (2.0 / tn) / std::sqrt(it + 1.0) * gy / gn;
      }
      if (local_best > best_f) {
        best_f = local_best;
        best_c = local_c;
      }
      if (local_best > 0) {
        if (auto q = round_feasible(local_c)) {
          RForm w(n, 2);
          for (int k = 0; k < b; ++k) w += space.basis[k] * (*q)[k];
          v.kind = VerdictKind::Exists;
          v.witness = w;
          v.minors = leading_principal_minors(taming_gram(w, j));
          v.route = "ascent";
          v.best_min_eigenvalue = local_best;
          return true;
        }
      }
    }
    v.best_min_eigenvalue = best_f;
    return false;
  }

  bool near_null(const VecD& c, Verdict& v) const {
    const int n = g.dimension();
    MatD m = MatD::Zero(n, n);
    for (std::size_t k = 0; k < grams.size(); ++k) m += c(static_cast<int>(k)) * to_double(grams[k]);
    Eigen::SelfAdjointEigenSolver<MatD> es(m);
    for (int col = 0; col < std::min(n, 4); ++col)
      for (const auto& x : rationalise(es.eigenvectors().col(col), opt.max_denominator))
        if (try_direction(x, "rounded-null-vector", v)) return true;
    // diagnostics: residuals of the rank-one dual candidate
    VecD x = es.eigenvectors().col(0);
    double worst = 0;
    for (const auto& s : grams) worst = std::max(worst, std::abs(x.dot(to_double(s) * x)));
    std::ostringstream os;
    os << "best min eigenvalue on unit-trace slice " << v.best_min_eigenvalue << "; rank-one dual residual " << worst;
    v.diagnostics.push_back(os.str());
    return false;
  }
};

}  // namespace

const char* condition_name(SpaceCondition c) { return c == SpaceCondition::Closed ? "closed" : "ddc_closed_11"; }

const char* verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Exists: return "Exists";
    case VerdictKind::NotExists: return "NotExists";
    case VerdictKind::Unknown: return "Unknown";
  }
  return "Unknown";
}

FormSpace closed_two_forms(const LieAlgebra& g) {
  FormSpace out;
  out.ambient = g.dimension();
  out.condition = SpaceCondition::Closed;
  if (g.dimension() < 2) return out;
  auto inputs = form_basis(g.dimension(), 2);
  std::vector<RForm> images;
  for (const auto& f : inputs) images.push_back(ce_d(g, f));
  out.basis = echelon_forms(kernel_of_map(inputs, images));
  out.dimension = static_cast<int>(out.basis.size());
  return out;
}

FormSpace ddc_closed_11_forms(const LieAlgebra& g, const ComplexStructure& j) {
  if (!j.is_integrable()) throw Error(ErrorCode::NotIntegrable, "dd^c-closed forms need an integrable J");
  FormSpace out;
  out.ambient = g.dimension();
  out.condition = SpaceCondition::DdcClosed11;
  std::vector<RForm> parts;
  for (const auto& f : form_basis(g.dimension(), 2)) {
    RForm p = real_11_part(j.matrix(), f);
    if (!p.is_zero()) parts.push_back(std::move(p));
  }
  auto inputs = echelon_forms(parts);
  std::vector<RForm> images;
  for (const auto& f : inputs) images.push_back(ddc(g, j.matrix(), f));
  if (inputs.empty()) return out;
  out.basis = echelon_forms(kernel_of_map(inputs, images));
  out.dimension = static_cast<int>(out.basis.size());
  return out;
}

RMatrix form_matrix(const RForm& omega) {
  if (omega.degree() != 2) throw Error(ErrorCode::DegreeMismatch, "form matrix needs a 2-form");
  const int n = omega.dimension();
  RMatrix w(n, n);
  for (const auto& [m, c] : omega.terms()) {
    auto idx = mask_indices(m);
    w(idx[0], idx[1]) = c;
    w(idx[1], idx[0]) = -c;
  }
  return w;
}

RForm form_from_matrix(const RMatrix& w) {
  const int n = w.rows();
  RForm out(n, 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) out.add(bit(a) | bit(b), w(a, b));
  return out;
}

RMatrix taming_gram(const RForm& omega, const RMatrix& j) {
  RMatrix w = form_matrix(omega);
  RMatrix s = w * j - j.transpose() * w;
  s *= Rational(1, 2);
  return s;
}

RMatrix taming_gram(const FormSpace& space, const RMatrix& j, const std::vector<Rational>& coeffs) {
  if (coeffs.size() != space.basis.size()) throw Error(ErrorCode::DimensionMismatch, "coefficient count differs from space dimension");
  RForm w(space.ambient, 2);
  for (std::size_t k = 0; k < coeffs.size(); ++k) w += space.basis[k] * coeffs[k];
  return taming_gram(w, j);
}

Rational quadratic(const RMatrix& s, const Vec<Rational>& x) {
  Vec<Rational> sx = s * x;
  Rational q = 0;
  for (std::size_t i = 0; i < x.size(); ++i) q += x[i] * sx[i];
  return q;
}

Verdict decide_over(const LieAlgebra& g, const ComplexStructure& j, const FormSpace& space, const DecideOptions& opt) {
  Verdict v;
  v.condition = space.condition;
  v.space_dimension = static_cast<int>(space.basis.size());
  v.integrable = j.is_integrable();
  if (!v.integrable) v.diagnostics.push_back("J is not integrable");
  const int n = g.dimension();
  if (space.basis.empty()) {
    v.kind = VerdictKind::NotExists;
    v.direction = unit_vector(n, 0);
    v.route = "empty-space";
    return v;
  }
  Search search{g, j.matrix(), space, opt, {}};
  for (const auto& f : space.basis) search.grams.push_back(taming_gram(f, j.matrix()));

  bool trace_vanishes = true;
  for (const auto& s : search.grams) {
    Rational tr = 0;
    for (int i = 0; i < n; ++i) tr += s(i, i);
    if (sgn(tr) != 0) trace_vanishes = false;
  }
  if (search.rank_one(v)) return v;
  if (trace_vanishes) {
    v.kind = VerdictKind::NotExists;
    v.dual_witness = RMatrix::identity(n);
    v.route = "trace-dual";
    return v;
  }
  Eigen::VectorXd best_c;
  double best_f = 0;
  if (search.ascent(v, best_c, best_f)) return v;
  if (search.near_null(best_c, v)) return v;
  v.kind = VerdictKind::Unknown;
  v.route = "exhausted";
  return v;
}

Verdict decide_taming(const LieAlgebra& g, const ComplexStructure& j, const DecideOptions& opt) {
  return decide_over(g, j, closed_two_forms(g), opt);
}

Verdict decide_skt(const LieAlgebra& g, const ComplexStructure& j, const DecideOptions& opt) {
  return decide_over(g, j, ddc_closed_11_forms(g, j), opt);
}

std::string verify_verdict(const LieAlgebra& g, const RMatrix& j, const FormSpace& space, const Verdict& v) {
  const int n = g.dimension();
  switch (v.kind) {
    case VerdictKind::Exists: {
      if (!v.witness) return "missing witness";
      const RForm& w = *v.witness;
      if (w.dimension() != n || w.degree() != 2) return "witness has the wrong shape";
      if (space.condition == SpaceCondition::Closed) {
        if (!ce_d(g, w).is_zero()) return "witness is not closed";
      } else {
        if (real_11_part(j, w) != w) return "witness is not of type (1,1)";
        if (!ddc(g, j, w).is_zero()) return "witness is not dd^c-closed";
      }
      auto minors = leading_principal_minors(taming_gram(w, j));
      if (static_cast<int>(minors.size()) != n) return "witness is not positive";
      for (const auto& m : minors)
        if (sgn(m) <= 0) return "witness is not positive";
      if (!v.minors.empty() && v.minors != minors) return "recorded minors differ";
      return "";
    }
    case VerdictKind::NotExists: {
      if (v.dual_witness) {
        const RMatrix& y = *v.dual_witness;
        if (y.rows() != n || y.cols() != n || y != y.transpose()) return "dual witness is not symmetric";
        if (!is_positive_definite(y)) return "dual witness is not positive";
        for (const auto& f : space.basis) {
          RMatrix s = taming_gram(f, j);
          Rational pairing = 0;
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) pairing += y(a, b) * s(a, b);
          if (sgn(pairing) != 0) return "dual witness pairs nontrivially with the space";
        }
        return "";
      }
      if (!v.direction) return "missing direction";
      const auto& x = *v.direction;
      if (static_cast<int>(x.size()) != n || all_zero(x)) return "direction is zero";
      for (const auto& f : space.basis) {
        Vec<Rational> jx = j * x;
        Rational val = 0;
        RMatrix w = form_matrix(f);
        Vec<Rational> wjx = w * jx;
        for (int i = 0; i < n; ++i) val += x[i] * wjx[i];
        if (sgn(val) != 0) return "omega(X, JX) != 0 for a basis form";
      }
      return "";
    }
    case VerdictKind::Unknown: return "";
  }
  return "";
}

// ---------------------------------------------------------------------------

bool is_nilpotent_matrix_algebra(const std::vector<RMatrix>& mats) {
  if (mats.empty()) return true;
  const int d = mats.front().rows();
  auto flatten = [d](const RMatrix& m) {
    Vec<Rational> v;
    v.reserve(static_cast<std::size_t>(d) * d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) v.push_back(m(r, c));
    return v;
  };
  auto unflatten = [d](const Vec<Rational>& v) {
    RMatrix m(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) m(r, c) = v[static_cast<std::size_t>(r) * d + c];
    return m;
  };
  std::vector<Vec<Rational>> base;
  for (const auto& m : mats) base.push_back(flatten(m));
  base = echelon_basis(base, d * d);
  std::vector<Vec<Rational>> cur = base;
  for (std::size_t step = 0; step <= base.size() + 1; ++step) {
    if (cur.empty()) return true;
    std::vector<Vec<Rational>> next;
    for (const auto& a : base)
      for (const auto& b : cur) {
        RMatrix br = commutator(unflatten(a), unflatten(b));
        if (!br.is_zero()) next.push_back(flatten(br));
      }
    next = echelon_basis(next, d * d);
    if (next.size() >= cur.size() && !next.empty()) return false;
    cur = std::move(next);
  }
  return cur.empty();
}

Thm11Report check_thm11_hypotheses(const LieAlgebra& g, const Subspace& s, const Subspace& h, const RMatrix& j) {
  if (sum(g, s, h).dimension() != g.dimension()) throw Error(ErrorCode::SpanFailure, "s + h does not span g");
  Thm11Report r;
  r.direct_sum = s.dimension() + h.dimension() == g.dimension();
  r.h_ideal = h.is_ideal();
  r.s_subalgebra = s.is_subalgebra();
  if (r.s_subalgebra) {
    Subspace cur = s;
    for (int step = 0; step <= s.dimension() && cur.dimension() > 0; ++step) cur = bracket_span(g, cur, cur);
    r.s_solvable = cur.dimension() == 0;
    r.s_nilpotent = is_nilpotent_subalgebra(g, s);
  }
  if (r.h_ideal) {
    auto action = restricted_action(g, s, h);
    r.image_nilpotent = is_nilpotent_matrix_algebra(action);
    try {
      r.not_type_I = !is_type_I_rep(action);
    } catch (const Error&) {
      r.not_type_I = false;
    }
  }
  r.j_preserves_h = true;
  for (const auto& b : h.basis())
    if (!h.contains(j * b)) r.j_preserves_h = false;
  r.j_preserves_s = true;
  for (const auto& b : s.basis())
    if (!s.contains(j * b)) r.j_preserves_s = false;
  r.j_commutes = r.j_preserves_h;
  for (const auto& x : s.basis())
    for (const auto& b : h.basis())
      if (r.j_commutes && g.bracket(x, j * b) != j * g.bracket(x, b)) r.j_commutes = false;
  return r;
}

bool check_prop51_hypothesis(const LieAlgebra& g, const Subspace& c, const RMatrix& j) {
  nilpotent_complement(g, c);
  for (const auto& x : c.basis()) {
    RMatrix adx = g.ad(x);
    if (adx * j != j * adx) return false;
  }
  return true;
}

AlmostAbelianReport almost_abelian_report(const LieAlgebra& g, const RMatrix& j, const std::optional<RForm>& omega) {
  const int n = g.dimension();
  auto ideal = abelian_ideal_of_codimension_one(g);
  if (!ideal) throw Error(ErrorCode::NotAlmostAbelian, "no abelian ideal of codimension one");
  const Subspace& nil = *ideal;
  AlmostAbelianReport r;
  RMatrix metric = RMatrix::identity(n);
  if (omega) {
    RMatrix s = taming_gram(*omega, j);
    if (is_positive_definite(s)) {
      metric = s;
      r.standard_metric = false;
    }
  }
  auto orth = [&](const std::vector<Vec<Rational>>& vs) {
    std::vector<Vec<Rational>> rows;
    for (const auto& v : vs) rows.push_back(metric * v);
    return kernel(RMatrix::from_rows(rows, n));
  };
  r.x = orth(nil.basis()).front();
  Vec<Rational> jx = j * r.x;
  r.jx_in_nilradical = nil.contains(jx);
  r.y = g.bracket(r.x, jx);
  r.x_jx_commute = all_zero(r.y);
  Subspace h(g, orth({r.x, jx}));
  r.h_invariant = true;
  for (const auto& b : h.basis())
    if (!h.contains(g.bracket(r.x, b))) r.h_invariant = false;
  if (!r.x_jx_commute) {
    r.z = g.bracket(r.x, r.y);
    Vec<Rational> jy = j * r.y;
    std::vector<Vec<Rational>> frame{r.x, jx, r.y, jy, r.z, j * r.z};
    r.frame_complete = static_cast<int>(echelon_basis(frame, n).size()) == 6 && g.bracket(r.x, jy) == j * r.z;
  }
  return r;
}

AbelianObstructionReport abelian_obstruction_checks(const LieAlgebra& g, const RMatrix& j, const RForm& omega) {
  if (!is_abelian_J(g, j)) throw Error(ErrorCode::JNotAbelian, "J is not abelian");
  const int n = g.dimension();
  AbelianObstructionReport r;
  auto series = derived_and_central_series(g);
  Subspace g1 = series.derived.size() > 1 ? series.derived[1] : Subspace(g, {});
  std::vector<Vec<Rational>> jg1;
  for (const auto& b : g1.basis()) jg1.push_back(j * b);
  Subspace v = sum(g, g1, Subspace(g, jg1));
  RMatrix w = form_matrix(omega);
  auto om = [&](const Vec<Rational>& a, const Vec<Rational>& b) {
    Vec<Rational> wb = w * b;
    Rational s = 0;
    for (int i = 0; i < n; ++i) s += a[i] * wb[i];
    return s;
  };
  if (v.dimension() == n) {
    r.case_a = true;
    r.product_commutative = true;
    r.product_associative = true;
    auto prod = [&](const Vec<Rational>& a, const Vec<Rational>& b) { return g.bracket(j * a, b); };
    const auto& a = g1.basis();
    for (const auto& x : a)
      for (const auto& y : a) {
        if (prod(x, y) != prod(y, x)) r.product_commutative = false;
        for (const auto& z : a)
          if (prod(prod(x, y), z) != prod(x, prod(y, z))) r.product_associative = false;
      }
    return r;
  }
  // J-invariant complement h of v
  std::vector<Vec<Rational>> acc = v.basis();
  std::vector<Vec<Rational>> hb;
  for (int i = 0; i < n && static_cast<int>(acc.size()) < n; ++i) {
    Vec<Rational> e = unit_vector(n, i);
    auto trial = acc;
    trial.push_back(e);
    if (echelon_basis(trial, n).size() == acc.size()) continue;
    acc.push_back(e);
    acc.push_back(j * e);
    hb.push_back(e);
    hb.push_back(j * e);
  }
  r.b_symmetric = r.b_prime_symmetric = r.j_twist_identity = r.vanishing_identity = true;
  const auto& vb = v.basis();
  for (const auto& x : hb) {
    Vec<Rational> jx = j * x;
    for (const auto& y : vb) {
      if (sgn(om(g.bracket(x, y), g.bracket(jx, y))) != 0) r.vanishing_identity = false;
      for (const auto& z : vb) {
        if (om(g.bracket(x, y), z) != om(g.bracket(x, z), y)) r.b_symmetric = false;
        if (om(g.bracket(jx, y), z) != om(g.bracket(jx, z), y)) r.b_prime_symmetric = false;
        if (om(g.bracket(x, j * y), j * z) != -om(g.bracket(x, y), z)) r.j_twist_identity = false;
      }
    }
    // the quadratic identity on sums of basis pairs too
    for (std::size_t a = 0; a < vb.size(); ++a)
      for (std::size_t b = a + 1; b < vb.size(); ++b) {
        Vec<Rational> y = vb[a];
        for (int i = 0; i < n; ++i) y[i] += vb[b][i];
        if (sgn(om(g.bracket(x, y), g.bracket(jx, y))) != 0) r.vanishing_identity = false;
      }
  }
  return r;
}

}  // namespace tamed
