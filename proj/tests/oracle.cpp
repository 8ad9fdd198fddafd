#include "oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <random>

namespace oracle {

using tamed::LieAlgebra;
using tamed::RMatrix;

int rank(Dense rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      Q f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

Dense identity(int n) {
  Dense m(n, std::vector<Q>(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t n = a.size(), k = b.size(), m = b[0].size();
  Dense out(n, std::vector<Q>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (sgn(a[i][t]) == 0) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  return out;
}

bool is_zero(const Dense& m) {
  for (const auto& r : m)
    for (const auto& x : r)
      if (sgn(x) != 0) return false;
  return true;
}

Dense to_dense(const RMatrix& m) {
  Dense d(m.rows(), std::vector<Q>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
  return d;
}

std::vector<Q> charpoly(const Dense& a) {
  const int n = static_cast<int>(a.size());
  std::vector<Q> c(n + 1);
  c[n] = 1;
  Dense m(n, std::vector<Q>(n));
  for (int k = 1; k <= n; ++k) {
    Dense am = multiply(a, m);
    for (int i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = am;
    Dense prod = multiply(a, m);
    Q tr = 0;
    for (int i = 0; i < n; ++i) tr += prod[i][i];
    c[n - k] = -tr / k;
  }
  return c;
}

namespace {

void trim(std::vector<Q>& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

std::vector<Q> remainder(std::vector<Q> a, const std::vector<Q>& b, std::vector<Q>* quotient = nullptr) {
  trim(a);
  std::vector<Q> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    Q f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  if (quotient) *quotient = q;
  return a;
}

}  // namespace

std::vector<Q> squarefree(const std::vector<Q>& p) {
  std::vector<Q> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  std::vector<Q> a = p, b = d;
  trim(a);
  while (!b.empty()) {
    std::vector<Q> r = remainder(a, b);
    a = b;
    b = r;
  }
  std::vector<Q> q;
  remainder(p, a, &q);
  return q;
}

Dense evaluate(const std::vector<Q>& p, const Dense& m) {
  const int n = static_cast<int>(m.size());
  Dense acc(n, std::vector<Q>(n));
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc = multiply(acc, m);
    for (int i = 0; i < n; ++i) acc[i][i] += *it;
  }
  return acc;
}

namespace {

using Vec = std::vector<Q>;

struct FormUnknowns {
  int n;
  std::vector<std::vector<int>> index;  // index[a][b] for a < b
  int count = 0;

  explicit FormUnknowns(int dim) : n(dim), index(dim, std::vector<int>(dim, -1)) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) index[a][b] = count++;
  }

  // Omega(u, v) as a linear functional in the unknowns
  Vec pair(const Vec& u, const Vec& v) const {
    Vec f(count);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        Q c = u[a] * v[b] - u[b] * v[a];
        if (sgn(c) != 0) f[index[a][b]] += c;
      }
    return f;
  }
};

Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y) {
  const int n = g.dimension();
  Vec out(n);
  for (int i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0 || i == j) continue;
      const auto& s = g.structure(i, j);
      for (int k = 0; k < n; ++k) out[k] += x[i] * y[j] * s[k];
    }
  }
  return out;
}

Vec unit(int n, int i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

Vec times(const RMatrix& j, const Vec& x) {
  Vec out(x.size());
  for (int r = 0; r < j.rows(); ++r)
    for (int c = 0; c < j.cols(); ++c) out[r] += j(r, c) * x[c];
  return out;
}

void accumulate(Vec& into, const Vec& f, int sign) {
  for (std::size_t i = 0; i < into.size(); ++i) into[i] += sign > 0 ? f[i] : Q(-f[i]);
}

// d Omega (x, y, z)
Vec d_omega(const LieAlgebra& g, const FormUnknowns& u, const Vec& x, const Vec& y, const Vec& z) {
  Vec f(u.count);
  accumulate(f, u.pair(bracket(g, x, y), z), -1);
  accumulate(f, u.pair(bracket(g, x, z), y), +1);
  accumulate(f, u.pair(bracket(g, y, z), x), -1);
  return f;
}

}  // namespace

int closed_two_form_dimension(const LieAlgebra& g) {
  const int n = g.dimension();
  FormUnknowns u(n);
  Dense rows;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) rows.push_back(d_omega(g, u, unit(n, a), unit(n, b), unit(n, c)));
  return u.count - rank(rows);
}

int ddc_closed_11_dimension(const LieAlgebra& g, const RMatrix& j) {
  const int n = g.dimension();
  FormUnknowns u(n);
  Dense rows;
  std::vector<Vec> e, je;
  for (int i = 0; i < n; ++i) {
    e.push_back(unit(n, i));
    je.push_back(times(j, e.back()));
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Vec f = u.pair(je[a], je[b]);
      accumulate(f, u.pair(e[a], e[b]), -1);
      rows.push_back(f);
    }
  auto dc = [&](const Vec& x, const Vec& y, const Vec& z) { return d_omega(g, u, times(j, x), times(j, y), times(j, z)); };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          std::vector<const Vec*> xs = {&e[a], &e[b], &e[c], &e[d]};
          Vec f(u.count);
          for (int p = 0; p < 4; ++p)
            for (int q = p + 1; q < 4; ++q) {
              std::vector<const Vec*> rest;
              for (int r = 0; r < 4; ++r)
                if (r != p && r != q) rest.push_back(xs[r]);
              accumulate(f, dc(bracket(g, *xs[p], *xs[q]), *rest[0], *rest[1]), (p + q) % 2 ? -1 : 1);
            }
          rows.push_back(f);
        }
  return u.count - rank(rows);
}

namespace {

using CM = Eigen::MatrixXcd;
using cd = std::complex<double>;

CM ad_matrix(const LieAlgebra& g, const Vec& x) {
  const int n = g.dimension();
  CM m = CM::Zero(n, n);
  for (int jcol = 0; jcol < n; ++jcol) {
    Vec img = bracket(g, x, unit(n, jcol));
    for (int k = 0; k < n; ++k) m(k, jcol) = img[k].get_d();
  }
  return m;
}

}  // namespace

std::vector<Weight> weights(const LieAlgebra& g, const tamed::Subspace& domain, const tamed::Subspace& space) {
  const int n = g.dimension(), m = space.dimension();
  CM basis(n, m);
  for (int c = 0; c < m; ++c)
    for (int r = 0; r < n; ++r) basis(r, c) = space.basis()[c][r].get_d();
  auto qr = basis.colPivHouseholderQr();
  std::vector<CM> rho;
  for (const auto& c : domain.basis()) rho.push_back(qr.solve(ad_matrix(g, c) * basis));

  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> coef(0.5, 1.5);
  CM x = CM::Zero(m, m);
  for (const auto& r : rho) x += coef(rng) * r;
  Eigen::ComplexEigenSolver<CM> es(x, false);
  std::vector<cd> ev(es.eigenvalues().data(), es.eigenvalues().data() + m);

  std::vector<std::pair<cd, int>> clusters;
  for (const auto& l : ev) {
    auto it = std::find_if(clusters.begin(), clusters.end(), [&](const auto& p) { return std::abs(p.first - l) < 1e-5; });
    if (it == clusters.end())
      clusters.push_back({l, 1});
    else
      ++it->second;
  }

  std::vector<Weight> out;
  for (const auto& [lambda, mult] : clusters) {
    CM shifted = x - lambda * CM::Identity(m, m);
    CM power = CM::Identity(m, m);
    for (int k = 0; k < mult; ++k) power = power * shifted;
    Eigen::JacobiSVD<CM> svd(power, Eigen::ComputeFullV);
    CM u = svd.matrixV().rightCols(mult);
    Weight w;
    for (const auto& r : rho) w.values.push_back((u.adjoint() * r * u).trace() / static_cast<double>(mult));
    CM in_g = basis * u;
    for (int c = 0; c < mult; ++c) w.space.emplace_back(in_g.col(c).data(), in_g.col(c).data() + n);
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

bool close(const std::vector<cd>& a, const std::vector<cd>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > 1e-6) return false;
  return true;
}

}  // namespace

bool obstruction_holds(const LieAlgebra& g, const std::vector<Weight>& all, const std::vector<cd>& alpha) {
  bool real_part = std::any_of(alpha.begin(), alpha.end(), [](const cd& z) { return std::abs(z.real()) > 1e-9; });
  if (!real_part) return false;
  std::vector<cd> conj_alpha;
  for (const auto& z : alpha) conj_alpha.push_back(std::conj(z));
  const Weight* va = nullptr;
  const Weight* vb = nullptr;
  for (const auto& w : all) {
    if (close(w.values, alpha)) va = &w;
    if (close(w.values, conj_alpha)) vb = &w;
  }
  if (!va || va->space.empty()) return false;
  if (!vb) return true;
  const int n = g.dimension();
  for (const auto& a : va->space)
    for (const auto& b : vb->space) {
      std::vector<cd> out(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          const auto& s = g.structure(i, j);
          for (int k = 0; k < n; ++k)
            if (sgn(s[k]) != 0) out[k] += a[i] * b[j] * s[k].get_d();
        }
      for (const auto& z : out)
        if (std::abs(z) > 1e-7) return false;
    }
  return true;
}

}  // namespace oracle
