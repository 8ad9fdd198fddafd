#pragma once

// Exact dense linear algebra over Q and Q(i), plus rational polynomials.

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "tamed/error.hpp"
#include "tamed/exterior.hpp"
#include "tamed/scalar.hpp"

namespace tamed {

template <class S>
using Vec = std::vector<S>;

template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, S(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }
  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const std::vector<Vec<S>>& cols, int rows) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols_; ++c)
      for (int r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<S>>& rows, int cols) {
    Matrix m(static_cast<int>(rows.size()), cols);
    for (int r = 0; r < m.rows_; ++r)
      for (int c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  S& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const S& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  Vec<S> column(int c) const {
    Vec<S> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  Vec<S> row(int r) const { return Vec<S>(data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_, data_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_); }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const S& s) { return tamed::is_zero(s); });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const S& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  Matrix operator-() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
  friend Matrix operator*(const S& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const S& aik = a(i, k);
        if (tamed::is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend Vec<S> operator*(const Matrix& a, const Vec<S>& v) {
    if (static_cast<int>(v.size()) != a.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
    Vec<S> out(a.rows_, S(0));
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k)
        if (!tamed::is_zero(v[k])) out[i] += a(i, k) * v[k];
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check_same(const Matrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<S> data_;
};

using RMatrix = Matrix<Rational>;
using CMatrix = Matrix<Gaussian>;

template <class S>
Matrix<S> commutator(const Matrix<S>& a, const Matrix<S>& b) {
  return a * b - b * a;
}

inline CMatrix complexify(const RMatrix& m) {
  CMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = Gaussian(m(r, c));
  return out;
}

/// Reduced row echelon form in place; returns pivot columns.
template <class S>
std::vector<int> rref_in_place(Matrix<S>& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = row;
    while (piv < m.rows() && tamed::is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (int c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    S inv = S(1) / m(row, col);
    for (int c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || tamed::is_zero(m(r, col))) continue;
      S f = m(r, col);
      for (int c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class S>
int rank(Matrix<S> m) {
  return static_cast<int>(rref_in_place(m).size());
}

/// Basis of the null space {x : m x = 0}, one vector per free column.
template <class S>
std::vector<Vec<S>> kernel(Matrix<S> m) {
  auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec<S>> out;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec<S> v(m.cols(), S(0));
    v[f] = S(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(static_cast<int>(r), f);
    out.push_back(std::move(v));
  }
  return out;
}

/// Canonical echelon basis (rows of the RREF) of the span of the given vectors.
template <class S>
std::vector<Vec<S>> echelon_basis(const std::vector<Vec<S>>& vectors, int dim) {
  if (vectors.empty()) return {};
  Matrix<S> m = Matrix<S>::from_rows(vectors, dim);
  auto pivots = rref_in_place(m);
  std::vector<Vec<S>> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) out.push_back(m.row(static_cast<int>(r)));
  return out;
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const int n = m.rows();
  Matrix<S> aug(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = S(1);
  }
  auto piv = rref_in_place(aug);
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
  Matrix<S> inv(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

template <class S>
S determinant(const Matrix<S>& m) {
  std::vector<std::vector<S>> rows(m.rows());
  for (int r = 0; r < m.rows(); ++r) rows[r] = m.row(r);
  return small_determinant(std::move(rows));
}

/// Leading principal minors via exact elimination; stops at the first non-positive pivot.
std::vector<Rational> leading_principal_minors(const RMatrix& m);
bool is_positive_definite(const RMatrix& m);

template <class S>
bool is_nilpotent(const Matrix<S>& m) {
  Matrix<S> p = m;
  for (int k = 1; k < m.rows(); ++k) p = p * m;
  return p.is_zero();
}

/// True when v lies in the span of the echelon basis `basis` (as produced by echelon_basis).
template <class S>
bool in_span(const std::vector<Vec<S>>& basis, const Vec<S>& v) {
  if (basis.empty()) {
    return std::all_of(v.begin(), v.end(), [](const S& s) { return tamed::is_zero(s); });
  }
  std::vector<Vec<S>> all = basis;
  all.push_back(v);
  return static_cast<int>(echelon_basis(all, static_cast<int>(v.size())).size()) == static_cast<int>(basis.size());
}

// ---------------------------------------------------------------------------
// Polynomials over Q (coefficients ascending by degree, no trailing zeros).

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial monomial(int degree, Rational c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const { return i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Polynomial derivative() const;
  Polynomial monic() const;
  RMatrix evaluate(const RMatrix& m) const;
  Gaussian evaluate(const Gaussian& x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Quotient and remainder of a / b (b nonzero).
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  static Polynomial gcd(Polynomial a, Polynomial b);

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Characteristic polynomial det(xI - M), monic.
Polynomial characteristic_polynomial(const RMatrix& m);
/// p / gcd(p, p'), monic.
Polynomial squarefree_part(const Polynomial& p);

/// Incremental elimination over sparse vectors keyed by Mask; used for kernels of
/// linear maps given by the images of a basis.
template <class S>
class SparseEliminator {
 public:
  using Row = std::map<Mask, S>;

  /// Adds the image of the next basis element. Returns the kernel relation
  /// (coefficients over all elements added so far) when it is dependent.
  std::optional<Vec<S>> add(const Row& image) {
    const std::size_t id = count_++;
    Row v = image;
    std::map<std::size_t, S> combo;
    combo[id] = S(1);
    reduce(v, combo);
    if (v.empty()) {
      Vec<S> rel(count_, S(0));
      for (auto& [k, c] : combo) rel[k] = c;
      return rel;
    }
    // normalise on the leading key
    S inv = S(1) / v.begin()->second;
    for (auto& [k, c] : v) c *= inv;
    for (auto& [k, c] : combo) c *= inv;
    Mask lead = v.begin()->first;
    pivots_.emplace(lead, Pivot{std::move(v), std::move(combo)});
    return std::nullopt;
  }

  std::size_t rank() const { return pivots_.size(); }
  std::size_t count() const { return count_; }

 private:
  struct Pivot {
    Row row;
    std::map<std::size_t, S> combo;
  };

  void reduce(Row& v, std::map<std::size_t, S>& combo) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      Mask key = it->first;
      S f = it->second;
      for (const auto& [k, c] : p->second.row) {
        S delta = f * c;
        auto [jt, ins] = v.try_emplace(k, -delta);
        if (!ins) {
          jt->second -= delta;
          if (tamed::is_zero(jt->second)) v.erase(jt);
        }
      }
      for (const auto& [k, c] : p->second.combo) {
        S delta = f * c;
        auto [jt, ins] = combo.try_emplace(k, -delta);
        if (!ins) {
          jt->second -= delta;
          if (tamed::is_zero(jt->second)) combo.erase(jt);
        }
      }
      it = v.upper_bound(key);
    }
  }

  std::size_t count_ = 0;
  std::map<Mask, Pivot> pivots_;
};

/// Kernel of the linear map sending input_basis[i] to images[i], expressed as
/// combinations of the inputs, then reduced to canonical echelon form.
template <class S, Variance V>
std::vector<Graded<S, V>> kernel_of_map(const std::vector<Graded<S, V>>& inputs, const std::vector<Graded<S, V>>& images) {
  SparseEliminator<S> elim;
  std::vector<Vec<S>> relations;
  for (const auto& img : images) {
    auto rel = elim.add(img.terms());
    if (rel) relations.push_back(std::move(*rel));
  }
  std::vector<Graded<S, V>> out;
  for (auto& rel : relations) {
    Graded<S, V> f(inputs.front().dimension(), inputs.front().degree());
    for (std::size_t i = 0; i < rel.size(); ++i)
      if (!tamed::is_zero(rel[i])) f += inputs[i] * rel[i];
    out.push_back(std::move(f));
  }
  return out;
}

/// Canonical reduced echelon basis of the span of homogeneous forms (pivot = smallest mask).
template <class S, Variance V>
std::vector<Graded<S, V>> echelon_forms(const std::vector<Graded<S, V>>& forms) {
  if (forms.empty()) return {};
  std::map<Mask, int> col_of;
  for (const auto& f : forms)
    for (const auto& [m, c] : f.terms()) col_of.emplace(m, 0);
  std::vector<Mask> masks;
  int idx = 0;
  for (auto& [m, i] : col_of) {
    i = idx++;
    masks.push_back(m);
  }
  Matrix<S> mat(static_cast<int>(forms.size()), idx);
  for (std::size_t r = 0; r < forms.size(); ++r)
    for (const auto& [m, c] : forms[r].terms()) mat(static_cast<int>(r), col_of[m]) = c;
  auto piv = rref_in_place(mat);
  std::vector<Graded<S, V>> out;
  for (std::size_t r = 0; r < piv.size(); ++r) {
    Graded<S, V> f(forms.front().dimension(), forms.front().degree());
    for (int c = 0; c < idx; ++c) f.add(masks[c], mat(static_cast<int>(r), c));
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace tamed
