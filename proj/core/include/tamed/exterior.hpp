#pragma once

// Sparse exterior algebra over the dual of an n-dimensional space (n <= 64).
// Monomials are bitmasks; bit i set means the factor with index i, always
// read in ascending index order.

#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "tamed/error.hpp"
#include "tamed/scalar.hpp"

namespace tamed {

using Mask = std::uint64_t;

inline constexpr int kMaxDimension = 64;

inline Mask bit(int i) { return Mask{1} << i; }
inline int popcount(Mask m) { return std::popcount(m); }

/// Indices of the set bits, ascending.
inline std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

inline Mask mask_of(std::span<const int> idx) {
  Mask m = 0;
  for (int i : idx) m |= bit(i);
  return m;
}

/// Sign of e^a ∧ e^b relative to the ascending monomial e^{a|b}; 0 when they overlap.
inline int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int swaps = 0;
  Mask rest = b;
  while (rest) {
    int j = std::countr_zero(rest);
    rest &= rest - 1;
    // every factor of a above j must pass over e^j
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

enum class Variance { Dual, Primal };

/// Homogeneous element of the exterior algebra with canonical sparse storage.
template <class S, Variance V>
class Graded {
 public:
  using Scalar = S;
  using Terms = std::map<Mask, S>;

  Graded() = default;
  Graded(int dimension, int degree) : dim_(dimension), degree_(degree) {
    if (dimension <= 0 || dimension > kMaxDimension)
      throw Error(ErrorCode::InvalidArgument, "dimension out of range: " + std::to_string(dimension));
    if (degree < 0 || degree > dimension)
      throw Error(ErrorCode::DegreeMismatch, "degree out of range: " + std::to_string(degree));
  }

  /// The monomial e^{i1}∧...∧e^{ik} for indices in any order (sign applied).
  static Graded monomial(int dimension, std::span<const int> idx, S coeff = S(1)) {
    Graded out(dimension, static_cast<int>(idx.size()));
    Mask m = 0;
    int sign = 1;
    for (int i : idx) {
      if (i < 0 || i >= dimension) throw Error(ErrorCode::DimensionMismatch, "index out of range");
      int s = wedge_sign(m, bit(i));
      if (s == 0) return out;
      sign *= s;
      m |= bit(i);
    }
    out.add(m, sign > 0 ? coeff : S(-coeff));
    return out;
  }
  static Graded monomial(int dimension, std::initializer_list<int> idx, S coeff = S(1)) {
    std::vector<int> v(idx);
    return monomial(dimension, std::span<const int>(v), std::move(coeff));
  }
  static Graded basis(int dimension, int i) { return monomial(dimension, {i}); }
  static Graded constant(int dimension, S value) {
    Graded out(dimension, 0);
    out.add(0, std::move(value));
    return out;
  }
  /// Degree-1 element with the given dense coordinates.
  static Graded from_coordinates(std::span<const S> coords) {
    Graded out(static_cast<int>(coords.size()), 1);
    for (std::size_t i = 0; i < coords.size(); ++i) out.add(bit(static_cast<int>(i)), coords[i]);
    return out;
  }

  int dimension() const { return dim_; }
  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  S coeff(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? S(0) : it->second;
  }

  /// Adds c * e^m, keeping the map free of zeros.
  void add(Mask m, const S& c) {
    if (tamed::is_zero(c)) return;
    if (popcount(m) != degree_) throw Error(ErrorCode::DegreeMismatch, "monomial degree differs from form degree");
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (tamed::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Dense coordinates of a degree-1 element.
  std::vector<S> coordinates() const {
    if (degree_ != 1) throw Error(ErrorCode::DegreeMismatch, "coordinates() needs degree 1");
    std::vector<S> out(dim_, S(0));
    for (const auto& [m, c] : terms_) out[std::countr_zero(m)] = c;
    return out;
  }

  Graded& operator+=(const Graded& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  Graded& operator-=(const Graded& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add(m, S(-c));
    return *this;
  }
  Graded& operator*=(const S& s) {
    if (tamed::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }
  Graded operator-() const {
    Graded out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
  }
  friend Graded operator+(Graded a, const Graded& b) { return a += b; }
  friend Graded operator-(Graded a, const Graded& b) { return a -= b; }
  friend Graded operator*(Graded a, const S& s) { return a *= s; }
  friend Graded operator*(const S& s, Graded a) { return a *= s; }
  friend bool operator==(const Graded& a, const Graded& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Graded& a, const Graded& b) { return !(a == b); }

 private:
  void check_compatible(const Graded& o) const {
    if (o.dim_ != dim_) throw Error(ErrorCode::DimensionMismatch, "forms live over different dimensions");
    if (o.degree_ != degree_) throw Error(ErrorCode::DegreeMismatch, "cannot add forms of different degree");
  }

  int dim_ = 1;
  int degree_ = 0;
  Terms terms_;
};

template <class S>
using Form = Graded<S, Variance::Dual>;
template <class S>
using Multivector = Graded<S, Variance::Primal>;

using RForm = Form<Rational>;
using CForm = Form<Gaussian>;
using RVector = Multivector<Rational>;
using CVector = Multivector<Gaussian>;

template <class S, Variance V>
Graded<S, V> wedge(const Graded<S, V>& a, const Graded<S, V>& b) {
  if (a.dimension() != b.dimension()) throw Error(ErrorCode::DimensionMismatch, "wedge of forms over different dimensions");
  const int n = a.dimension();
  if (a.degree() + b.degree() > n) return Graded<S, V>(n, n);  // zero; degree clamped
  Graded<S, V> out(n, a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      S c = ca * cb;
      if (s < 0) c = -c;
      out.add(ma | mb, c);
    }
  }
  return out;
}

/// Determinant over a field by Gaussian elimination (k is small here).
template <class S>
S small_determinant(std::vector<std::vector<S>> m) {
  const std::size_t k = m.size();
  S det(1);
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && tamed::is_zero(m[piv][col])) ++piv;
    if (piv == k) return S(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < k; ++r) {
      if (tamed::is_zero(m[r][col])) continue;
      S f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < k; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

/// a(v1, ..., vk) with the determinant normalisation (e^1∧e^2)(e_1, e_2) = 1.
template <class S>
S evaluate(const Form<S>& a, std::span<const std::vector<S>> vectors) {
  const std::size_t k = vectors.size();
  if (static_cast<int>(k) != a.degree()) throw Error(ErrorCode::ArityMismatch, "form degree differs from number of arguments");
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != a.dimension()) throw Error(ErrorCode::DimensionMismatch, "argument dimension differs from form");
  if (k == 0) return a.coeff(0);
  S total(0);
  std::vector<std::vector<S>> minor(k, std::vector<S>(k));
  for (const auto& [m, c] : a.terms()) {
    auto idx = mask_indices(m);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t s = 0; s < k; ++s) minor[r][s] = vectors[s][idx[r]];
    total += c * small_determinant(minor);
  }
  return total;
}

template <class S>
S evaluate(const Form<S>& a, std::span<const Multivector<S>> vectors) {
  std::vector<std::vector<S>> dense;
  dense.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.dimension() != a.dimension()) throw Error(ErrorCode::DimensionMismatch, "argument dimension differs from form");
    dense.push_back(v.coordinates());
  }
  return evaluate(a, std::span<const std::vector<S>>(dense));
}

template <class S>
S evaluate(const Form<S>& a, std::initializer_list<std::vector<S>> vectors) {
  std::vector<std::vector<S>> v(vectors);
  return evaluate(a, std::span<const std::vector<S>>(v));
}

template <Variance V>
Graded<Gaussian, V> complexify(const Graded<Rational, V>& a) {
  Graded<Gaussian, V> out(a.dimension(), a.degree());
  for (const auto& [m, c] : a.terms()) out.add(m, Gaussian(c));
  return out;
}

template <Variance V>
Graded<Gaussian, V> conj(const Graded<Gaussian, V>& a) {
  Graded<Gaussian, V> out(a.dimension(), a.degree());
  for (const auto& [m, c] : a.terms()) out.add(m, c.conj());
  return out;
}

template <Variance V>
Graded<Rational, V> real_part(const Graded<Gaussian, V>& a) {
  Graded<Rational, V> out(a.dimension(), a.degree());
  for (const auto& [m, c] : a.terms()) out.add(m, c.re);
  return out;
}

template <Variance V>
Graded<Rational, V> imag_part(const Graded<Gaussian, V>& a) {
  Graded<Rational, V> out(a.dimension(), a.degree());
  for (const auto& [m, c] : a.terms()) out.add(m, c.im);
  return out;
}

/// Human-readable rendering using the given basis names ("2 x^1^3 - 1/2 x^2^4").
template <class S, Variance V>
std::string format_form(const Graded<S, V>& a, const std::vector<std::string>& names = {}) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    if (!first) out += " + ";
    first = false;
    out += "(" + to_string(c) + ")";
    for (int i : mask_indices(m)) {
      out += (V == Variance::Dual) ? " e^" : " e_";
      out += names.empty() ? std::to_string(i) : names[i];
    }
  }
  return out;
}

}  // namespace tamed
