#include "tamed/linalg.hpp"

#include <cmath>
#include <sstream>

namespace tamed {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::NotSolvable: return "NotSolvable";
    case ErrorCode::NotNilpotent: return "NotNilpotent";
    case ErrorCode::ThetaNotClosed: return "ThetaNotClosed";
    case ErrorCode::ThetaZero: return "ThetaZero";
    case ErrorCode::JSquaredNotMinusId: return "JSquaredNotMinusId";
    case ErrorCode::NotIntegrable: return "NotIntegrable";
    case ErrorCode::NotNilpotentImage: return "NotNilpotentImage";
    case ErrorCode::TypeIInput: return "TypeIInput";
    case ErrorCode::SpanFailure: return "SpanFailure";
    case ErrorCode::NotAComplement: return "NotAComplement";
    case ErrorCode::NotAlmostAbelian: return "NotAlmostAbelian";
    case ErrorCode::JNotAbelian: return "JNotAbelian";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::ZeroParameter: return "ZeroParameter";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::JacobiViolation: return "JacobiViolation";
    case ErrorCode::MissingJ: return "MissingJ";
    case ErrorCode::UnknownEntry: return "UnknownEntry";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool slash = false;
  bool digits = false;
  for (std::size_t i = start; i < s.size(); ++i) {
    char ch = s[i];
    if (ch >= '0' && ch <= '9') {
      digits = true;
    } else if (ch == '/' && !slash && digits && i + 1 < s.size()) {
      slash = true;
      digits = false;
    } else {
      throw Error(ErrorCode::ParseError, "not an exact rational: \"" + s + "\"");
    }
  }
  if (!digits) throw Error(ErrorCode::ParseError, "not an exact rational: \"" + s + "\"");
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, "not an exact rational: \"" + s + "\"");
  if (sgn(r.get_den()) == 0) throw Error(ErrorCode::ParseError, "zero denominator: \"" + s + "\"");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::string to_string(const Gaussian& g) {
  if (sgn(g.im) == 0) return to_string(g.re);
  std::string im = to_string(g.im);
  if (sgn(g.re) == 0) return im + "i";
  if (sgn(g.im) > 0) im = "+" + im;
  return to_string(g.re) + im + "i";
}

std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << to_string(g); }

Rational approximate_rational(double x, long max_den) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "cannot approximate a non-finite value");
  // continued-fraction convergents h/k with k <= max_den
  long double v = x;
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(v));
  mpz_class k_prev = 0, k = 1;
  long double frac = v - std::floor(v);
  for (int iter = 0; iter < 64 && frac > 1e-18L; ++iter) {
    v = 1.0L / frac;
    long a = static_cast<long>(std::floor(v));
    frac = v - std::floor(v);
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  Rational r(h, k);
  r.canonicalize();
  return r;
}

std::vector<Rational> leading_principal_minors(const RMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "minors of non-square matrix");
  const int n = m.rows();
  RMatrix a = m;
  std::vector<Rational> minors;
  Rational det = 1;
  // Without pivoting the k-th pivot equals minor_k / minor_{k-1}.
  for (int k = 0; k < n; ++k) {
    Rational pivot = a(k, k);
    det *= pivot;
    minors.push_back(det);
    if (sgn(pivot) <= 0) break;
    for (int r = k + 1; r < n; ++r) {
      if (sgn(a(r, k)) == 0) continue;
      Rational f = a(r, k) / pivot;
      for (int c = k; c < n; ++c) a(r, c) -= f * a(k, c);
    }
  }
  return minors;
}

bool is_positive_definite(const RMatrix& m) {
  auto minors = leading_principal_minors(m);
  if (static_cast<int>(minors.size()) != m.rows()) return false;
  for (const auto& x : minors)
    if (sgn(x) <= 0) return false;
  return true;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(int degree, Rational c) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return {};
  Rational lead = c_.back();
  std::vector<Rational> v = c_;
  for (auto& x : v) x /= lead;
  return Polynomial(std::move(v));
}

RMatrix Polynomial::evaluate(const RMatrix& m) const {
  const int n = m.rows();
  RMatrix acc(n, n);
  for (int i = degree(); i >= 0; --i) {
    acc = acc * m;
    for (int d = 0; d < n; ++d) acc(d, d) += c_[i];
  }
  return acc;
}

Gaussian Polynomial::evaluate(const Gaussian& x) const {
  Gaussian acc;
  for (int i = degree(); i >= 0; --i) acc = acc * x + Gaussian(c_[i]);
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  std::vector<Rational> q(a.degree() - db + 1, Rational(0));
  for (int i = a.degree(); i >= db; --i) {
    if (sgn(rem[i]) == 0) continue;
    Rational f = rem[i] / b.c_[db];
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= f * b.c_[j];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial characteristic_polynomial(const RMatrix& m) {
  // Faddeev–LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
  const int n = m.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RMatrix mk(n, n);
  for (int k = 1; k <= n; ++k) {
    RMatrix next = m * mk;
    for (int d = 0; d < n; ++d) next(d, d) += c[n - k + 1];
    mk = std::move(next);
    RMatrix am = m * mk;
    Rational tr = 0;
    for (int d = 0; d < n; ++d) tr += am(d, d);
    c[n - k] = -tr / k;
  }
  return Polynomial(std::move(c));
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  Polynomial g = Polynomial::gcd(p, p.derivative());
  return Polynomial::divmod(p, g).first.monic();
}

}  // namespace tamed
