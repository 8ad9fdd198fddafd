#pragma once

// Invariant almost-complex structures: integrability, bigrading, d^c.

#include <map>
#include <utility>

#include "tamed/liecore.hpp"

namespace tamed {

class ComplexStructure {
 public:
  ComplexStructure() = default;
  /// Throws JSquaredNotMinusId; computes the integrability flag.
  ComplexStructure(const LieAlgebra& g, RMatrix j);

  const RMatrix& matrix() const { return j_; }
  int dimension() const { return j_.rows(); }
  bool is_integrable() const { return integrable_; }
  Vec<Rational> apply(const Vec<Rational>& x) const { return j_ * x; }

 private:
  RMatrix j_;
  bool integrable_ = false;
};

/// N(X,Y) = [JX,JY] - [X,Y] - J[JX,Y] - J[X,JY]
Vec<Rational> nijenhuis(const LieAlgebra& g, const RMatrix& j, const Vec<Rational>& x, const Vec<Rational>& y);
bool is_integrable(const LieAlgebra& g, const RMatrix& j);
bool is_abelian_J(const LieAlgebra& g, const RMatrix& j);
void require_complex_square(const RMatrix& j);

/// (P^* a)(X1..Xk) = a(P X1, .., P Xk)
RForm pullback(const RMatrix& p, const RForm& a);
CForm pullback(const RMatrix& p, const CForm& a);

/// (J a)(X1..Xk) = (-1)^k a(J X1, .., J Xk)
RForm act_J(const RMatrix& j, const RForm& a);
CForm act_J(const RMatrix& j, const CForm& a);

/// Projections of a 1-form onto types (1,0) and (0,1).
CForm to_10(const RMatrix& j, const CForm& a);
CForm to_01(const RMatrix& j, const CForm& a);

struct BigradedForm {
  CForm form;
  std::map<std::pair<int, int>, CForm> parts;  // only nonzero parts

  CForm part(int p, int q) const;
};

BigradedForm bigrade(const RMatrix& j, const CForm& a);
/// Real (1,1) part of a real 2-form: (a + P^* a) / 2.
RForm real_11_part(const RMatrix& j, const RForm& a);

/// J^{-1} d J and d J^{-1} d J. Integrability is not required for the computation.
RForm dc(const LieAlgebra& g, const RMatrix& j, const RForm& a);
CForm dc(const LieAlgebra& g, const RMatrix& j, const CForm& a);
RForm ddc(const LieAlgebra& g, const RMatrix& j, const RForm& a);
CForm ddc(const LieAlgebra& g, const RMatrix& j, const CForm& a);

/// Type-(p+1,q) and (p,q+1) parts of d on a pure (p,q) form.
CForm del(const LieAlgebra& g, const RMatrix& j, const CForm& a, int p, int q);
CForm delbar(const LieAlgebra& g, const RMatrix& j, const CForm& a, int p, int q);

}  // namespace tamed
