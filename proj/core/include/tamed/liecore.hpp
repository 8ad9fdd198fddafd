#pragma once

// Lie algebras given by structure constants, their structure theory and the
// Chevalley–Eilenberg differential on left-invariant forms.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tamed/exterior.hpp"
#include "tamed/linalg.hpp"

namespace tamed {

struct BracketTerm {
  int k;
  Rational coeff;
};

/// [e_i, e_j] = sum of terms; only i != j is meaningful, antisymmetry is implied.
struct BracketEntry {
  int i;
  int j;
  std::vector<BracketTerm> terms;
};

class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Builds the table. When `validate` is set a Jacobi failure throws JacobiViolation.
  LieAlgebra(int dimension, std::vector<std::string> names, const std::vector<BracketEntry>& brackets, bool validate = true);

  int dimension() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;

  /// Coordinates of [e_i, e_j].
  const Vec<Rational>& structure(int i, int j) const { return table_[static_cast<std::size_t>(i) * n_ + j]; }
  Vec<Rational> bracket(const Vec<Rational>& x, const Vec<Rational>& y) const;
  Vec<Gaussian> bracket(const Vec<Gaussian>& x, const Vec<Gaussian>& y) const;
  /// Matrix of ad_{e_i} (column j = [e_i, e_j]).
  const RMatrix& ad(int i) const { return ad_[i]; }
  RMatrix ad(const Vec<Rational>& x) const;

  /// d e^k (cached).
  const RForm& d_basis(int k) const { return d1_[k]; }

  /// Nonzero brackets [e_i, e_j] with i < j, in a canonical order.
  std::vector<BracketEntry> entries() const;

  /// Same algebra in the basis f_j = sum_i P(i,j) e_i.
  LieAlgebra change_basis(const RMatrix& p) const;

 private:
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<Vec<Rational>> table_;
  std::vector<RMatrix> ad_;
  std::vector<RForm> d1_;
};

struct JacobiResult {
  bool ok = true;
  int i = -1, j = -1, k = -1;
  Vec<Rational> value;  // the nonzero cyclic sum at the violating triple
};

JacobiResult check_jacobi(const LieAlgebra& g);

/// Linear subspace of g with a canonical echelon basis and recorded properties.
class Subspace {
 public:
  Subspace() = default;
  Subspace(const LieAlgebra& g, const std::vector<Vec<Rational>>& spanning);

  int ambient_dimension() const { return n_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<Vec<Rational>>& basis() const { return basis_; }
  std::vector<RVector> basis_vectors() const;
  const std::vector<int>& pivots() const { return pivots_; }

  bool is_subalgebra() const { return subalgebra_; }
  bool is_ideal() const { return ideal_; }
  bool is_abelian() const { return abelian_; }

  bool contains(const Vec<Rational>& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v (assumed to lie in the subspace) in the echelon basis.
  Vec<Rational> coordinates(const Vec<Rational>& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }

 private:
  int n_ = 0;
  std::vector<Vec<Rational>> basis_;
  std::vector<int> pivots_;
  bool subalgebra_ = false;
  bool ideal_ = false;
  bool abelian_ = false;
};

Subspace whole(const LieAlgebra& g);
Subspace sum(const LieAlgebra& g, const Subspace& a, const Subspace& b);
/// span [A, B]
Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b);

struct Series {
  std::vector<Subspace> derived;
  std::vector<Subspace> lower_central;
};

/// Both series, each starting with g and ending at the first repeated term.
Series derived_and_central_series(const LieAlgebra& g);
bool is_solvable(const LieAlgebra& g);
bool is_nilpotent(const LieAlgebra& g);
bool is_unimodular(const LieAlgebra& g);
Subspace center(const LieAlgebra& g);
/// An abelian ideal of codimension one, when g is almost abelian (or abelian).
std::optional<Subspace> abelian_ideal_of_codimension_one(const LieAlgebra& g);
/// Maximal nilpotent ideal; throws NotSolvable.
Subspace nilradical(const LieAlgebra& g, std::uint64_t seed = 0);

/// Chevalley–Eilenberg differential, extended as a graded derivation.
RForm ce_d(const LieAlgebra& g, const RForm& a);
CForm ce_d(const LieAlgebra& g, const CForm& a);

/// All 1-forms eta with d eta = eta ∧ theta, as an echelon basis.
std::vector<RForm> solve_twisted_closed(const LieAlgebra& g, const RForm& theta);

/// Matrix of ad_x restricted to an ad_x-invariant subspace, in its echelon coordinates.
RMatrix restricted_ad(const LieAlgebra& g, const Vec<Rational>& x, const Subspace& h);

/// Basis of all k-forms (ascending masks).
std::vector<RForm> form_basis(int dimension, int degree);

Vec<Rational> unit_vector(int n, int i);

}  // namespace tamed
