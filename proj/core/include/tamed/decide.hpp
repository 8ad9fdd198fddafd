#pragma once

// Existence of taming symplectic forms and SKT metrics at the invariant level,
// with exact certificates.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tamed/cxstruct.hpp"
#include "tamed/weights.hpp"

namespace tamed {

enum class SpaceCondition { Closed, DdcClosed11 };
const char* condition_name(SpaceCondition c);

struct FormSpace {
  int ambient = 0;    // dimension of g
  int dimension = 0;  // number of basis forms
  SpaceCondition condition = SpaceCondition::Closed;
  std::vector<RForm> basis;  // canonical echelon basis of 2-forms
};

FormSpace closed_two_forms(const LieAlgebra& g);
/// Real (1,1)-forms killed by dd^c. Throws NotIntegrable.
FormSpace ddc_closed_11_forms(const LieAlgebra& g, const ComplexStructure& j);

/// Antisymmetric matrix W(i,j) = omega(e_i, e_j).
RMatrix form_matrix(const RForm& omega);
RForm form_from_matrix(const RMatrix& w);
/// S(X,Y) = (omega(X,JY) + omega(Y,JX)) / 2
RMatrix taming_gram(const RForm& omega, const RMatrix& j);
RMatrix taming_gram(const FormSpace& space, const RMatrix& j, const std::vector<Rational>& coeffs);
Rational quadratic(const RMatrix& s, const Vec<Rational>& x);

enum class VerdictKind { Exists, NotExists, Unknown };
const char* verdict_name(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  SpaceCondition condition = SpaceCondition::Closed;
  int space_dimension = 0;

  // Exists
  std::optional<RForm> witness;
  std::vector<Rational> minors;

  // NotExists
  std::optional<Vec<Rational>> direction;
  std::vector<Rational> evaluations;  // omega_b(X, JX), all zero
  std::optional<RMatrix> dual_witness;

  std::string route;
  std::vector<std::string> diagnostics;
  double best_min_eigenvalue = 0.0;
  bool integrable = true;
};

struct DecideOptions {
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  int restarts = 64;
  int iterations = 500;
  long max_denominator = 10000;
};

Verdict decide_over(const LieAlgebra& g, const ComplexStructure& j, const FormSpace& space, const DecideOptions& opt = {});
Verdict decide_taming(const LieAlgebra& g, const ComplexStructure& j, const DecideOptions& opt = {});
/// Throws NotIntegrable.
Verdict decide_skt(const LieAlgebra& g, const ComplexStructure& j, const DecideOptions& opt = {});

/// Re-checks a certificate against an exactly recomputed space; empty string when valid.
std::string verify_verdict(const LieAlgebra& g, const RMatrix& j, const FormSpace& space, const Verdict& v);

struct Thm11Report {
  bool h_ideal = false;
  bool s_subalgebra = false;
  bool s_solvable = false;
  bool direct_sum = false;
  bool image_nilpotent = false;
  bool not_type_I = false;
  bool j_preserves_h = false;
  bool j_commutes = false;
  bool s_nilpotent = false;
  bool j_preserves_s = false;

  bool taming_hypotheses() const {
    return h_ideal && s_subalgebra && s_solvable && direct_sum && image_nilpotent && not_type_I && j_preserves_h && j_commutes;
  }
  bool skt_hypotheses() const { return taming_hypotheses() && s_nilpotent && j_preserves_s; }
};

/// Throws SpanFailure when s + h != g.
Thm11Report check_thm11_hypotheses(const LieAlgebra& g, const Subspace& s, const Subspace& h, const RMatrix& j);

/// ad_C J = J ad_C on a nilpotent complement; throws NotAComplement.
bool check_prop51_hypothesis(const LieAlgebra& g, const Subspace& c, const RMatrix& j);

struct AlmostAbelianReport {
  bool standard_metric = true;  // false when the metric comes from a positive (1,1)-part
  Vec<Rational> x;
  bool jx_in_nilradical = false;
  bool x_jx_commute = false;
  bool h_invariant = false;
  bool frame_complete = false;  // {X, JX, Y, JY, Z, JZ} independent with JZ = [X, JY]
  Vec<Rational> y, z;
};

/// Throws NotAlmostAbelian.
AlmostAbelianReport almost_abelian_report(const LieAlgebra& g, const RMatrix& j, const std::optional<RForm>& omega = std::nullopt);

struct AbelianObstructionReport {
  bool case_a = false;  // g^1 + J g^1 = g
  bool product_commutative = false;
  bool product_associative = false;
  bool b_symmetric = false;
  bool b_prime_symmetric = false;
  bool j_twist_identity = false;
  bool vanishing_identity = false;
  bool all_hold() const {
    return case_a ? (product_commutative && product_associative) : (b_symmetric && b_prime_symmetric && j_twist_identity && vanishing_identity);
  }
};

/// Throws JNotAbelian.
AbelianObstructionReport abelian_obstruction_checks(const LieAlgebra& g, const RMatrix& j, const RForm& omega);

/// Span of matrices closed under commutators reaching zero.
bool is_nilpotent_matrix_algebra(const std::vector<RMatrix>& mats);

}  // namespace tamed
