#pragma once

// Jordan–Chevalley decompositions, characters and weight spaces of
// representations with nilpotent image, type (I) tests.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "tamed/liecore.hpp"

namespace tamed {

struct JordanPair {
  RMatrix s;  // semisimple
  RMatrix n;  // nilpotent
};

/// Exact decomposition M = S + N over Q.
JordanPair jordan_chevalley(const RMatrix& m);

using CVec = std::vector<std::complex<double>>;

struct Character {
  std::vector<std::complex<double>> values;  // on the domain basis
  std::vector<Gaussian> exact;               // filled when is_exact
  bool is_exact = false;

  bool is_trivial(double tol) const;
  bool has_nonzero_real_part(double tol) const;
  Character conj() const;
  Character real_doubled() const;  // alpha + conj(alpha)
  Character doubled() const;       // 2 alpha
  bool same_as(const Character& o, double tol) const;
};

std::string to_string(const Character& c);

struct WeightSpace {
  Character alpha;
  std::vector<Vec<Gaussian>> basis;  // exact regime: triangularising basis
  std::vector<CVec> numeric_basis;   // always filled
  int dimension() const { return static_cast<int>(numeric_basis.size()); }
};

struct WeightDecomposition {
  int ambient_dimension = 0;
  bool exact = true;
  double tolerance = 1e-9;
  std::vector<WeightSpace> spaces;

  const WeightSpace* find(const Character& a) const;
};

struct WeightOptions {
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
};

/// Simultaneous weight spaces of the semisimple parts of the given commuting-up-to-nilpotent
/// action matrices (one per domain basis element). Throws NotNilpotentImage.
WeightDecomposition weight_decomposition(const std::vector<RMatrix>& action, const WeightOptions& opt = {});

/// Action of the complement basis on an ad(c)-invariant subspace, in its coordinates.
std::vector<RMatrix> restricted_action(const LieAlgebra& g, const Subspace& domain, const Subspace& space);

/// Maps coordinates relative to `space`'s echelon basis back to g.
Vec<Gaussian> embed(const Subspace& space, const Vec<Gaussian>& coords);
CVec embed(const Subspace& space, const CVec& coords);

bool is_nilpotent_subalgebra(const LieAlgebra& g, const Subspace& s);

/// Fitting null component of ad_Y for a regular Y; for solvable g a nilpotent complement of the nilradical.
Subspace cartan_subalgebra(const LieAlgebra& g, std::uint64_t seed = 0);
/// Validates a declared complement (NotAComplement) or computes one.
Subspace nilpotent_complement(const LieAlgebra& g, const std::optional<Subspace>& declared = std::nullopt, std::uint64_t seed = 0);

bool is_type_I_rep(const std::vector<RMatrix>& action, const WeightOptions& opt = {});
bool is_type_I(const LieAlgebra& g, const WeightOptions& opt = {});

struct ObstructionCharacter {
  Character alpha;
  int iterations = 0;  // doubling steps taken
  std::vector<Character> trail;
};

/// Character with Re != 0, V_alpha != 0 and [V_alpha, V_conj(alpha)] = 0 in g, where
/// the decomposition lives on `space`. Throws TypeIInput.
ObstructionCharacter find_obstruction_character(const WeightDecomposition& decomp, const LieAlgebra& g, const Subspace& space);

/// Independent check of the three conditions.
bool satisfies_obstruction_conditions(const WeightDecomposition& decomp, const LieAlgebra& g, const Subspace& space, const Character& alpha);

}  // namespace tamed
