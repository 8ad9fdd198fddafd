#pragma once

// Example algebras with complex structures, declared complements and splittings,
// and their expected verdicts.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tamed/decide.hpp"

namespace tamed {

using ParamMap = std::map<std::string, std::string>;

struct ParamSpec {
  std::string name;
  std::string kind;  // "int", "rational", "rational-list", "rational-matrix"
  std::string default_value;
  std::string constraint;
};

struct Expectation {
  std::string problem;  // "taming" or "skt"
  VerdictKind kind = VerdictKind::NotExists;
  std::string note;
};

struct CatalogEntry {
  std::string id;
  std::string label;  // id with parameters
  std::string description;
  ParamMap params;

  LieAlgebra algebra;
  std::optional<RMatrix> j;
  std::optional<Subspace> complement;
  std::optional<Subspace> split_s;  // subalgebra part
  std::optional<Subspace> split_h;  // ideal part
  std::vector<RForm> bundled_forms;

  std::vector<Expectation> expected;
  std::map<std::string, bool> expected_flags;  // unimodular, nilpotent, type_I, abelian_J, integrable
  std::vector<std::string> notes;
};

struct CatalogSpec {
  std::string id;
  std::string description;
  std::vector<ParamSpec> params;
  std::function<CatalogEntry(const ParamMap&)> build;
};

const std::vector<CatalogSpec>& catalog();
/// Throws UnknownEntry.
const CatalogSpec& find_spec(const std::string& id);
/// Unknown parameter names throw InvalidArgument.
CatalogEntry build_entry(const std::string& id, const ParamMap& params = {});

using RationalMatrix = std::vector<std::vector<Rational>>;

CatalogEntry build_torus(int dimension);
CatalogEntry build_heisenberg();
CatalogEntry build_heisenberg_r(bool integrable);
CatalogEntry build_filiform4();
CatalogEntry build_r2();
/// Empty b/c select defaults; throws NotUnimodular.
CatalogEntry build_OT(int s, int t, RationalMatrix b = {}, RationalMatrix c = {});
/// Throws ZeroParameter.
CatalogEntry build_C_semidirect_C2m(const std::vector<Rational>& a);
CatalogEntry build_yamada(const Rational& t0 = 1);
CatalogEntry build_s_minus1_0();
CatalogEntry build_tau_tau_prime_30();
CatalogEntry build_aa6(const Rational& a, const Rational& b);
CatalogEntry build_aa6_integrable(const Rational& a, const Rational& b);
/// Multiplication table: table[p][q] = coordinates of a_p * a_q. Throws NotCommutative, NotAssociative.
CatalogEntry build_aff(const std::string& id, const std::vector<std::vector<Vec<Rational>>>& table);
CatalogEntry build_nakamura();
CatalogEntry build_doubling5();

/// The subalgebra as an algebra in its own echelon coordinates.
LieAlgebra subalgebra_algebra(const LieAlgebra& g, const Subspace& s);

/// Row of the regression table: an entry with concrete parameters.
struct TableRow {
  std::string id;
  ParamMap params;
};
std::vector<TableRow> regression_rows();

}  // namespace tamed
