#pragma once

// JSON interchange format for algebras, complex structures and declared subspaces.

#include <optional>
#include <string>
#include <vector>

#include "tamed/catalog.hpp"

namespace tamed {

struct AlgebraDocument {
  int schema = 1;
  std::string name;
  int dimension = 0;
  std::vector<std::string> basis;
  std::vector<BracketEntry> brackets;  // i < j, terms sorted by k
  std::optional<RMatrix> j;
  std::optional<std::vector<Vec<Rational>>> complement;
  std::optional<std::vector<Vec<Rational>>> split_s;
  std::optional<std::vector<Vec<Rational>>> split_h;

  friend bool operator==(const AlgebraDocument& a, const AlgebraDocument& b);
};

/// Throws ParseError carrying line and column for syntax errors, the offending field otherwise.
AlgebraDocument parse_document(const std::string& text);
std::string emit_document(const AlgebraDocument& doc, bool pretty = true);

/// Validates Jacobi (JacobiViolation) unless told otherwise.
LieAlgebra document_algebra(const AlgebraDocument& doc, bool validate = true);
AlgebraDocument document_from_algebra(const LieAlgebra& g, const std::optional<RMatrix>& j = std::nullopt, const std::string& name = "");
AlgebraDocument document_from_entry(const CatalogEntry& e);

/// FNV-1a over the compact canonical emission, as 16 hex digits.
std::string document_digest(const AlgebraDocument& doc);

std::string read_file(const std::string& path);

}  // namespace tamed
