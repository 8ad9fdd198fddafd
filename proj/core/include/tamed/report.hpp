#pragma once

// Verdict reports, their independent re-verification and the regression table.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tamed/document.hpp"

namespace tamed {

struct StructureFacts {
  bool solvable = false;
  bool nilpotent = false;
  bool unimodular = false;
  std::optional<bool> type_I;
  bool almost_abelian = false;
  std::optional<bool> integrable;
  std::optional<bool> abelian_J;
  int nilradical_dimension = -1;  // -1 when not solvable
  int center_dimension = 0;
  std::vector<int> derived_dimensions;
  std::vector<int> lower_central_dimensions;
};

StructureFacts structure_facts(const LieAlgebra& g, const std::optional<RMatrix>& j, const WeightOptions& opt = {});

struct VerdictReport {
  AlgebraDocument document;
  std::string digest;
  StructureFacts facts;
  std::optional<Verdict> taming;
  std::optional<Verdict> skt;
  std::uint64_t seed = 0;
  double tolerance = 1e-9;
  double seconds = 0.0;
};

/// Structure facts only.
VerdictReport check_report(const AlgebraDocument& doc, const DecideOptions& opt = {});
/// Throws MissingJ when the document has no J; NotIntegrable for SKT on a non-integrable J.
VerdictReport decide_report(const AlgebraDocument& doc, bool taming, bool skt, const DecideOptions& opt = {});

std::string report_json(const VerdictReport& r, bool include_timing = true);
std::string report_text(const VerdictReport& r);

/// Re-checks digest and every certificate from the JSON text alone; returns the problems found.
std::vector<std::string> verify_report(const std::string& json_text);

struct TableLine {
  std::string label;
  std::string check;  // "taming", "skt" or "flag:<name>"
  std::string expected;
  std::string computed;
  bool match = false;
  std::string note;
};

struct RegressionTable {
  std::vector<TableLine> lines;
  bool all_match() const;
  std::string text() const;
};

/// Case-insensitive substring filter on id and label; empty keeps everything.
std::vector<CatalogEntry> regression_table_entries(const std::string& only = "");
RegressionTable regression_table(const std::vector<CatalogEntry>& entries, const DecideOptions& opt = {});

}  // namespace tamed
