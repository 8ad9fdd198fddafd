#include "tamed/report.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace tamed {

using json = nlohmann::ordered_json;

namespace {

json rational_list(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json matrix_json(const RMatrix& m) {
  json a = json::array();
  for (int r = 0; r < m.rows(); ++r) a.push_back(rational_list(m.row(r)));
  return a;
}

std::vector<Rational> parse_list(const json& v) {
  if (!v.is_array()) throw Error(ErrorCode::ParseError, "expected a list of rationals");
  std::vector<Rational> out;
  for (const auto& x : v) {
    if (!x.is_string()) throw Error(ErrorCode::ParseError, "rationals must be strings");
    out.push_back(parse_rational(x.get<std::string>()));
  }
  return out;
}

RMatrix parse_matrix(const json& v, int n) {
  if (!v.is_array() || static_cast<int>(v.size()) != n) throw Error(ErrorCode::ParseError, "matrix has the wrong number of rows");
  std::vector<Vec<Rational>> rows;
  for (const auto& r : v) {
    rows.push_back(parse_list(r));
    if (static_cast<int>(rows.back().size()) != n) throw Error(ErrorCode::ParseError, "matrix row has the wrong length");
  }
  return RMatrix::from_rows(rows, n);
}

json form_json(const RForm& f) {
  json a = json::array();
  for (const auto& [m, c] : f.terms()) {
    auto idx = mask_indices(m);
    a.push_back({{"indices", idx}, {"coeff", to_string(c)}});
  }
  return a;
}

RForm parse_form(const json& v, int n) {
  if (!v.is_array()) throw Error(ErrorCode::ParseError, "form must be a list of terms");
  RForm f(n, 2);
  for (const auto& t : v) {
    auto idx = t.at("indices").get<std::vector<int>>();
    if (idx.size() != 2 || idx[0] < 0 || idx[1] >= n || idx[0] >= idx[1]) throw Error(ErrorCode::ParseError, "bad form indices");
    f.add(bit(idx[0]) | bit(idx[1]), parse_rational(t.at("coeff").get<std::string>()));
  }
  return f;
}

json verdict_json(const std::string& problem, const Verdict& v) {
  json o;
  o["problem"] = problem;
  o["condition"] = condition_name(v.condition);
  o["space_dimension"] = v.space_dimension;
  o["verdict"] = verdict_name(v.kind);
  o["route"] = v.route;
  o["integrable"] = v.integrable;
  json cert = nullptr;
  if (v.kind == VerdictKind::Exists && v.witness) {
    cert = {{"kind", "witness"}, {"form", form_json(*v.witness)}, {"minors", rational_list(v.minors)}};
  } else if (v.kind == VerdictKind::NotExists && v.dual_witness) {
    cert = {{"kind", "dual"}, {"matrix", matrix_json(*v.dual_witness)}};
  } else if (v.kind == VerdictKind::NotExists && v.direction) {
    cert = {{"kind", "direction"}, {"vector", rational_list(*v.direction)}, {"evaluations", rational_list(v.evaluations)}};
  }
  o["certificate"] = cert;
  std::ostringstream be;
  be << std::setprecision(12) << v.best_min_eigenvalue;
  o["best_min_eigenvalue"] = be.str();
  o["diagnostics"] = v.diagnostics;
  return o;
}

Verdict parse_verdict(const json& o, int n) {
  Verdict v;
  std::string kind = o.at("verdict").get<std::string>();
  if (kind == "Exists") v.kind = VerdictKind::Exists;
  else if (kind == "NotExists") v.kind = VerdictKind::NotExists;
  else if (kind == "Unknown") v.kind = VerdictKind::Unknown;
  else throw Error(ErrorCode::ParseError, "unknown verdict " + kind);
  v.condition = o.at("condition").get<std::string>() == "closed" ? SpaceCondition::Closed : SpaceCondition::DdcClosed11;
  v.space_dimension = o.at("space_dimension").get<int>();
  const json& c = o.at("certificate");
  if (!c.is_null()) {
    std::string ck = c.at("kind").get<std::string>();
    if (ck == "witness") {
      v.witness = parse_form(c.at("form"), n);
      v.minors = parse_list(c.at("minors"));
    } else if (ck == "dual") {
      v.dual_witness = parse_matrix(c.at("matrix"), n);
    } else if (ck == "direction") {
      v.direction = parse_list(c.at("vector"));
      v.evaluations = parse_list(c.at("evaluations"));
    } else {
      throw Error(ErrorCode::ParseError, "unknown certificate kind " + ck);
    }
  }
  return v;
}

json facts_json(const StructureFacts& f) {
  json o;
  o["solvable"] = f.solvable;
  o["nilpotent"] = f.nilpotent;
  o["unimodular"] = f.unimodular;
  o["type_I"] = f.type_I ? json(*f.type_I) : json(nullptr);
  o["almost_abelian"] = f.almost_abelian;
  o["integrable"] = f.integrable ? json(*f.integrable) : json(nullptr);
  o["abelian_J"] = f.abelian_J ? json(*f.abelian_J) : json(nullptr);
  o["nilradical_dimension"] = f.nilradical_dimension;
  o["center_dimension"] = f.center_dimension;
  o["derived_series"] = f.derived_dimensions;
  o["lower_central_series"] = f.lower_central_dimensions;
  return o;
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string flag_text(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "n/a"; }

}  // namespace

StructureFacts structure_facts(const LieAlgebra& g, const std::optional<RMatrix>& j, const WeightOptions& opt) {
  StructureFacts f;
  auto series = derived_and_central_series(g);
  for (const auto& s : series.derived) f.derived_dimensions.push_back(s.dimension());
  for (const auto& s : series.lower_central) f.lower_central_dimensions.push_back(s.dimension());
  f.solvable = f.derived_dimensions.back() == 0;
  f.nilpotent = f.lower_central_dimensions.back() == 0;
  f.unimodular = is_unimodular(g);
  f.center_dimension = center(g).dimension();
  try {
    f.type_I = is_type_I(g, opt);
  } catch (const Error&) {
    f.type_I.reset();
  }
  if (f.solvable) {
    Subspace n = nilradical(g, opt.seed);
    f.nilradical_dimension = n.dimension();
  }
  f.almost_abelian = f.derived_dimensions.size() > 1 && f.derived_dimensions[1] > 0 && abelian_ideal_of_codimension_one(g).has_value();
  if (j) {
    f.integrable = is_integrable(g, *j);
    f.abelian_J = is_abelian_J(g, *j);
  }
  return f;
}

VerdictReport check_report(const AlgebraDocument& doc, const DecideOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  VerdictReport r;
  r.document = doc;
  r.digest = document_digest(doc);
  LieAlgebra g = document_algebra(doc);
  if (doc.j) require_complex_square(*doc.j);
  r.facts = structure_facts(g, doc.j, {opt.tolerance, opt.seed});
  r.seed = opt.seed;
  r.tolerance = opt.tolerance;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

VerdictReport decide_report(const AlgebraDocument& doc, bool taming, bool skt, const DecideOptions& opt) {
  if (!doc.j) throw Error(ErrorCode::MissingJ, "document has no complex structure");
  auto t0 = std::chrono::steady_clock::now();
  VerdictReport r = check_report(doc, opt);
  LieAlgebra g = document_algebra(doc);
  ComplexStructure cs(g, *doc.j);
  if (taming) r.taming = decide_taming(g, cs, opt);
  if (skt) r.skt = decide_skt(g, cs, opt);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string report_json(const VerdictReport& r, bool include_timing) {
  json o;
  o["digest"] = r.digest;
  o["algebra"] = json::parse(emit_document(r.document, false));
  o["facts"] = facts_json(r.facts);
  json verdicts = json::array();
  if (r.taming) verdicts.push_back(verdict_json("taming", *r.taming));
  if (r.skt) verdicts.push_back(verdict_json("skt", *r.skt));
  o["verdicts"] = verdicts;
  o["seed"] = r.seed;
  std::ostringstream tol;
  tol << r.tolerance;
  o["tolerance"] = tol.str();
  if (include_timing) o["timing_seconds"] = r.seconds;
  return o.dump(2) + "\n";
}

std::string report_text(const VerdictReport& r) {
  std::ostringstream os;
  const auto& f = r.facts;
  os << "algebra " << (r.document.name.empty() ? "(unnamed)" : r.document.name) << "  dim " << r.document.dimension << "  digest " << r.digest
     << "\n";
  os << "  solvable " << (f.solvable ? "true" : "false") << "  nilpotent " << (f.nilpotent ? "true" : "false") << "  unimodular "
     << (f.unimodular ? "true" : "false") << "  type(I) " << flag_text(f.type_I) << "  almost-abelian " << (f.almost_abelian ? "true" : "false")
     << "\n";
  os << "  integrable " << flag_text(f.integrable) << "  abelian J " << flag_text(f.abelian_J) << "  nilradical dim " << f.nilradical_dimension
     << "\n";
  std::vector<std::string> names = r.document.basis;
  auto show = [&](const std::string& problem, const Verdict& v) {
    os << problem << ": " << verdict_name(v.kind) << "  (" << condition_name(v.condition) << " space dim " << v.space_dimension << ", route "
       << v.route << ")\n";
    if (v.witness) os << "  witness " << format_form(*v.witness, names) << "\n";
    if (v.direction) {
      os << "  degenerate direction X = (";
      for (std::size_t i = 0; i < v.direction->size(); ++i) os << (i ? ", " : "") << to_string((*v.direction)[i]);
      os << ")\n";
    }
    if (v.dual_witness) os << "  dual witness: identity pairs to zero with every form\n";
    for (const auto& d : v.diagnostics) os << "  note: " << d << "\n";
  };
  if (r.taming) show("taming", *r.taming);
  if (r.skt) show("skt", *r.skt);
  return os.str();
}

std::vector<std::string> verify_report(const std::string& text) {
  std::vector<std::string> problems;
  json o;
  try {
    o = json::parse(text);
  } catch (const json::parse_error& e) {
    return {std::string("report is not valid JSON: ") + e.what()};
  }
  try {
    AlgebraDocument doc = parse_document(o.at("algebra").dump());
    if (document_digest(doc) != o.at("digest").get<std::string>()) problems.push_back("digest does not match the embedded algebra");
    LieAlgebra g = document_algebra(doc);
    const int n = g.dimension();
    for (const auto& vj : o.at("verdicts")) {
      std::string problem = vj.at("problem").get<std::string>();
      if (!doc.j) {
        problems.push_back(problem + ": report has a verdict but no J");
        continue;
      }
      Verdict v = parse_verdict(vj, n);
      FormSpace space;
      if (v.condition == SpaceCondition::Closed) {
        space = closed_two_forms(g);
      } else {
        ComplexStructure cs(g, *doc.j);
        space = ddc_closed_11_forms(g, cs);
      }
      if (static_cast<int>(space.basis.size()) != v.space_dimension) problems.push_back(problem + ": recorded space dimension differs");
      if (v.kind != VerdictKind::Unknown && !v.witness && !v.direction && !v.dual_witness) {
        problems.push_back(problem + ": verdict without certificate");
        continue;
      }
      std::string why = verify_verdict(g, *doc.j, space, v);
      if (!why.empty()) problems.push_back(problem + ": " + why);
      for (const auto& e : v.evaluations)
        if (sgn(e) != 0) problems.push_back(problem + ": recorded evaluation is nonzero");
    }
  } catch (const std::exception& e) {
    problems.push_back(std::string("cannot read report: ") + e.what());
  }
  return problems;
}

bool RegressionTable::all_match() const {
  return std::all_of(lines.begin(), lines.end(), [](const TableLine& l) { return l.match; });
}

std::string RegressionTable::text() const {
  std::size_t w = 5;
  for (const auto& l : lines) w = std::max(w, l.label.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(w) + 2) << "entry" << std::setw(20) << "check" << std::setw(11) << "expected" << std::setw(11)
     << "computed" << "status\n";
  for (const auto& l : lines) {
    os << std::setw(static_cast<int>(w) + 2) << l.label << std::setw(20) << l.check << std::setw(11) << l.expected << std::setw(11) << l.computed
       << (l.match ? "MATCH" : "MISMATCH");
    if (!l.note.empty()) os << "  " << l.note;
    os << "\n";
  }
  std::size_t bad = std::count_if(lines.begin(), lines.end(), [](const TableLine& l) { return !l.match; });
  os << lines.size() - bad << "/" << lines.size() << " rows match\n";
  return os.str();
}

std::vector<CatalogEntry> regression_table_entries(const std::string& only) {
  std::vector<CatalogEntry> out;
  const std::string needle = lower(only);
  for (const auto& row : regression_rows()) {
    CatalogEntry e = build_entry(row.id, row.params);
    if (!needle.empty() && lower(e.id).find(needle) == std::string::npos && lower(e.label).find(needle) == std::string::npos) continue;
    out.push_back(std::move(e));
  }
  return out;
}

RegressionTable regression_table(const std::vector<CatalogEntry>& entries, const DecideOptions& opt) {
  RegressionTable t;
  for (const auto& e : entries) {
    AlgebraDocument doc = document_from_entry(e);
    bool want_taming = false, want_skt = false;
    for (const auto& x : e.expected) (x.problem == "taming" ? want_taming : want_skt) = true;
    VerdictReport r;
    std::vector<std::string> problems;
    std::string error;
    try {
      r = (want_taming || want_skt) ? decide_report(doc, want_taming, want_skt, opt) : check_report(doc, opt);
      problems = verify_report(report_json(r, false));
    } catch (const std::exception& ex) {
      error = ex.what();
    }
    for (const auto& x : e.expected) {
      TableLine l{e.label, x.problem, verdict_name(x.kind), "error", false, ""};
      const std::optional<Verdict>& v = x.problem == "taming" ? r.taming : r.skt;
      if (!error.empty()) {
        l.note = error;
      } else if (v) {
        l.computed = verdict_name(v->kind);
        l.match = v->kind == x.kind;
        for (const auto& p : problems)
          if (p.rfind(x.problem + ":", 0) == 0 || p.rfind("digest", 0) == 0) {
            l.match = false;
            l.note = "certificate: " + p;
          }
        if (l.match && v->kind != VerdictKind::Unknown) l.note = "certificate re-verified (" + v->route + ")";
      }
      t.lines.push_back(std::move(l));
    }
    for (const auto& [flag, want] : e.expected_flags) {
      TableLine l{e.label, "flag:" + flag, want ? "true" : "false", "n/a", false, ""};
      if (!error.empty()) {
        l.computed = "error";
        l.note = error;
        t.lines.push_back(std::move(l));
        continue;
      }
      std::optional<bool> got;
      const auto& f = r.facts;
      if (flag == "unimodular") got = f.unimodular;
      else if (flag == "nilpotent") got = f.nilpotent;
      else if (flag == "type_I") got = f.type_I;
      else if (flag == "abelian_J") got = f.abelian_J;
      else if (flag == "integrable") got = f.integrable;
      if (got) {
        l.computed = *got ? "true" : "false";
        l.match = *got == want;
      }
      t.lines.push_back(std::move(l));
    }
  }
  return t;
}

}  // namespace tamed
