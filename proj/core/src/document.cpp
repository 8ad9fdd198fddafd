#include "tamed/document.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace tamed {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

Rational coeff_of(const json& v, const std::string& where) {
  if (!v.is_string()) bad(where + ": coefficients must be strings \"p/q\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const Error& e) {
    bad(where + ": " + e.what());
  }
}

int index_of(const json& v, int n, const std::string& where) {
  if (!v.is_number_integer()) bad(where + ": index must be an integer");
  int k = v.get<int>();
  if (k < 0 || k >= n) bad(where + ": index " + std::to_string(k) + " out of range");
  return k;
}

Vec<Rational> vector_of(const json& v, int n, const std::string& where) {
  if (!v.is_array() || static_cast<int>(v.size()) != n) bad(where + ": expected " + std::to_string(n) + " coefficients");
  Vec<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(coeff_of(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

json vector_json(const Vec<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

std::vector<Vec<Rational>> list_of(const json& v, int n, const std::string& where) {
  if (!v.is_array()) bad(where + ": expected a list of vectors");
  std::vector<Vec<Rational>> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(vector_of(v[i], n, where + "[" + std::to_string(i) + "]"));
  return out;
}

json list_json(const std::vector<Vec<Rational>>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vector_json(v));
  return a;
}

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void canonicalise(std::vector<BracketEntry>& brackets) {
  std::map<std::pair<int, int>, std::map<int, Rational>> acc;
  for (const auto& e : brackets) {
    if (e.i == e.j) continue;
    int i = e.i, j = e.j;
    Rational s = 1;
    if (i > j) {
      std::swap(i, j);
      s = -1;
    }
    for (const auto& t : e.terms) acc[{i, j}][t.k] += s * t.coeff;
  }
  brackets.clear();
  for (const auto& [ij, ks] : acc) {
    BracketEntry e{ij.first, ij.second, {}};
    for (const auto& [k, c] : ks)
      if (sgn(c) != 0) e.terms.push_back({k, c});
    if (!e.terms.empty()) brackets.push_back(std::move(e));
  }
}

}  // namespace

bool operator==(const AlgebraDocument& a, const AlgebraDocument& b) {
  auto same_brackets = [](const std::vector<BracketEntry>& x, const std::vector<BracketEntry>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t n = 0; n < x.size(); ++n) {
      if (x[n].i != y[n].i || x[n].j != y[n].j || x[n].terms.size() != y[n].terms.size()) return false;
      for (std::size_t t = 0; t < x[n].terms.size(); ++t)
        if (x[n].terms[t].k != y[n].terms[t].k || x[n].terms[t].coeff != y[n].terms[t].coeff) return false;
    }
    return true;
  };
  return a.schema == b.schema && a.name == b.name && a.dimension == b.dimension && a.basis == b.basis &&
         same_brackets(a.brackets, b.brackets) && a.j == b.j && a.complement == b.complement && a.split_s == b.split_s &&
         a.split_h == b.split_h;
}

AlgebraDocument parse_document(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    bad("line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
  }
  if (!root.is_object()) bad("top level must be an object");
  AlgebraDocument d;
  if (root.contains("schema")) {
    if (!root["schema"].is_number_integer()) bad("schema: expected an integer");
    d.schema = root["schema"].get<int>();
    if (d.schema != 1) bad("schema: unsupported version " + std::to_string(d.schema));
  }
  if (root.contains("name")) {
    if (!root["name"].is_string()) bad("name: expected a string");
    d.name = root["name"].get<std::string>();
  }
  if (!root.contains("dimension") || !root["dimension"].is_number_integer()) bad("dimension: required integer");
  d.dimension = root["dimension"].get<int>();
  if (d.dimension < 0 || d.dimension > 62) bad("dimension: out of range");
  const int n = d.dimension;
  if (root.contains("basis")) {
    const auto& b = root["basis"];
    if (!b.is_array() || static_cast<int>(b.size()) != n) bad("basis: expected " + std::to_string(n) + " names");
    for (const auto& s : b) {
      if (!s.is_string()) bad("basis: names must be strings");
      d.basis.push_back(s.get<std::string>());
    }
  } else {
    for (int i = 0; i < n; ++i) d.basis.push_back("e" + std::to_string(i + 1));
  }
  if (root.contains("brackets")) {
    const auto& br = root["brackets"];
    if (!br.is_array()) bad("brackets: expected a list");
    for (std::size_t a = 0; a < br.size(); ++a) {
      std::string where = "brackets[" + std::to_string(a) + "]";
      const auto& e = br[a];
      if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("terms")) bad(where + ": needs i, j and terms");
      BracketEntry be{index_of(e["i"], n, where + ".i"), index_of(e["j"], n, where + ".j"), {}};
      if (!e["terms"].is_array()) bad(where + ".terms: expected a list");
      for (std::size_t t = 0; t < e["terms"].size(); ++t) {
        const auto& term = e["terms"][t];
        std::string tw = where + ".terms[" + std::to_string(t) + "]";
        if (!term.is_object() || !term.contains("k") || !term.contains("coeff")) bad(tw + ": needs k and coeff");
        be.terms.push_back({index_of(term["k"], n, tw + ".k"), coeff_of(term["coeff"], tw + ".coeff")});
      }
      d.brackets.push_back(std::move(be));
    }
  }
  canonicalise(d.brackets);
  if (root.contains("J") && !root["J"].is_null()) {
    auto rows = list_of(root["J"], n, "J");
    if (static_cast<int>(rows.size()) != n) bad("J: expected " + std::to_string(n) + " rows");
    d.j = RMatrix::from_rows(rows, n);
  }
  if (root.contains("subspaces")) {
    const auto& s = root["subspaces"];
    if (!s.is_object()) bad("subspaces: expected an object");
    if (s.contains("complement")) d.complement = list_of(s["complement"], n, "subspaces.complement");
    if (s.contains("s")) d.split_s = list_of(s["s"], n, "subspaces.s");
    if (s.contains("h")) d.split_h = list_of(s["h"], n, "subspaces.h");
  }
  return d;
}

std::string emit_document(const AlgebraDocument& d, bool pretty) {
  json root;
  root["schema"] = d.schema;
  if (!d.name.empty()) root["name"] = d.name;
  root["dimension"] = d.dimension;
  root["basis"] = d.basis;
  json br = json::array();
  for (const auto& e : d.brackets) {
    json terms = json::array();
    for (const auto& t : e.terms) terms.push_back({{"k", t.k}, {"coeff", to_string(t.coeff)}});
    br.push_back({{"i", e.i}, {"j", e.j}, {"terms", terms}});
  }
  root["brackets"] = br;
  if (d.j) {
    std::vector<Vec<Rational>> rows;
    for (int r = 0; r < d.j->rows(); ++r) rows.push_back(d.j->row(r));
    root["J"] = list_json(rows);
  }
  if (d.complement || d.split_s || d.split_h) {
    json s = json::object();
    if (d.complement) s["complement"] = list_json(*d.complement);
    if (d.split_s) s["s"] = list_json(*d.split_s);
    if (d.split_h) s["h"] = list_json(*d.split_h);
    root["subspaces"] = s;
  }
  return pretty ? root.dump(2) + "\n" : root.dump();
}

LieAlgebra document_algebra(const AlgebraDocument& d, bool validate) { return LieAlgebra(d.dimension, d.basis, d.brackets, validate); }

AlgebraDocument document_from_algebra(const LieAlgebra& g, const std::optional<RMatrix>& j, const std::string& name) {
  AlgebraDocument d;
  d.name = name;
  d.dimension = g.dimension();
  d.basis = g.names();
  d.brackets = g.entries();
  canonicalise(d.brackets);
  d.j = j;
  return d;
}

AlgebraDocument document_from_entry(const CatalogEntry& e) {
  AlgebraDocument d = document_from_algebra(e.algebra, e.j, e.label);
  if (e.complement) d.complement = e.complement->basis();
  if (e.split_s) d.split_s = e.split_s->basis();
  if (e.split_h) d.split_h = e.split_h->basis();
  return d;
}

std::string document_digest(const AlgebraDocument& d) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : emit_document(d, false)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace tamed
