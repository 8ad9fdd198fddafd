#include "tamed/catalog.hpp"

#include <sstream>

namespace tamed {

namespace {

class Table {
 public:
  explicit Table(std::vector<std::string> names) : names_(std::move(names)) {}

  int at(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    throw Error(ErrorCode::InvalidArgument, "no basis element " + name);
  }

  // [a, b] += c * k
  void put(const std::string& a, const std::string& b, const std::string& k, const Rational& c) { put(at(a), at(b), at(k), c); }
  void put(int a, int b, int k, const Rational& c) {
    if (sgn(c) == 0) return;
    if (a > b) {
      std::swap(a, b);
      terms_[{a, b}][k] -= c;
    } else {
      terms_[{a, b}][k] += c;
    }
  }

  LieAlgebra build() const {
    std::vector<BracketEntry> entries;
    for (const auto& [ij, ks] : terms_) {
      BracketEntry e{ij.first, ij.second, {}};
      for (const auto& [k, c] : ks)
        if (sgn(c) != 0) e.terms.push_back({k, c});
      if (!e.terms.empty()) entries.push_back(std::move(e));
    }
    return LieAlgebra(static_cast<int>(names_.size()), names_, entries);
  }

  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::pair<int, int>, std::map<int, Rational>> terms_;
};

// J a = b, J b = -a
RMatrix pairing_j(const Table& t, const std::vector<std::pair<std::string, std::string>>& pairs) {
  const int n = static_cast<int>(t.names().size());
  RMatrix j(n, n);
  for (const auto& [a, b] : pairs) {
    j(t.at(b), t.at(a)) = 1;
    j(t.at(a), t.at(b)) = -1;
  }
  return j;
}

Subspace span_of(const LieAlgebra& g, const std::vector<std::string>& names) {
  std::vector<Vec<Rational>> vs;
  for (const auto& nm : names) vs.push_back(unit_vector(g.dimension(), g.index_of(nm)));
  return Subspace(g, vs);
}

std::string rat(const Rational& r) { return to_string(r); }

void finish(CatalogEntry& e) {
  const LieAlgebra& g = e.algebra;
  if (e.j) {
    ComplexStructure cs(g, *e.j);
    auto it = e.expected_flags.find("integrable");
    bool want = it == e.expected_flags.end() || it->second;
    if (want && !cs.is_integrable()) throw Error(ErrorCode::NotIntegrable, e.id + ": catalog J is not integrable");
    e.expected_flags["integrable"] = cs.is_integrable();
  }
  if (e.complement) nilpotent_complement(g, *e.complement);
  if (e.split_s && !e.split_s->is_subalgebra()) throw Error(ErrorCode::InvalidArgument, e.id + ": declared s is not a subalgebra");
  if (e.split_h && !e.split_h->is_ideal()) throw Error(ErrorCode::InvalidArgument, e.id + ": declared h is not an ideal");
  if (e.label.empty()) {
    e.label = e.id;
    if (!e.params.empty()) {
      std::string p;
      for (const auto& [k, v] : e.params) p += (p.empty() ? "" : ",") + k + "=" + v;
      e.label += "(" + p + ")";
    }
  }
}

int parse_int(const std::string& s, const std::string& name) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidArgument, "parameter " + name + " expects an integer, got '" + s + "'");
  }
}

std::vector<Rational> parse_list(const std::string& s) {
  std::vector<Rational> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

RationalMatrix parse_matrix(const std::string& s) {
  RationalMatrix out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string row;
  while (std::getline(ss, row, ';')) out.push_back(parse_list(row));
  return out;
}

std::string join(const std::vector<Rational>& v, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? std::string(1, sep) : "") + rat(v[i]);
  return out;
}

std::string join(const RationalMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) out += (i ? ";" : "") + join(m[i]);
  return out;
}

std::string get(const ParamMap& p, const std::string& key, const std::string& def) {
  auto it = p.find(key);
  return it == p.end() ? def : it->second;
}

}  // namespace

LieAlgebra subalgebra_algebra(const LieAlgebra& g, const Subspace& s) {
  if (!s.is_subalgebra()) throw Error(ErrorCode::InvalidArgument, "subspace is not a subalgebra");
  const auto& b = s.basis();
  std::vector<std::string> names;
  std::vector<BracketEntry> entries;
  for (int i = 0; i < s.dimension(); ++i) names.push_back("v" + std::to_string(i + 1));
  for (int i = 0; i < s.dimension(); ++i)
    for (int j = i + 1; j < s.dimension(); ++j) {
      Vec<Rational> c = s.coordinates(g.bracket(b[i], b[j]));
      BracketEntry e{i, j, {}};
      for (int k = 0; k < s.dimension(); ++k)
        if (sgn(c[k]) != 0) e.terms.push_back({k, c[k]});
      if (!e.terms.empty()) entries.push_back(std::move(e));
    }
  return LieAlgebra(s.dimension(), names, entries);
}

CatalogEntry build_torus(int dimension) {
  if (dimension < 2 || dimension % 2) throw Error(ErrorCode::InvalidArgument, "torus needs an even dimension >= 2");
  std::vector<std::string> names;
  for (int i = 0; i < dimension; ++i) names.push_back("e" + std::to_string(i + 1));
  Table t(names);
  CatalogEntry e;
  e.id = "torus";
  e.description = "abelian algebra R^n with the standard J";
  e.params["n"] = std::to_string(dimension);
  e.algebra = t.build();
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < dimension; i += 2) pairs.emplace_back(names[i], names[i + 1]);
  e.j = pairing_j(t, pairs);
  e.complement = Subspace(e.algebra, {});
  e.expected = {{"taming", VerdictKind::Exists, "flat Kaehler"}, {"skt", VerdictKind::Exists, "flat Kaehler"}};
  e.expected_flags = {{"nilpotent", true}, {"unimodular", true}, {"type_I", true}, {"abelian_J", true}};
  finish(e);
  return e;
}

CatalogEntry build_heisenberg() {
  Table t({"x", "y", "z"});
  t.put("x", "y", "z", 1);
  CatalogEntry e;
  e.id = "heisenberg";
  e.description = "3-dimensional Heisenberg algebra";
  e.algebra = t.build();
  e.expected_flags = {{"nilpotent", true}, {"unimodular", true}, {"type_I", true}};
  finish(e);
  return e;
}

CatalogEntry build_heisenberg_r(bool integrable) {
  Table t({"e1", "e2", "e3", "e4"});
  t.put("e1", "e2", "e3", 1);
  CatalogEntry e;
  e.id = integrable ? "heis-r" : "heis-r-nonint";
  e.description = integrable ? "Heisenberg plus a line with the integrable J e1 = e2, J e3 = e4"
                             : "Heisenberg plus a line with the non-integrable J e1 = e3, J e2 = e4";
  e.algebra = t.build();
  e.j = integrable ? pairing_j(t, {{"e1", "e2"}, {"e3", "e4"}}) : pairing_j(t, {{"e1", "e3"}, {"e2", "e4"}});
  e.complement = Subspace(e.algebra, {});
  e.expected_flags = {{"nilpotent", true}, {"unimodular", true}, {"type_I", true}, {"integrable", integrable}};
  if (integrable) {
    e.expected = {{"taming", VerdictKind::NotExists, "non-abelian nilpotent: no taming form"},
                  {"skt", VerdictKind::Exists, "invariant pluriclosed metric in complex dimension two"}};
    e.expected_flags["abelian_J"] = true;
  }
  finish(e);
  return e;
}

CatalogEntry build_filiform4() {
  Table t({"e1", "e2", "e3", "e4"});
  t.put("e1", "e2", "e3", 1);
  t.put("e1", "e3", "e4", 1);
  CatalogEntry e;
  e.id = "filiform4";
  e.description = "4-dimensional 3-step nilpotent algebra";
  e.algebra = t.build();
  e.expected_flags = {{"nilpotent", true}, {"unimodular", true}, {"type_I", true}};
  finish(e);
  return e;
}

CatalogEntry build_r2() {
  Table t({"A", "B"});
  t.put("A", "B", "B", 1);
  CatalogEntry e;
  e.id = "r2";
  e.description = "non-abelian 2-dimensional algebra with J A = B";
  e.algebra = t.build();
  e.j = pairing_j(t, {{"A", "B"}});
  e.complement = span_of(e.algebra, {"A"});
  e.expected = {{"taming", VerdictKind::Exists, "any area form tames J up to sign"}};
  e.expected_flags = {{"nilpotent", false}, {"unimodular", false}, {"type_I", false}, {"abelian_J", false}};
  e.notes.push_back("J is read as J A = B (the defining relation), so J B = -A");
  finish(e);
  return e;
}

CatalogEntry build_OT(int s, int t, RationalMatrix b, RationalMatrix c) {
  if (s < 1 || t < 1) throw Error(ErrorCode::InvalidArgument, "OT needs s >= 1 and t >= 1");
  if (b.empty()) b.assign(s, std::vector<Rational>(t, Rational(1, t)));
  if (c.empty()) {
    c.assign(s, std::vector<Rational>(t));
    for (int i = 0; i < s; ++i)
      for (int k = 0; k < t; ++k) c[i][k] = i + k + 1;
  }
  auto shape_ok = [&](const RationalMatrix& m) {
    if (static_cast<int>(m.size()) != s) return false;
    for (const auto& r : m)
      if (static_cast<int>(r.size()) != t) return false;
    return true;
  };
  if (!shape_ok(b) || !shape_ok(c)) throw Error(ErrorCode::DimensionMismatch, "OT parameters must be s x t");
  for (int i = 0; i < s; ++i) {
    Rational total = 0;
    for (int k = 0; k < t; ++k) total += b[i][k];
    if (total != 1) throw Error(ErrorCode::NotUnimodular, "row " + std::to_string(i + 1) + " of b must sum to 1, got " + rat(total));
  }
  std::vector<std::string> names;
  for (int i = 1; i <= s; ++i) names.push_back("a" + std::to_string(i));
  for (int i = 1; i <= s; ++i) names.push_back("b" + std::to_string(i));
  for (int k = 1; k <= 2 * t; ++k) names.push_back("c" + std::to_string(k));
  Table tb(names);
  auto cname = [](int k) { return "c" + std::to_string(k); };
  for (int i = 0; i < s; ++i) {
    std::string a = "a" + std::to_string(i + 1);
    tb.put(a, "b" + std::to_string(i + 1), "b" + std::to_string(i + 1), 1);
    for (int k = 0; k < t; ++k) {
      Rational half = b[i][k] / 2;
      std::string odd = cname(2 * k + 1), even = cname(2 * k + 2);
      tb.put(a, odd, odd, -half);
      tb.put(a, odd, even, c[i][k]);
      tb.put(a, even, odd, -c[i][k]);
      tb.put(a, even, even, -half);
    }
  }
  CatalogEntry e;
  e.id = "ot";
  e.description = "Oeljeklaus-Toma type algebra (r2)^s semidirect C^t";
  e.params = {{"s", std::to_string(s)}, {"t", std::to_string(t)}, {"b", join(b)}, {"c", join(c)}};
  e.label = "ot(" + std::to_string(s) + "," + std::to_string(t) + ")";
  e.algebra = tb.build();
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::string> sp, hp, cp;
  for (int i = 1; i <= s; ++i) {
    pairs.emplace_back("a" + std::to_string(i), "b" + std::to_string(i));
    sp.push_back("a" + std::to_string(i));
    sp.push_back("b" + std::to_string(i));
    cp.push_back("a" + std::to_string(i));
  }
  for (int k = 0; k < t; ++k) {
    pairs.emplace_back(cname(2 * k + 1), cname(2 * k + 2));
    hp.push_back(cname(2 * k + 1));
    hp.push_back(cname(2 * k + 2));
  }
  e.j = pairing_j(tb, pairs);
  e.complement = span_of(e.algebra, cp);
  e.split_s = span_of(e.algebra, sp);
  e.split_h = span_of(e.algebra, hp);
  e.expected.push_back({"taming", VerdictKind::NotExists, "no Hermitian-symplectic structure"});
  if (s == 1 && t == 1) e.expected.push_back({"skt", VerdictKind::Exists, "OT(1,1) is SKT"});
  if (s >= 2 && t == 1) e.expected.push_back({"skt", VerdictKind::NotExists, "no SKT structure for s >= 2, t = 1"});
  e.expected_flags = {{"nilpotent", false}, {"unimodular", true}, {"type_I", false}};
  e.notes.push_back("d b_i = -a_i ^ b_i read with the index i on both factors");
  e.notes.push_back("J on the r2 factors is J a_i = b_i");
  finish(e);
  return e;
}

CatalogEntry build_C_semidirect_C2m(const std::vector<Rational>& a) {
  const int m = static_cast<int>(a.size());
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "need at least one weight");
  for (const auto& x : a)
    if (sgn(x) == 0) throw Error(ErrorCode::ZeroParameter, "weights must be nonzero");
  std::vector<std::string> names{"x", "y"};
  for (int k = 1; k <= 2 * m; ++k) {
    names.push_back("u" + std::to_string(k));
    names.push_back("v" + std::to_string(k));
  }
  Table t(names);
  std::vector<std::pair<std::string, std::string>> pairs{{"x", "y"}};
  RForm omega(static_cast<int>(names.size()), 2);
  omega.add(bit(t.at("x")) | bit(t.at("y")), 2);
  for (int i = 0; i < m; ++i) {
    std::string u1 = "u" + std::to_string(2 * i + 1), v1 = "v" + std::to_string(2 * i + 1);
    std::string u2 = "u" + std::to_string(2 * i + 2), v2 = "v" + std::to_string(2 * i + 2);
    t.put("x", u1, u1, a[i]);
    t.put("x", v1, v1, a[i]);
    t.put("x", u2, u2, -a[i]);
    t.put("x", v2, v2, -a[i]);
    pairs.emplace_back(u1, v1);
    pairs.emplace_back(u2, v2);
    omega.add(bit(t.at(u1)) | bit(t.at(u2)), 2);
    omega.add(bit(t.at(v1)) | bit(t.at(v2)), 2);
  }
  CatalogEntry e;
  e.id = "ex41";
  e.description = "C semidirect C^{2m} with weights +-a_i, pseudo-Kaehler";
  e.params = {{"a", join(a)}};
  e.algebra = t.build();
  e.j = pairing_j(t, pairs);
  e.complement = span_of(e.algebra, {"x", "y"});
  e.bundled_forms.push_back(omega);
  e.expected = {{"taming", VerdictKind::NotExists, "no taming symplectic structure"},
                {"skt", VerdictKind::NotExists, "no SKT structure"}};
  e.expected_flags = {{"nilpotent", false}, {"unimodular", true}, {"type_I", false}};
  finish(e);
  return e;
}

CatalogEntry build_yamada(const Rational& t0) {
  if (sgn(t0) == 0) throw Error(ErrorCode::ZeroParameter, "t0 must be nonzero");
  std::vector<std::string> names{"A1", "A2", "W1", "W2"};
  for (const std::string p : {"", "'"})
    for (const std::string l : {"X", "Y", "Z"})
      for (int j = 1; j <= 4; ++j) names.push_back(l + std::to_string(j) + p);
  Table t(names);
  t.put("A1", "A2", "W1", 1);
  const Rational wx[] = {t0, t0, -t0, -t0};
  const Rational wy[] = {-2 * t0, -2 * t0, 2 * t0, 2 * t0};
  const Rational wz[] = {-t0, -t0, t0, t0};
  std::vector<std::pair<std::string, std::string>> pairs{{"A1", "A2"}, {"W1", "W2"}};
  for (const auto& [a, p] : std::vector<std::pair<std::string, std::string>>{{"A1", ""}, {"A2", "'"}}) {
    auto nm = [&p](const std::string& l, int j) { return l + std::to_string(j) + p; };
    t.put(nm("X", 1), nm("Y", 1), nm("Z", 1), 1);
    t.put(nm("X", 3), nm("Y", 3), nm("Z", 3), 1);
    t.put(nm("X", 2), nm("Y", 1), nm("Z", 2), 1);
    t.put(nm("X", 4), nm("Y", 3), nm("Z", 4), 1);
    for (int j = 1; j <= 4; ++j) {
      t.put(a, nm("X", j), nm("X", j), wx[j - 1]);
      t.put(a, nm("Y", j), nm("Y", j), wy[j - 1]);
      t.put(a, nm("Z", j), nm("Z", j), wz[j - 1]);
    }
    for (const std::string l : {"X", "Y", "Z"}) {
      pairs.emplace_back(nm(l, 1), nm(l, 2));
      pairs.emplace_back(nm(l, 3), nm(l, 4));
    }
  }
  CatalogEntry e;
  e.id = "yamada";
  e.description = "20-dimensional pseudo-Kaehler solvable algebra";
  e.params = {{"t0", rat(t0)}};
  e.algebra = t.build();
  e.j = pairing_j(t, pairs);
  e.split_s = span_of(e.algebra, {"A1", "A2", "W1", "W2"});
  std::vector<std::string> rest(names.begin() + 4, names.end());
  e.split_h = span_of(e.algebra, rest);
  e.complement = e.split_s;
  e.expected = {{"skt", VerdictKind::NotExists, "no SKT structure compatible with J"}};
  e.expected_flags = {{"nilpotent", false}, {"unimodular", true}, {"type_I", false}};
  e.notes.push_back("J Y3' = Y4' on the primed copy");
  finish(e);
  return e;
}

CatalogEntry build_s_minus1_0() {
  Table t({"f1", "f2", "e1", "e2", "e3", "e4"});
  t.put("f1", "e1", "e1", 1);
  t.put("f2", "e2", "e1", 1);
  t.put("f1", "e2", "e2", 1);
  t.put("f2", "e1", "e2", -1);
  t.put("f1", "e3", "e3", -1);
  t.put("f2", "e4", "e3", -1);
  t.put("f1", "e4", "e4", -1);
  t.put("f2", "e3", "e4", 1);
  CatalogEntry e;
  e.id = "s-1-0";
  e.description = "6-dimensional unimodular algebra with abelian J";
  e.algebra = t.build();
  e.j = pairing_j(t, {{"f1", "f2"}, {"e1", "e2"}, {"e3", "e4"}});
  e.complement = span_of(e.algebra, {"f1", "f2"});
  e.split_s = e.complement;
  e.split_h = span_of(e.algebra, {"e1", "e2", "e3", "e4"});
  e.expected = {{"taming", VerdictKind::NotExists, "no symplectic form taming J"}};
  e.expected_flags = {{"nilpotent", false}, {"unimodular", true}, {"type_I", false}, {"abelian_J", true}};
  finish(e);
  return e;
}

CatalogEntry build_tau_tau_prime_30() {
  Table t({"e1", "e2", "e3", "e4"});
  t.put("e1", "e2", "e3", -1);
  t.put("e1", "e3", "e2", 1);
  CatalogEntry e;
  e.id = "tt30-r";
  e.description = "almost abelian type (I) algebra plus a central line";
  e.algebra = t.build();
  e.j = pairing_j(t, {{"e1", "e4"}, {"e2", "e3"}});
  e.complement = span_of(e.algebra, {"e1"});
  e.expected = {{"taming", VerdictKind::Exists, "Kaehler at the invariant level"}};
  e.expected_flags = {{"nilpotent", false}, {"unimodular", true}, {"type_I", true}};
  e.notes.push_back("J e1 = e4, J e2 = e3 is a catalog choice");
  finish(e);
  return e;
}

CatalogEntry build_aa6(const Rational& a, const Rational& b) {
  Table t({"x", "jx", "y", "jy", "z", "jz"});
  // dx = d(jx) = 0, dy = -x^jx, d(jy) = x^(a z + b jz), dz = -x^y, d(jz) = -x^jy
  t.put("x", "jx", "y", 1);
  t.put("x", "y", "z", 1);
  t.put("x", "jy", "jz", 1);
  t.put("x", "z", "jy", -a);
  t.put("x", "jz", "jy", -b);
  CatalogEntry e;
  e.id = "aa6";
  e.description = "6-dimensional almost abelian family with [X, JX] != 0";
  e.params = {{"a", rat(a)}, {"b", rat(b)}};
  e.algebra = t.build();
  e.j = pairing_j(t, {{"x", "jx"}, {"y", "jy"}, {"z", "jz"}});
  e.complement = span_of(e.algebra, {"x"});
  e.expected = {{"taming", VerdictKind::NotExists, "Omega(Z, JZ) = 0 for every closed Omega"}};
  // ad_X has eigenvalues 0 and +-sqrt(-b)
  e.expected_flags = {{"nilpotent", sgn(b) == 0}, {"unimodular", true}, {"type_I", sgn(b) >= 0}, {"integrable", sgn(a) == 0 && sgn(b) == 0}};
  e.notes.push_back("structure equations taken as written; J is integrable only for a = b = 0");
  finish(e);
  return e;
}

CatalogEntry build_aa6_integrable(const Rational& a, const Rational& b) {
  Table t({"x", "jx", "y", "jy", "z", "jz"});
  t.put("x", "jx", "y", 1);
  t.put("x", "y", "z", 1);
  t.put("x", "jy", "jz", 1);
  t.put("x", "z", "y", -b);
  t.put("x", "z", "jy", -a);
  t.put("x", "jz", "y", a);
  t.put("x", "jz", "jy", -b);
  CatalogEntry e;
  e.id = "aa6-int";
  e.description = "J-linear completion of the aa6 family: ad_X commutes with J on the nilradical";
  e.params = {{"a", rat(a)}, {"b", rat(b)}};
  e.algebra = t.build();
  e.j = pairing_j(t, {{"x", "jx"}, {"y", "jy"}, {"z", "jz"}});
  e.complement = span_of(e.algebra, {"x"});
  // eigenvalues of ad_X satisfy l^2 = -(b + a i): type (I) exactly when a = 0 and b >= 0
  bool type_one = sgn(a) == 0 && sgn(b) >= 0;
  if (!type_one) e.expected = {{"taming", VerdictKind::NotExists, "almost abelian, not of type (I)"}};
  e.expected_flags = {{"nilpotent", sgn(a) == 0 && sgn(b) == 0}, {"unimodular", true}, {"type_I", type_one}};
  finish(e);
  return e;
}

CatalogEntry build_aff(const std::string& id, const std::vector<std::vector<Vec<Rational>>>& table) {
  const int k = static_cast<int>(table.size());
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != k) throw Error(ErrorCode::DimensionMismatch, "multiplication table must be square");
    for (const auto& v : row)
      if (static_cast<int>(v.size()) != k) throw Error(ErrorCode::DimensionMismatch, "product has the wrong length");
  }
  auto mul = [&](const Vec<Rational>& u, const Vec<Rational>& v) {
    Vec<Rational> out(k);
    for (int p = 0; p < k; ++p)
      for (int q = 0; q < k; ++q) {
        if (sgn(u[p]) == 0 || sgn(v[q]) == 0) continue;
        for (int r = 0; r < k; ++r) out[r] += u[p] * v[q] * table[p][q][r];
      }
    return out;
  };
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q)
      if (table[p][q] != table[q][p]) throw Error(ErrorCode::NotCommutative, "a" + std::to_string(p + 1) + " a" + std::to_string(q + 1));
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < k; ++q) {
      for (int r = 0; r < k; ++r) {
        auto ep = unit_vector(k, p), eq = unit_vector(k, q), er = unit_vector(k, r);
        if (mul(mul(ep, eq), er) != mul(ep, mul(eq, er)))
          throw Error(ErrorCode::NotAssociative, "(a" + std::to_string(p + 1) + " a" + std::to_string(q + 1) + ") a" + std::to_string(r + 1));
      }
    }
  std::vector<std::string> names;
  for (int p = 1; p <= k; ++p) names.push_back("x" + std::to_string(p));
  for (int p = 1; p <= k; ++p) names.push_back("y" + std::to_string(p));
  Table t(names);
  std::vector<std::string> xs;
  for (int p = 0; p < k; ++p) {
    xs.push_back(names[p]);
    for (int q = 0; q < k; ++q)
      for (int r = 0; r < k; ++r) t.put(p, k + q, k + r, table[p][q][r]);
  }
  CatalogEntry e;
  e.id = id;
  e.description = "aff(A) = A + A with J(x, y) = (y, -x)";
  e.algebra = t.build();
  const int n = 2 * k;
  RMatrix j(n, n);
  for (int p = 0; p < k; ++p) {
    j(k + p, p) = -1;  // J x_p = -y_p
    j(p, k + p) = 1;   // J y_p = x_p
  }
  e.j = j;
  // the x-part is an abelian complement
  e.complement = span_of(e.algebra, xs);
  e.expected_flags = {{"abelian_J", true}};
  finish(e);
  return e;
}

CatalogEntry build_nakamura() {
  Table t({"a", "ja", "b1", "jb1", "b2", "jb2"});
  // complex brackets [A, B1] = B1, [A, B2] = -B2 written over R
  for (const auto& [bn, sg] : std::vector<std::pair<std::string, int>>{{"1", 1}, {"2", -1}}) {
    std::string b = "b" + bn, jb = "jb" + bn;
    t.put("a", b, b, sg);
    t.put("a", jb, jb, sg);
    t.put("ja", b, jb, sg);
    t.put("ja", jb, b, -sg);
  }
  CatalogEntry e;
  e.id = "nakamura";
  e.description = "complex parallelizable solvable algebra C semidirect C^2";
  e.algebra = t.build();
  e.j = pairing_j(t, {{"a", "ja"}, {"b1", "jb1"}, {"b2", "jb2"}});
  e.complement = span_of(e.algebra, {"a", "ja"});
  e.split_s = e.complement;
  e.split_h = span_of(e.algebra, {"b1", "jb1", "b2", "jb2"});
  e.expected = {{"taming", VerdictKind::NotExists, "no taming form"},
                {"skt", VerdictKind::NotExists, "complex parallelizable non-nilpotent: no SKT structure"}};
  e.expected_flags = {{"nilpotent", false}, {"unimodular", true}, {"type_I", false}};
  finish(e);
  return e;
}

CatalogEntry build_doubling5() {
  Table t({"A", "P", "Q", "R", "T"});
  t.put("A", "P", "P", 1);
  t.put("A", "P", "Q", 1);
  t.put("A", "Q", "P", -1);
  t.put("A", "Q", "Q", 1);
  t.put("P", "Q", "R", 1);
  t.put("A", "R", "R", 2);
  t.put("A", "T", "T", -3);
  CatalogEntry e;
  e.id = "doubling5";
  e.description = "5-dimensional solvable algebra whose first weight pair brackets nontrivially";
  e.algebra = t.build();
  e.complement = span_of(e.algebra, {"A"});
  e.expected_flags = {{"nilpotent", false}, {"unimodular", true}, {"type_I", false}};
  finish(e);
  return e;
}

namespace {

std::vector<std::vector<Vec<Rational>>> table_R() { return {{{1}}}; }
std::vector<std::vector<Vec<Rational>>> table_eps() { return {{{0}}}; }
std::vector<std::vector<Vec<Rational>>> table_C() { return {{{1, 0}, {0, 1}}, {{0, 1}, {-1, 0}}}; }
std::vector<std::vector<Vec<Rational>>> table_R2() { return {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}}; }

CatalogEntry aff_entry(const std::string& id, const std::vector<std::vector<Vec<Rational>>>& tab, std::optional<bool> unimodular,
                       std::vector<Expectation> expected = {}) {
  CatalogEntry e = build_aff(id, tab);
  if (unimodular) e.expected_flags["unimodular"] = *unimodular;
  e.expected = std::move(expected);
  return e;
}

void check_keys(const CatalogSpec& spec, const ParamMap& p) {
  for (const auto& [k, v] : p) {
    bool known = false;
    for (const auto& ps : spec.params) known = known || ps.name == k;
    if (!known) throw Error(ErrorCode::InvalidArgument, spec.id + " has no parameter " + k);
  }
}

std::vector<CatalogSpec> make_catalog() {
  std::vector<CatalogSpec> c;
  c.push_back({"torus", "abelian R^n, standard J", {{"n", "int", "4", "even, >= 2"}},
               [](const ParamMap& p) { return build_torus(parse_int(get(p, "n", "4"), "n")); }});
  c.push_back({"heisenberg", "3-dimensional Heisenberg algebra (no J)", {}, [](const ParamMap&) { return build_heisenberg(); }});
  c.push_back({"heis-r", "Heisenberg plus a line, integrable J", {}, [](const ParamMap&) { return build_heisenberg_r(true); }});
  c.push_back({"heis-r-nonint", "Heisenberg plus a line, non-integrable J", {}, [](const ParamMap&) { return build_heisenberg_r(false); }});
  c.push_back({"filiform4", "4-dimensional 3-step nilpotent algebra (no J)", {}, [](const ParamMap&) { return build_filiform4(); }});
  c.push_back({"r2", "non-abelian 2-dimensional algebra", {}, [](const ParamMap&) { return build_r2(); }});
  c.push_back({"ot", "OT-type algebra (r2)^s semidirect C^t",
               {{"s", "int", "1", ">= 1"},
                {"t", "int", "1", ">= 1"},
                {"b", "rational-matrix", "", "rows 'x,y;z,w', each row sums to 1 (default 1/t)"},
                {"c", "rational-matrix", "", "rows 'x,y;z,w' (default c_ik = i+k-1)"}},
               [](const ParamMap& p) {
                 return build_OT(parse_int(get(p, "s", "1"), "s"), parse_int(get(p, "t", "1"), "t"), parse_matrix(get(p, "b", "")),
                                 parse_matrix(get(p, "c", "")));
               }});
  c.push_back({"ex41", "C semidirect C^{2m}, pseudo-Kaehler", {{"a", "rational-list", "1", "nonzero entries, one per pair"}},
               [](const ParamMap& p) { return build_C_semidirect_C2m(parse_list(get(p, "a", "1"))); }});
  c.push_back({"yamada", "28-dimensional pseudo-Kaehler algebra", {{"t0", "rational", "1", "nonzero"}},
               [](const ParamMap& p) { return build_yamada(parse_rational(get(p, "t0", "1"))); }});
  c.push_back({"s-1-0", "6-dimensional algebra with abelian J", {}, [](const ParamMap&) { return build_s_minus1_0(); }});
  c.push_back({"tt30-r", "almost abelian type (I) algebra plus a line", {}, [](const ParamMap&) { return build_tau_tau_prime_30(); }});
  c.push_back({"aa6", "6-dimensional almost abelian family (J integrable only at a = b = 0)", {{"a", "rational", "0", ""}, {"b", "rational", "-1", ""}},
               [](const ParamMap& p) { return build_aa6(parse_rational(get(p, "a", "0")), parse_rational(get(p, "b", "-1"))); }});
  c.push_back({"aa6-int", "integrable completion of the aa6 family", {{"a", "rational", "-2", ""}, {"b", "rational", "0", ""}},
               [](const ParamMap& p) { return build_aa6_integrable(parse_rational(get(p, "a", "-2")), parse_rational(get(p, "b", "0"))); }});
  c.push_back({"aff-r", "aff(R)", {}, [](const ParamMap&) {
                 return aff_entry("aff-r", table_R(), false, {{"taming", VerdictKind::Exists, "2-dimensional"}});
               }});
  c.push_back({"aff-c", "aff(C)", {}, [](const ParamMap&) { return aff_entry("aff-c", table_C(), false); }});
  c.push_back({"aff-r2", "aff(R + R) = aff(R) + aff(R)", {}, [](const ParamMap&) { return aff_entry("aff-r2", table_R2(), false); }});
  c.push_back({"aff-eps", "aff(R eps), eps^2 = 0", {}, [](const ParamMap&) {
                 CatalogEntry e = aff_entry("aff-eps", table_eps(), true, {{"taming", VerdictKind::Exists, "abelian"}});
                 e.expected_flags["nilpotent"] = true;
                 return e;
               }});
  c.push_back({"nakamura", "complex parallelizable C semidirect C^2", {}, [](const ParamMap&) { return build_nakamura(); }});
  c.push_back({"doubling5", "5-dimensional algebra for the weight doubling step (no J)", {}, [](const ParamMap&) { return build_doubling5(); }});
  return c;
}

}  // namespace

const std::vector<CatalogSpec>& catalog() {
  static const std::vector<CatalogSpec> c = make_catalog();
  return c;
}

const CatalogSpec& find_spec(const std::string& id) {
  for (const auto& s : catalog())
    if (s.id == id) return s;
  throw Error(ErrorCode::UnknownEntry, "no catalog entry '" + id + "'");
}

CatalogEntry build_entry(const std::string& id, const ParamMap& params) {
  const CatalogSpec& spec = find_spec(id);
  check_keys(spec, params);
  return spec.build(params);
}

std::vector<TableRow> regression_rows() {
  std::vector<TableRow> rows;
  for (const auto& [s, t] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}})
    rows.push_back({"ot", {{"s", std::to_string(s)}, {"t", std::to_string(t)}}});
  rows.push_back({"ex41", {{"a", "1"}}});
  rows.push_back({"ex41", {{"a", "1,2"}}});
  rows.push_back({"yamada", {}});
  rows.push_back({"s-1-0", {}});
  for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{{"0", "-1"}, {"1", "0"}, {"2", "3"}, {"-4", "1"}, {"1/2", "-9/4"}})
    rows.push_back({"aa6", {{"a", a}, {"b", b}}});
  // -(b + a i) is a square in Q(i) here, so the weights stay exact
  for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{{"-2", "0"}, {"-4", "3"}})
    rows.push_back({"aa6-int", {{"a", a}, {"b", b}}});
  rows.push_back({"tt30-r", {}});
  for (const std::string id : {"aff-r", "aff-c", "aff-r2"}) rows.push_back({id, {}});
  rows.push_back({"torus", {}});
  rows.push_back({"heis-r", {}});
  rows.push_back({"nakamura", {}});
  return rows;
}

}  // namespace tamed
