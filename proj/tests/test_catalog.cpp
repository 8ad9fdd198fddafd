#include <functional>
#include <optional>

#include "doctest.h"
#include "tamed/catalog.hpp"

using namespace tamed;

namespace {

std::optional<ErrorCode> code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("every entry builds with defaults and is consistent") {
  for (const auto& spec : catalog()) {
    CAPTURE(spec.id);
    CatalogEntry e = build_entry(spec.id);
    CHECK(e.id == spec.id);
    CHECK(check_jacobi(e.algebra).ok);
    if (e.j) {
      RMatrix sq = *e.j * *e.j;
      CHECK(sq == -RMatrix::identity(e.algebra.dimension()));
      auto it = e.expected_flags.find("integrable");
      bool integrable = is_integrable(e.algebra, *e.j);
      if (it != e.expected_flags.end()) CHECK(integrable == it->second);
    }
    if (e.complement) {
      CHECK(e.complement->is_subalgebra());
      CHECK(sum(e.algebra, *e.complement, nilradical(e.algebra)).dimension() == e.algebra.dimension());
    }
    if (e.split_s) CHECK(e.split_s->is_subalgebra());
    if (e.split_h) CHECK(e.split_h->is_ideal());
    for (const auto& w : e.bundled_forms) CHECK(ce_d(e.algebra, w).is_zero());
  }
}

TEST_CASE("dimensions") {
  CHECK(build_OT(2, 3).algebra.dimension() == 10);
  CHECK(build_C_semidirect_C2m({1, 2}).algebra.dimension() == 10);
  CHECK(build_yamada().algebra.dimension() == 28);
  CHECK(build_entry("aff-c").algebra.dimension() == 4);
  CHECK(build_entry("torus", {{"n", "6"}}).algebra.dimension() == 6);
}

TEST_CASE("parameter errors") {
  CHECK(code_of([] { build_OT(1, 2, {{1, 1}}); }) == ErrorCode::NotUnimodular);
  CHECK(code_of([] { build_entry("ot", {{"t", "2"}, {"b", "1,1"}}); }) == ErrorCode::NotUnimodular);
  CHECK(code_of([] { build_OT(2, 1, {{1}}); }) == ErrorCode::DimensionMismatch);
  CHECK(code_of([] { build_C_semidirect_C2m({1, 0}); }) == ErrorCode::ZeroParameter);
  CHECK(code_of([] { build_yamada(0); }) == ErrorCode::ZeroParameter);
  CHECK(code_of([] { build_entry("nope"); }) == ErrorCode::UnknownEntry);
  CHECK(code_of([] { find_spec(""); }) == ErrorCode::UnknownEntry);
  CHECK(code_of([] { build_entry("ot", {{"q", "1"}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { build_entry("torus", {{"n", "3"}}); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { build_entry("aa6", {{"a", "x"}}); }) == ErrorCode::ParseError);
}

TEST_CASE("algebra tables for aff") {
  std::vector<std::vector<Vec<Rational>>> noncomm = {{{0, 1}, {1, 0}}, {{0, 0}, {0, 1}}};
  CHECK(code_of([&] { build_aff("x", noncomm); }) == ErrorCode::NotCommutative);
  std::vector<std::vector<Vec<Rational>>> nonassoc = {{{0, 1}, {1, 0}}, {{1, 0}, {0, 0}}};
  CHECK(code_of([&] { build_aff("x", nonassoc); }) == ErrorCode::NotAssociative);
  CatalogEntry c = build_entry("aff-c");
  CHECK_FALSE(is_unimodular(c.algebra));
  CHECK(is_unimodular(build_entry("aff-eps").algebra));
}

TEST_CASE("parameters are parsed") {
  CatalogEntry e = build_entry("ot", {{"s", "1"}, {"t", "2"}, {"b", "1/3,2/3"}, {"c", "5,-1"}});
  CHECK(e.label.find("ot") == 0);
  CHECK(is_unimodular(e.algebra));
  CatalogEntry a = build_entry("aa6", {{"a", "1/2"}, {"b", "-9/4"}});
  CHECK(a.params.at("b") == "-9/4");
}

TEST_CASE("subalgebra as an algebra") {
  CatalogEntry ot = build_OT(2, 1);
  LieAlgebra n = subalgebra_algebra(ot.algebra, nilradical(ot.algebra));
  CHECK(n.dimension() == 4);
  CHECK(is_nilpotent(n));
  LieAlgebra s = subalgebra_algebra(ot.algebra, *ot.split_s);
  CHECK(s.dimension() == 4);
  CHECK(is_solvable(s));
  CHECK_FALSE(is_nilpotent(s));
}

TEST_CASE("table rows build") {
  auto rows = regression_rows();
  CHECK(rows.size() >= 20);
  for (const auto& r : rows) CHECK_NOTHROW(build_entry(r.id, r.params));
}
