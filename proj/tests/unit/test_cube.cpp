#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "cubeprop/cube.hpp"
#include "cubeprop/error.hpp"

using namespace cubeprop;

namespace {

// Independent model: a morphism [m] -> [n] acts on vertices {0,1}^m.
std::vector<bool> eval(const CubeMor& s, const std::vector<bool>& v) {
  std::vector<bool> out;
  for (const Term& t : s.coords()) out.push_back(t.is_const() ? t.const_value() : bool(v[t.var_index()]));
  return out;
}

std::vector<std::vector<bool>> vertices(std::size_t m) {
  std::vector<std::vector<bool>> vs;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<bool> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = (mask >> (m - 1 - i)) & 1;
    vs.push_back(v);
  }
  return vs;
}

// Spelled-out strings for all morphisms [m] -> [n], built without the library.
std::set<std::string> oracle_homs(std::size_t m, std::size_t n) {
  std::vector<std::string> terms = {"c0", "c1"};
  for (std::size_t i = 0; i < m; ++i) terms.push_back("v" + std::to_string(i));
  std::set<std::string> out;
  std::vector<std::size_t> digit(n, 0);
  while (true) {
    std::string s = std::to_string(m) + "->" + std::to_string(n) + ":[";
    for (std::size_t i = 0; i < n; ++i) s += (i ? "," : "") + terms[digit[i]];
    out.insert(s + "]");
    std::size_t i = n;
    while (i > 0 && ++digit[i - 1] == terms.size()) digit[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace

TEST_CASE("hom sets match an independent enumeration") {
  for (std::size_t m = 0; m <= 3; ++m) {
    for (std::size_t n = 0; n <= 3; ++n) {
      auto homs = enum_homs(m, n);
      std::set<std::string> got;
      for (const auto& s : homs) got.insert(s.to_string());
      CHECK(got.size() == homs.size());
      CHECK(got == oracle_homs(m, n));
      std::size_t expected = 1;
      for (std::size_t i = 0; i < n; ++i) expected *= m + 2;
      CHECK(hom_count(m, n) == expected);
    }
  }
  CHECK(enum_homs(2, 1).size() == 4);
  CHECK(enum_homs(1, 2).size() == 9);
}

TEST_CASE("points are the constant tuples") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto ps = points(n);
    CHECK(ps.size() == (std::size_t{1} << n));
    for (const auto& p : ps) {
      CHECK(p.dom() == 0);
      for (const auto& t : p.coords()) CHECK(t.is_const());
    }
  }
}

TEST_CASE("composition agrees with vertex evaluation") {
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b)
      for (std::size_t c = 0; c <= 2; ++c)
        for (const auto& f : enum_homs(a, b))
          for (const auto& g : enum_homs(b, c)) {
            CubeMor gf = compose(g, f);
            REQUIRE(gf.dom() == a);
            REQUIRE(gf.cod() == c);
            for (const auto& v : vertices(a)) CHECK(eval(gf, v) == eval(g, eval(f, v)));
          }
}

TEST_CASE("vertex evaluation is faithful") {
  // Distinct morphisms act differently on vertices, so the oracle above has teeth.
  for (std::size_t m = 0; m <= 2; ++m)
    for (std::size_t n = 0; n <= 2; ++n) {
      auto homs = enum_homs(m, n);
      std::set<std::vector<std::vector<bool>>> tables;
      for (const auto& s : homs) {
        std::vector<std::vector<bool>> t;
        for (const auto& v : vertices(m)) t.push_back(eval(s, v));
        tables.insert(t);
      }
      CHECK(tables.size() == homs.size());
    }
}

TEST_CASE("identities") {
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t n = 0; n <= 3; ++n)
      for (const auto& s : enum_homs(m, n)) {
        CHECK(compose(CubeMor::identity(n), s) == s);
        CHECK(compose(s, CubeMor::identity(m)) == s);
      }
  CHECK(CubeMor::identity(2).is_identity());
  CHECK_FALSE(CubeMor::parse("2->2:[v1,v0]").is_identity());
}

TEST_CASE("parse and print") {
  CubeMor s = CubeMor::parse("2->3:[v0,c1,v0]");
  CHECK(s.dom() == 2);
  CHECK(s.cod() == 3);
  CHECK(s.coord(1) == Term::one());
  CHECK(s.to_string() == "2->3:[v0,c1,v0]");
  for (const auto& t : enum_homs(2, 2)) CHECK(CubeMor::parse(t.to_string()) == t);
  CHECK_THROWS_AS(CubeMor::parse("1->1:[v1]"), ParseError);
  CHECK_THROWS_AS(CubeMor(1, {Term::var(1)}), CompositionError);
  CHECK_THROWS_AS(CubeMor::parse("1->2:[v0]"), Error);
  CHECK_THROWS_AS(CubeMor::parse("garbage"), ParseError);
  CHECK_THROWS_AS(CubeMor::parse("1->1:[c2]"), ParseError);
}

TEST_CASE("mismatched composition throws") {
  CHECK_THROWS_AS(compose(CubeMor::identity(2), CubeMor::identity(1)), CompositionError);
}

TEST_CASE("rank and unrank are inverse") {
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t n = 0; n <= 3; ++n) {
      auto homs = enum_homs(m, n);
      for (std::size_t r = 0; r < homs.size(); ++r) {
        CHECK(hom_rank(homs[r]) == r);
        CHECK(hom_unrank(m, n, r) == homs[r]);
      }
    }
}

TEST_CASE("faces, degeneracies and the interval") {
  for (std::size_t n = 0; n <= 3; ++n) {
    for (bool e : {false, true}) CHECK(compose(drop_last(n), end_face(n, e)).is_identity());
  }
  for (const auto& s : enum_homs(1, 2)) {
    CubeMor t = times_interval(s);
    CHECK(t.dom() == 2);
    CHECK(t.cod() == 3);
    CHECK(t.coord(2) == Term::var(1));
    CHECK(compose(drop_last(2), t) == compose(s, drop_last(1)));
  }
}

TEST_CASE("site index lists every morphism once") {
  const SiteIndex& idx = site(2);
  std::size_t total = 0;
  for (std::size_t m = 0; m <= 2; ++m)
    for (std::size_t n = 0; n <= 2; ++n) total += hom_count(m, n);
  CHECK(idx.size() == total);
  for (std::size_t i = 0; i < idx.size(); ++i) CHECK(idx.id(idx.mor(i)) == i);
  for (std::size_t n = 0; n <= 2; ++n) {
    std::size_t into = 0;
    for (std::size_t m = 0; m <= 2; ++m) into += hom_count(m, n);
    CHECK(idx.into(n).size() == into);
  }
}
