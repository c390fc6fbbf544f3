#include <doctest.h>

#include <map>

#include "cubeprop/error.hpp"
#include "cubeprop/generate.hpp"
#include "cubeprop/presheaf.hpp"
#include "cubeprop/rng.hpp"
#include "cubeprop/search.hpp"

using namespace cubeprop;

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// Negation straight from its definition: y survives iff no vertex of y lands in A_0.
std::vector<std::size_t> oracle_neg_counts(const Subobject& a) {
  const TCSet& y = a.ambient();
  std::vector<std::size_t> counts;
  for (std::size_t n = 0; n <= y.trunc(); ++n) {
    std::size_t c = 0;
    for (std::size_t e = 0; e < y.size(n); ++e) {
      bool hit = false;
      for (const auto& p : points(n)) hit = hit || a.contains(0, y.act(p, e));
      if (!hit) ++c;
    }
    counts.push_back(c);
  }
  return counts;
}

}  // namespace

TEST_CASE("codiscrete level sizes") {
  TCSet n2 = nabla({"a", "b"}, 2);
  CHECK(n2.size(0) == 2);
  CHECK(n2.size(1) == 4);
  CHECK(n2.size(2) == 16);
  TCSet n3 = nabla({"a", "b", "c"}, 2);
  for (std::size_t n = 0; n <= 2; ++n) CHECK(n3.size(n) == ipow(3, ipow(2, n)));
  for (std::size_t i = 0; i < n3.size(2); ++i) CHECK(nabla_index(3, nabla_values(3, 2, i)) == i);
  CHECK(n2.name(1, nabla_index(2, {0, 1})) == "<a,b>");
}

TEST_CASE("Delta -| Gamma -| Nabla by counting hom sets") {
  Rng rng(7);
  GenConfig cfg{2, 3};
  for (int i = 0; i < 12; ++i) {
    TCSet x = random_tcset(rng, cfg);
    for (std::size_t k = 0; k <= 2; ++k) {
      FinSet z = numbered_set("z", k);
      CHECK(count_morphisms(delta_const(z, 2), x) == ipow(x.size(0), k));
      CHECK(count_morphisms(x, nabla(z, 2)) == ipow(k, x.size(0)));
    }
  }
  for (std::size_t k = 0; k <= 4; ++k) {
    FinSet z = numbered_set("z", k);
    CHECK(gamma(delta_const(z, 2)) == z);
  }
}

TEST_CASE("unit of Gamma -| Nabla is the identity on global sections") {
  TCSet y = yoneda(1, 2);
  TCSetMor u = nabla_unit(y);
  for (std::size_t i = 0; i < y.size(0); ++i) CHECK(u(0, i) == i);
  TCSetMor dn = delta_to_nabla({"a", "b"}, 2);
  CHECK(is_mono(dn));
  CHECK_FALSE(is_epi(dn));
}

TEST_CASE("functoriality of Delta and Nabla on maps") {
  SetMap f{{"a", "b", "c"}, {"x", "y"}, {0, 1, 0}};
  SetMap g{{"x", "y"}, {"p", "q", "r"}, {2, 2}};
  CHECK(delta_map(compose(g, f), 2) == compose(delta_map(g, 2), delta_map(f, 2)));
  CHECK(nabla_map(compose(g, f), 2) == compose(nabla_map(g, 2), nabla_map(f, 2)));
  CHECK(gamma_map(delta_map(f, 2)) == f);
}

TEST_CASE("limits and colimits level by level") {
  Rng rng(11);
  GenConfig cfg{2, 4};
  for (int i = 0; i < 10; ++i) {
    TCSet x = random_tcset(rng, cfg);
    TCSet y = random_tcset(rng, cfg);
    PairCone p = product(x, y);
    Coproduct c = coproduct(x, y);
    for (std::size_t n = 0; n <= 2; ++n) {
      CHECK(p.object.size(n) == x.size(n) * y.size(n));
      CHECK(c.object.size(n) == x.size(n) + y.size(n));
    }
    CHECK(is_mono(c.left));
    CHECK(is_mono(c.right));
    auto f = random_morphism(rng, x, y);
    if (!f) continue;
    PairCone pb = pullback(*f, identity(y));
    CHECK(is_iso(pb.first));
    Subobject im = image(*f);
    for (std::size_t n = 0; n <= 2; ++n) {
      std::map<std::size_t, std::size_t> fiber;
      for (std::size_t e = 0; e < x.size(n); ++e) ++fiber[(*f)(n, e)];
      CHECK(im.count(n) == fiber.size());
      std::size_t pairs = 0;
      for (const auto& [k, v] : fiber) pairs += v * v;
      CHECK(pullback(*f, *f).object.size(n) == pairs);
    }
    CHECK(preimage(Subobject::full(y), *f) == Subobject::full(x));
  }
}

TEST_CASE("interval exponential shifts levels") {
  TCSet y = yoneda(1, 2);
  TCSet e = interval_exponential(y);
  CHECK(e.trunc() == 1);
  CHECK(e.size(0) == y.size(1));
  CHECK(e.size(1) == y.size(2));
  CHECK(is_mono(constant_paths(y)));
  CHECK_THROWS_AS(interval_exponential(terminal(0)), TruncationTooSmall);
  CHECK(truncate(y, 1) == yoneda(1, 1));
}

TEST_CASE("negation of an endpoint is the other endpoint") {
  Subobject a = endpoint_of_interval(2);
  Subobject na = neg_sub(a);
  const TCSet& y = a.ambient();
  for (std::size_t n = 0; n <= 2; ++n) {
    REQUIRE(na.count(n) == 1);
    CubeMor constant_one(n, {Term::one()});
    CHECK(na.contains(n, *y.index_of(n, constant_one.to_string())));
  }
  CHECK(na == neg_sub_by_morphisms(a));
  CHECK(neg_sub(na) == a);
}

TEST_CASE("double negation of the boundary is the whole interval") {
  Subobject b = boundary_of_interval(2);
  CHECK(neg_sub(b) == Subobject::empty(b.ambient()));
  CHECK(neg_sub(neg_sub(b)) == Subobject::full(b.ambient()));
}

TEST_CASE("negation agrees with its definition on random subobjects") {
  Rng rng(3);
  GenConfig cfg;
  for (int i = 0; i < 60; ++i) {
    TCSet y = random_tcset(rng, cfg);
    Subobject a = random_subobject(rng, y);
    Subobject na = neg_sub(a);
    std::vector<std::size_t> expect = oracle_neg_counts(a);
    for (std::size_t n = 0; n <= y.trunc(); ++n) CHECK(na.count(n) == expect[n]);
    CHECK(na == neg_sub_by_morphisms(a));
    CHECK(is_mono(neg_map(a.inclusion())));
    // a is contained in its double negation
    Subobject nna = neg_sub(na);
    for (std::size_t n = 0; n <= y.trunc(); ++n)
      for (std::size_t e = 0; e < y.size(n); ++e)
        if (a.contains(n, e)) CHECK(nna.contains(n, e));
  }
}

TEST_CASE("path object of an identity is the diagonal") {
  TCSet y = yoneda(1, 2);
  PathObject po = path_object(identity(y));
  for (std::size_t n = 0; n <= 1; ++n) {
    CHECK(po.paths.object.size(n) == y.size(n));
    CHECK(po.endpoints.object.size(n) == y.size(n));
  }
  CHECK(is_iso(po.boundary));
}
