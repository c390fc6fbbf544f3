#include <doctest.h>

#include "cubeprop/error.hpp"
#include "cubeprop/generate.hpp"
#include "cubeprop/presheaf.hpp"
#include "cubeprop/rng.hpp"
#include "cubeprop/tcset.hpp"

using namespace cubeprop;

namespace {

// Functoriality recomputed from the public action tables.
bool functorial(const TCSet& x) {
  const std::size_t d = x.trunc();
  for (std::size_t a = 0; a <= d; ++a)
    for (std::size_t b = 0; b <= d; ++b)
      for (std::size_t c = 0; c <= d; ++c)
        for (const auto& s : enum_homs(a, b))
          for (const auto& t : enum_homs(b, c))
            for (std::size_t e = 0; e < x.size(c); ++e)
              if (x.act(compose(t, s), e) != x.act(s, x.act(t, e))) return false;
  for (std::size_t n = 0; n <= d; ++n)
    for (std::size_t e = 0; e < x.size(n); ++e)
      if (x.act(CubeMor::identity(n), e) != e) return false;
  return true;
}

}  // namespace

TEST_CASE("representables have the expected level sizes") {
  TCSet y1 = yoneda(1, 2);
  CHECK(y1.size(0) == 2);
  CHECK(y1.size(1) == 3);
  CHECK(y1.size(2) == 4);
  TCSet y2 = yoneda(2, 2);
  CHECK(y2.size(0) == 4);
  CHECK(y2.size(1) == 9);
  CHECK(y2.size(2) == 16);
  CHECK(functorial(y1));
  CHECK(functorial(y2));
}

TEST_CASE("raw round trip") {
  for (std::size_t n = 0; n <= 2; ++n) {
    TCSet y = yoneda(n, 2);
    CHECK(TCSet::validate(y.to_raw()) == y);
  }
}

TEST_CASE("missing tables are inferred") {
  RawTCSet raw;
  raw.trunc = 2;
  raw.levels = {{"a", "b"}, {"a", "b"}, {"a", "b"}};
  CHECK(TCSet::validate(raw) == delta_const({"a", "b"}, 2));
}

TEST_CASE("broken action tables are rejected") {
  RawTCSet raw = yoneda(1, 1).to_raw();
  raw.action["1->1:[c0]"]["1->1:[v0]"] = "1->1:[c1]";
  CHECK_THROWS_AS(TCSet::validate(raw), FunctorialityError);

  RawTCSet dup;
  dup.trunc = 0;
  dup.levels = {{"a", "a"}};
  CHECK_THROWS_AS(TCSet::validate(dup), Error);

  RawTCSet missing;
  missing.trunc = 1;
  missing.levels = {{"a"}, {"p"}};
  CHECK_THROWS_AS(TCSet::validate(missing), Error);
}

TEST_CASE("naturality is enforced") {
  TCSet z = delta_const({"a", "b"}, 1);
  TCSet y = yoneda(1, 1);
  auto c0 = *y.index_of(0, "0->1:[c0]");
  auto c1 = *y.index_of(0, "0->1:[c1]");
  auto v0 = *y.index_of(1, "1->1:[v0]");
  auto k0 = *y.index_of(1, "1->1:[c0]");
  auto k1 = *y.index_of(1, "1->1:[c1]");
  CHECK_NOTHROW(TCSetMor::make(z, y, {{c0, c1}, {k0, k1}}));
  CHECK_THROWS_AS(TCSetMor::make(z, y, {{c0, c1}, {v0, k1}}), NaturalityError);
}

TEST_CASE("subobjects") {
  TCSet y = yoneda(1, 2);
  Subobject::Members bad = {{false, false}, {false, false, false}, {false, false, false, false}};
  bad[1][*y.index_of(1, "1->1:[v0]")] = true;
  CHECK_THROWS_AS(Subobject::make(y, bad), PreconditionError);

  Subobject whole = Subobject::closure(y, bad);
  CHECK(whole == Subobject::full(y));

  Subobject::Members gen = {{false, false}, {false, false, false}, {false, false, false, false}};
  gen[0][*y.index_of(0, "0->1:[c0]")] = true;
  Subobject end = Subobject::closure(y, gen);
  CHECK(end.count(0) == 1);
  CHECK(end.count(1) == 1);
  CHECK(end.count(2) == 1);
  CHECK(is_mono(end.inclusion()));
  CHECK_FALSE(is_epi(end.inclusion()));
  CHECK(Subobject::empty(y).count(0) == 0);
}

TEST_CASE("mono, epi, iso") {
  TCSet z = delta_const({"a", "b"}, 2);
  TCSetMor bang = TCSetMor::build(z, terminal(2), [](std::size_t, std::size_t) { return std::size_t{0}; });
  CHECK(is_epi(bang));
  CHECK_FALSE(is_mono(bang));
  CHECK(is_iso(identity(z)));
  CHECK(compose(bang, identity(z)) == bang);
  CHECK(compose(identity(terminal(2)), bang) == bang);
  CHECK_THROWS_AS(compose(identity(z), bang), CompositionError);
}

TEST_CASE("random presheaves are functorial and round trip") {
  Rng rng(20260101);
  GenConfig cfg;
  for (int i = 0; i < 40; ++i) {
    TCSet x = random_tcset(rng, cfg);
    CHECK(functorial(x));
    CHECK(TCSet::validate(x.to_raw()) == x);
  }
}
