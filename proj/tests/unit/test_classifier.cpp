#include <doctest.h>

#include <set>

#include "cubeprop/classifier.hpp"
#include "cubeprop/error.hpp"
#include "cubeprop/generate.hpp"
#include "cubeprop/rng.hpp"

using namespace cubeprop;

namespace {

std::vector<bool> inhabited(const SetMap& m) {
  std::vector<bool> out(m.cod.size(), false);
  for (std::size_t q : m.map) out[q] = true;
  return out;
}

bool oracle_extensional(const SetMap& m) {
  std::size_t in = 0, out = 0;
  for (bool b : inhabited(m)) (b ? in : out)++;
  return in <= 1 && out <= 1;
}

// Counts chi : Y -> P with {y : chi(y) hits m} equal to the image of f.
std::size_t oracle_classifying(const SetMap& f, const SetMap& m) {
  const auto target = inhabited(f);
  const auto hit = inhabited(m);
  std::size_t count = 0;
  std::vector<std::size_t> chi(f.cod.size(), 0);
  if (m.cod.empty()) return f.cod.empty() ? 1 : 0;
  while (true) {
    bool ok = true;
    for (std::size_t y = 0; y < chi.size(); ++y) ok = ok && hit[chi[y]] == target[y];
    if (ok) ++count;
    std::size_t i = chi.size();
    while (i > 0 && ++chi[i - 1] == m.cod.size()) chi[--i] = 0;
    if (i == 0) break;
  }
  return count;
}

SetMap random_mono(Rng& rng, std::size_t max_cod) {
  FinSet cod = random_set(rng, 0, max_cod, "p");
  FinSet dom = random_set(rng, 0, cod.size(), "q");
  return random_set_mono(rng, dom, cod);
}

TCSetMor bang(const TCSet& x) {
  return TCSetMor::build(x, terminal(x.trunc()), [](std::size_t, std::size_t) { return std::size_t{0}; });
}

}  // namespace

TEST_CASE("truth is extensional") {
  ExtMono t = ExtMono::truth();
  CHECK(t.base() == FinSet{"false", "true"});
  CHECK(t.point_with(true) == std::size_t{1});
  CHECK(t.point_with(false) == std::size_t{0});
  CHECK(t.fiber_element(1) == std::size_t{0});
  CHECK_FALSE(t.fiber_element(0).has_value());
}

TEST_CASE("extensionality criterion") {
  CHECK_FALSE(is_extensional(SetMap{{"x"}, {"a", "b", "c"}, {0}}));
  CHECK_FALSE(is_extensional(SetMap{{"x", "y"}, {"a", "b"}, {0, 1}}));
  CHECK(is_extensional(SetMap{{"x"}, {"a", "b"}, {1}}));
  CHECK_THROWS_AS(fiber_inhabitation(SetMap{{"x", "y"}, {"a"}, {0, 0}}), PreconditionError);
  CHECK_THROWS_AS(ExtMono::make(SetMap{{}, {"a", "b"}, {}}), PreconditionError);

  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    SetMap m = random_mono(rng, 4);
    CHECK(is_extensional(m) == oracle_extensional(m));
    ExtensionalityProbe probe = probe_extensionality(m);
    CHECK(probe.projections_agree == oracle_extensional(m));
    Extensionalization e = make_extensional(m);
    std::set<bool> values;
    for (bool b : inhabited(m)) values.insert(b);
    CHECK(e.mono.base().size() == values.size());
    CHECK(is_pullback_along(m, e.mono.mono(), e.quotient.map));
  }
}

TEST_CASE("classifying maps of finite monos") {
  ExtMono t = ExtMono::truth();
  SetMap id{{"a", "b"}, {"a", "b"}, {0, 1}};
  CHECK(classify_set(id, t).map == std::vector<std::size_t>{1, 1});
  SetMap none{{}, {"a", "b"}, {}};
  CHECK(classify_set(none, t).map == std::vector<std::size_t>{0, 0});
  SetMap some{{"b"}, {"a", "b", "c"}, {1}};
  CHECK(classify_set(some, t).map == std::vector<std::size_t>{0, 1, 0});

  ExtMono only_true = ExtMono::make(SetMap{{"*"}, {"*"}, {0}});
  CHECK_THROWS_AS(classify_set(some, only_true), ClassificationError);

  Rng rng(29);
  for (int i = 0; i < 200; ++i) {
    SetMap f = random_mono(rng, 4);
    SetMap m = random_mono(rng, 3);
    CHECK(count_classifying_maps(f, m) == oracle_classifying(f, m));
    if (oracle_extensional(m) && oracle_classifying(f, m) > 0) {
      CHECK(oracle_classifying(f, m) == 1);
      SetMap chi = classify_set(f, ExtMono::make(m));
      CHECK(is_pullback_along(f, m, chi.map));
    }
  }
}

TEST_CASE("internalising fibrant monos") {
  Rng rng(31);
  GenConfig cfg;
  for (int i = 0; i < 30; ++i) {
    Instance inst = random_fibrant_mono(rng, cfg);
    auto lifts = find_point_lifts(inst.map);
    REQUIRE(lifts.has_value());
    Internalisation in = internalise(inst.map, *lifts, ExtMono::truth());
    Subobject im = image(inst.map);
    for (std::size_t n = 0; n <= cfg.trunc; ++n)
      for (std::size_t y = 0; y < inst.map.target().size(n); ++y) CHECK((in.chi(n, y) == 1) == im.contains(n, y));
    CHECK(is_iso(in.comparison));
  }
}

TEST_CASE("internalising a constant mono is Delta of the set map") {
  SetMap m{{"b"}, {"a", "b", "c"}, {1}};
  TCSetMor f = delta_map(m, 2);
  auto lifts = find_point_lifts(f);
  REQUIRE(lifts.has_value());
  Internalisation in = internalise(f, *lifts, ExtMono::truth());
  CHECK(in.chi == delta_map(classify_set(m, ExtMono::truth()), 2));
}

TEST_CASE("double-negation-stable h-propositions") {
  TCSetMor codisc = bang(nabla({"0", "1"}, 2));
  auto w = is_hprop(codisc);
  REQUIRE(w.has_value());
  NegNegClassification c = classify_negneg(codisc, *w);
  CHECK(c.internal.chi.component(0) == std::vector<std::size_t>{1});

  SetMap m{{"a"}, {"a", "b"}, {0}};
  TCSetMor dm = delta_map(m, 2);
  auto wd = is_hprop(dm);
  REQUIRE(wd.has_value());
  NegNegClassification cd = classify_negneg(dm, *wd);
  CHECK(cd.internal.chi == delta_map(SetMap{{"a", "b"}, {"false", "true"}, {1, 0}}, 2));
  CHECK(is_iso(cd.to_classified));

  TCSetMor boundary = boundary_of_interval(2).inclusion();
  auto wb = is_hprop(boundary);
  REQUIRE(wb.has_value());
  CHECK_THROWS_AS(classify_negneg(boundary, *wb), NotStableError);

  CHECK_FALSE(is_hprop(bang(delta_const({"a", "b"}, 2))).has_value());
  CHECK_THROWS_AS(classify_negneg(bang(delta_const({"a", "b"}, 2)), *w), PreconditionError);
}
