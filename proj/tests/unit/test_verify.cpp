#include <doctest.h>

#include <filesystem>

#include "cubeprop/error.hpp"
#include "cubeprop/generate.hpp"
#include "cubeprop/verify.hpp"

using namespace cubeprop;

TEST_CASE("plans are deterministic and independent of the tag filter") {
  SuiteConfig all;
  all.count = 4;
  SuiteConfig one = all;
  one.tags = {"negmono"};
  auto pa = plan_checks(all);
  auto pb = plan_checks(all);
  auto po = plan_checks(one);
  REQUIRE(pa.size() == pb.size());
  for (std::size_t i = 0; i < pa.size(); ++i) CHECK(pa[i].data == pb[i].data);
  std::vector<Json> from_all;
  for (const auto& p : pa)
    if (p.tag == "negmono") from_all.push_back(p.data);
  REQUIRE(from_all.size() == po.size());
  for (std::size_t i = 0; i < po.size(); ++i) CHECK(po[i].data == from_all[i]);

  SuiteConfig other = one;
  other.seed = 2;
  CHECK_FALSE(plan_checks(other)[0].data == po[0].data);
}

TEST_CASE("configuration is validated") {
  SuiteConfig c;
  c.tags = {"nonsense"};
  CHECK_THROWS_AS(c.check(), PreconditionError);
  SuiteConfig d;
  d.trunc = 0;
  CHECK_THROWS_AS(d.check(), PreconditionError);
}

TEST_CASE("a small suite passes") {
  SuiteConfig c;
  c.count = 3;
  Report r = run_suite(c);
  CHECK(r.passed());
  CHECK(r.count(Status::Pass) == r.records.size());
  for (const auto& tag : all_tags()) {
    bool seen = false;
    for (const auto& rec : r.records) seen = seen || rec.tag == tag;
    CHECK_MESSAGE(seen, tag);
  }
  Json j = r.to_json();
  CHECK(j.contains("summary"));
}

TEST_CASE("failures are written as replayable files") {
  // The endpoint inclusion claimed as an ordinary instance must fail.
  Json data{{"map", to_json(endpoint_of_interval(2).inclusion())}};
  CheckResult res = run_check("nat-pullback", data);
  CHECK(res.status == Status::Fail);

  Record rec{"nat-pullback", "endpoint", Status::Fail, res.witness, data, std::nullopt};
  Record back = replay(replay_file(rec));
  CHECK(back.status == Status::Fail);
  CHECK(back.tag == "nat-pullback");

  Json ok = data;
  ok["expect"] = "not-pullback";
  CHECK(run_check("nat-pullback", ok).status == Status::Pass);
  CHECK(run_check("no-such-tag", ok).status == Status::Fail);
}
