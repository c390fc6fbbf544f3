#include <doctest.h>

#include "cubeprop/error.hpp"
#include "cubeprop/reals.hpp"
#include "cubeprop/rng.hpp"

using namespace cubeprop;

namespace {

Rat q(long p, long d = 1) { return Rat(p, d); }

// Exact membership of sqrt n's cocut, checked by squaring.
bool above_sqrt(const Rat& b, int n) { return b > 0 && b * b >= n; }

Rat random_rat(Rng& rng) { return Rat(rng.range(-400, 400), rng.range(1, 97)); }

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rat("3/6") == q(1, 2));
  CHECK(parse_rat("-1.25") == q(-5, 4));
  CHECK(parse_rat("7") == q(7));
  CHECK(to_string(q(-3, 7)) == "-3/7");
  CHECK(to_string(q(4, 2)) == "2");
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("abc"), ParseError);
  CHECK_THROWS_AS(parse_rat(""), ParseError);
}

TEST_CASE("locating rationals and square roots") {
  Cocut half = rational_cocut(q(1, 2));
  CHECK(half.locate(q(0), q(1)) == CocutAnswer{CocutAnswer::Kind::NotInC, q(0)});
  Cocut r2 = sqrt_cocut(2);
  CHECK(r2.locate(q(1), q(3, 2)) == CocutAnswer{CocutAnswer::Kind::InC, q(3, 2)});
  CHECK(r2.locate(q(7, 5), q(141, 100)) == CocutAnswer{CocutAnswer::Kind::NotInC, q(7, 5)});
  CHECK_THROWS_AS(r2.locate(q(1), q(1)), PreconditionError);
  CHECK_THROWS_AS(sqrt_cocut(4), PreconditionError);
  CHECK_THROWS_AS(sqrt_cocut(0), PreconditionError);
  CHECK(to_string(r2.locate(q(1), q(3, 2))) == "InC(3/2)");
}

TEST_CASE("answers are true of the exact sets") {
  Rng rng(37);
  for (const SampleReal& real : sample_reals()) {
    CocutLog log;
    for (int i = 0; i < 300; ++i) {
      Rat a = random_rat(rng), b = random_rat(rng);
      if (a == b) continue;
      if (b < a) std::swap(a, b);
      CocutAnswer ans = real.cocut.locate(a, b);
      log.record(ans);
      if (ans.kind == CocutAnswer::Kind::NotInC) CHECK_FALSE(real.member(a));
      else CHECK(real.member(b));
    }
    CHECK(log.consistent());
    CHECK_FALSE(real.member(real.cocut.bound_out()));
    CHECK(real.member(real.cocut.bound_in()));
  }
  for (int n : {2, 3, 5}) {
    SampleReal s = sample_sqrt(n);
    for (int i = 0; i < 200; ++i) {
      Rat a = random_rat(rng);
      CHECK(s.member(a) == above_sqrt(a, n));
    }
  }
}

TEST_CASE("transformers between cuts and cocuts") {
  Rng rng(41);
  LocatedCut left = rational_left_cut(q(-3, 7));
  Cocut comp = neg_cut(left);
  Cocut r3 = sqrt_cocut(3);
  LocatedCut interior = cocut_to_cut(r3);
  LeftCutLog llog;
  CocutLog clog;
  for (int i = 0; i < 300; ++i) {
    Rat a = random_rat(rng), b = random_rat(rng);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    LeftAnswer la = left.locate(a, b);
    CocutAnswer ca = comp.locate(a, b);
    // not L is {x : x >= -3/7}
    if (la.kind == LeftAnswer::Kind::InL) CHECK(ca == CocutAnswer{CocutAnswer::Kind::NotInC, a});
    else CHECK(ca == CocutAnswer{CocutAnswer::Kind::InC, b});
    if (ca.kind == CocutAnswer::Kind::NotInC) CHECK(a < q(-3, 7));
    else CHECK(b >= q(-3, 7));
    LeftAnswer ia = interior.locate(a, b);
    llog.record(ia);
    clog.record(ca);
    if (ia.kind == LeftAnswer::Kind::InL) CHECK_FALSE(above_sqrt(a, 3));
    else CHECK(above_sqrt(b, 3));
  }
  CHECK(llog.consistent());
  CHECK(clog.consistent());
  CHECK(interior.bound_in() < interior.bound_out());
  CHECK(interior.locate(q(1), q(2)).kind == LeftAnswer::Kind::NotInL);
  CHECK(interior.locate(q(0), q(3, 2)).kind == LeftAnswer::Kind::InL);
}

TEST_CASE("consistency logs catch contradictions") {
  CocutLog c;
  c.record({CocutAnswer::Kind::NotInC, q(1)});
  c.record({CocutAnswer::Kind::InC, q(2)});
  CHECK(c.consistent());
  c.record({CocutAnswer::Kind::InC, q(1, 2)});
  CHECK_FALSE(c.consistent());
  CHECK(c.conflict().has_value());
  CHECK(c.size() == 3);

  LeftCutLog l;
  l.record({LeftAnswer::Kind::InL, q(0)});
  l.record({LeftAnswer::Kind::NotInL, q(0)});
  CHECK_FALSE(l.consistent());
}

TEST_CASE("membership up to a bound") {
  Membership in = member_up_to(rational_cocut(q(0)), q(0), 50);
  CHECK(in.kind == Membership::Kind::ConsistentInUpTo);
  CHECK(in.n == 50);
  CHECK(in.witnesses.size() == 50);
  CHECK(in.witnesses.back() == q(1, 50));

  Membership out = member_up_to(rational_cocut(q(0)), q(-1, 10), 50);
  CHECK(out.kind == Membership::Kind::DefinitelyOut);
  CHECK(out.n == 1);

  // 1.41 is outside sqrt 2's cocut, but only steps below 1/238 can show it.
  Membership hidden = member_up_to(sqrt_cocut(2), q(141, 100), 50);
  CHECK(hidden.kind == Membership::Kind::ConsistentInUpTo);
  Membership shown = member_up_to(sqrt_cocut(2), q(141, 100), 300);
  CHECK(shown.kind == Membership::Kind::DefinitelyOut);
  CHECK(shown.n == 238);
}

TEST_CASE("weakly Pi01 decisions") {
  DecisionFamily d = weakly_pi01(rational_cocut(q(0)));
  Pi01Answer yes = d.decide(q(1), 3);
  CHECK(yes.kind == Pi01Answer::Kind::RHolds);
  CHECK(d.decide(q(-1), 1).kind == Pi01Answer::Kind::NotInX);
  CHECK_THROWS_AS(d.decide(q(1), 0), PreconditionError);
  CHECK(negneg_decide(d, q(1), 3) == q(4, 3));
  CHECK_THROWS_AS(negneg_decide(d, q(-1), 1), PromiseViolation);

  for (const SampleReal& real : sample_reals()) {
    DecisionFamily dr = weakly_pi01(real.cocut);
    for (long p = -20; p <= 20; ++p) {
      Rat a(p, 7);
      for (std::size_t n = 1; n <= 20; ++n) {
        Pi01Answer ans = dr.decide(a, n);
        if (ans.kind == Pi01Answer::Kind::RHolds) CHECK(real.member(a + Rat(1, n)));
        else CHECK_FALSE(real.member(a));
      }
    }
  }
}
