#include <doctest.h>

#include <map>

#include "cubeprop/error.hpp"
#include "cubeprop/kleene.hpp"
#include "cubeprop/rng.hpp"

using namespace cubeprop;

namespace {

std::string binary(std::uint64_t w) {
  std::string s;
  while (w) {
    s.insert(s.begin(), char('0' + (w & 1)));
    w >>= 1;
  }
  return s;
}

std::string gamma_bits(std::uint64_t w) {
  std::string b = binary(w);
  return std::string(b.size() - 1, '0') + b;
}

// Program code spelled out as a bit string, independently of the library.
std::string oracle_code(const Program& p) {
  std::string bits = "1";
  for (const Instr& i : p) {
    std::uint64_t word = 2;
    if (i.op == Instr::Op::Inc) word = 3 * i.reg;
    if (i.op == Instr::Op::Dec) {
      const std::uint64_t s = i.reg + i.target;
      word = 3 * (s * (s + 1) / 2 + i.target) + 1;
    }
    bits += gamma_bits(word + 1);
  }
  return bits;
}

std::string to_bits(Natural n) {
  std::string s;
  while (n > 0) {
    s.insert(s.begin(), char('0' + int(n & 1)));
    n >>= 1;
  }
  return s;
}

// Reference interpreter with sparse registers.
std::optional<std::uint64_t> oracle_run(const Program& p, std::uint64_t x, std::uint64_t fuel) {
  std::map<std::size_t, std::uint64_t> r{{0, x}};
  std::size_t pc = 0;
  for (std::uint64_t step = 0;; ) {
    if (pc >= p.size() || p[pc].op == Instr::Op::Halt) return r[0];
    if (step++ == fuel) return std::nullopt;
    const Instr& i = p[pc];
    if (i.op == Instr::Op::Inc) {
      ++r[i.reg];
      ++pc;
    } else if (r[i.reg] == 0) {
      pc = i.target;
    } else {
      --r[i.reg];
      ++pc;
    }
  }
}

Program random_program(Rng& rng) {
  Program p(rng.below(6));
  for (auto& i : p) {
    switch (rng.below(3)) {
      case 0: i = Instr::inc(rng.below(3)); break;
      case 1: i = Instr::dec(rng.below(3), rng.below(p.size() + 1)); break;
      default: i = Instr::halt();
    }
  }
  return p;
}

}  // namespace

TEST_CASE("program codes") {
  CHECK(encode(Program{}) == 1);
  CHECK(encode(Program{Instr::inc(0)}) == 3);
  CHECK(encode(diverging_program()) == 37);
  CHECK(decode(Natural(0)) == diverging_program());
  CHECK(decode(Natural(1)).empty());
  CHECK_THROWS_AS(encode(Program{Instr::dec(0, 5)}), PreconditionError);

  Rng rng(43);
  for (int i = 0; i < 300; ++i) {
    Program p = random_program(rng);
    Natural e = encode(p);
    CHECK(to_bits(e) == oracle_code(p));
    CHECK(decode(e) == p);
  }
  for (unsigned e = 0; e < 4000; ++e) {
    auto p = try_decode(Natural(e));
    if (p) CHECK(encode(*p) == e);
    else CHECK(decode(Natural(e)) == diverging_program());
  }
}

TEST_CASE("assembly") {
  Program p = parse_assembly("# doubles\ninc 1\ndec 0 3   # comment\nhalt\n");
  CHECK(p == Program{Instr::inc(1), Instr::dec(0, 3), Instr::halt()});
  CHECK(parse_assembly(to_assembly(p)) == p);
  CHECK_THROWS_AS(parse_assembly("inc 0\njmp 1\n"), ParseError);
  CHECK_THROWS_WITH_AS(parse_assembly("inc\n"), doctest::Contains("1"), ParseError);
  CHECK(register_count(p) == 2);
  CHECK(register_count(Program{}) == 1);
}

TEST_CASE("runs match the reference interpreter") {
  Rng rng(47);
  for (int i = 0; i < 300; ++i) {
    Program p = random_program(rng);
    for (std::uint64_t x = 0; x < 6; ++x) {
      RunResult r = run(p, x, 500);
      auto expect = oracle_run(p, x, 500);
      CHECK(r.halted == expect.has_value());
      if (expect) CHECK(r.output == *expect);
    }
  }
}

TEST_CASE("standard programs") {
  for (const NamedProgram& np : standard_programs()) {
    for (std::uint64_t x = 0; x < 10; ++x) {
      auto expect = np.reference(x);
      auto got = oracle_run(np.program, x, 100000);
      CHECK_MESSAGE(got == expect, np.name << " on " << x);
    }
  }
  CHECK(standard_programs().size() == 20);
  CHECK_THROWS_AS(standard_program("nope"), Error);
}

TEST_CASE("T and U") {
  const Natural id = encode(standard_program("identity").program);
  auto z = emit_trace(id, 5, 100000);
  REQUIRE(z.has_value());
  CHECK(kleene_T(id, 5, *z));
  CHECK(kleene_U(*z) == 5);

  const Natural succ = encode(standard_program("succ").program);
  auto zs = emit_trace(succ, 7, 100000);
  REQUIRE(zs.has_value());
  CHECK(kleene_T(succ, 7, *zs));
  CHECK(kleene_U(*zs) == 8);
  CHECK_FALSE(kleene_T(succ, 6, *zs));
  CHECK_FALSE(kleene_T(id, 7, *zs));

  CHECK_FALSE(emit_trace(encode(diverging_program()), 3, 100000).has_value());

  Trace t = *decode_trace(*zs);
  CHECK(t.input == 7);
  CHECK(t.steps == 1);
  CHECK(t.snapshots.size() == 2);
  t.output = 9;
  Natural forged = encode_trace(t);
  CHECK_FALSE(kleene_T(succ, 7, forged));
  CHECK(kleene_U(forged) == 9);
  CHECK_FALSE(kleene_T(succ, 7, *zs ^ Natural(1)));
  CHECK_FALSE(kleene_T(succ, 7, Natural(0)));
  CHECK(kleene_U(Natural(0)) == 0);
}

TEST_CASE("trace codes round trip") {
  for (const NamedProgram& np : standard_programs()) {
    for (std::uint64_t x = 0; x < 5; ++x) {
      auto t = execute(np.program, x, 10000);
      if (!t) continue;
      CHECK(decode_trace(encode_trace(*t)) == t);
      CHECK(t->snapshots.size() == t->steps + 1);
      CHECK(t->output == t->snapshots.back().regs[0]);
    }
  }
}

TEST_CASE("function specs") {
  PartialFn f = parse_fn_spec("add:3@lt:4");
  CHECK(f.domain(3));
  CHECK_FALSE(f.domain(4));
  CHECK(f.value(2) == 5);
  CHECK(parse_fn_spec("half").value(7) == 3);
  CHECK(parse_fn_spec("pred").value(0) == 0);
  CHECK_THROWS_AS(parse_fn_spec("sqrt"), ParseError);
  CHECK_THROWS_AS(parse_fn_spec("id@prime"), ParseError);
}

TEST_CASE("extended Church's thesis instances") {
  auto code = [](const char* name) { return encode(standard_program(name).program); };
  CHECK(ect_check(parse_fn_spec("id"), code("identity"), 10, 100000).status == EctReport::Status::Pass);
  CHECK(ect_check(parse_fn_spec("succ"), code("succ"), 10, 100000).status == EctReport::Status::Pass);
  CHECK(ect_check(parse_fn_spec("zero@even"), code("zero-on-even"), 10, 100000).status == EctReport::Status::Pass);
  EctReport bad = ect_check(parse_fn_spec("id"), code("succ"), 10, 100000);
  CHECK(bad.status == EctReport::Status::Fail);
  CHECK(bad.points[0].got == std::uint64_t{1});
  EctReport partial = ect_check(parse_fn_spec("id@odd"), code("zero-on-even"), 4, 1000);
  CHECK(partial.status == EctReport::Status::Inconclusive);
  CHECK(partial.points[0].status == EctPoint::Status::Unconstrained);
  CHECK(partial.points[1].status == EctPoint::Status::Inconclusive);
  CHECK(to_string(partial.status) == "INCONCLUSIVE");
}
