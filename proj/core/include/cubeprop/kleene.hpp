#pragma once

// A three-instruction register machine with Kleene's T predicate and U
// function over bit-exact program and trace codes.
//
// Machine. Registers R0, R1, ... hold naturals; the input is placed in R0
// and the output read from R0. Instructions:
//   inc r      R[r] += 1, then next instruction
//   dec r j    if R[r] == 0 jump to j, else R[r] -= 1 and next instruction
//   halt       stop
// Execution also stops when the program counter reaches the program length.
// Each executed inc/dec is one step; halting costs nothing.
//
// Program codes. Write gamma(w) for the Elias gamma code of w >= 1 (w in
// binary, preceded by one 0 per bit after the leading 1). An instruction is
// the word
//   inc r   -> 3r
//   halt    -> 2
//   dec r j -> 3 * cantor(r, j) + 1,  cantor(r, j) = (r + j)(r + j + 1)/2 + j
// and a program with words w_1..w_k has code e whose binary expansion is
//   1 gamma(w_1 + 1) ... gamma(w_k + 1).
// Words other than 2 that are 2 mod 3, jump targets past the end, truncated
// codes and e = 0 all decode to the diverging program [dec 1 0]. e = 1 is the
// empty program, which computes the identity.
//
// Trace codes. For a halting run with input x, t steps, r registers
// (1 + largest register index used, at least 1), snapshots s_0..s_t and
// output u, z has binary expansion
//   1 gamma(x+1) gamma(t+1) gamma(r+1) [gamma(pc+1) gamma(R_0+1) ... gamma(R_{r-1}+1)]^(t+1) gamma(u+1).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cubeprop/rat.hpp"

namespace cubeprop {

using Natural = Integer;

struct Instr {
  enum class Op { Inc, Dec, Halt };
  Op op = Op::Halt;
  std::size_t reg = 0;
  std::size_t target = 0;

  static Instr inc(std::size_t r) { return {Op::Inc, r, 0}; }
  static Instr dec(std::size_t r, std::size_t j) { return {Op::Dec, r, j}; }
  static Instr halt() { return {Op::Halt, 0, 0}; }
  bool operator==(const Instr&) const = default;
};

using Program = std::vector<Instr>;

// One instruction per line: `inc r`, `dec r j`, `halt`; `#` starts a
// comment. Throws ParseError with the line number.
Program parse_assembly(std::string_view text);
std::string to_assembly(const Program& p);

Program diverging_program();
// Number of registers the program touches (at least 1).
std::size_t register_count(const Program& p);

// Throws PreconditionError if a jump target lies past the end.
Natural encode(const Program& p);
std::optional<Program> try_decode(const Natural& e);
Program decode(const Natural& e);

struct Snapshot {
  std::size_t pc = 0;
  std::vector<std::uint64_t> regs;
  bool operator==(const Snapshot&) const = default;
};

struct Trace {
  std::uint64_t input = 0;
  std::uint64_t steps = 0;
  std::size_t registers = 1;
  std::vector<Snapshot> snapshots;  // steps + 1 of them
  std::uint64_t output = 0;
  bool operator==(const Trace&) const = default;
};

struct RunResult {
  bool halted = false;
  std::uint64_t output = 0;
  std::uint64_t steps = 0;
};

// Runs at most `fuel` steps.
RunResult run(const Program& p, std::uint64_t x, std::uint64_t fuel);
RunResult run(const Natural& e, std::uint64_t x, std::uint64_t fuel);
// Full trace of a run that halts within `fuel` steps.
std::optional<Trace> execute(const Program& p, std::uint64_t x, std::uint64_t fuel);

Natural encode_trace(const Trace& t);
std::optional<Trace> decode_trace(const Natural& z);

// Trace code of run(e, x) if it halts within fuel.
std::optional<Natural> emit_trace(const Natural& e, std::uint64_t x, std::uint64_t fuel);
// z decodes to a trace of e on input x that replays step for step.
bool kleene_T(const Natural& e, std::uint64_t x, const Natural& z);
// Output recorded in z; 0 if z is not a trace code.
std::uint64_t kleene_U(const Natural& z);

// A partial function whose domain is given by a decision oracle.
struct PartialFn {
  std::string description;
  std::function<bool(std::uint64_t)> domain;
  std::function<std::uint64_t(std::uint64_t)> value;
};

// `<value>[@<domain>]` with value one of id, succ, zero, pred, double, half,
// const:N, add:N and domain one of all, even, odd, lt:N, ge:N.
PartialFn parse_fn_spec(std::string_view spec);

struct EctPoint {
  enum class Status { Pass, Fail, Inconclusive, Unconstrained };
  std::uint64_t x = 0;
  Status status = Status::Unconstrained;
  std::uint64_t expected = 0;
  std::optional<std::uint64_t> got;
};

struct EctReport {
  enum class Status { Pass, Fail, Inconclusive };
  Status status = Status::Pass;
  std::vector<EctPoint> points;
};

std::string to_string(EctPoint::Status s);
std::string to_string(EctReport::Status s);

// For x < range accepted by f.domain, looks for a trace z of e on x with
// T(e, x, z) and U(z) = f.value(x). Any Fail makes the report Fail;
// otherwise any timeout makes it Inconclusive.
EctReport ect_check(const PartialFn& f, const Natural& e, std::uint64_t range, std::uint64_t fuel);

// Hand-assembled programs with reference semantics (nullopt = diverges).
struct NamedProgram {
  std::string name;
  Program program;
  std::function<std::optional<std::uint64_t>(std::uint64_t)> reference;
};
std::vector<NamedProgram> standard_programs();
const NamedProgram& standard_program(const std::string& name);

}  // namespace cubeprop
