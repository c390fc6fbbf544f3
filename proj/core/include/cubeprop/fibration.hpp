#pragma once

// Lifting structure against point inclusions 1 -> y[n] (the stand-in for Kan
// fibration structure), h-proposition witnesses via path objects, the
// pullback property of naturality squares, and the de-truncation transfer of
// sections through Nabla_Z Gamma W.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "cubeprop/presheaf.hpp"
#include "cubeprop/tcset.hpp"

namespace cubeprop {

// A lifting problem of f : X -> Y against y(p) : y[0] -> y[n]: a point p of
// [n] (by rank in points(n)), x in X_0 and y in Y_n with f_0(x) = Y_p(y).
struct LiftProblem {
  std::size_t level;
  std::size_t point;
  std::size_t x;
  std::size_t y;

  auto operator<=>(const LiftProblem&) const = default;
};

// A chosen x' in X_n with f_n(x') = y and X_p(x') = x for every lifting
// problem of the carrier.
class PointLiftStructure {
 public:
  // Checks totality and that every entry solves its problem; throws
  // PreconditionError otherwise.
  static PointLiftStructure make(TCSetMor carrier, std::map<LiftProblem, std::size_t> table);

  const TCSetMor& carrier() const { return carrier_; }
  const std::map<LiftProblem, std::size_t>& table() const { return table_; }
  std::size_t lift(const LiftProblem& problem) const { return table_.at(problem); }

 private:
  PointLiftStructure(TCSetMor carrier, std::map<LiftProblem, std::size_t> table)
      : carrier_(std::move(carrier)), table_(std::move(table)) {}

  TCSetMor carrier_;
  std::map<LiftProblem, std::size_t> table_;
};

// Every lifting problem of f, in (level, point, x, y) order.
std::vector<LiftProblem> lift_problems(const TCSetMor& f);

// Brute-force search; the first solution in index order is chosen. For a
// monomorphism a solution is unique when it exists.
std::optional<PointLiftStructure> find_point_lifts(const TCSetMor& f);
// The first lifting problem with no solution, if any.
std::optional<LiftProblem> unliftable_problem(const TCSetMor& f);

// A section of Path_Y(X) -> X x_Y X. Valid up to level trunc - 1.
struct HPropWitness {
  PathObject path;
  TCSetMor section;
};

// Throws TruncationTooSmall at trunc 0.
std::optional<HPropWitness> is_hprop(const TCSetMor& f);
// Checks that the witness is a section of the boundary map of f's path object.
bool verify_hprop_witness(const TCSetMor& f, const HPropWitness& witness);

struct NatPullbackReport {
  bool pullback = true;
  std::string counterexample;
};

// For s : [m] -> [n], decides whether the naturality square
//   X_n --X_s--> X_m
//    |f_n         |f_m
//   Y_n --Y_s--> Y_m
// is a pullback by comparing every fiber. The check itself needs no lifting
// structure; the pullback property is guaranteed only for monomorphisms
// that admit point lifts.
NatPullbackReport check_nat_pullback(const TCSetMor& f, const CubeMor& s);

// Nabla_Z Gamma W for f : W -> Delta Z: the pullback of
// Nabla(Gamma f) : Nabla Gamma W -> Nabla Z along Delta Z -> Nabla Z.
// Elements are pairs (h, z) with h : points(n) -> W_0 landing in the fiber
// over z.
struct NablaRel {
  PairCone cone;
  TCSetMor projection;  // to Delta Z
  TCSetMor canonical;   // W -> Nabla_Z Gamma W
};
NablaRel nabla_rel(const FinSet& z, const TCSetMor& f);

// Reads off a section of Gamma W -> Z from a section s of
// Nabla_Z Gamma W -> Delta Z. The result composed with Gamma f is the
// identity; both facts are checked.
SetMap gamma_section_transfer(const FinSet& z, const TCSetMor& f, const NablaRel& rel, const TCSetMor& s);

}  // namespace cubeprop
