#pragma once

// Dedekind reals as locatedness oracles over exact rationals.
//
// A left cut L answers locate(a, b) for a < b with InL(a) or NotInL(b); a
// cocut C answers with NotInC(a) or InC(b). Membership itself is not
// decidable from the oracle, so equality of cuts is replaced by consistency
// of answers on sampled queries (see CocutLog / LeftCutLog).

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cubeprop/rat.hpp"

namespace cubeprop {

struct LeftAnswer {
  enum class Kind { InL, NotInL };
  Kind kind;
  Rat point;  // a for InL, b for NotInL

  bool operator==(const LeftAnswer&) const = default;
};

struct CocutAnswer {
  enum class Kind { NotInC, InC };
  Kind kind;
  Rat point;  // a for NotInC, b for InC

  bool operator==(const CocutAnswer&) const = default;
};

std::string to_string(const LeftAnswer& answer);
std::string to_string(const CocutAnswer& answer);

class LocatedCut {
 public:
  using Locator = std::function<bool(const Rat& a, const Rat& b)>;  // true means InL(a)

  // Throws PreconditionError unless bound_in < bound_out.
  LocatedCut(Locator locate, Rat bound_in, Rat bound_out);

  // Throws PreconditionError unless a < b.
  LeftAnswer locate(const Rat& a, const Rat& b) const;
  const Rat& bound_in() const { return bound_in_; }
  const Rat& bound_out() const { return bound_out_; }

 private:
  Locator locate_;
  Rat bound_in_;
  Rat bound_out_;
};

class Cocut {
 public:
  using Locator = std::function<bool(const Rat& a, const Rat& b)>;  // true means InC(b)

  // Throws PreconditionError unless bound_out < bound_in.
  Cocut(Locator locate, Rat bound_out, Rat bound_in);

  CocutAnswer locate(const Rat& a, const Rat& b) const;
  const Rat& bound_out() const { return bound_out_; }
  const Rat& bound_in() const { return bound_in_; }

 private:
  Locator locate_;
  Rat bound_out_;
  Rat bound_in_;
};

// The complement of a left cut: NotInC(a) when L answers InL(a), InC(b) otherwise.
Cocut neg_cut(const LocatedCut& l);
// The interior of the complement of a cocut, located through the midpoint.
LocatedCut cocut_to_cut(const Cocut& c);

// { a : a >= q }. Answers NotInC(a) iff a < q.
Cocut rational_cocut(const Rat& q);
// { a : a > 0 and a^2 >= n }. Answers InC(b) iff b lies in the set.
// Throws PreconditionError when n is zero or a perfect square.
Cocut sqrt_cocut(unsigned n);
// { a : a < q }. Answers InL(a) iff a < q.
LocatedCut rational_left_cut(const Rat& q);

// A cocut together with an exact membership test, used as an oracle in checks.
struct SampleReal {
  std::string name;
  Cocut cocut;
  std::function<bool(const Rat&)> member;
};
SampleReal sample_rational(const Rat& q);
SampleReal sample_sqrt(unsigned n);
// 0, 1/2, -3/7, sqrt 2, sqrt 3.
std::vector<SampleReal> sample_reals();

// Accumulates cocut answers and reports the first pair of answers that
// cannot both hold for an upward-closed set.
class CocutLog {
 public:
  void record(const CocutAnswer& answer);
  bool consistent() const { return !conflict_; }
  const std::optional<std::string>& conflict() const { return conflict_; }
  std::size_t size() const { return count_; }

 private:
  std::optional<Rat> max_out_;
  std::optional<Rat> min_in_;
  std::optional<std::string> conflict_;
  std::size_t count_ = 0;
};

// Same for downward-closed left cuts.
class LeftCutLog {
 public:
  void record(const LeftAnswer& answer);
  bool consistent() const { return !conflict_; }
  const std::optional<std::string>& conflict() const { return conflict_; }
  std::size_t size() const { return count_; }

 private:
  std::optional<Rat> max_in_;
  std::optional<Rat> min_out_;
  std::optional<std::string> conflict_;
  std::size_t count_ = 0;
};

struct Membership {
  enum class Kind { DefinitelyOut, ConsistentInUpTo };
  Kind kind;
  std::size_t n;                // failing n, or the bound N
  std::vector<Rat> witnesses;   // a + 1/k for each k answered InC
};

// Queries locate(a, a + 1/n) for n = 1..N.
Membership member_up_to(const Cocut& c, const Rat& a, std::size_t bound);

struct Pi01Answer {
  enum class Kind { NotInX, RHolds };
  Kind kind;
  Rat a;
  std::size_t n;
};

// d(a, n) := locate(a, a + 1/n), relabeled.
class DecisionFamily {
 public:
  explicit DecisionFamily(Cocut c) : cocut_(std::move(c)) {}
  // Throws PreconditionError for n = 0.
  Pi01Answer decide(const Rat& a, std::size_t n) const;
  const Cocut& cocut() const { return cocut_; }

 private:
  Cocut cocut_;
};
DecisionFamily weakly_pi01(const Cocut& c);

// The R branch of d(a, n), i.e. the point a + 1/n known to be in C. Throws
// PromiseViolation if d answers NotInX.
Rat negneg_decide(const DecisionFamily& d, const Rat& a, std::size_t n);

}  // namespace cubeprop
