#include "cubeprop/reals.hpp"

#include "cubeprop/error.hpp"

namespace cubeprop {

std::string to_string(const LeftAnswer& answer) {
  return (answer.kind == LeftAnswer::Kind::InL ? "InL(" : "NotInL(") + to_string(answer.point) + ")";
}

std::string to_string(const CocutAnswer& answer) {
  return (answer.kind == CocutAnswer::Kind::InC ? "InC(" : "NotInC(") + to_string(answer.point) + ")";
}

namespace {

void require_ordered(const Rat& a, const Rat& b) {
  if (!(a < b)) throw PreconditionError("locate needs a < b, got " + to_string(a) + " and " + to_string(b));
}

}  // namespace

LocatedCut::LocatedCut(Locator locate, Rat bound_in, Rat bound_out)
    : locate_(std::move(locate)), bound_in_(std::move(bound_in)), bound_out_(std::move(bound_out)) {
  if (!(bound_in_ < bound_out_)) throw PreconditionError("left cut bounds out of order");
}

LeftAnswer LocatedCut::locate(const Rat& a, const Rat& b) const {
  require_ordered(a, b);
  if (locate_(a, b)) return {LeftAnswer::Kind::InL, a};
  return {LeftAnswer::Kind::NotInL, b};
}

Cocut::Cocut(Locator locate, Rat bound_out, Rat bound_in)
    : locate_(std::move(locate)), bound_out_(std::move(bound_out)), bound_in_(std::move(bound_in)) {
  if (!(bound_out_ < bound_in_)) throw PreconditionError("cocut bounds out of order");
}

CocutAnswer Cocut::locate(const Rat& a, const Rat& b) const {
  require_ordered(a, b);
  if (locate_(a, b)) return {CocutAnswer::Kind::InC, b};
  return {CocutAnswer::Kind::NotInC, a};
}

Cocut neg_cut(const LocatedCut& l) {
  return Cocut([l](const Rat& a, const Rat& b) { return l.locate(a, b).kind == LeftAnswer::Kind::NotInL; },
               l.bound_in(), l.bound_out());
}

LocatedCut cocut_to_cut(const Cocut& c) {
  // Below a point outside C everything is in the interior of the complement;
  // a point of C bounds it from above.
  Rat bound_in = c.bound_out() - 1;
  return LocatedCut(
      [c](const Rat& a, const Rat& b) {
        const Rat mid = (a + b) / 2;
        return c.locate(mid, b).kind == CocutAnswer::Kind::NotInC;
      },
      std::move(bound_in), c.bound_in());
}

Cocut rational_cocut(const Rat& q) {
  return Cocut([q](const Rat& a, const Rat&) { return !(a < q); }, q - 1, q);
}

Cocut sqrt_cocut(unsigned n) {
  if (n == 0) throw PreconditionError("sqrt_cocut needs a positive integer");
  for (unsigned r = 1; r * r <= n; ++r) {
    if (r * r == n) throw PreconditionError(std::to_string(n) + " is a perfect square; use rational_cocut");
  }
  const Rat target(n);
  return Cocut([target](const Rat&, const Rat& b) { return b > 0 && b * b >= target; }, Rat(0), target);
}

LocatedCut rational_left_cut(const Rat& q) {
  return LocatedCut([q](const Rat& a, const Rat&) { return a < q; }, q - 1, q);
}

SampleReal sample_rational(const Rat& q) {
  return SampleReal{to_string(q), rational_cocut(q), [q](const Rat& a) { return a >= q; }};
}

SampleReal sample_sqrt(unsigned n) {
  const Rat target(n);
  return SampleReal{"sqrt" + std::to_string(n), sqrt_cocut(n),
                    [target](const Rat& a) { return a > 0 && a * a >= target; }};
}

std::vector<SampleReal> sample_reals() {
  return {sample_rational(Rat(0)), sample_rational(Rat(1, 2)), sample_rational(Rat(-3, 7)), sample_sqrt(2),
          sample_sqrt(3)};
}

void CocutLog::record(const CocutAnswer& answer) {
  ++count_;
  if (conflict_) return;
  if (answer.kind == CocutAnswer::Kind::NotInC) {
    if (!max_out_ || answer.point > *max_out_) max_out_ = answer.point;
  } else if (!min_in_ || answer.point < *min_in_) {
    min_in_ = answer.point;
  }
  if (max_out_ && min_in_ && !(*max_out_ < *min_in_)) {
    conflict_ = "NotInC(" + to_string(*max_out_) + ") contradicts InC(" + to_string(*min_in_) + ")";
  }
}

void LeftCutLog::record(const LeftAnswer& answer) {
  ++count_;
  if (conflict_) return;
  if (answer.kind == LeftAnswer::Kind::InL) {
    if (!max_in_ || answer.point > *max_in_) max_in_ = answer.point;
  } else if (!min_out_ || answer.point < *min_out_) {
    min_out_ = answer.point;
  }
  if (max_in_ && min_out_ && !(*max_in_ < *min_out_)) {
    conflict_ = "InL(" + to_string(*max_in_) + ") contradicts NotInL(" + to_string(*min_out_) + ")";
  }
}

Membership member_up_to(const Cocut& c, const Rat& a, std::size_t bound) {
  Membership out{Membership::Kind::ConsistentInUpTo, bound, {}};
  for (std::size_t n = 1; n <= bound; ++n) {
    const CocutAnswer answer = c.locate(a, a + Rat(1, n));
    if (answer.kind == CocutAnswer::Kind::NotInC) return Membership{Membership::Kind::DefinitelyOut, n, {}};
    out.witnesses.push_back(answer.point);
  }
  return out;
}

Pi01Answer DecisionFamily::decide(const Rat& a, std::size_t n) const {
  if (n == 0) throw PreconditionError("decision family is indexed from n = 1");
  const CocutAnswer answer = cocut_.locate(a, a + Rat(1, n));
  return Pi01Answer{answer.kind == CocutAnswer::Kind::InC ? Pi01Answer::Kind::RHolds : Pi01Answer::Kind::NotInX, a,
                    n};
}

DecisionFamily weakly_pi01(const Cocut& c) { return DecisionFamily(c); }

Rat negneg_decide(const DecisionFamily& d, const Rat& a, std::size_t n) {
  const Pi01Answer answer = d.decide(a, n);
  if (answer.kind == Pi01Answer::Kind::NotInX) {
    throw PromiseViolation("decision at a = " + to_string(a) + ", n = " + std::to_string(n) +
                           " shows a is not in the cocut");
  }
  return a + Rat(1, n);
}

}  // namespace cubeprop
