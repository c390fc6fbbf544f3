#include "cubeprop/pi01.hpp"

#include <algorithm>

#include "cubeprop/error.hpp"
#include "cubeprop/fibration.hpp"

namespace cubeprop {

bool BoundedPi01Witness::holds(std::size_t b) const {
  return std::none_of(g[b].begin(), g[b].end(), [](bool bit) { return bit; });
}

void validate(const WeaklyPi01Witness& w) {
  const TCSetMor& f = w.base;
  const TCSet& y = f.target();
  const PairCone& cone = w.base_times_index;
  if (!(cone.first.target() == y) || !(cone.second.target() == delta_const(w.index, f.trunc()))) {
    throw PreconditionError("product cone is not Y x Delta(K)");
  }
  if (!(w.relation.target() == cone.object)) throw PreconditionError("relation does not land in Y x Delta(K)");
  const std::size_t ys = y.size(0);
  const std::size_t ks = w.index.size();
  if (w.decision.size() != ys || w.backward.size() != ys || w.forward.size() != f.source().size(0)) {
    throw PreconditionError("witness tables have the wrong size");
  }
  auto over = [&](std::size_t r, std::size_t yi, std::size_t k) {
    return r < w.relation.source().size(0) && cone.pairs[0][w.relation(0, r)] == std::pair{yi, k};
  };
  std::vector<bool> inhabited(ys, false);
  for (std::size_t x = 0; x < f.source().size(0); ++x) inhabited[f(0, x)] = true;
  for (std::size_t yi = 0; yi < ys; ++yi) {
    if (w.decision[yi].size() != ks) throw PreconditionError("decision row has the wrong length");
    bool all_r = true;
    for (std::size_t k = 0; k < ks; ++k) {
      const auto& d = w.decision[yi][k];
      if (d) {
        if (!over(*d, yi, k)) {
          throw PreconditionError("decision at (" + y.name(0, yi) + ", " + w.index[k] + ") is not over its index");
        }
      } else {
        all_r = false;
        if (inhabited[yi]) {
          throw PreconditionError("decision claims the fiber over " + y.name(0, yi) + " is empty, but it is not");
        }
      }
    }
    if (all_r) {
      const auto& b = w.backward[yi];
      if (!b || *b >= f.source().size(0) || f(0, *b) != yi) {
        throw PreconditionError("no backward element over " + y.name(0, yi));
      }
    }
  }
  for (std::size_t x = 0; x < f.source().size(0); ++x) {
    if (w.forward[x].size() != ks) throw PreconditionError("forward row has the wrong length");
    for (std::size_t k = 0; k < ks; ++k) {
      if (!over(w.forward[x][k], f(0, x), k)) {
        throw PreconditionError("forward element for " + f.source().name(0, x) + " is not over its index");
      }
    }
  }
  if (f.trunc() >= 1) {
    if (!is_hprop(f)) throw PreconditionError("base map is not an h-proposition");
    if (!is_hprop(w.relation)) throw PreconditionError("relation is not an h-proposition");
  }
}

namespace {

std::string bit_string(const std::vector<bool>& bits) {
  std::string out;
  for (bool b : bits) out.push_back(b ? '1' : '0');
  return out;
}

}  // namespace

std::size_t Pi01Classifier::sequence_index(const std::vector<bool>& bits) const {
  auto idx = find_name(sequences, bit_string(bits));
  if (!idx) throw PreconditionError("sequence " + bit_string(bits) + " is not in the classifier's sample");
  return *idx;
}

Pi01Classifier pi01_classifier(const std::vector<std::vector<bool>>& sequences) {
  if (sequences.empty()) throw PreconditionError("classifier needs at least one sequence");
  const std::size_t len = sequences.front().size();
  FinSet names{bit_string(std::vector<bool>(len, false))};
  for (const auto& s : sequences) {
    if (s.size() != len) throw PreconditionError("sequences of different lengths");
    const std::string name = bit_string(s);
    if (!find_name(names, name)) names.push_back(name);
  }
  SetMap zero{{"zero"}, names, {0}};
  return Pi01Classifier{names, make_extensional(zero)};
}

Pi01Extraction extract_pi01(const WeaklyPi01Witness& w) {
  validate(w);
  const TCSetMor& f = w.base;
  const TCSet& y = f.target();
  BoundedPi01Witness bounded{y.level(0), w.index.size(), {}};
  for (const auto& row : w.decision) {
    std::vector<bool> bits;
    for (const auto& d : row) bits.push_back(!d.has_value());
    bounded.g.push_back(std::move(bits));
  }
  std::vector<bool> inhabited(y.size(0), false);
  for (std::size_t x = 0; x < f.source().size(0); ++x) inhabited[f(0, x)] = true;
  for (std::size_t yi = 0; yi < y.size(0); ++yi) {
    if (bounded.holds(yi) != inhabited[yi]) {
      throw InvariantError("extracted sequence at " + y.name(0, yi) + " disagrees with the fiber");
    }
  }

  Pi01Classifier classifier = pi01_classifier(bounded.g);
  SetMap classifying{y.level(0), classifier.classes.quotient.cod, {}};
  for (std::size_t yi = 0; yi < y.size(0); ++yi) {
    classifying.map.push_back(classifier.classes.quotient(classifier.sequence_index(bounded.g[yi])));
  }

  Subobject stable = neg_sub(neg_sub(image(f)));
  const TCSetMor inclusion = stable.inclusion();
  auto lifts = find_point_lifts(inclusion);
  if (!lifts) throw PreconditionError("double negation has no point lifts");
  Internalisation internal = internalise(inclusion, *lifts, classifier.classes.mono);
  for (std::size_t yi = 0; yi < y.size(0); ++yi) {
    if (internal.chi(0, yi) != classifying(yi)) {
      throw InvariantError("internalised classifier disagrees with the extracted sequence at " + y.name(0, yi));
    }
  }
  return Pi01Extraction{std::move(bounded), std::move(classifier), std::move(classifying), std::move(stable),
                        std::move(internal)};
}

WeaklyPi01Witness cocut_witness(const SampleReal& real, const std::vector<Rat>& samples, std::size_t bound,
                                std::size_t trunc) {
  if (bound == 0) throw PreconditionError("index set must be nonempty");
  FinSet points;
  for (const Rat& a : samples) points.push_back(to_string(a));
  FinSet index;
  for (std::size_t k = 1; k <= bound; ++k) index.push_back(std::to_string(k));

  SetMap members{{}, points, {}};
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (real.member(samples[i])) {
      members.dom.push_back(points[i]);
      members.map.push_back(i);
    }
  }
  TCSetMor base = delta_map(members, trunc);
  const TCSet y = base.target();
  PairCone cone = product(y, delta_const(index, trunc));
  Subobject::Members r_members(trunc + 1);
  for (std::size_t n = 0; n <= trunc; ++n) {
    r_members[n].assign(cone.object.size(n), false);
    for (std::size_t e = 0; e < cone.object.size(n); ++e) {
      const auto [a, k] = cone.pairs[n][e];
      r_members[n][e] = real.member(samples[a] + Rat(1, k + 1));
    }
  }
  TCSetMor relation = Subobject::make(cone.object, std::move(r_members)).inclusion();
  // Element of R_0 over (a, k).
  auto r_over = [&](std::size_t a, std::size_t k) -> std::optional<std::size_t> {
    auto e = cone.index(0, a, k);
    for (std::size_t r = 0; e && r < relation.source().size(0); ++r) {
      if (relation(0, r) == *e) return r;
    }
    return std::nullopt;
  };

  const DecisionFamily family = weakly_pi01(real.cocut);
  WeaklyPi01Witness w{base, index, cone, relation, {}, {}, {}};
  for (std::size_t a = 0; a < samples.size(); ++a) {
    std::vector<std::optional<std::size_t>> row;
    bool all_r = true;
    for (std::size_t k = 0; k < bound; ++k) {
      const Pi01Answer answer = family.decide(samples[a], k + 1);
      if (answer.kind == Pi01Answer::Kind::RHolds) {
        row.push_back(r_over(a, k));
        if (!row.back()) throw InvariantError("locator reports a + 1/k in C but the exact test disagrees");
      } else {
        row.push_back(std::nullopt);
        all_r = false;
      }
    }
    w.decision.push_back(std::move(row));
    std::optional<std::size_t> back;
    if (all_r) {
      for (std::size_t x = 0; x < members.map.size(); ++x) {
        if (members.map[x] == a) back = x;
      }
    }
    w.backward.push_back(back);
  }
  for (std::size_t x = 0; x < members.map.size(); ++x) {
    std::vector<std::size_t> row;
    for (std::size_t k = 0; k < bound; ++k) {
      auto r = r_over(members.map[x], k);
      if (!r) throw InvariantError("member " + members.dom[x] + " has no R witness at k = " + std::to_string(k + 1));
      row.push_back(*r);
    }
    w.forward.push_back(std::move(row));
  }
  return w;
}

}  // namespace cubeprop
