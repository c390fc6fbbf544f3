#include "cubeprop/classifier.hpp"

#include "cubeprop/error.hpp"
#include "cubeprop/search.hpp"

namespace cubeprop {

std::vector<bool> fiber_inhabitation(const SetMap& m) {
  m.check();
  if (!m.is_injective()) throw PreconditionError("map is not a monomorphism");
  std::vector<bool> out(m.cod.size(), false);
  for (std::size_t p : m.map) out[p] = true;
  return out;
}

bool is_extensional(const SetMap& m) {
  const auto inhabited = fiber_inhabitation(m);
  std::size_t yes = 0;
  std::size_t no = 0;
  for (bool b : inhabited) (b ? yes : no) += 1;
  return yes <= 1 && no <= 1;
}

ExtMono ExtMono::make(SetMap m) {
  if (!is_extensional(m)) throw PreconditionError("monomorphism is not extensional");
  auto inhabited = fiber_inhabitation(m);
  return ExtMono(std::move(m), std::move(inhabited));
}

ExtMono ExtMono::truth() { return make(SetMap{{"*"}, {"false", "true"}, {1}}); }

std::optional<std::size_t> ExtMono::point_with(bool inhabited) const {
  for (std::size_t p = 0; p < inhabited_.size(); ++p) {
    if (inhabited_[p] == inhabited) return p;
  }
  return std::nullopt;
}

std::optional<std::size_t> ExtMono::fiber_element(std::size_t p) const {
  for (std::size_t q = 0; q < mono_.map.size(); ++q) {
    if (mono_.map[q] == p) return q;
  }
  return std::nullopt;
}

bool is_pullback_along(const SetMap& f, const SetMap& m, const std::vector<std::size_t>& chi) {
  const auto image_f = fiber_inhabitation(f);
  const auto inhabited_m = fiber_inhabitation(m);
  if (chi.size() != f.cod.size()) return false;
  for (std::size_t y = 0; y < chi.size(); ++y) {
    if (image_f[y] != inhabited_m[chi[y]]) return false;
  }
  return true;
}

Extensionalization make_extensional(const SetMap& m) {
  const auto inhabited = fiber_inhabitation(m);
  // Classes are numbered in order of first occurrence along P.
  FinSet classes;
  std::vector<bool> class_inhabited;
  SetMap quotient{m.cod, {}, {}};
  for (std::size_t p = 0; p < m.cod.size(); ++p) {
    std::size_t cls = class_inhabited.size();
    for (std::size_t c = 0; c < class_inhabited.size(); ++c) {
      if (class_inhabited[c] == inhabited[p]) cls = c;
    }
    if (cls == class_inhabited.size()) {
      class_inhabited.push_back(inhabited[p]);
      classes.push_back("[" + m.cod[p] + "]");
    }
    quotient.map.push_back(cls);
  }
  quotient.cod = classes;
  SetMap reduced{{}, classes, {}};
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (class_inhabited[c]) {
      reduced.dom.push_back("q" + classes[c]);
      reduced.map.push_back(c);
    }
  }
  ExtMono ext = ExtMono::make(std::move(reduced));
  if (!is_pullback_along(m, ext.mono(), quotient.map)) {
    throw InvariantError("quotient does not reconstruct the original monomorphism");
  }
  return Extensionalization{std::move(ext), std::move(quotient)};
}

SetMap classify_set(const SetMap& f, const ExtMono& g) {
  const auto image_f = fiber_inhabitation(f);
  SetMap chi{f.cod, g.base(), {}};
  for (std::size_t y = 0; y < f.cod.size(); ++y) {
    auto p = g.point_with(image_f[y]);
    if (!p) {
      throw ClassificationError("fiber over '" + f.cod[y] + "' is " + (image_f[y] ? "inhabited" : "empty") +
                                " but no base point of the classifier has such a fiber");
    }
    chi.map.push_back(*p);
  }
  return chi;
}

std::size_t count_classifying_maps(const SetMap& f, const SetMap& m) {
  const std::size_t ys = f.cod.size();
  const std::size_t ps = m.cod.size();
  double space = 1;
  for (std::size_t y = 0; y < ys; ++y) space *= static_cast<double>(ps);
  if (space > double(1 << 22)) throw PreconditionError("too many candidate maps for an exhaustive count");
  if (ps == 0) return ys == 0 && is_pullback_along(f, m, {}) ? 1 : 0;
  // Odometer over all maps Y -> P.
  std::vector<std::size_t> chi(ys, 0);
  std::size_t count = 0;
  while (true) {
    if (is_pullback_along(f, m, chi)) ++count;
    std::size_t i = 0;
    while (i < ys && ++chi[i] == ps) chi[i++] = 0;
    if (i == ys) return count;
  }
}

ExtensionalityProbe probe_extensionality(const SetMap& m) {
  const auto inhabited = fiber_inhabitation(m);
  ExtensionalityProbe probe;
  probe.pulled.cod = {};
  for (std::size_t p = 0; p < m.cod.size(); ++p) {
    for (std::size_t q = 0; q < m.cod.size(); ++q) {
      if (inhabited[p] != inhabited[q]) continue;
      const std::size_t y = probe.pairs.size();
      probe.pairs.push_back("(" + m.cod[p] + "," + m.cod[q] + ")");
      probe.first.push_back(p);
      probe.second.push_back(q);
      if (inhabited[p]) {
        probe.pulled.dom.push_back("x" + std::to_string(y));
        probe.pulled.map.push_back(y);
      }
    }
  }
  probe.pulled.cod = probe.pairs;
  if (!is_pullback_along(probe.pulled, m, probe.first)) {
    throw InvariantError("pulled mono is not the pullback along the first projection");
  }
  probe.pulled_along_second = is_pullback_along(probe.pulled, m, probe.second);
  probe.projections_agree = probe.first == probe.second;
  return probe;
}

Internalisation internalise(const TCSetMor& f, const PointLiftStructure& lifts, const ExtMono& g) {
  if (!(lifts.carrier() == f)) throw PreconditionError("lift structure belongs to a different map");
  if (!is_mono(f)) throw PreconditionError("map is not a monomorphism");
  const TCSet& y = f.target();
  const std::size_t trunc = f.trunc();
  // Gamma(f) must be classified by g; this throws otherwise.
  SetMap gamma_f = gamma_map(f);
  classify_set(gamma_f, g);

  const Subobject img = image(f);
  TCSetMor::Components chi_comps(trunc + 1);
  for (std::size_t n = 0; n <= trunc; ++n) {
    for (std::size_t e = 0; e < y.size(n); ++e) {
      auto p = g.point_with(img.contains(n, e));
      if (!p) {
        throw ClassificationError("fiber over '" + y.name(n, e) + "' at level " + std::to_string(n) +
                                  " has no classifying point");
      }
      chi_comps[n].push_back(*p);
    }
  }
  const TCSet delta_p = delta_const(g.base(), trunc);
  std::optional<TCSetMor> chi;
  try {
    chi = TCSetMor::make(y, delta_p, std::move(chi_comps));
  } catch (const NaturalityError& e) {
    throw InvariantError(std::string("classifying map is not natural: ") + e.what());
  }
  PairCone pulled = pullback(*chi, delta_map(g.mono(), trunc));
  TCSetMor comparison = TCSetMor::build(f.source(), pulled.object, [&](std::size_t n, std::size_t e) {
    const std::size_t ye = f(n, e);
    auto q = g.fiber_element((*chi)(n, ye));
    if (!q) throw InvariantError("element lies over an uninhabited base point");
    auto idx = pulled.index(n, ye, *q);
    if (!idx) throw InvariantError("comparison leaves the pullback");
    return *idx;
  });
  if (!is_iso(comparison)) {
    throw InvariantError("pullback of Delta(g) along chi is not isomorphic to f");
  }
  return Internalisation{std::move(*chi), std::move(pulled), std::move(comparison)};
}

NegNegClassification classify_negneg(const TCSetMor& f, const HPropWitness& witness) {
  if (!verify_hprop_witness(f, witness)) throw PreconditionError("h-proposition witness does not check");
  const TCSet& y = f.target();
  Subobject stable = neg_sub(neg_sub(image(f)));
  const TCSetMor inclusion = stable.inclusion();
  auto stability = find_map_over(inclusion, f);
  if (!stability) throw NotStableError("no map from the double negation back to the proposition");
  auto lifts = find_point_lifts(inclusion);
  if (!lifts) throw PreconditionError("double negation has no point lifts");
  Internalisation internal = internalise(inclusion, *lifts, ExtMono::truth());

  const TCSet& classified = internal.pulled.object;
  // Position of y within the subobject `stable`.
  std::vector<std::vector<std::size_t>> local(y.trunc() + 1);
  for (std::size_t n = 0; n <= y.trunc(); ++n) {
    local[n].assign(y.size(n), 0);
    for (std::size_t e = 0; e < inclusion.source().size(n); ++e) local[n][inclusion(n, e)] = e;
  }
  std::vector<std::vector<std::size_t>> inverse(y.trunc() + 1);
  for (std::size_t n = 0; n <= y.trunc(); ++n) {
    inverse[n].assign(classified.size(n), 0);
    for (std::size_t e = 0; e < inclusion.source().size(n); ++e) inverse[n][internal.comparison(n, e)] = e;
  }
  TCSetMor to_classified = TCSetMor::build(f.source(), classified, [&](std::size_t n, std::size_t x) {
    const std::size_t ye = f(n, x);
    if (!stable.contains(n, ye)) throw InvariantError("proposition is not contained in its double negation");
    return internal.comparison(n, local[n][ye]);
  });
  TCSetMor from_classified = TCSetMor::build(
      classified, f.source(), [&](std::size_t n, std::size_t c) { return (*stability)(n, inverse[n][c]); });

  const TCSetMor& over = internal.pulled.first;
  if (!(compose(over, to_classified) == f) || !(compose(f, from_classified) == over)) {
    throw InvariantError("equivalence maps do not lie over the base");
  }
  const Subobject classified_sub = image(over);
  if (!(neg_sub(neg_sub(classified_sub)) == classified_sub)) {
    throw InvariantError("classified subobject is not double-negation stable");
  }
  return NegNegClassification{std::move(stable), std::move(*stability), std::move(internal),
                              std::move(to_classified), std::move(from_classified)};
}

}  // namespace cubeprop
