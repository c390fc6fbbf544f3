#include "cubeprop/generate.hpp"

#include <algorithm>

#include "cubeprop/error.hpp"
#include "cubeprop/fibration.hpp"
#include "cubeprop/search.hpp"

namespace cubeprop {

Sum disjoint_union(const std::vector<TCSet>& parts, const std::vector<std::string>& tags) {
  if (parts.empty() || parts.size() != tags.size()) throw PreconditionError("disjoint union needs one tag per part");
  const std::size_t trunc = parts.front().trunc();
  std::vector<std::vector<std::size_t>> offset(parts.size() + 1, std::vector<std::size_t>(trunc + 1, 0));
  std::vector<FinSet> levels(trunc + 1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].trunc() != trunc) throw CompositionError("parts have different truncations");
    for (std::size_t n = 0; n <= trunc; ++n) {
      for (const auto& name : parts[i].level(n)) levels[n].push_back(tags[i] + ":" + name);
      offset[i + 1][n] = offset[i][n] + parts[i].size(n);
    }
  }
  TCSet object = TCSet::build(trunc, std::move(levels), [&](const CubeMor& s, std::size_t e) {
    std::size_t i = 0;
    while (e >= offset[i + 1][s.cod()]) ++i;
    return offset[i][s.dom()] + parts[i].act(s, e - offset[i][s.cod()]);
  });
  std::vector<TCSetMor> injections;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    injections.push_back(
        TCSetMor::build(parts[i], object, [&](std::size_t n, std::size_t e) { return offset[i][n] + e; }));
  }
  return Sum{std::move(object), std::move(injections)};
}

TCSetMor product_map(const TCSetMor& f, const TCSetMor& g) {
  const PairCone src = product(f.source(), g.source());
  const PairCone tgt = product(f.target(), g.target());
  return TCSetMor::build(src.object, tgt.object, [&](std::size_t n, std::size_t e) {
    const auto [a, b] = src.pairs[n][e];
    return *tgt.index(n, f(n, a), g(n, b));
  });
}

FinSet random_set(Rng& rng, std::size_t lo, std::size_t hi, const std::string& prefix) {
  return numbered_set(prefix, lo + rng.below(hi - lo + 1));
}

SetMap random_set_map(Rng& rng, const FinSet& dom, const FinSet& cod) {
  if (!dom.empty() && cod.empty()) throw PreconditionError("no map from a nonempty set to the empty set");
  SetMap out{dom, cod, {}};
  for (std::size_t i = 0; i < dom.size(); ++i) out.map.push_back(rng.below(cod.size()));
  return out;
}

SetMap random_set_mono(Rng& rng, const FinSet& dom, const FinSet& cod) {
  if (dom.size() > cod.size()) throw PreconditionError("no injection into a smaller set");
  std::vector<std::size_t> perm(cod.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  rng.shuffle(perm);
  perm.resize(dom.size());
  return SetMap{dom, cod, perm};
}

namespace {

std::size_t max_level(const TCSet& x) {
  std::size_t m = 0;
  for (std::size_t n = 0; n <= x.trunc(); ++n) m = std::max(m, x.size(n));
  return m;
}

}  // namespace

Subobject boundary_of_interval(std::size_t trunc) {
  const TCSet y1 = yoneda(1, trunc);
  Subobject::Members gens(trunc + 1);
  for (std::size_t n = 0; n <= trunc; ++n) gens[n].assign(y1.size(n), false);
  gens[0][*y1.index_of(0, CubeMor(0, {Term::zero()}).to_string())] = true;
  gens[0][*y1.index_of(0, CubeMor(0, {Term::one()}).to_string())] = true;
  return Subobject::closure(y1, gens);
}

Subobject endpoint_of_interval(std::size_t trunc) {
  const TCSet y1 = yoneda(1, trunc);
  Subobject::Members gens(trunc + 1);
  for (std::size_t n = 0; n <= trunc; ++n) gens[n].assign(y1.size(n), false);
  gens[0][*y1.index_of(0, CubeMor(0, {Term::zero()}).to_string())] = true;
  return Subobject::closure(y1, gens);
}

TCSet random_piece(Rng& rng, const GenConfig& cfg) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    TCSet piece = [&] {
      switch (rng.below(4)) {
        case 0: return delta_const(random_set(rng, 1, 3, "a"), cfg.trunc);
        case 1: return terminal(cfg.trunc);
        case 2: return yoneda(1, cfg.trunc);
        default: return boundary_of_interval(cfg.trunc).as_tcset();
      }
    }();
    if (max_level(piece) <= cfg.max_level_size) return piece;
  }
  return terminal(cfg.trunc);
}

TCSet random_tcset(Rng& rng, const GenConfig& cfg) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    const std::size_t count = 1 + rng.below(3);
    std::vector<TCSet> parts;
    std::vector<std::string> tags;
    for (std::size_t i = 0; i < count; ++i) {
      parts.push_back(random_piece(rng, cfg));
      tags.push_back("p" + std::to_string(i));
    }
    if (count == 1) return parts.front();
    TCSet sum = disjoint_union(parts, tags).object;
    if (max_level(sum) <= cfg.max_level_size) return sum;
  }
  return random_piece(rng, cfg);
}

std::optional<TCSetMor> random_morphism(Rng& rng, const TCSet& x, const TCSet& y) {
  SearchOptions options;
  options.shuffle = &rng;
  return find_morphism(x, y, options);
}

Subobject random_subobject(Rng& rng, const TCSet& y) {
  Subobject::Members gens(y.trunc() + 1);
  for (std::size_t n = 0; n <= y.trunc(); ++n) {
    gens[n].assign(y.size(n), false);
    for (std::size_t e = 0; e < y.size(n); ++e) gens[n][e] = rng.below(4) == 0;
  }
  return Subobject::closure(y, gens);
}

namespace {

std::optional<Instance> fibrant_of_kind(Rng& rng, const GenConfig& cfg, std::size_t kind) {
  switch (kind) {
    case 0: {
      const FinSet cod = random_set(rng, 1, 3, "b");
      const FinSet dom = numbered_set("a", rng.below(cod.size() + 1));
      return Instance{"delta-mono", delta_map(random_set_mono(rng, dom, cod), cfg.trunc)};
    }
    case 1: {
      std::vector<TCSet> parts{random_piece(rng, cfg), random_piece(rng, cfg)};
      Sum sum = disjoint_union(parts, {"l", "r"});
      const std::size_t pick = rng.below(2);
      return Instance{"summand", sum.injections[pick]};
    }
    case 2: {
      const TCSet y = random_tcset(rng, cfg);
      return Instance{"negation", neg_sub(random_subobject(rng, y)).inclusion()};
    }
    case 3: {
      const TCSet y = random_tcset(rng, cfg);
      return Instance{"double-negation", neg_sub(neg_sub(random_subobject(rng, y))).inclusion()};
    }
    case 4: {
      auto base = fibrant_of_kind(rng, cfg, rng.below(2));
      const TCSet y2 = random_tcset(rng, cfg);
      auto g = random_morphism(rng, y2, base->map.target());
      if (!g) return std::nullopt;
      PairCone cone = pullback(base->map, *g);
      return Instance{"pullback-of-" + base->label, cone.second};
    }
    default: {
      auto base = fibrant_of_kind(rng, cfg, rng.below(2));
      const TCSet z = rng.coin() ? terminal(cfg.trunc) : delta_const(random_set(rng, 1, 2, "z"), cfg.trunc);
      return Instance{"product-of-" + base->label, product_map(base->map, identity(z))};
    }
  }
}

}  // namespace

Instance random_fibrant_mono(Rng& rng, const GenConfig& cfg) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    auto inst = fibrant_of_kind(rng, cfg, rng.below(6));
    if (inst && is_mono(inst->map) && find_point_lifts(inst->map)) return *inst;
  }
  throw InvariantError("no monomorphism with point lifts generated in 1000 attempts");
}

namespace {

// Sum over z of the given fibers, mapped to Delta Z.
TCSetMor fiberwise(const FinSet& z, const std::vector<TCSet>& fibers) {
  std::vector<std::string> tags = z;
  Sum sum = disjoint_union(fibers, tags);
  std::vector<std::vector<std::size_t>> owner(sum.object.trunc() + 1);
  for (std::size_t i = 0; i < fibers.size(); ++i) {
    for (std::size_t n = 0; n <= sum.object.trunc(); ++n) {
      for (std::size_t e = 0; e < fibers[i].size(n); ++e) owner[n].push_back(i);
    }
  }
  return TCSetMor::build(sum.object, delta_const(z, sum.object.trunc()),
                         [&](std::size_t n, std::size_t e) { return owner[n][e]; });
}

}  // namespace

Instance random_hprop(Rng& rng, const GenConfig& cfg) {
  switch (rng.below(4)) {
    case 0: {
      const FinSet z = random_set(rng, 1, 2, "z");
      std::vector<TCSet> fibers;
      for (std::size_t i = 0; i < z.size(); ++i) fibers.push_back(nabla(random_set(rng, 0, 2, "s"), cfg.trunc));
      return Instance{"fiberwise-codiscrete", fiberwise(z, fibers)};
    }
    case 1: {
      const FinSet cod = random_set(rng, 1, 3, "b");
      const FinSet dom = numbered_set("a", rng.below(cod.size() + 1));
      return Instance{"delta-mono", delta_map(random_set_mono(rng, dom, cod), cfg.trunc)};
    }
    case 2: {
      const TCSet y = random_piece(rng, cfg);
      PairCone cone = product(y, nabla(random_set(rng, 1, 2, "s"), cfg.trunc));
      return Instance{"codiscrete-factor", cone.first};
    }
    default: return random_fibrant_mono(rng, cfg);
  }
}

Instance random_inhabited_hprop_over_delta(Rng& rng, const GenConfig& cfg, FinSet& z) {
  z = random_set(rng, 1, 2, "z");
  std::vector<TCSet> fibers;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (rng.coin()) {
      fibers.push_back(terminal(cfg.trunc));
    } else {
      fibers.push_back(nabla(random_set(rng, 1, 2, "s"), cfg.trunc));
    }
  }
  return Instance{"inhabited-fiberwise", fiberwise(z, fibers)};
}

std::vector<GeneratedFile> generate_kind(const std::string& kind, Rng& rng, const GenConfig& cfg, std::size_t n) {
  std::vector<GeneratedFile> out;
  if (kind == "constant") {
    out.push_back({"constant", delta_const(random_set(rng, 1, std::max<std::size_t>(n, 1), "a"), cfg.trunc), {}});
  } else if (kind == "representable") {
    out.push_back({"representable-" + std::to_string(n), yoneda(n, cfg.trunc), {}});
  } else if (kind == "subobject-of-product") {
    const PairCone cone = product(random_piece(rng, cfg), random_piece(rng, cfg));
    out.push_back({"subobject-of-product", {}, random_subobject(rng, cone.object).inclusion()});
  } else if (kind == "negation-image") {
    for (int attempt = 0; attempt < 1000 && out.empty(); ++attempt) {
      const TCSet x = random_tcset(rng, cfg);
      const TCSet y = random_tcset(rng, cfg);
      auto f = random_morphism(rng, x, y);
      if (!f) continue;
      TCSetMor neg = neg_map(*f);
      if (find_point_lifts(neg)) {
        out.push_back({"source-map", {}, *f});
        out.push_back({"negation-image", {}, neg});
      }
    }
    if (out.empty()) throw InvariantError("no negation image with point lifts generated");
  } else if (kind == "random-quotient") {
    for (int attempt = 0; attempt < 1000 && out.empty(); ++attempt) {
      const TCSet x = random_tcset(rng, cfg);
      const TCSet y = random_tcset(rng, cfg);
      auto f = random_morphism(rng, x, y);
      if (!f) continue;
      const TCSet quotient = image(*f).as_tcset();
      out.push_back({"random-quotient", {}, TCSetMor::build(x, quotient, [&](std::size_t level, std::size_t e) {
                       return *quotient.index_of(level, y.name(level, (*f)(level, e)));
                     })});
    }
  } else {
    throw PreconditionError("unknown generator kind '" + kind + "'");
  }
  return out;
}

}  // namespace cubeprop
