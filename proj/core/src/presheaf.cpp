#include "cubeprop/presheaf.hpp"

#include <algorithm>

#include "cubeprop/error.hpp"

namespace cubeprop {

TCSet yoneda(std::size_t n, std::size_t trunc) {
  std::vector<FinSet> levels(trunc + 1);
  for (std::size_t m = 0; m <= trunc; ++m) {
    for (const CubeMor& g : enum_homs(m, n)) levels[m].push_back(g.to_string());
  }
  return TCSet::build(trunc, std::move(levels), [n](const CubeMor& s, std::size_t g_rank) {
    return hom_rank(compose(hom_unrank(s.cod(), n, g_rank), s));
  });
}

TCSet terminal(std::size_t trunc) { return delta_const({"*"}, trunc); }

TCSet initial(std::size_t trunc) { return delta_const({}, trunc); }

TCSet delta_const(const FinSet& z, std::size_t trunc) {
  return TCSet::build(trunc, std::vector<FinSet>(trunc + 1, z), [](const CubeMor&, std::size_t x) { return x; });
}

TCSetMor delta_map(const SetMap& g, std::size_t trunc) {
  g.check();
  return TCSetMor::build(delta_const(g.dom, trunc), delta_const(g.cod, trunc),
                         [&](std::size_t, std::size_t x) { return g.map[x]; });
}

FinSet gamma(const TCSet& x) { return x.level(0); }

SetMap gamma_map(const TCSetMor& f) { return SetMap{f.source().level(0), f.target().level(0), f.component(0)}; }

std::size_t nabla_index(std::size_t z_size, const std::vector<std::size_t>& values) {
  std::size_t index = 0;
  for (std::size_t v : values) index = index * z_size + v;
  return index;
}

std::vector<std::size_t> nabla_values(std::size_t z_size, std::size_t n, std::size_t index) {
  const std::size_t k = std::size_t{1} << n;
  std::vector<std::size_t> values(k, 0);
  for (std::size_t i = k; i-- > 0;) {
    values[i] = index % z_size;
    index /= z_size;
  }
  return values;
}

namespace {

std::string nabla_name(const FinSet& z, const std::vector<std::size_t>& values) {
  std::string out = "<";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += z[values[i]];
  }
  out += '>';
  return out;
}

// Rank among points(n) of the point s o q.
std::size_t point_rank(const CubeMor& s, const CubeMor& q) { return hom_rank(compose(s, q)); }

}  // namespace

TCSet nabla(const FinSet& z, std::size_t trunc) {
  const std::size_t zs = z.size();
  std::vector<FinSet> levels(trunc + 1);
  for (std::size_t n = 0; n <= trunc; ++n) {
    for (const auto& values : all_functions(std::size_t{1} << n, zs)) levels[n].push_back(nabla_name(z, values));
  }
  std::vector<std::vector<CubeMor>> pts(trunc + 1);
  for (std::size_t n = 0; n <= trunc; ++n) pts[n] = points(n);
  return TCSet::build(trunc, std::move(levels), [&](const CubeMor& s, std::size_t h) {
    const auto values = nabla_values(zs, s.cod(), h);
    std::vector<std::size_t> out;
    out.reserve(pts[s.dom()].size());
    for (const CubeMor& q : pts[s.dom()]) out.push_back(values[point_rank(s, q)]);
    return nabla_index(zs, out);
  });
}

TCSetMor nabla_map(const SetMap& g, std::size_t trunc) {
  g.check();
  return TCSetMor::build(nabla(g.dom, trunc), nabla(g.cod, trunc), [&](std::size_t n, std::size_t h) {
    auto values = nabla_values(g.dom.size(), n, h);
    for (auto& v : values) v = g.map[v];
    return nabla_index(g.cod.size(), values);
  });
}

TCSetMor nabla_unit(const TCSet& x) {
  const FinSet x0 = gamma(x);
  const std::size_t trunc = x.trunc();
  std::vector<std::vector<CubeMor>> pts(trunc + 1);
  for (std::size_t n = 0; n <= trunc; ++n) pts[n] = points(n);
  return TCSetMor::build(x, nabla(x0, trunc), [&](std::size_t n, std::size_t e) {
    std::vector<std::size_t> values;
    for (const CubeMor& p : pts[n]) values.push_back(x.act(p, e));
    return nabla_index(x0.size(), values);
  });
}

TCSetMor delta_to_nabla(const FinSet& z, std::size_t trunc) {
  return TCSetMor::build(delta_const(z, trunc), nabla(z, trunc), [&](std::size_t n, std::size_t e) {
    return nabla_index(z.size(), std::vector<std::size_t>(std::size_t{1} << n, e));
  });
}

namespace {

std::optional<std::size_t> find_pair(const std::vector<std::pair<std::size_t, std::size_t>>& level,
                                     std::size_t a, std::size_t b) {
  const auto key = std::make_pair(a, b);
  auto it = std::lower_bound(level.begin(), level.end(), key);
  if (it == level.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

template <typename Keep>
PairCone pair_cone(const TCSet& x, const TCSet& y, Keep keep) {
  if (x.trunc() != y.trunc()) throw CompositionError("presheaves have different truncations");
  const std::size_t trunc = x.trunc();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs(trunc + 1);
  std::vector<FinSet> levels(trunc + 1);
  for (std::size_t n = 0; n <= trunc; ++n) {
    for (std::size_t a = 0; a < x.size(n); ++a) {
      for (std::size_t b = 0; b < y.size(n); ++b) {
        if (!keep(n, a, b)) continue;
        pairs[n].emplace_back(a, b);
        levels[n].push_back("(" + x.name(n, a) + "," + y.name(n, b) + ")");
      }
    }
  }
  TCSet object = TCSet::build(trunc, std::move(levels), [&](const CubeMor& s, std::size_t e) {
    const auto [a, b] = pairs[s.cod()][e];
    auto idx = find_pair(pairs[s.dom()], x.act(s, a), y.act(s, b));
    if (!idx) throw InvariantError("pair cone is not closed under " + s.to_string());
    return *idx;
  });
  TCSetMor first = TCSetMor::build(object, x, [&](std::size_t n, std::size_t e) { return pairs[n][e].first; });
  TCSetMor second = TCSetMor::build(object, y, [&](std::size_t n, std::size_t e) { return pairs[n][e].second; });
  return PairCone{std::move(object), std::move(first), std::move(second), std::move(pairs)};
}

}  // namespace

std::optional<std::size_t> PairCone::index(std::size_t n, std::size_t a, std::size_t b) const {
  return find_pair(pairs[n], a, b);
}

PairCone product(const TCSet& x, const TCSet& y) {
  return pair_cone(x, y, [](std::size_t, std::size_t, std::size_t) { return true; });
}

PairCone pullback(const TCSetMor& f, const TCSetMor& g) {
  if (!(f.target() == g.target())) throw CompositionError("pullback of maps with different targets");
  return pair_cone(f.source(), g.source(), [&](std::size_t n, std::size_t a, std::size_t b) { return f(n, a) == g(n, b); });
}

Coproduct coproduct(const TCSet& x, const TCSet& y) {
  if (x.trunc() != y.trunc()) throw CompositionError("presheaves have different truncations");
  const std::size_t trunc = x.trunc();
  std::vector<FinSet> levels(trunc + 1);
  for (std::size_t n = 0; n <= trunc; ++n) {
    for (const auto& name : x.level(n)) levels[n].push_back("inl:" + name);
    for (const auto& name : y.level(n)) levels[n].push_back("inr:" + name);
  }
  TCSet object = TCSet::build(trunc, std::move(levels), [&](const CubeMor& s, std::size_t e) {
    const std::size_t left = x.size(s.cod());
    if (e < left) return x.act(s, e);
    return x.size(s.dom()) + y.act(s, e - left);
  });
  TCSetMor inl = TCSetMor::build(x, object, [](std::size_t, std::size_t e) { return e; });
  TCSetMor inr = TCSetMor::build(y, object, [&](std::size_t n, std::size_t e) { return x.size(n) + e; });
  return Coproduct{object, inl, inr};
}

Subobject image(const TCSetMor& f) {
  Subobject::Members members(f.trunc() + 1);
  for (std::size_t n = 0; n <= f.trunc(); ++n) {
    members[n].assign(f.target().size(n), false);
    for (std::size_t y : f.component(n)) members[n][y] = true;
  }
  return Subobject::make(f.target(), std::move(members));
}

Subobject preimage(const Subobject& a, const TCSetMor& g) {
  if (!(g.target() == a.ambient())) throw CompositionError("reindexing along a map into a different presheaf");
  Subobject::Members members(g.trunc() + 1);
  for (std::size_t n = 0; n <= g.trunc(); ++n) {
    members[n].resize(g.source().size(n));
    for (std::size_t w = 0; w < g.source().size(n); ++w) members[n][w] = a.contains(n, g(n, w));
  }
  return Subobject::make(g.source(), std::move(members));
}

TCSet truncate(const TCSet& x, std::size_t trunc) {
  if (trunc > x.trunc()) throw TruncationTooSmall("cannot truncate upwards");
  std::vector<FinSet> levels(trunc + 1);
  for (std::size_t n = 0; n <= trunc; ++n) levels[n] = x.level(n);
  return TCSet::build(trunc, std::move(levels), [&](const CubeMor& s, std::size_t e) { return x.act(s, e); });
}

TCSetMor truncate(const TCSetMor& f, std::size_t trunc) {
  return TCSetMor::build(truncate(f.source(), trunc), truncate(f.target(), trunc),
                         [&](std::size_t n, std::size_t e) { return f(n, e); });
}

TCSet interval_exponential(const TCSet& x) {
  if (x.trunc() == 0) throw TruncationTooSmall("interval exponential needs truncation at least 1");
  const std::size_t trunc = x.trunc() - 1;
  std::vector<FinSet> levels(trunc + 1);
  for (std::size_t n = 0; n <= trunc; ++n) levels[n] = x.level(n + 1);
  return TCSet::build(trunc, std::move(levels),
                      [&](const CubeMor& s, std::size_t e) { return x.act(times_interval(s), e); });
}

TCSetMor interval_exponential(const TCSetMor& f) {
  return TCSetMor::build(interval_exponential(f.source()), interval_exponential(f.target()),
                         [&](std::size_t n, std::size_t e) { return f(n + 1, e); });
}

TCSetMor constant_paths(const TCSet& y) {
  if (y.trunc() == 0) throw TruncationTooSmall("constant paths need truncation at least 1");
  return TCSetMor::build(truncate(y, y.trunc() - 1), interval_exponential(y),
                         [&](std::size_t n, std::size_t e) { return y.act(drop_last(n), e); });
}

PathObject path_object(const TCSetMor& f) {
  if (f.trunc() == 0) throw TruncationTooSmall("path objects need truncation at least 1");
  const std::size_t trunc = f.trunc() - 1;
  PairCone paths = pullback(interval_exponential(f), constant_paths(f.target()));
  const TCSetMor base = truncate(f, trunc);
  PairCone endpoints = pullback(base, base);
  const TCSet& x = f.source();
  std::vector<CubeMor> face0;
  std::vector<CubeMor> face1;
  for (std::size_t n = 0; n <= trunc; ++n) {
    face0.push_back(end_face(n, false));
    face1.push_back(end_face(n, true));
  }
  TCSetMor boundary = TCSetMor::build(paths.object, endpoints.object, [&](std::size_t n, std::size_t e) {
    const std::size_t omega = paths.pairs[n][e].first;
    auto idx = endpoints.index(n, x.act(face0[n], omega), x.act(face1[n], omega));
    if (!idx) throw InvariantError("path endpoints lie over different base points");
    return *idx;
  });
  return PathObject{std::move(paths), std::move(endpoints), std::move(boundary)};
}

Subobject neg_sub_by_morphisms(const Subobject& a) {
  const TCSet& y = a.ambient();
  const SiteIndex& idx = y.site_index();
  Subobject::Members members(y.trunc() + 1);
  for (std::size_t n = 0; n <= y.trunc(); ++n) {
    members[n].assign(y.size(n), true);
    for (std::size_t e = 0; e < y.size(n); ++e) {
      for (std::size_t id : idx.into(n)) {
        if (a.contains(idx.mor(id).dom(), y.act(id, e))) {
          members[n][e] = false;
          break;
        }
      }
    }
  }
  return Subobject::make(y, std::move(members));
}

Subobject neg_sub(const Subobject& a) {
  const TCSet& y = a.ambient();
  Subobject::Members members(y.trunc() + 1);
  for (std::size_t n = 0; n <= y.trunc(); ++n) {
    const auto pts = points(n);
    members[n].assign(y.size(n), true);
    for (std::size_t e = 0; e < y.size(n); ++e) {
      for (const CubeMor& p : pts) {
        if (a.contains(0, y.act(p, e))) {
          members[n][e] = false;
          break;
        }
      }
    }
  }
  Subobject by_points = Subobject::make(y, std::move(members));
  if (!(by_points == neg_sub_by_morphisms(a))) {
    throw InvariantError("point-based and morphism-based negation disagree");
  }
  return by_points;
}

TCSetMor neg_map(const TCSetMor& f) { return neg_sub(image(f)).inclusion(); }

}  // namespace cubeprop
