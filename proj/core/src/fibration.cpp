#include "cubeprop/fibration.hpp"

#include "cubeprop/error.hpp"
#include "cubeprop/search.hpp"

namespace cubeprop {

std::vector<LiftProblem> lift_problems(const TCSetMor& f) {
  const TCSet& x = f.source();
  const TCSet& y = f.target();
  std::vector<LiftProblem> out;
  for (std::size_t n = 0; n <= f.trunc(); ++n) {
    const auto pts = points(n);
    for (std::size_t p = 0; p < pts.size(); ++p) {
      for (std::size_t x0 = 0; x0 < x.size(0); ++x0) {
        for (std::size_t yn = 0; yn < y.size(n); ++yn) {
          if (f(0, x0) == y.act(pts[p], yn)) out.push_back({n, p, x0, yn});
        }
      }
    }
  }
  return out;
}

namespace {

std::optional<std::size_t> solve(const TCSetMor& f, const LiftProblem& problem, const CubeMor& point) {
  const TCSet& x = f.source();
  for (std::size_t cand = 0; cand < x.size(problem.level); ++cand) {
    if (f(problem.level, cand) == problem.y && x.act(point, cand) == problem.x) return cand;
  }
  return std::nullopt;
}

}  // namespace

PointLiftStructure PointLiftStructure::make(TCSetMor carrier, std::map<LiftProblem, std::size_t> table) {
  const auto problems = lift_problems(carrier);
  if (problems.size() != table.size()) throw PreconditionError("lift table does not match the lifting problems");
  for (const LiftProblem& problem : problems) {
    auto it = table.find(problem);
    if (it == table.end()) throw PreconditionError("lift table is not total");
    const CubeMor point = points(problem.level)[problem.point];
    const std::size_t lift = it->second;
    if (lift >= carrier.source().size(problem.level) || carrier(problem.level, lift) != problem.y ||
        carrier.source().act(point, lift) != problem.x) {
      throw PreconditionError("lift table entry does not solve its lifting problem");
    }
  }
  return PointLiftStructure(std::move(carrier), std::move(table));
}

std::optional<PointLiftStructure> find_point_lifts(const TCSetMor& f) {
  std::map<LiftProblem, std::size_t> table;
  std::vector<std::vector<CubeMor>> pts(f.trunc() + 1);
  for (std::size_t n = 0; n <= f.trunc(); ++n) pts[n] = points(n);
  for (const LiftProblem& problem : lift_problems(f)) {
    auto lift = solve(f, problem, pts[problem.level][problem.point]);
    if (!lift) return std::nullopt;
    table.emplace(problem, *lift);
  }
  return PointLiftStructure::make(f, std::move(table));
}

std::optional<LiftProblem> unliftable_problem(const TCSetMor& f) {
  for (const LiftProblem& problem : lift_problems(f)) {
    if (!solve(f, problem, points(problem.level)[problem.point])) return problem;
  }
  return std::nullopt;
}

std::optional<HPropWitness> is_hprop(const TCSetMor& f) {
  if (f.trunc() == 0) throw TruncationTooSmall("h-proposition check needs truncation at least 1");
  PathObject path = path_object(f);
  auto section = find_section(path.boundary);
  if (!section) return std::nullopt;
  return HPropWitness{std::move(path), std::move(*section)};
}

bool verify_hprop_witness(const TCSetMor& f, const HPropWitness& witness) {
  const PathObject expected = path_object(f);
  if (!(witness.path.boundary == expected.boundary)) return false;
  if (!(witness.section.source() == expected.boundary.target()) ||
      !(witness.section.target() == expected.boundary.source())) {
    return false;
  }
  const TCSetMor& b = expected.boundary;
  for (std::size_t n = 0; n <= b.trunc(); ++n) {
    for (std::size_t e = 0; e < b.target().size(n); ++e) {
      if (b(n, witness.section(n, e)) != e) return false;
    }
  }
  return true;
}

NatPullbackReport check_nat_pullback(const TCSetMor& f, const CubeMor& s) {
  const TCSet& x = f.source();
  const TCSet& y = f.target();
  if (s.dom() > f.trunc() || s.cod() > f.trunc()) {
    throw PreconditionError("morphism " + s.to_string() + " outside the truncation");
  }
  const std::size_t m = s.dom();
  const std::size_t n = s.cod();
  for (std::size_t yn = 0; yn < y.size(n); ++yn) {
    const std::size_t ym = y.act(s, yn);
    for (std::size_t xm = 0; xm < x.size(m); ++xm) {
      if (f(m, xm) != ym) continue;
      std::size_t matches = 0;
      for (std::size_t xn = 0; xn < x.size(n); ++xn) {
        if (f(n, xn) == yn && x.act(s, xn) == xm) ++matches;
      }
      if (matches != 1) {
        return NatPullbackReport{false, "at s = " + s.to_string() + ": y = '" + y.name(n, yn) + "', x = '" +
                                            x.name(m, xm) + "' has " + std::to_string(matches) +
                                            " preimages in X_" + std::to_string(n) + " (expected 1)"};
      }
    }
  }
  return NatPullbackReport{};
}

NablaRel nabla_rel(const FinSet& z, const TCSetMor& f) {
  const std::size_t trunc = f.trunc();
  if (!(f.target() == delta_const(z, trunc))) throw PreconditionError("map is not into the constant presheaf on Z");
  const TCSetMor over = nabla_map(gamma_map(f), trunc);
  const TCSetMor diag = delta_to_nabla(z, trunc);
  PairCone cone = pullback(over, diag);
  const TCSetMor unit = nabla_unit(f.source());
  TCSetMor projection = cone.second;
  TCSetMor canonical = TCSetMor::build(f.source(), cone.object, [&](std::size_t n, std::size_t w) {
    auto idx = cone.index(n, unit(n, w), f(n, w));
    if (!idx) throw InvariantError("canonical map leaves the pullback");
    return *idx;
  });
  return NablaRel{std::move(cone), std::move(projection), std::move(canonical)};
}

SetMap gamma_section_transfer(const FinSet& z, const TCSetMor& f, const NablaRel& rel, const TCSetMor& s) {
  if (!(s.source() == rel.projection.target()) || !(s.target() == rel.projection.source())) {
    throw PreconditionError("section has the wrong source or target");
  }
  for (std::size_t n = 0; n <= s.trunc(); ++n) {
    for (std::size_t e = 0; e < s.source().size(n); ++e) {
      if (rel.projection(n, s(n, e)) != e) throw PreconditionError("map is not a section of the projection");
    }
  }
  // At level 0 an element of Nabla Gamma W is a function on the single point
  // of [0], so its index is the chosen element of W_0.
  SetMap out{z, f.source().level(0), {}};
  for (std::size_t zi = 0; zi < z.size(); ++zi) out.map.push_back(rel.cone.pairs[0][s(0, zi)].first);
  for (std::size_t zi = 0; zi < z.size(); ++zi) {
    if (f(0, out.map[zi]) != zi) throw InvariantError("transferred section does not lie over its base point");
  }
  return out;
}

}  // namespace cubeprop
