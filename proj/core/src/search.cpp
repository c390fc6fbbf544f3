#include "cubeprop/search.hpp"

#include <numeric>

#include "cubeprop/error.hpp"

namespace cubeprop {

namespace {

constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

struct Check {
  std::size_t site_id;  // s : [m] -> [n]
  std::size_t other;    // variable id of the partner element
};

class Solver {
 public:
  Solver(const TCSet& x, const TCSet& y, const SearchOptions& options,
         const std::function<bool(const TCSetMor::Components&)>& visit)
      : x_(x), y_(y), opts_(options), visit_(visit), idx_(x.site_index()) {
    const std::size_t trunc = x.trunc();
    offset_.resize(trunc + 2, 0);
    for (std::size_t n = 0; n <= trunc; ++n) offset_[n + 1] = offset_[n] + x.size(n);
    const std::size_t vars = offset_[trunc + 1];
    level_of_.resize(vars);
    for (std::size_t n = 0; n <= trunc; ++n) {
      for (std::size_t v = offset_[n]; v < offset_[n + 1]; ++v) level_of_[v] = n;
    }
    source_checks_.resize(vars);
    forcing_checks_.resize(vars);
    for (std::size_t n = 0; n <= trunc; ++n) {
      for (std::size_t e = 0; e < x.size(n); ++e) {
        const std::size_t v = offset_[n] + e;
        for (std::size_t id : idx_.into(n)) {
          const std::size_t m = idx_.mor(id).dom();
          const std::size_t u = offset_[m] + x.act(id, e);
          // phi_m(u) == Y_s(phi_n(v))
          if (u <= v) {
            source_checks_[v].push_back({id, u});
          } else {
            forcing_checks_[u].push_back({id, v});
          }
        }
      }
    }
    assign_.assign(vars, kUnassigned);
    used_.resize(trunc + 1);
    for (std::size_t n = 0; n <= trunc; ++n) used_[n].assign(y.size(n), false);
  }

  std::size_t run() {
    for (std::size_t n = 0; n <= x_.trunc(); ++n) {
      if (x_.size(n) > 0 && y_.size(n) == 0) return 0;
      if (opts_.injective && x_.size(n) > y_.size(n)) return 0;
    }
    dfs(0);
    return found_;
  }

 private:
  bool consistent(std::size_t v, std::size_t n, std::size_t val) const {
    if (opts_.allowed && !opts_.allowed(n, v - offset_[n], val)) return false;
    if (opts_.injective && used_[n][val]) return false;
    for (const Check& c : source_checks_[v]) {
      const std::size_t other = c.other == v ? val : assign_[c.other];
      if (other != y_.act(c.site_id, val)) return false;
    }
    return true;
  }

  // Returns false once the visitor asked to stop.
  bool dfs(std::size_t v) {
    if (v == assign_.size()) {
      ++found_;
      TCSetMor::Components comps(x_.trunc() + 1);
      for (std::size_t n = 0; n <= x_.trunc(); ++n) {
        comps[n].assign(assign_.begin() + static_cast<std::ptrdiff_t>(offset_[n]),
                        assign_.begin() + static_cast<std::ptrdiff_t>(offset_[n + 1]));
      }
      return visit_(comps);
    }
    const std::size_t n = level_of_[v];
    std::size_t forced = kUnassigned;
    for (const Check& c : forcing_checks_[v]) {
      const std::size_t want = y_.act(c.site_id, assign_[c.other]);
      if (forced == kUnassigned) {
        forced = want;
      } else if (forced != want) {
        return true;
      }
    }
    std::vector<std::size_t> candidates;
    if (forced != kUnassigned) {
      candidates.push_back(forced);
    } else {
      candidates.resize(y_.size(n));
      std::iota(candidates.begin(), candidates.end(), std::size_t{0});
      if (opts_.shuffle) opts_.shuffle->shuffle(candidates);
    }
    for (std::size_t val : candidates) {
      if (!consistent(v, n, val)) continue;
      assign_[v] = val;
      if (opts_.injective) used_[n][val] = true;
      const bool keep_going = dfs(v + 1);
      if (opts_.injective) used_[n][val] = false;
      assign_[v] = kUnassigned;
      if (!keep_going) return false;
    }
    return true;
  }

  const TCSet& x_;
  const TCSet& y_;
  const SearchOptions& opts_;
  const std::function<bool(const TCSetMor::Components&)>& visit_;
  const SiteIndex& idx_;
  std::vector<std::size_t> offset_;
  std::vector<std::size_t> level_of_;
  std::vector<std::vector<Check>> source_checks_;
  std::vector<std::vector<Check>> forcing_checks_;
  std::vector<std::size_t> assign_;
  std::vector<std::vector<bool>> used_;
  std::size_t found_ = 0;
};

}  // namespace

std::size_t for_each_morphism(const TCSet& x, const TCSet& y, const SearchOptions& options,
                              const std::function<bool(const TCSetMor::Components&)>& visit) {
  if (x.trunc() != y.trunc()) throw CompositionError("search between presheaves of different truncations");
  Solver solver(x, y, options, visit);
  return solver.run();
}

std::optional<TCSetMor> find_morphism(const TCSet& x, const TCSet& y, const SearchOptions& options) {
  std::optional<TCSetMor::Components> hit;
  for_each_morphism(x, y, options, [&](const TCSetMor::Components& c) {
    hit = c;
    return false;
  });
  if (!hit) return std::nullopt;
  return TCSetMor::make(x, y, std::move(*hit));
}

std::size_t count_morphisms(const TCSet& x, const TCSet& y, const SearchOptions& options) {
  return for_each_morphism(x, y, options, [](const TCSetMor::Components&) { return true; });
}

std::vector<TCSetMor> all_morphisms(const TCSet& x, const TCSet& y, const SearchOptions& options) {
  std::vector<TCSetMor> out;
  for_each_morphism(x, y, options, [&](const TCSetMor::Components& c) {
    out.push_back(TCSetMor::make(x, y, c));
    return true;
  });
  return out;
}

std::optional<TCSetMor> find_iso(const TCSet& x, const TCSet& y) {
  if (x.trunc() != y.trunc()) return std::nullopt;
  for (std::size_t n = 0; n <= x.trunc(); ++n) {
    if (x.size(n) != y.size(n)) return std::nullopt;
  }
  SearchOptions options;
  options.injective = true;
  return find_morphism(x, y, options);
}

std::optional<TCSetMor> find_section(const TCSetMor& p, Rng* shuffle) {
  SearchOptions options;
  options.allowed = [&p](std::size_t n, std::size_t b, std::size_t e) { return p(n, e) == b; };
  options.shuffle = shuffle;
  return find_morphism(p.target(), p.source(), options);
}

std::optional<TCSetMor> find_map_over(const TCSetMor& f, const TCSetMor& g) {
  if (!(f.target() == g.target())) throw CompositionError("maps over different bases");
  SearchOptions options;
  options.allowed = [&](std::size_t n, std::size_t x, std::size_t x2) { return g(n, x2) == f(n, x); };
  return find_morphism(f.source(), g.source(), options);
}

}  // namespace cubeprop
