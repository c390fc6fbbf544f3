#include "cubeprop/tcset.hpp"

#include "cubeprop/error.hpp"

namespace cubeprop {

TCSet::TCSet(std::shared_ptr<const Data> d) : d_(std::move(d)), site_(&site(d_->trunc)) {}

namespace {

std::string describe(const CubeMor& s) { return s.to_string(); }

}  // namespace

TCSet TCSet::finish(Data data) {
  const SiteIndex& idx = site(data.trunc);
  if (data.levels.size() != data.trunc + 1) {
    throw FunctorialityError("expected " + std::to_string(data.trunc + 1) + " levels, got " +
                             std::to_string(data.levels.size()));
  }
  data.lookup.resize(data.trunc + 1);
  for (std::size_t n = 0; n <= data.trunc; ++n) {
    for (std::size_t i = 0; i < data.levels[n].size(); ++i) {
      if (!data.lookup[n].emplace(data.levels[n][i], i).second) {
        throw FunctorialityError("duplicate element '" + data.levels[n][i] + "' at level " + std::to_string(n));
      }
    }
  }
  if (data.actions.size() != idx.size()) throw FunctorialityError("action table has the wrong number of morphisms");
  for (std::size_t id = 0; id < idx.size(); ++id) {
    const CubeMor& s = idx.mor(id);
    const auto& table = data.actions[id];
    if (table.size() != data.levels[s.cod()].size()) {
      throw FunctorialityError("action of " + describe(s) + " is not defined on all of level " +
                               std::to_string(s.cod()));
    }
    for (std::size_t x = 0; x < table.size(); ++x) {
      if (table[x] >= data.levels[s.dom()].size()) {
        throw FunctorialityError("action of " + describe(s) + " sends '" + data.levels[s.cod()][x] +
                                 "' outside level " + std::to_string(s.dom()));
      }
    }
  }
  for (std::size_t n = 0; n <= data.trunc; ++n) {
    const auto& table = data.actions[idx.id(CubeMor::identity(n))];
    for (std::size_t x = 0; x < table.size(); ++x) {
      if (table[x] != x) {
        throw FunctorialityError("identity of [" + std::to_string(n) + "] acts non-trivially on '" +
                                 data.levels[n][x] + "'");
      }
    }
  }
  // X_{t o s} = X_s o X_t for s : [m] -> [n], t : [n] -> [k].
  for (std::size_t k = 0; k <= data.trunc; ++k) {
    for (std::size_t t_id : idx.into(k)) {
      const CubeMor& t = idx.mor(t_id);
      const std::size_t n = t.dom();
      for (std::size_t s_id : idx.into(n)) {
        const CubeMor& s = idx.mor(s_id);
        const auto& ts = data.actions[idx.id(compose(t, s))];
        const auto& xs = data.actions[s_id];
        const auto& xt = data.actions[t_id];
        for (std::size_t x = 0; x < data.levels[k].size(); ++x) {
          if (ts[x] != xs[xt[x]]) {
            throw FunctorialityError("functoriality fails for s = " + describe(s) + ", t = " + describe(t) +
                                     " at '" + data.levels[k][x] + "': X_(t.s) gives '" +
                                     data.levels[s.dom()][ts[x]] + "' but X_s(X_t) gives '" +
                                     data.levels[s.dom()][xs[xt[x]]] + "'");
          }
        }
      }
    }
  }
  return TCSet(std::make_shared<const Data>(std::move(data)));
}

TCSet TCSet::build(std::size_t trunc, std::vector<FinSet> levels, const ActionFn& act) {
  const SiteIndex& idx = site(trunc);
  Data data;
  data.trunc = trunc;
  if (levels.size() != trunc + 1) {
    throw FunctorialityError("expected " + std::to_string(trunc + 1) + " levels, got " +
                             std::to_string(levels.size()));
  }
  data.actions.resize(idx.size());
  for (std::size_t id = 0; id < idx.size(); ++id) {
    const CubeMor& s = idx.mor(id);
    auto& table = data.actions[id];
    table.resize(levels[s.cod()].size());
    for (std::size_t x = 0; x < table.size(); ++x) table[x] = act(s, x);
  }
  data.levels = std::move(levels);
  return finish(std::move(data));
}

TCSet TCSet::validate(const RawTCSet& raw) {
  const SiteIndex& idx = site(raw.trunc);
  if (raw.levels.size() != raw.trunc + 1) {
    throw FunctorialityError("expected " + std::to_string(raw.trunc + 1) + " levels, got " +
                             std::to_string(raw.levels.size()));
  }
  std::vector<std::unordered_map<std::string, std::size_t>> lookup(raw.trunc + 1);
  for (std::size_t n = 0; n <= raw.trunc; ++n) {
    for (std::size_t i = 0; i < raw.levels[n].size(); ++i) lookup[n].emplace(raw.levels[n][i], i);
  }
  std::map<std::size_t, const std::map<std::string, std::string>*> given;
  for (const auto& [key, table] : raw.action) {
    const CubeMor s = CubeMor::parse(key);
    if (s.dom() > raw.trunc || s.cod() > raw.trunc) {
      throw FunctorialityError("action given for " + key + " outside truncation " + std::to_string(raw.trunc));
    }
    given[idx.id(s)] = &table;
  }
  Data data;
  data.trunc = raw.trunc;
  data.actions.resize(idx.size());
  for (std::size_t id = 0; id < idx.size(); ++id) {
    const CubeMor& s = idx.mor(id);
    auto& out = data.actions[id];
    const FinSet& from = raw.levels[s.cod()];
    out.resize(from.size());
    auto it = given.find(id);
    for (std::size_t x = 0; x < from.size(); ++x) {
      std::string image;
      if (it != given.end()) {
        auto entry = it->second->find(from[x]);
        if (entry == it->second->end()) {
          throw FunctorialityError("action of " + s.to_string() + " is missing an entry for '" + from[x] + "'");
        }
        image = entry->second;
      } else {
        image = from[x];
      }
      auto target = lookup[s.dom()].find(image);
      if (target == lookup[s.dom()].end()) {
        throw FunctorialityError("action of " + s.to_string() + " sends '" + from[x] + "' to '" + image +
                                 "', which is not an element of level " + std::to_string(s.dom()) +
                                 (it == given.end() ? " (table omitted and not inferable)" : ""));
      }
      out[x] = target->second;
    }
  }
  data.levels = raw.levels;
  return finish(std::move(data));
}

std::optional<std::size_t> TCSet::index_of(std::size_t n, const std::string& name) const {
  if (n > trunc()) return std::nullopt;
  auto it = d_->lookup[n].find(name);
  if (it == d_->lookup[n].end()) return std::nullopt;
  return it->second;
}

std::size_t TCSet::total_size() const {
  std::size_t total = 0;
  for (const auto& level : d_->levels) total += level.size();
  return total;
}

RawTCSet TCSet::to_raw() const {
  RawTCSet raw;
  raw.trunc = trunc();
  raw.levels = d_->levels;
  const SiteIndex& idx = site_index();
  for (std::size_t id = 0; id < idx.size(); ++id) {
    const CubeMor& s = idx.mor(id);
    if (s.is_identity()) continue;
    auto& table = raw.action[s.to_string()];
    for (std::size_t x = 0; x < size(s.cod()); ++x) table[name(s.cod(), x)] = name(s.dom(), act(id, x));
  }
  return raw;
}

bool TCSet::operator==(const TCSet& other) const {
  if (d_ == other.d_) return true;
  return d_->trunc == other.d_->trunc && d_->levels == other.d_->levels && d_->actions == other.d_->actions;
}

TCSetMor TCSetMor::make(TCSet source, TCSet target, Components comps) {
  if (source.trunc() != target.trunc()) {
    throw NaturalityError("source and target have different truncations");
  }
  const std::size_t trunc = source.trunc();
  if (comps.size() != trunc + 1) throw NaturalityError("wrong number of components");
  for (std::size_t n = 0; n <= trunc; ++n) {
    if (comps[n].size() != source.size(n)) {
      throw NaturalityError("component " + std::to_string(n) + " is not defined on all of level " +
                            std::to_string(n));
    }
    for (std::size_t x = 0; x < comps[n].size(); ++x) {
      if (comps[n][x] >= target.size(n)) {
        throw NaturalityError("component " + std::to_string(n) + " sends '" + source.name(n, x) +
                              "' outside the target");
      }
    }
  }
  const SiteIndex& idx = source.site_index();
  for (std::size_t id = 0; id < idx.size(); ++id) {
    const CubeMor& s = idx.mor(id);
    const std::size_t m = s.dom();
    const std::size_t n = s.cod();
    for (std::size_t x = 0; x < source.size(n); ++x) {
      const std::size_t lhs = comps[m][source.act(id, x)];
      const std::size_t rhs = target.act(id, comps[n][x]);
      if (lhs != rhs) {
        throw NaturalityError("naturality fails at s = " + s.to_string() + ", x = '" + source.name(n, x) +
                              "': f(X_s x) = '" + target.name(m, lhs) + "' but Y_s(f x) = '" +
                              target.name(m, rhs) + "'");
      }
    }
  }
  return TCSetMor(std::move(source), std::move(target), std::move(comps));
}

TCSetMor TCSetMor::build(TCSet source, TCSet target,
                         const std::function<std::size_t(std::size_t, std::size_t)>& fn) {
  Components comps(source.trunc() + 1);
  for (std::size_t n = 0; n <= source.trunc(); ++n) {
    comps[n].resize(source.size(n));
    for (std::size_t x = 0; x < source.size(n); ++x) comps[n][x] = fn(n, x);
  }
  return make(std::move(source), std::move(target), std::move(comps));
}

bool TCSetMor::operator==(const TCSetMor& other) const {
  return comps_ == other.comps_ && source_ == other.source_ && target_ == other.target_;
}

Subobject Subobject::make(TCSet ambient, Members members) {
  if (members.size() != ambient.trunc() + 1) throw PreconditionError("subobject has the wrong number of levels");
  for (std::size_t n = 0; n <= ambient.trunc(); ++n) {
    if (members[n].size() != ambient.size(n)) {
      throw PreconditionError("subobject level " + std::to_string(n) + " has the wrong size");
    }
  }
  const SiteIndex& idx = ambient.site_index();
  for (std::size_t id = 0; id < idx.size(); ++id) {
    const CubeMor& s = idx.mor(id);
    for (std::size_t y = 0; y < ambient.size(s.cod()); ++y) {
      if (members[s.cod()][y] && !members[s.dom()][ambient.act(id, y)]) {
        throw PreconditionError("subobject is not closed under " + s.to_string() + ": '" +
                                ambient.name(s.cod(), y) + "' is a member but '" +
                                ambient.name(s.dom(), ambient.act(id, y)) + "' is not");
      }
    }
  }
  return Subobject(std::move(ambient), std::move(members));
}

Subobject Subobject::closure(TCSet ambient, const Members& generators) {
  Members members(ambient.trunc() + 1);
  for (std::size_t n = 0; n <= ambient.trunc(); ++n) members[n].assign(ambient.size(n), false);
  const SiteIndex& idx = ambient.site_index();
  // One pass suffices: X_s(y) ranges over everything reachable from y since
  // the morphisms into [n] are closed under precomposition.
  for (std::size_t n = 0; n <= ambient.trunc(); ++n) {
    for (std::size_t y = 0; y < ambient.size(n); ++y) {
      if (!generators[n][y]) continue;
      for (std::size_t id : idx.into(n)) members[idx.mor(id).dom()][ambient.act(id, y)] = true;
    }
  }
  return make(std::move(ambient), std::move(members));
}

Subobject Subobject::full(TCSet ambient) {
  Members members(ambient.trunc() + 1);
  for (std::size_t n = 0; n <= ambient.trunc(); ++n) members[n].assign(ambient.size(n), true);
  return Subobject(std::move(ambient), std::move(members));
}

Subobject Subobject::empty(TCSet ambient) {
  Members members(ambient.trunc() + 1);
  for (std::size_t n = 0; n <= ambient.trunc(); ++n) members[n].assign(ambient.size(n), false);
  return Subobject(std::move(ambient), std::move(members));
}

std::size_t Subobject::count(std::size_t n) const {
  std::size_t c = 0;
  for (bool b : members_[n]) c += b ? 1 : 0;
  return c;
}

TCSet Subobject::as_tcset() const {
  const std::size_t trunc = ambient_.trunc();
  std::vector<FinSet> levels(trunc + 1);
  std::vector<std::vector<std::size_t>> to_local(trunc + 1);
  std::vector<std::vector<std::size_t>> to_ambient(trunc + 1);
  for (std::size_t n = 0; n <= trunc; ++n) {
    to_local[n].assign(ambient_.size(n), 0);
    for (std::size_t y = 0; y < ambient_.size(n); ++y) {
      if (!members_[n][y]) continue;
      to_local[n][y] = levels[n].size();
      to_ambient[n].push_back(y);
      levels[n].push_back(ambient_.name(n, y));
    }
  }
  return TCSet::build(trunc, std::move(levels), [&](const CubeMor& s, std::size_t x) {
    return to_local[s.dom()][ambient_.act(s, to_ambient[s.cod()][x])];
  });
}

TCSetMor Subobject::inclusion() const {
  TCSet sub = as_tcset();
  TCSetMor::Components comps(ambient_.trunc() + 1);
  for (std::size_t n = 0; n <= ambient_.trunc(); ++n) {
    for (std::size_t y = 0; y < ambient_.size(n); ++y) {
      if (members_[n][y]) comps[n].push_back(y);
    }
  }
  return TCSetMor::make(std::move(sub), ambient_, std::move(comps));
}

bool Subobject::operator==(const Subobject& other) const {
  return members_ == other.members_ && ambient_ == other.ambient_;
}

TCSetMor identity(const TCSet& x) {
  return TCSetMor::build(x, x, [](std::size_t, std::size_t e) { return e; });
}

TCSetMor compose(const TCSetMor& g, const TCSetMor& f) {
  if (!(f.target() == g.source())) {
    throw CompositionError("cannot compose presheaf maps: target of the first is not the source of the second");
  }
  return TCSetMor::build(f.source(), g.target(), [&](std::size_t n, std::size_t x) { return g(n, f(n, x)); });
}

bool is_mono(const TCSetMor& f) {
  for (std::size_t n = 0; n <= f.trunc(); ++n) {
    std::vector<bool> hit(f.target().size(n), false);
    for (std::size_t y : f.component(n)) {
      if (hit[y]) return false;
      hit[y] = true;
    }
  }
  return true;
}

bool is_epi(const TCSetMor& f) {
  for (std::size_t n = 0; n <= f.trunc(); ++n) {
    std::vector<bool> hit(f.target().size(n), false);
    for (std::size_t y : f.component(n)) hit[y] = true;
    for (bool h : hit) {
      if (!h) return false;
    }
  }
  return true;
}

bool is_iso(const TCSetMor& f) { return is_mono(f) && is_epi(f); }

}  // namespace cubeprop
