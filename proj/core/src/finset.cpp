#include "cubeprop/finset.hpp"

#include "cubeprop/error.hpp"

namespace cubeprop {

FinSet numbered_set(const std::string& prefix, std::size_t n) {
  FinSet out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::optional<std::size_t> find_name(const FinSet& set, const std::string& name) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] == name) return i;
  }
  return std::nullopt;
}

bool SetMap::is_injective() const {
  std::vector<bool> hit(cod.size(), false);
  for (std::size_t y : map) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool SetMap::is_surjective() const {
  std::vector<bool> hit(cod.size(), false);
  for (std::size_t y : map) hit[y] = true;
  for (bool h : hit) {
    if (!h) return false;
  }
  return true;
}

void SetMap::check() const {
  if (map.size() != dom.size()) {
    throw PreconditionError("set map table has " + std::to_string(map.size()) + " entries for a domain of " +
                            std::to_string(dom.size()));
  }
  for (std::size_t x = 0; x < map.size(); ++x) {
    if (map[x] >= cod.size()) {
      throw PreconditionError("set map sends '" + dom[x] + "' outside its codomain");
    }
  }
}

SetMap compose(const SetMap& g, const SetMap& f) {
  SetMap out{f.dom, g.cod, {}};
  out.map.reserve(f.map.size());
  for (std::size_t y : f.map) out.map.push_back(g.map[y]);
  return out;
}

SetMap identity_map(const FinSet& set) {
  SetMap out{set, set, {}};
  for (std::size_t i = 0; i < set.size(); ++i) out.map.push_back(i);
  return out;
}

std::vector<std::vector<std::size_t>> all_functions(std::size_t dom_size, std::size_t cod_size) {
  std::vector<std::vector<std::size_t>> out;
  if (cod_size == 0) {
    if (dom_size == 0) out.emplace_back();
    return out;
  }
  std::vector<std::size_t> cur(dom_size, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = dom_size;
    while (i > 0) {
      --i;
      if (++cur[i] < cod_size) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (dom_size == 0) return out;
  }
}

}  // namespace cubeprop
