#pragma once

// Backtracking search for natural transformations between truncated cubical
// sets. Components are assigned level by level; naturality squares against
// already-assigned elements either force a value (when the element is the
// restriction of an earlier one) or prune the candidate.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "cubeprop/rng.hpp"
#include "cubeprop/tcset.hpp"

namespace cubeprop {

struct SearchOptions {
  // Restricts the value of the component at (n, x) to y; empty allows all.
  std::function<bool(std::size_t n, std::size_t x, std::size_t y)> allowed;
  // Require every component to be injective.
  bool injective = false;
  // When set, candidates are tried in a random order.
  Rng* shuffle = nullptr;
};

// Visits natural transformations x -> y satisfying `options` until `visit`
// returns false. Returns the number visited.
std::size_t for_each_morphism(const TCSet& x, const TCSet& y, const SearchOptions& options,
                              const std::function<bool(const TCSetMor::Components&)>& visit);

std::optional<TCSetMor> find_morphism(const TCSet& x, const TCSet& y, const SearchOptions& options = {});
std::size_t count_morphisms(const TCSet& x, const TCSet& y, const SearchOptions& options = {});
std::vector<TCSetMor> all_morphisms(const TCSet& x, const TCSet& y, const SearchOptions& options = {});

// A natural bijection x -> y, if the two are isomorphic.
std::optional<TCSetMor> find_iso(const TCSet& x, const TCSet& y);

// s : B -> E with p o s = id for p : E -> B.
std::optional<TCSetMor> find_section(const TCSetMor& p, Rng* shuffle = nullptr);

// h : X -> X' with g o h = f, for f : X -> Y and g : X' -> Y.
std::optional<TCSetMor> find_map_over(const TCSetMor& f, const TCSetMor& g);

}  // namespace cubeprop
