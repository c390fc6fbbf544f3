#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cubeprop {

// A finite set of named elements. Element identity is the position; names
// are opaque labels used for printing and interchange and are unique.
using FinSet = std::vector<std::string>;

FinSet numbered_set(const std::string& prefix, std::size_t n);
std::optional<std::size_t> find_name(const FinSet& set, const std::string& name);

// A function between finite sets, stored as target indices.
struct SetMap {
  FinSet dom;
  FinSet cod;
  std::vector<std::size_t> map;

  std::size_t operator()(std::size_t x) const { return map[x]; }
  bool is_injective() const;
  bool is_surjective() const;
  // Throws PreconditionError if an entry is out of range.
  void check() const;

  bool operator==(const SetMap&) const = default;
};

SetMap compose(const SetMap& g, const SetMap& f);
SetMap identity_map(const FinSet& set);

// All functions dom -> cod in lexicographic order of their tables.
std::vector<std::vector<std::size_t>> all_functions(std::size_t dom_size, std::size_t cod_size);

}  // namespace cubeprop
