#pragma once

// Seeded instance generators for the verification suites and the
// `generate` subcommand. Every generator is a pure function of the Rng
// state, so a seed reproduces its instances byte for byte.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cubeprop/presheaf.hpp"
#include "cubeprop/rng.hpp"
#include "cubeprop/tcset.hpp"

namespace cubeprop {

struct GenConfig {
  std::size_t trunc = 2;
  std::size_t max_level_size = 6;
};

// Disjoint union of several presheaves; element names are "<tag>:<name>".
struct Sum {
  TCSet object;
  std::vector<TCSetMor> injections;
};
Sum disjoint_union(const std::vector<TCSet>& parts, const std::vector<std::string>& tags);

// f x g : X x Z -> Y x W on the product objects built by `product`.
TCSetMor product_map(const TCSetMor& f, const TCSetMor& g);

FinSet random_set(Rng& rng, std::size_t lo, std::size_t hi, const std::string& prefix);
SetMap random_set_map(Rng& rng, const FinSet& dom, const FinSet& cod);
// Requires |dom| <= |cod|.
SetMap random_set_mono(Rng& rng, const FinSet& dom, const FinSet& cod);

// One of: a constant presheaf, y[0], y[1], the boundary of y[1], or y[1] x y[1]
// when it fits under max_level_size.
TCSet random_piece(Rng& rng, const GenConfig& cfg);
// Disjoint union of one to three pieces, within max_level_size.
TCSet random_tcset(Rng& rng, const GenConfig& cfg);
// Random natural transformation found by shuffled search, if any exists.
std::optional<TCSetMor> random_morphism(Rng& rng, const TCSet& x, const TCSet& y);
// Action closure of a random set of generators.
Subobject random_subobject(Rng& rng, const TCSet& y);

struct Instance {
  std::string label;
  TCSetMor map;
};

// A monomorphism that admits point lifts: constant set monos, inclusions of
// summands, negations and double negations that happen to admit lifts,
// pullbacks of these along random maps, and products with identities.
Instance random_fibrant_mono(Rng& rng, const GenConfig& cfg);

// An h-proposition: fiberwise codiscrete maps into constants, constant set
// monos, projections Y x Nabla S -> Y, and fibrant monos.
Instance random_hprop(Rng& rng, const GenConfig& cfg);

// An h-proposition W -> Delta Z whose every fiber over Z is inhabited at
// level 0. `z` receives Z.
Instance random_inhabited_hprop_over_delta(Rng& rng, const GenConfig& cfg, FinSet& z);

// Boundary {c0, c1} of y[1] and the single endpoint subobject generated by c0.
Subobject boundary_of_interval(std::size_t trunc);
Subobject endpoint_of_interval(std::size_t trunc);

// Files for the `generate` subcommand. `kind` is one of constant,
// representable, subobject-of-product, negation-image, random-quotient.
// Returns the named instances (presheaves or morphisms) in emission order.
struct GeneratedFile {
  std::string name;
  std::optional<TCSet> object;
  std::optional<TCSetMor> map;
};
std::vector<GeneratedFile> generate_kind(const std::string& kind, Rng& rng, const GenConfig& cfg, std::size_t n);

}  // namespace cubeprop
