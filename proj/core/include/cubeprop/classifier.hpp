#pragma once

// Extensional monomorphisms of finite sets and their internalisation into
// truncated cubical sets.
//
// The metatheory of this library is ordinary classical C++, so the set of
// double-negation-stable truth values is just {false, true} and every finite
// monomorphism is classified by `true : 1 -> 2`. What is exercised here are
// the constructions themselves: classifying maps, quotienting to an
// extensional mono, the level-wise classifying map of a presheaf mono with
// point lifts, and its pullback reconstruction.

#include <cstddef>
#include <optional>
#include <vector>

#include "cubeprop/fibration.hpp"
#include "cubeprop/finset.hpp"
#include "cubeprop/presheaf.hpp"
#include "cubeprop/tcset.hpp"

namespace cubeprop {

// For an injective m : Q -> P, whether each fiber Q_p is inhabited.
// Throws PreconditionError if m is not injective.
std::vector<bool> fiber_inhabitation(const SetMap& m);

// True iff fiber inhabitation is an injective function on P.
bool is_extensional(const SetMap& m);

class ExtMono {
 public:
  // Throws PreconditionError unless m is an extensional monomorphism.
  static ExtMono make(SetMap m);
  // true : 1 -> 2, with 2 = {false, true}.
  static ExtMono truth();

  const SetMap& mono() const { return mono_; }
  const FinSet& base() const { return mono_.cod; }
  bool inhabited(std::size_t p) const { return inhabited_[p]; }
  // The unique base point whose fiber has the given inhabitation.
  std::optional<std::size_t> point_with(bool inhabited) const;
  // Element of Q over p, when p is inhabited.
  std::optional<std::size_t> fiber_element(std::size_t p) const;

 private:
  ExtMono(SetMap m, std::vector<bool> inhabited) : mono_(std::move(m)), inhabited_(std::move(inhabited)) {}

  SetMap mono_;
  std::vector<bool> inhabited_;
};

// Quotient of P by equal fiber inhabitation. `mono` is extensional and m is
// the pullback of it along `quotient` (checked before returning).
struct Extensionalization {
  ExtMono mono;
  SetMap quotient;
};
Extensionalization make_extensional(const SetMap& m);

// Whether `f` is the pullback of `m` along chi, as subobjects of chi's domain.
bool is_pullback_along(const SetMap& f, const SetMap& m, const std::vector<std::size_t>& chi);

// The classifying map chi : Y -> P of a set mono f : X -> Y. Throws
// ClassificationError naming the first y whose fiber status g cannot match.
SetMap classify_set(const SetMap& f, const ExtMono& g);

// Number of maps chi : Y -> P along which m pulls back to f, by exhaustive
// enumeration of all |P|^|Y| maps. m need not be extensional. Throws
// PreconditionError when there are more than 2^22 candidates.
std::size_t count_classifying_maps(const SetMap& f, const SetMap& m);

// The converse direction of the extensionality criterion: build
//   Y = { (p, p') : Q_p <-> Q_p' },
// pull m back along both projections and report whether the two
// classifying maps coincide. They do iff m is extensional.
struct ExtensionalityProbe {
  FinSet pairs;
  SetMap pulled;                     // mono into `pairs`
  std::vector<std::size_t> first;    // chi  = first projection
  std::vector<std::size_t> second;   // chi' = second projection
  bool pulled_along_second = false;  // pulled is also the pullback along chi'
  bool projections_agree = false;
};
ExtensionalityProbe probe_extensionality(const SetMap& m);

// Result of internalising a presheaf mono against Delta(g).
struct Internalisation {
  TCSetMor chi;         // Y -> Delta(P)
  PairCone pulled;      // pullback of Delta(g) along chi
  TCSetMor comparison;  // X -> pulled.object over Y, an isomorphism
};

// chi_n(y) is the base point classifying the fiber of f_n over y. Requires f
// mono with point lifts, and f_0 classified by g (PreconditionError /
// ClassificationError). Naturality of chi and the pullback reconstruction are
// verified; a failure raises InvariantError with the counterexample.
Internalisation internalise(const TCSetMor& f, const PointLiftStructure& lifts, const ExtMono& g);

struct NegNegClassification {
  Subobject stable;            // not not (image of f)
  TCSetMor stability;          // not not X -> X over Y
  Internalisation internal;    // of the inclusion of `stable`, against true : 1 -> 2
  TCSetMor to_classified;      // X -> chi^*(Delta 1) over Y
  TCSetMor from_classified;    // chi^*(Delta 1) -> X over Y
};

// Classifies a double-negation-stable h-proposition f : X -> Y by a map
// Y -> Delta(2). Requires a valid h-proposition witness (PreconditionError),
// a map not not X -> X over Y (NotStableError), and point lifts for the
// double negation (PreconditionError).
NegNegClassification classify_negneg(const TCSetMor& f, const HPropWitness& witness);

}  // namespace cubeprop
