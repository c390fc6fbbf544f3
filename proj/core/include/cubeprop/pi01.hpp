#pragma once

// Weakly Pi^0_1 h-propositions over a finite index set K standing in for the
// naturals, the extraction of their bounded Pi^0_1 description, and the
// bridge from cocut decision families.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cubeprop/classifier.hpp"
#include "cubeprop/presheaf.hpp"
#include "cubeprop/reals.hpp"
#include "cubeprop/tcset.hpp"

namespace cubeprop {

// g : B x K -> 2; b satisfies the proposition iff g(b, k) = 0 for all k.
// Stored with true meaning 1.
struct BoundedPi01Witness {
  FinSet base;
  std::size_t index_size = 0;
  std::vector<std::vector<bool>> g;

  bool holds(std::size_t b) const;
};

// A weakly Pi^0_1 presentation of f : X -> Y: an h-proposition
// relation : R -> Y x Delta(K) together with, at the level of global
// elements, a decision R_{y,k} + not X_y for every (y, k), and maps showing
// X_y is equivalent to "R_{y,k} for every k".
struct WeaklyPi01Witness {
  TCSetMor base;              // f : X -> Y
  FinSet index;               // K
  PairCone base_times_index;  // Y x Delta(K)
  TCSetMor relation;          // R -> base_times_index.object
  // decision[y][k]: element of R_0 over (y, k), or nullopt for "not X_y".
  std::vector<std::vector<std::optional<std::size_t>>> decision;
  // forward[x][k]: element of R_0 over (f(x), k).
  std::vector<std::vector<std::size_t>> forward;
  // backward[y]: element of X_0 over y whenever every decision at y is in R.
  std::vector<std::optional<std::size_t>> backward;
};

// Throws PreconditionError naming the first broken invariant. The
// h-proposition checks on f and the relation run when trunc >= 1.
void validate(const WeaklyPi01Witness& w);

// Extensional quotient of the mono {0...0} -> S, where S holds the given
// sequences (the zero sequence is added if missing). Sequence names are
// bit strings.
struct Pi01Classifier {
  FinSet sequences;
  Extensionalization classes;

  std::size_t sequence_index(const std::vector<bool>& bits) const;
};
Pi01Classifier pi01_classifier(const std::vector<std::vector<bool>>& sequences);

struct Pi01Extraction {
  BoundedPi01Witness bounded;   // g'_y(k) over Gamma(Y)
  Pi01Classifier classifier;
  SetMap classifying;           // Gamma(Y) -> classes, via the sequences
  Subobject stable;             // not not (image of f)
  Internalisation internal;     // of `stable` against the classifier
};

// g'_y(k) = 0 iff decision[y][k] lies in R. Checks that Gamma(X)_y is
// inhabited iff g'_y vanishes, then internalises the double negation of f
// against the finite classifier and checks that its level-0 classifying map
// agrees with the one read off from g'.
Pi01Extraction extract_pi01(const WeaklyPi01Witness& w);

// Witness for "a in C" over a finite sample of rationals, everything
// constant: Y = Delta(samples), X = members, R_{a,k} = "a + 1/k in C" for
// k = 1..bound, decisions from weakly_pi01(C). Membership is read from the
// sample's exact test.
WeaklyPi01Witness cocut_witness(const SampleReal& real, const std::vector<Rat>& samples, std::size_t bound,
                                std::size_t trunc);

}  // namespace cubeprop
