#pragma once

// Constructions on truncated cubical sets: representables, the adjoint
// triple Delta -| Gamma -| Nabla between sets and presheaves, finite limits
// and colimits computed level-wise, interval exponentials, path objects, and
// negation of subobjects.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cubeprop/finset.hpp"
#include "cubeprop/tcset.hpp"

namespace cubeprop {

// y[n] truncated at `trunc`: level m is Hom([m], [n]), acted on by
// precomposition. n may exceed trunc.
TCSet yoneda(std::size_t n, std::size_t trunc);

TCSet terminal(std::size_t trunc);
TCSet initial(std::size_t trunc);

// Constant presheaf: every level is z, every action the identity.
TCSet delta_const(const FinSet& z, std::size_t trunc);
TCSetMor delta_map(const SetMap& g, std::size_t trunc);

// Global sections. Since 1 = y[0], Gamma(X) = Hom(1, X) = X_0.
FinSet gamma(const TCSet& x);
SetMap gamma_map(const TCSetMor& f);

// Codiscrete presheaf: level n is the set of functions points(n) -> z,
// listed in lexicographic order of their value tables; s acts by
// h |-> (p |-> h(s o p)).
TCSet nabla(const FinSet& z, std::size_t trunc);
TCSetMor nabla_map(const SetMap& g, std::size_t trunc);
// Index in nabla(z, trunc) level n of the function with the given values.
std::size_t nabla_index(std::size_t z_size, const std::vector<std::size_t>& values);
std::vector<std::size_t> nabla_values(std::size_t z_size, std::size_t n, std::size_t index);

// Unit of Gamma -| Nabla: x |-> (p |-> X_p(x)).
TCSetMor nabla_unit(const TCSet& x);
// Delta z -> Nabla z, the transpose of the identity Gamma Delta z = z.
TCSetMor delta_to_nabla(const FinSet& z, std::size_t trunc);

// Binary cones over level-wise products. Elements of `object` at level n
// are the pairs in `pairs[n]`, sorted lexicographically.
struct PairCone {
  TCSet object;
  TCSetMor first;
  TCSetMor second;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> pairs;

  // Index of (a, b) at level n, if it is an element.
  std::optional<std::size_t> index(std::size_t n, std::size_t a, std::size_t b) const;
};

PairCone product(const TCSet& x, const TCSet& y);
// Pullback of f : X -> Z and g : Y -> Z; first/second project to X and Y.
PairCone pullback(const TCSetMor& f, const TCSetMor& g);

struct Coproduct {
  TCSet object;
  TCSetMor left;
  TCSetMor right;
};
Coproduct coproduct(const TCSet& x, const TCSet& y);

Subobject image(const TCSetMor& f);
// Reindexing of a subobject of Y along g : W -> Y.
Subobject preimage(const Subobject& a, const TCSetMor& g);

// Restriction to the full subcategory on [0], ..., [trunc].
TCSet truncate(const TCSet& x, std::size_t trunc);
TCSetMor truncate(const TCSetMor& f, std::size_t trunc);

// X^{y[1]}: level n is X_{n+1} using y[n] x y[1] = y[n+1]; one truncation
// level is lost. Throws TruncationTooSmall at trunc 0.
TCSet interval_exponential(const TCSet& x);
TCSetMor interval_exponential(const TCSetMor& f);
// Y -> Y^{y[1]} (Y truncated to trunc - 1), sending y to its degenerate path.
TCSetMor constant_paths(const TCSet& y);

// Path_Y(X) for f : X -> Y, the pullback of X^I -> Y^I along the constant
// paths of Y, with its boundary map into X x_Y X. Everything lives at
// truncation trunc - 1.
struct PathObject {
  PairCone paths;       // elements are pairs (omega in X_{n+1}, y in Y_n)
  PairCone endpoints;   // X x_Y X, elements (x0, x1)
  TCSetMor boundary;    // paths.object -> endpoints.object
};
PathObject path_object(const TCSetMor& f);

// Negation of A in the slice over its ambient Y:
//   (not A)_n = { y in Y_n : Y_p(y) is not in A_0 for every point p of [n] }.
// The same subobject is also computed by quantifying over every morphism
// into [n] and the two are compared; a disagreement raises InvariantError.
Subobject neg_sub(const Subobject& a);
Subobject neg_sub_by_morphisms(const Subobject& a);

// Inclusion not X -> Y of the negation of the image of f.
TCSetMor neg_map(const TCSetMor& f);

}  // namespace cubeprop
