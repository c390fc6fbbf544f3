#pragma once

// The cartesian cube category: objects [n] = I^n, morphisms [m] -> [n] are
// n-tuples of terms in m variables, each term a constant 0, constant 1, or a
// variable. This is the Lawvere theory on I with two point constants, so
// diagonals, projections, faces and degeneracies are all present.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cubeprop {

// A single coordinate of a cube morphism.
//
// Terms are stored as a code: 0 is the constant 0, 1 is the constant 1 and
// 2 + i is the variable i. Ordering by code gives the canonical order
// Const0 < Const1 < Var(0) < Var(1) < ...
class Term {
 public:
  static constexpr Term zero() { return Term(0); }
  static constexpr Term one() { return Term(1); }
  static constexpr Term constant(bool value) { return Term(value ? 1 : 0); }
  static constexpr Term var(std::uint32_t index) { return Term(index + 2); }
  static constexpr Term from_code(std::uint32_t code) { return Term(code); }

  constexpr bool is_const() const { return code_ < 2; }
  constexpr bool is_var() const { return code_ >= 2; }
  constexpr bool const_value() const { return code_ == 1; }
  constexpr std::uint32_t var_index() const { return code_ - 2; }
  constexpr std::uint32_t code() const { return code_; }

  constexpr auto operator<=>(const Term&) const = default;

 private:
  constexpr explicit Term(std::uint32_t code) : code_(code) {}
  std::uint32_t code_;
};

class CubeMor {
 public:
  // Throws CompositionError if some variable index is >= dom.
  CubeMor(std::size_t dom, std::vector<Term> coords);

  static CubeMor identity(std::size_t n);
  // The unique map [m] -> [0].
  static CubeMor bang(std::size_t m);
  // The point [0] -> [n] with the given constant coordinates.
  static CubeMor point(const std::vector<bool>& coords);

  std::size_t dom() const { return dom_; }
  std::size_t cod() const { return coords_.size(); }
  const std::vector<Term>& coords() const { return coords_; }
  const Term& coord(std::size_t i) const { return coords_[i]; }

  bool is_identity() const;

  // Printed as "m->n:[t0,...]" with terms c0, c1, v<i>.
  std::string to_string() const;
  static CubeMor parse(std::string_view text);

  auto operator<=>(const CubeMor&) const = default;
  bool operator==(const CubeMor&) const = default;

 private:
  std::size_t dom_;
  std::vector<Term> coords_;
};

// g o f. Requires f.cod() == g.dom().
CubeMor compose(const CubeMor& g, const CubeMor& f);

// (m + 2)^n.
std::size_t hom_count(std::size_t m, std::size_t n);

// All morphisms [m] -> [n] in canonical lexicographic order.
std::vector<CubeMor> enum_homs(std::size_t m, std::size_t n);

// Global sections of [n]; equal to enum_homs(0, n), size 2^n.
std::vector<CubeMor> points(std::size_t n);

// Position of s in enum_homs(s.dom(), s.cod()) and its inverse.
std::size_t hom_rank(const CubeMor& s);
CubeMor hom_unrank(std::size_t m, std::size_t n, std::size_t rank);

// s x [1] : [m + 1] -> [n + 1], the interval coordinate placed last.
CubeMor times_interval(const CubeMor& s);

// [n] -> [n + 1] inserting the constant `end` as the last coordinate.
CubeMor end_face(std::size_t n, bool end);

// [n + 1] -> [n] dropping the last coordinate.
CubeMor drop_last(std::size_t n);

// Index of all morphisms between objects of dimension <= trunc, used as a
// flat key into presheaf action tables.
class SiteIndex {
 public:
  explicit SiteIndex(std::size_t trunc);

  std::size_t trunc() const { return trunc_; }
  std::size_t size() const { return total_; }
  std::size_t id(const CubeMor& s) const;
  std::size_t id(std::size_t m, std::size_t n, std::size_t rank) const {
    return offset_[m * (trunc_ + 1) + n] + rank;
  }
  const CubeMor& mor(std::size_t id) const { return mors_[id]; }
  // All morphisms into [n] (any domain <= trunc), by id.
  const std::vector<std::size_t>& into(std::size_t n) const { return into_[n]; }
  const std::vector<std::size_t>& between(std::size_t m, std::size_t n) const {
    return between_[m * (trunc_ + 1) + n];
  }

 private:
  std::size_t trunc_;
  std::size_t total_ = 0;
  std::vector<std::size_t> offset_;
  std::vector<CubeMor> mors_;
  std::vector<std::vector<std::size_t>> into_;
  std::vector<std::vector<std::size_t>> between_;
};

// Shared per-truncation index; built once per trunc value.
const SiteIndex& site(std::size_t trunc);

}  // namespace cubeprop
