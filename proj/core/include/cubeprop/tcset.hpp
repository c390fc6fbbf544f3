#pragma once

// Dimension-truncated cubical sets: presheaves on the full subcategory of the
// cube category on [0], ..., [D]. Every value here is immutable once built
// and every constructor validates its invariants before returning.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubeprop/cube.hpp"
#include "cubeprop/finset.hpp"

namespace cubeprop {

// Untyped presheaf data as read from an interchange file: level names and,
// per morphism string, a name-to-name table for its action.
struct RawTCSet {
  std::size_t trunc = 0;
  std::vector<FinSet> levels;
  std::map<std::string, std::map<std::string, std::string>> action;
};

class TCSet {
 public:
  // For s : [m] -> [n], maps an element index of X_n to an index of X_m.
  using ActionFn = std::function<std::size_t(const CubeMor& s, std::size_t x)>;

  // Fills the full action table from `act` and validates functoriality.
  static TCSet build(std::size_t trunc, std::vector<FinSet> levels, const ActionFn& act);

  // Validates raw data; missing tables for identity morphisms are taken to be
  // identities, and a missing table for any other morphism is inferred as the
  // name-preserving map when every name of X_n also occurs in X_m.
  static TCSet validate(const RawTCSet& raw);

  std::size_t trunc() const { return d_->trunc; }
  std::size_t size(std::size_t n) const { return d_->levels[n].size(); }
  const FinSet& level(std::size_t n) const { return d_->levels[n]; }
  const std::string& name(std::size_t n, std::size_t x) const { return d_->levels[n][x]; }
  std::optional<std::size_t> index_of(std::size_t n, const std::string& name) const;
  std::size_t total_size() const;

  // X_s(x) for s : [m] -> [n] and x in X_n.
  std::size_t act(const CubeMor& s, std::size_t x) const { return d_->actions[site_->id(s)][x]; }
  std::size_t act(std::size_t site_id, std::size_t x) const { return d_->actions[site_id][x]; }
  const std::vector<std::size_t>& action(std::size_t site_id) const { return d_->actions[site_id]; }
  const SiteIndex& site_index() const { return *site_; }

  RawTCSet to_raw() const;

  // Same truncation, same level names in the same order, same actions.
  bool operator==(const TCSet& other) const;
  bool same_object(const TCSet& other) const { return d_ == other.d_; }

 private:
  struct Data {
    std::size_t trunc;
    std::vector<FinSet> levels;
    std::vector<std::vector<std::size_t>> actions;
    std::vector<std::unordered_map<std::string, std::size_t>> lookup;
  };
  explicit TCSet(std::shared_ptr<const Data> d);
  static TCSet finish(Data data);

  std::shared_ptr<const Data> d_;
  const SiteIndex* site_;
};

// A natural transformation between truncated cubical sets of equal truncation.
class TCSetMor {
 public:
  using Components = std::vector<std::vector<std::size_t>>;

  // Throws NaturalityError naming the first failing (s, x).
  static TCSetMor make(TCSet source, TCSet target, Components components);
  static TCSetMor build(TCSet source, TCSet target,
                        const std::function<std::size_t(std::size_t n, std::size_t x)>& fn);

  const TCSet& source() const { return source_; }
  const TCSet& target() const { return target_; }
  std::size_t trunc() const { return source_.trunc(); }
  std::size_t operator()(std::size_t n, std::size_t x) const { return comps_[n][x]; }
  const std::vector<std::size_t>& component(std::size_t n) const { return comps_[n]; }
  const Components& components() const { return comps_; }

  bool operator==(const TCSetMor& other) const;

 private:
  TCSetMor(TCSet source, TCSet target, Components comps)
      : source_(std::move(source)), target_(std::move(target)), comps_(std::move(comps)) {}

  TCSet source_;
  TCSet target_;
  Components comps_;
};

// An action-closed family of subsets of the levels of an ambient presheaf.
class Subobject {
 public:
  using Members = std::vector<std::vector<bool>>;

  // Throws PreconditionError if the family is not action-closed.
  static Subobject make(TCSet ambient, Members members);
  // Smallest subobject containing the given elements.
  static Subobject closure(TCSet ambient, const Members& generators);
  static Subobject full(TCSet ambient);
  static Subobject empty(TCSet ambient);

  const TCSet& ambient() const { return ambient_; }
  bool contains(std::size_t n, std::size_t y) const { return members_[n][y]; }
  const Members& members() const { return members_; }
  std::size_t count(std::size_t n) const;

  // The subobject as a presheaf in its own right (names inherited) and its
  // inclusion into the ambient presheaf.
  TCSet as_tcset() const;
  TCSetMor inclusion() const;

  bool operator==(const Subobject& other) const;

 private:
  Subobject(TCSet ambient, Members members) : ambient_(std::move(ambient)), members_(std::move(members)) {}

  TCSet ambient_;
  Members members_;
};

TCSetMor identity(const TCSet& x);
// g o f; throws CompositionError if f's target is not g's source.
TCSetMor compose(const TCSetMor& g, const TCSetMor& f);

bool is_mono(const TCSetMor& f);
bool is_epi(const TCSetMor& f);
// Level-wise bijective; a natural bijection is an isomorphism of presheaves.
bool is_iso(const TCSetMor& f);

}  // namespace cubeprop
