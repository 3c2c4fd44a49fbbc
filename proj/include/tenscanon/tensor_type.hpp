#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tenscanon/perm.hpp"
#include "tenscanon/rational.hpp"

namespace tenscanon {

/// A mono-term slot symmetry: for every index tuple e, T[e] == sign * T[perm.apply(e)].
struct SlotSymmetry {
  Perm perm;
  int sign;  // +1 or -1
};

/// A multi-term linear slot identity: for every index tuple e,
/// sum_i terms[i].first * T[terms[i].second.apply(e)] == 0.
struct LinearSlotIdentity {
  std::vector<std::pair<Rational, Perm>> terms;
};

class TensorType;
using TypePtr = std::shared_ptr<const TensorType>;

/// Declared tensor species: a name, an arity, mono-term slot symmetries and
/// multi-term linear slot identities. Types are value-immutable after
/// construction and shared by pointer.
///
/// Declaration rank is the position within the declaration set; it fixes the
/// type ordering used everywhere (tuples of factors sort by it), so that
/// canonical forms depend only on the declaration text, not on pointer values.
class TensorType {
 public:
  TensorType(std::string name, int arity, int decl_rank,
             std::vector<SlotSymmetry> symmetries,
             std::vector<LinearSlotIdentity> identities);

  const std::string& name() const { return name_; }
  int arity() const { return arity_; }
  int decl_rank() const { return decl_rank_; }
  const std::vector<SlotSymmetry>& symmetries() const { return symmetries_; }
  const std::vector<LinearSlotIdentity>& identities() const { return identities_; }

  /// Slot equivalence classes under the group generated by the mono-term
  /// symmetry permutations (signs ignored) and by every permutation that
  /// appears in a multi-term identity: slot_class()[s] is the class id of
  /// slot s, classes numbered 0,1,... by their smallest member slot. Two
  /// slots in one class are attachment points that some declared relation
  /// can interchange, so graph labels must not tell them apart.
  const std::vector<int>& slot_class() const { return slot_class_; }
  int slot_class_count() const { return slot_class_count_; }

 private:
  std::string name_;
  int arity_;
  int decl_rank_;
  std::vector<SlotSymmetry> symmetries_;
  std::vector<LinearSlotIdentity> identities_;
  std::vector<int> slot_class_;
  int slot_class_count_;
};

/// Orders types by declaration rank (name as a tie-break for safety).
inline bool type_less(const TypePtr& a, const TypePtr& b) {
  if (a->decl_rank() != b->decl_rank()) return a->decl_rank() < b->decl_rank();
  return a->name() < b->name();
}

}  // namespace tenscanon
