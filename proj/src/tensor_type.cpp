#include "tenscanon/tensor_type.hpp"

#include <numeric>

#include "tenscanon/errors.hpp"

namespace tenscanon {

namespace {

// Union-find over slots; the orbits of the generated permutation group equal
// the connected components of slot -> image(slot) over all generators.
class SlotUnion {
 public:
  explicit SlotUnion(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }

  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

TensorType::TensorType(std::string name, int arity, int decl_rank,
                       std::vector<SlotSymmetry> symmetries,
                       std::vector<LinearSlotIdentity> identities)
    : name_(std::move(name)),
      arity_(arity),
      decl_rank_(decl_rank),
      symmetries_(std::move(symmetries)),
      identities_(std::move(identities)) {
  if (name_.empty()) throw InputError("tensor type with empty name");
  if (arity_ < 1) throw InputError("tensor type '" + name_ + "' must have arity >= 1");
  for (const auto& s : symmetries_) {
    if (s.perm.size() != arity_)
      throw InputError("symmetry of '" + name_ + "' permutes " +
                       std::to_string(s.perm.size()) + " slots, arity is " +
                       std::to_string(arity_));
    if (s.sign != 1 && s.sign != -1)
      throw InputError("symmetry of '" + name_ + "' has sign other than +1/-1");
  }
  for (const auto& id : identities_) {
    if (id.terms.empty())
      throw InputError("identity of '" + name_ + "' has no terms");
    for (const auto& [coeff, perm] : id.terms) {
      if (perm.size() != arity_)
        throw InputError("identity of '" + name_ + "' permutes " +
                         std::to_string(perm.size()) + " slots, arity is " +
                         std::to_string(arity_));
      if (coeff.is_zero())
        throw InputError("identity of '" + name_ + "' has a zero coefficient");
    }
  }

  SlotUnion uf(arity_);
  for (const auto& s : symmetries_)
    for (int i = 0; i < arity_; ++i) uf.join(i, s.perm.image(i));
  // Identity permutations must coarsen the classes too: a multi-term
  // identity relates arrangements that differ by these permutations, so
  // attachment points they connect cannot be told apart either (each class
  // is then invariant under every relation-generating permutation).
  for (const auto& id : identities_)
    for (const auto& [coeff, perm] : id.terms)
      for (int i = 0; i < arity_; ++i) uf.join(i, perm.image(i));
  slot_class_.assign(arity_, -1);
  slot_class_count_ = 0;
  for (int i = 0; i < arity_; ++i) {
    int root = uf.find(i);
    if (slot_class_[root] < 0) slot_class_[root] = slot_class_count_++;
    slot_class_[i] = slot_class_[root];
  }
}

}  // namespace tenscanon
