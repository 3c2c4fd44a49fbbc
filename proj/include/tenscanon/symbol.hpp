#pragma once

#include <algorithm>
#include <compare>
#include <vector>

#include "tenscanon/index.hpp"
#include "tenscanon/tensor_type.hpp"

namespace tenscanon {

/// Compares two index sequences lexicographically.
inline std::strong_ordering index_seq_cmp(const std::vector<Index>& a,
                                          const std::vector<Index>& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

/// One tensor factor: a type applied to an ordered index tuple.
///
/// A free index may occur at most once in a factor; a dummy may occur once
/// (its partner is in another factor) or twice (a self-contraction).
class ElementarySymbol {
 public:
  ElementarySymbol(TypePtr type, std::vector<Index> indices);

  const TypePtr& type() const { return type_; }
  const std::vector<Index>& indices() const { return indices_; }

  friend bool operator==(const ElementarySymbol& a, const ElementarySymbol& b) {
    return a.type_->decl_rank() == b.type_->decl_rank() && a.type_->name() == b.type_->name() &&
           a.indices_ == b.indices_;
  }
  friend std::strong_ordering operator<=>(const ElementarySymbol& a, const ElementarySymbol& b) {
    if (a.type_->decl_rank() != b.type_->decl_rank())
      return a.type_->decl_rank() <=> b.type_->decl_rank();
    if (int c = a.type_->name().compare(b.type_->name()); c != 0)
      return c <=> 0;
    return index_seq_cmp(a.indices_, b.indices_);
  }

 private:
  TypePtr type_;
  std::vector<Index> indices_;
};

/// Signature of a factor: its type together with the index multiset in
/// non-decreasing order. Factors related by a slot permutation share a
/// signature; the signature names the sub-space of the relation system the
/// factor lives in.
class Signature {
 public:
  Signature(TypePtr type, std::vector<Index> sorted_indices)
      : type_(std::move(type)), indices_(std::move(sorted_indices)) {}

  static Signature of(const ElementarySymbol& e) {
    std::vector<Index> s = e.indices();
    std::sort(s.begin(), s.end());
    return Signature(e.type(), std::move(s));
  }

  const TypePtr& type() const { return type_; }
  const std::vector<Index>& indices() const { return indices_; }

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.type_->decl_rank() == b.type_->decl_rank() && a.type_->name() == b.type_->name() &&
           a.indices_ == b.indices_;
  }
  friend std::strong_ordering operator<=>(const Signature& a, const Signature& b) {
    if (a.type_->decl_rank() != b.type_->decl_rank())
      return a.type_->decl_rank() <=> b.type_->decl_rank();
    if (int c = a.type_->name().compare(b.type_->name()); c != 0)
      return c <=> 0;
    return index_seq_cmp(a.indices_, b.indices_);
  }

 private:
  TypePtr type_;
  std::vector<Index> indices_;  // non-decreasing
};

/// Signature of a monomial: the multiset of factor signatures, ascending.
using MonomialSignature = std::vector<Signature>;

inline std::strong_ordering monomial_signature_cmp(const MonomialSignature& a,
                                                   const MonomialSignature& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

/// Map comparator for keys of type MonomialSignature.
struct MonomialSignatureLess {
  bool operator()(const MonomialSignature& a, const MonomialSignature& b) const {
    return monomial_signature_cmp(a, b) < 0;
  }
};

}  // namespace tenscanon
