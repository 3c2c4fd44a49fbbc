#pragma once

#include <compare>
#include <span>
#include <vector>

#include "tenscanon/limits.hpp"
#include "tenscanon/monomial.hpp"

namespace tenscanon {

/// Bijective renaming of the dummy pool 1..k: dummy i becomes dummy map(i).
/// Free indices are never touched. Renamings are the symmetry group under
/// which contracted expressions are invariant; canonicalization minimizes
/// over them.
class Renaming {
 public:
  Renaming() = default;
  explicit Renaming(std::vector<int> image_1based);

  static Renaming identity(int k);

  int size() const { return static_cast<int>(img_.size()); }
  int map(int i) const;  // 1-based in, 1-based out
  bool is_identity() const;

  /// Composition "apply first, then *this".
  Renaming after(const Renaming& first) const;
  Renaming inverse() const;

  Index apply(const Index& ix) const;
  ElementarySymbol apply(const ElementarySymbol& e) const;
  /// Renames dummies and re-sorts factors; the coefficient is kept.
  Monomial apply(const Monomial& m) const;
  /// Renames and re-sorts the index multiset.
  Signature apply(const Signature& s) const;
  /// Renames and re-sorts the factor-signature multiset.
  MonomialSignature apply(const MonomialSignature& sig) const;

  friend bool operator==(const Renaming& a, const Renaming& b) { return a.img_ == b.img_; }
  friend std::strong_ordering operator<=>(const Renaming& a, const Renaming& b) {
    return a.img_ <=> b.img_;
  }

 private:
  std::vector<int> img_;
};

/// Explicitly enumerated group of renamings of one pool size.
class RenamingGroup {
 public:
  static RenamingGroup trivial(int k);

  /// All k! renamings in lexicographic order. Throws ResourceError when k!
  /// exceeds cap.
  static RenamingGroup symmetric(int k, std::uint64_t cap);

  /// Closure of the generators (which must all share pool size k). Throws
  /// ResourceError when the group order exceeds cap.
  static RenamingGroup closure(int k, std::span<const Renaming> generators, std::size_t cap);

  int pool_size() const { return k_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Renaming>& elements() const { return elements_; }
  bool contains(const Renaming& r) const;

 private:
  RenamingGroup(int k, std::vector<Renaming> sorted_elements)
      : k_(k), elements_(std::move(sorted_elements)) {}

  int k_ = 0;
  std::vector<Renaming> elements_;  // sorted, unique
};

}  // namespace tenscanon
