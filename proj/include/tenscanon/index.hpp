#pragma once

#include <compare>
#include <limits>
#include <string>

namespace tenscanon {

enum class IndexKind { Free, Dummy };

/// Abstract tensor index.
///
/// Free indices carry a name and an optional declaration rank (position in
/// the `indices` statement of the declaration set); declared free indices
/// order by rank, undeclared ones after them by name. Dummy (contracted)
/// indices are drawn from the canonical pool d1, d2, ... and are identified
/// by their 1-based pool number. Every free index orders before every dummy:
/// free labels are fixed, dummies are the renameable part of a monomial, and
/// keeping them last makes the lexicographic comparisons used by the
/// canonicalizer depend on the renameable tail only.
class Index {
 public:
  static constexpr int kUndeclaredRank = std::numeric_limits<int>::max();

  static Index free(std::string name, int declared_rank = kUndeclaredRank) {
    return Index(IndexKind::Free, declared_rank, std::move(name));
  }
  static Index dummy(int number) {
    return Index(IndexKind::Dummy, number, "d" + std::to_string(number));
  }

  IndexKind kind() const { return kind_; }
  bool is_dummy() const { return kind_ == IndexKind::Dummy; }
  bool is_free() const { return kind_ == IndexKind::Free; }

  /// Display name: as declared for free indices, "d<n>" for dummies.
  const std::string& name() const { return name_; }

  /// 1-based pool number; only meaningful for dummies.
  int dummy_number() const { return rank_; }

  /// Declaration rank for free indices (kUndeclaredRank when undeclared).
  int declared_rank() const { return rank_; }

  friend bool operator==(const Index& a, const Index& b) {
    return a.kind_ == b.kind_ && a.rank_ == b.rank_ && a.name_ == b.name_;
  }
  friend std::strong_ordering operator<=>(const Index& a, const Index& b) {
    if (a.kind_ != b.kind_)
      return a.kind_ == IndexKind::Free ? std::strong_ordering::less
                                        : std::strong_ordering::greater;
    if (a.rank_ != b.rank_)
      return a.rank_ < b.rank_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = a.name_.compare(b.name_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Index(IndexKind kind, int rank, std::string name)
      : kind_(kind), rank_(rank), name_(std::move(name)) {}

  IndexKind kind_;
  int rank_;  // free: declaration rank; dummy: pool number
  std::string name_;
};

}  // namespace tenscanon
