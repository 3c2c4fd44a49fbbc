#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <vector>

#include "tenscanon/errors.hpp"

namespace tenscanon {

/// Permutation of 0-based slots, stored as an image table.
///
/// Applying p to a slot tuple t produces t' with t'[i] = t[p.image(i)]:
/// position i of the result is filled from position image(i) of the input.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> image) : img_(std::move(image)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || static_cast<std::size_t>(v) >= img_.size() || seen[v])
        throw InputError("invalid permutation image table");
      seen[v] = true;
    }
  }

  static Perm identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Perm(std::move(img));
  }

  /// Transposition of slots a and b (0-based) on n slots.
  static Perm transposition(int n, int a, int b) {
    Perm p = identity(n);
    std::swap(p.img_[a], p.img_[b]);
    return p;
  }

  int size() const { return static_cast<int>(img_.size()); }
  int image(int i) const { return img_[i]; }
  const std::vector<int>& image_table() const { return img_; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  /// result[i] = t[image(i)]
  template <typename T>
  std::vector<T> apply(const std::vector<T>& t) const {
    std::vector<T> out;
    out.reserve(img_.size());
    for (int s : img_) out.push_back(t[s]);
    return out;
  }

  /// Composition "apply a first, then b": (b.after(a)).apply(t) == b.apply(a.apply(t)).
  Perm after(const Perm& a) const {
    std::vector<int> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[i] = a.img_[img_[i]];
    return Perm(std::move(img));
  }

  Perm inverse() const {
    std::vector<int> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[img_[i]] = static_cast<int>(i);
    return Perm(std::move(img));
  }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.img_ <=> b.img_;
  }

 private:
  std::vector<int> img_;
};

}  // namespace tenscanon
