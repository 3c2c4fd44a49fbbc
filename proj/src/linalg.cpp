#include "tenscanon/linalg.hpp"

namespace tenscanon {

void axpy(SparseRow& out, const Rational& c, const SparseRow& r) {
  if (c.is_zero() || r.empty()) return;
  SparseRow merged;
  merged.reserve(out.size() + r.size());
  std::size_t i = 0, j = 0;
  while (i < out.size() || j < r.size()) {
    if (j == r.size() || (i < out.size() && out[i].first < r[j].first)) {
      merged.push_back(out[i++]);
    } else if (i == out.size() || r[j].first < out[i].first) {
      merged.emplace_back(r[j].first, c * r[j].second);
      ++j;
    } else {
      Rational sum = out[i].second + c * r[j].second;
      if (!sum.is_zero()) merged.emplace_back(out[i].first, std::move(sum));
      ++i;
      ++j;
    }
  }
  // Drop the zeros a scaled r can contribute.
  SparseRow cleaned;
  cleaned.reserve(merged.size());
  for (auto& e : merged)
    if (!e.second.is_zero()) cleaned.push_back(std::move(e));
  out = std::move(cleaned);
}

SparseRow RowReducer::reduce(SparseRow r) const {
  // Eliminate every pivot column present in r. Each elimination removes one
  // pivot column and introduces only non-pivot columns (pivot rows are fully
  // reduced), so the loop terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : r) {
      auto it = pivot_row_.find(e.first);
      if (it != pivot_row_.end()) {
        axpy(r, -e.second, rows_[it->second]);
        changed = true;
        break;
      }
    }
  }
  return r;
}

bool RowReducer::insert(SparseRow r) {
  r = reduce(std::move(r));
  if (r.empty()) return false;
  // Normalize the pivot to 1.
  Rational inv = Rational(1) / r.front().second;
  for (auto& e : r) e.second *= inv;
  int col = r.front().first;
  // Back-substitute into existing rows.
  for (auto& row : rows_) {
    for (const auto& e : row) {
      if (e.first == col) {
        axpy(row, -e.second, r);
        break;
      }
      if (e.first > col) break;
    }
  }
  pivot_row_.emplace(col, static_cast<int>(rows_.size()));
  rows_.push_back(std::move(r));
  return true;
}

}  // namespace tenscanon
