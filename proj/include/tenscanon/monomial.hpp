#pragma once

#include <vector>

#include "tenscanon/rational.hpp"
#include "tenscanon/symbol.hpp"

namespace tenscanon {

/// Product of tensor factors with a rational coefficient.
///
/// Invariants established by the constructor:
///  - at least one factor; factors stored in non-decreasing order
///    (factor order never carries meaning, multiplication commutes);
///  - every free index occurs exactly once;
///  - every dummy index occurs exactly twice (possibly within one factor)
///    and the dummy pool numbers are contiguous 1..dummy_count().
class Monomial {
 public:
  Monomial(Rational coeff, std::vector<ElementarySymbol> factors);

  const Rational& coeff() const { return coeff_; }
  const std::vector<ElementarySymbol>& factors() const { return factors_; }
  int dummy_count() const { return dummy_count_; }

  MonomialSignature signature() const;

  Monomial with_coeff(Rational c) const { return Monomial(std::move(c), factors_, dummy_count_); }

  /// Einstein product: concatenates the factor lists, renumbers the two
  /// operands' dummies apart, and contracts every free index that occurs in
  /// both operands into a fresh dummy. The factor list is re-sorted, so the
  /// result is a valid Monomial; its dummy numbering follows a fixed rule
  /// (left dummies, right dummies, then contractions by first occurrence).
  static Monomial product(const Monomial& a, const Monomial& b);

  /// Equal coefficient and factor list (no renaming applied).
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.coeff_ == b.coeff_ && a.factors_ == b.factors_;
  }

 private:
  Monomial(Rational coeff, std::vector<ElementarySymbol> factors, int dummy_count)
      : coeff_(std::move(coeff)), factors_(std::move(factors)), dummy_count_(dummy_count) {}

  Rational coeff_;
  std::vector<ElementarySymbol> factors_;
  int dummy_count_;
};

}  // namespace tenscanon
