#pragma once

#include <map>
#include <vector>

#include "tenscanon/monomial.hpp"

namespace tenscanon {

struct FactorsLess {
  bool operator()(const std::vector<ElementarySymbol>& a,
                  const std::vector<ElementarySymbol>& b) const {
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end()) < 0;
  }
};

/// Linear combination of monomials with rational coefficients.
///
/// Terms live in an ordered map keyed by the factor list, so identical factor
/// lists merge, zero coefficients vanish, and iteration order (hence printing)
/// is deterministic and independent of insertion order. All terms must carry
/// the same free-index set: a sum of terms with mismatched free indices has
/// no meaning under the summation convention. The zero polynomial matches any
/// free-index set.
class Polynomial {
 public:
  using TermMap = std::map<std::vector<ElementarySymbol>, Rational, FactorsLess>;

  Polynomial() = default;
  explicit Polynomial(const Monomial& m) { add_term(m); }

  static Polynomial zero() { return Polynomial(); }

  /// Adds coeff * factors into the sum, merging with an existing term and
  /// dropping the entry if the merged coefficient is zero.
  void add_term(const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Free-index set shared by all terms (empty for the zero polynomial or a
  /// fully contracted polynomial), ascending.
  const std::vector<Index>& free_indices() const { return free_; }

  std::vector<Monomial> monomials() const;

  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }

  /// Einstein product: pairwise Monomial::product over the terms.
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  TermMap terms_;
  std::vector<Index> free_;  // valid while !terms_.empty()
};

}  // namespace tenscanon
