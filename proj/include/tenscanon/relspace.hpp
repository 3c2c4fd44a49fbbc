#pragma once

#include <memory>
#include <mutex>

#include "tenscanon/declarations.hpp"
#include "tenscanon/limits.hpp"
#include "tenscanon/linalg.hpp"
#include "tenscanon/symbol.hpp"

namespace tenscanon {

/// Relation space of one factor signature, built at "pattern" level: the
/// concrete index values are replaced by their ranks 0..D-1 within the sorted
/// distinct-value list (multiplicities preserved). All signatures whose index
/// multisets share a multiplicity pattern have order-isomorphic index tuples,
/// so one pattern space serves them all; the cache below exploits that.
///
/// Symbols are the distinct slot arrangements of the code multiset, listed in
/// increasing lexicographic order. The relation rows generated by the type's
/// slot symmetries and linear identities are kept in reduced row echelon form
/// with columns ordered by *decreasing* symbol, so each pivot eliminates the
/// largest symbol of its row: the non-pivot symbols are exactly the greedy
/// lexicographically-smallest canonical basis, and each pivot row reads off
/// the rewrite of its symbol over strictly smaller basis symbols.
struct PatternSpace {
  TypePtr type;
  std::vector<int> multiplicities;        // of code c = 0,1,... in value order
  std::vector<std::vector<int>> symbols;  // ascending arrangements of the codes
  /// rewrites[id]: (basis symbol id, coefficient), ids ascending. Identity for
  /// basis symbols. An empty list means the symbol vanishes identically.
  std::vector<std::vector<std::pair<int, Rational>>> rewrites;
  std::vector<int> basis;  // non-pivot symbol ids, ascending
  int rank = 0;            // dimension of the relation subspace
  /// RREF relation rows over symbol ids: (id, coeff) with ids ascending.
  std::vector<std::vector<std::pair<int, Rational>>> relation_rows;
};

std::shared_ptr<const PatternSpace> build_pattern_space(const TypePtr& type,
                                                        const std::vector<int>& multiplicities,
                                                        const Limits& limits);

/// Thread-safe cache of pattern spaces keyed by (type, multiplicity pattern);
/// builds() counts cache misses so tests can pin the reuse contract.
class SpaceCache {
 public:
  explicit SpaceCache(Limits limits) : limits_(limits) {}

  std::shared_ptr<const PatternSpace> get(const TypePtr& type,
                                          const std::vector<int>& multiplicities);

  std::uint64_t builds() const;

 private:
  Limits limits_;
  mutable std::mutex mu_;
  std::map<std::pair<int, std::vector<int>>, std::shared_ptr<const PatternSpace>> spaces_;
  std::uint64_t builds_ = 0;
};

/// A pattern space bound back to a concrete factor signature.
struct SignatureSpace {
  Signature signature;
  std::vector<Index> distinct;  // ascending distinct index values
  std::shared_ptr<const PatternSpace> pattern;

  int symbol_count() const { return static_cast<int>(pattern->symbols.size()); }

  /// Arrangement id of a factor (which must have this signature).
  int id_of(const ElementarySymbol& e) const;

  ElementarySymbol symbol(int id) const;

  bool is_canonical(int id) const;

  const std::vector<std::pair<int, Rational>>& rewrite(int id) const {
    return pattern->rewrites.at(id);
  }
};

SignatureSpace bind_signature_space(const Signature& sig, SpaceCache& cache);

}  // namespace tenscanon
