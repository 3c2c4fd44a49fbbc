#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>

#include "tenscanon/declarations.hpp"
#include "tenscanon/limits.hpp"
#include "tenscanon/polynomial.hpp"

namespace tenscanon {

/// Brute-force reference canonicalizer.
///
/// For each term it spans the *whole* vector space of monomials reachable
/// from the term's signature: every renaming image of the signature, every
/// arrangement of each factor's indices over its slots. Inside that space
/// the relations are materialized exhaustively — one row per basis monomial
/// per symmetry generator, per multi-term identity, per adjacent dummy
/// transposition (factor permutations are identities here because factor
/// lists are stored sorted) — and the whole hyperplane they span is
/// eliminated by exact row reduction. What survives is the component of the
/// input in the coordinate complement of the relation hyperplane, expressed
/// over the greedily lex-smallest complement monomials.
///
/// Everything is enumerated, nothing is pruned: the oracle is the ground
/// truth the engine is validated against, built to be obviously correct
/// rather than fast. Dimensions are capped (limits.max_oracle_monomials) and
/// exceeding the cap raises ResourceError.
class Oracle {
 public:
  explicit Oracle(DeclPtr decls, Limits limits = {});

  /// Component of p in the fixed complement of the relation hyperplane.
  /// Zero iff p is a consequence of the declared relations.
  Polynomial canonical(const Polynomial& p) const;

  /// canonical(p - q) == 0, with a free-index guard: two nonzero
  /// polynomials over different free-index sets are never equal.
  bool equal(const Polynomial& p, const Polynomial& q) const;

  /// Relation-space blocks built so far (cache misses).
  std::uint64_t block_builds() const;

  const Limits& limits() const { return limits_; }

 private:
  struct Block;

  std::shared_ptr<const Block> block_for(const Monomial& m) const;

  DeclPtr decls_;
  Limits limits_;
  mutable std::mutex mu_;
  mutable std::map<MonomialSignature, std::shared_ptr<const Block>, MonomialSignatureLess>
      blocks_;
  mutable std::uint64_t builds_ = 0;
};

}  // namespace tenscanon
