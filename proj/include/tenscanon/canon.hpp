#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "tenscanon/declarations.hpp"
#include "tenscanon/extremal.hpp"
#include "tenscanon/limits.hpp"
#include "tenscanon/mgraph.hpp"
#include "tenscanon/polynomial.hpp"
#include "tenscanon/relspace.hpp"

namespace tenscanon {

/// Work counters for one engine call.
struct CanonStats {
  /// Orbit-exploration cost in signature evaluations: extremal-search nodes
  /// (including seed verifications), graph-refinement nodes, and one count
  /// per stabilizer element applied while averaging. Pure bookkeeping
  /// (group closure products, cache hits) is not charged.
  std::uint64_t orbit = 0;
  /// Largest stabilizer order met.
  std::uint64_t stabilizer = 0;
};

/// The canonicalizer. Holds the declaration set, resource limits, and the
/// per-pattern relation-space cache plus a per-signature memo of extremal
/// search results; all public methods are const and thread-safe.
///
/// The canonical form of a polynomial is computed term by term:
///   1. reduce: every factor is rewritten onto the canonical basis of its
///      signature space (multi-term identities included), multiplying out;
///   2. each reduced term's signature is renamed to the minimum of its
///      renaming orbit (witness renaming from the pruned search);
///   3. the result is averaged over the full stabilizer of that minimal
///      signature and reduced again.
/// Averaging over the complete stabilizer makes the outcome independent of
/// which witness the search found, so equal inputs always collapse to equal
/// outputs; linear dependencies cancel coefficient-exactly.
class Engine {
 public:
  explicit Engine(DeclPtr decls, Limits limits = {});

  const DeclPtr& declarations() const { return decls_; }
  const Limits& limits() const { return limits_; }

  /// Factor-wise rewrite onto canonical bases (the projector rho). Linear in
  /// the number of basis combinations; may vanish or split into many terms.
  Polynomial reduce(const Monomial& m) const;
  Polynomial reduce(const Polynomial& p) const;

  /// Minimal renaming image of m's signature, witness, stabilizer.
  ExtremalResult extremal(const Monomial& m) const;

  /// Stabilizer mean of a reduced monomial whose signature is already
  /// extremal: (1/|Stab|) sum_h reduce(h(m)).
  Polynomial average(const Monomial& m) const;

  /// The canonical form kappa(p). Zero iff p is a consequence of the
  /// declared symmetries, identities, and dummy renaming.
  Polynomial canonicalize(const Polynomial& p, CanonStats* stats = nullptr) const;

  bool equal_mod_relations(const Polynomial& p, const Polynomial& q,
                           CanonStats* stats = nullptr) const;

  /// Contraction-graph certificate of a reduced monomial.
  GraphCertificate certificate(const Monomial& m) const;

  /// True when the colored contraction graphs of two reduced monomials are
  /// non-isomorphic and neither monomial canonicalizes to zero: then no
  /// relation can connect them. Equal certificates decide nothing.
  bool are_independent(const Monomial& a, const Monomial& b) const;

  /// Relation space of one factor signature (shares the engine cache).
  SignatureSpace signature_space(const Signature& sig) const;

  /// Pattern spaces built so far (cache misses).
  std::uint64_t space_builds() const { return cache_.builds(); }

 private:
  struct SigInfo {
    Renaming witness;
    std::vector<Renaming> stabilizer;
  };

  /// Memoized extremal search for one signature; seeds come from the graph
  /// certificate of the monomial that first hits the signature.
  std::shared_ptr<const SigInfo> signature_info(const MonomialSignature& sig, const Monomial& m,
                                                CanonStats* stats) const;

  void require_reduced(const Monomial& m, const char* op) const;

  DeclPtr decls_;
  Limits limits_;
  mutable SpaceCache cache_;
  mutable std::mutex memo_mu_;
  mutable std::map<MonomialSignature, std::shared_ptr<const SigInfo>, MonomialSignatureLess> memo_;
};

}  // namespace tenscanon
