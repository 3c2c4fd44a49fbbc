#pragma once

#include <cstdint>
#include <span>

#include "tenscanon/renaming.hpp"

namespace tenscanon {

struct ExtremalResult {
  /// Smallest signature in the renaming orbit of the input.
  MonomialSignature extremal;
  /// witness.apply(input) == extremal.
  Renaming witness;
  /// Full stabilizer of `extremal` (every renaming fixing it), explicit.
  std::vector<Renaming> stabilizer;
  /// Search tree nodes visited.
  std::uint64_t nodes = 0;
};

/// Finds the lexicographically smallest renaming image of sig together with
/// one witness and the full stabilizer of the minimum, by depth-first
/// assignment of new pool names to old dummies.
///
/// Two prunings keep the tree far below k! without losing either the minimum
/// or stabilizer completeness:
///  - bound pruning: a branch is cut when an optimistic completion of its
///    partial assignment (every unassigned dummy filled with the next unused
///    names) already exceeds the best complete assignment seen — ties are
///    kept, they may lead to further stabilizer elements;
///  - orbit pruning: candidates equivalent under the already-discovered
///    stabilizer elements fixing the assigned prefix pointwise lead to
///    identical subtrees, so only the smallest representative is explored.
/// Stabilizer elements are harvested from pairs of complete assignments that
/// reach the same minimal image; seed_automorphisms (e.g. read off the
/// contraction graph) join the pool after being verified against sig.
///
/// Throws ResourceError when nodes exceed limits.max_orbit_nodes or the
/// stabilizer outgrows limits.max_group_order.
ExtremalResult extremal_signature_search(const MonomialSignature& sig, int k,
                                         std::span<const Renaming> seed_automorphisms,
                                         const Limits& limits);

}  // namespace tenscanon
