#pragma once

#include <set>

#include "tenscanon/renaming.hpp"

namespace tenscanon {

/// Brute-force renaming-orbit operations. These enumerate all k! renamings,
/// so they are only usable at reference scale; the engine proper uses the
/// pruned search in extremal.hpp and the property tests cross-check the two.

/// All distinct signatures reachable from sig by renaming its k dummies.
std::set<MonomialSignature> signature_orbit_brute(const MonomialSignature& sig, int k,
                                                  const Limits& limits);

/// All renamings fixing sig (as a sorted signature multiset).
RenamingGroup signature_stabilizer_brute(const MonomialSignature& sig, int k,
                                         const Limits& limits);

/// Smallest signature in the renaming orbit of sig.
MonomialSignature extremal_signature_brute(const MonomialSignature& sig, int k,
                                           const Limits& limits);

}  // namespace tenscanon
