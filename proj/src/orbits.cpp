#include "tenscanon/orbits.hpp"

namespace tenscanon {

std::set<MonomialSignature> signature_orbit_brute(const MonomialSignature& sig, int k,
                                                  const Limits& limits) {
  const RenamingGroup all = RenamingGroup::symmetric(k, limits.max_orbit_nodes);
  std::set<MonomialSignature> orbit;
  for (const auto& r : all.elements()) orbit.insert(r.apply(sig));
  return orbit;
}

RenamingGroup signature_stabilizer_brute(const MonomialSignature& sig, int k,
                                         const Limits& limits) {
  const RenamingGroup all = RenamingGroup::symmetric(k, limits.max_orbit_nodes);
  std::vector<Renaming> stab;
  for (const auto& r : all.elements())
    if (r.apply(sig) == sig) stab.push_back(r);
  return RenamingGroup::closure(k, stab, limits.max_group_order);
}

MonomialSignature extremal_signature_brute(const MonomialSignature& sig, int k,
                                           const Limits& limits) {
  const RenamingGroup all = RenamingGroup::symmetric(k, limits.max_orbit_nodes);
  bool first = true;
  MonomialSignature best;
  for (const auto& r : all.elements()) {
    MonomialSignature cand = r.apply(sig);
    if (first || monomial_signature_cmp(cand, best) < 0) {
      best = std::move(cand);
      first = false;
    }
  }
  return best;
}

}  // namespace tenscanon
