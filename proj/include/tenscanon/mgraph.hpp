#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tenscanon/limits.hpp"
#include "tenscanon/renaming.hpp"

namespace tenscanon {

/// Colored multigraph of a monomial's contraction structure.
///
/// One vertex per factor, colored by the factor's type and by where its free
/// indices attach; one edge per dummy, joining the two factors it contracts
/// (a loop for a self-contraction). Attachment points are recorded as slot
/// *classes* — slots modulo the factor type's own relation permutations
/// (mono-term symmetries and identity permutations) — not raw slot numbers:
/// arrangements a declared relation can interchange must not change the
/// graph, or related monomials could be declared independent. Dummy names
/// appear only as edge payload for seed extraction, never in certificates,
/// so certificates are invariant under renaming by construction.
struct MonomialGraph {
  struct Vertex {
    int factor;         // position in the monomial's factor list
    std::string color;  // type plus free attachments (classes), serialized
  };
  struct Edge {
    int v1, c1;  // endpoint vertex and slot class, (v1,c1) <= (v2,c2)
    int v2, c2;
    int dummy;   // pool number
  };
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;  // sorted by endpoints, then dummy
  int dummy_count = 0;
};

MonomialGraph build_monomial_graph(const Monomial& m);

struct GraphCertificate {
  /// Serialized canonical form: equal strings iff the colored multigraphs
  /// are isomorphic. Dummy-renaming invariant.
  std::string certificate;
  /// Renamings read off graph automorphisms and parallel-edge swaps; they
  /// are *candidate* signature stabilizers to seed the extremal search (the
  /// search verifies each before use).
  std::vector<Renaming> seed_renamings;
  /// Refinement tree nodes visited.
  std::uint64_t nodes = 0;
};

/// Canonical labeling by color refinement with individualization: vertices
/// are iteratively recolored by their multiset of (own class, peer class,
/// peer color) edge views until stable; non-discrete colorings branch on one
/// cell. The certificate is the smallest leaf serialization.
GraphCertificate canonical_graph_certificate(const MonomialGraph& g, const Limits& limits);

}  // namespace tenscanon
