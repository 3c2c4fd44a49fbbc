#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "tenscanon/canon.hpp"
#include "tenscanon/mgraph.hpp"
#include "tenscanon/polynomial.hpp"
#include "tenscanon/relspace.hpp"

namespace tenscanon {

/// Insertion-ordered JSON so reports keep a fixed field layout; all content
/// is emitted in deterministic (id / term map) order, so identical inputs
/// serialize to identical bytes.
using Json = nlohmann::ordered_json;

/// Term array: [{"coeff": "p/q", "factors": ["g(i,j)", ...]}, ...].
Json polynomial_json(const Polynomial& p);

/// {"orbit": n, "stabilizer": k} plus "millis" when timing was requested.
Json stats_json(const CanonStats& stats, std::optional<std::int64_t> millis);

/// {"input": ..., "canonical": [...], "stats": {...}}.
Json canon_report(const Polynomial& input, const Polynomial& canonical, const CanonStats& stats,
                  std::optional<std::int64_t> millis);

/// Canonical basis and rewrite table of one signature space.
Json basis_report(const SignatureSpace& space);

/// Vertices with colors, edges with slot classes, certificate string and
/// stabilizer seed images.
Json graph_report(const MonomialGraph& graph, const GraphCertificate& cert);

}  // namespace tenscanon
