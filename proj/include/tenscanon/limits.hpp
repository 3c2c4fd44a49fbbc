#pragma once

#include <cstddef>
#include <cstdint>

namespace tenscanon {

/// Resource caps. Exceeding any of them raises ResourceError; results are
/// never silently truncated.
struct Limits {
  /// Nodes visited by renaming-orbit searches and brute-force orbit
  /// enumerations (CLI --max-orbit / TENSCANON_MAX_ORBIT).
  std::uint64_t max_orbit_nodes = 1'000'000;

  /// Largest per-signature relation space (number of index arrangements,
  /// at most arity! per factor; 7! covers every shipped example).
  std::size_t max_space_symbols = 5040;

  /// Largest brute-force reference block (distinct monomials spanned by one
  /// renaming orbit).
  std::size_t max_oracle_monomials = 5040;

  /// Largest signature stabilizer enumerated explicitly.
  std::size_t max_group_order = 1'000'000;
};

}  // namespace tenscanon
