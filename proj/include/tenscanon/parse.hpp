#pragma once

#include <string_view>

#include "tenscanon/declarations.hpp"
#include "tenscanon/polynomial.hpp"

namespace tenscanon {

/// Parses a declaration file:
///
///   # comment to end of line
///   indices i, j, k;                 # optional; fixes free-index ordering
///   tensor g(2) { sym(1,2); }
///   tensor Ri(4) {
///     asym(1,2); asym(3,4);
///     sym_pair((1,2),(3,4));
///     cyclic3(2,3,4);                # rotate contents of slots 2->3->4->2; the
///                                    # three rotations sum to zero
///     identity: (1,2,3,4) + (1,4,2,3) + (1,3,4,2) = 0;   # general form
///   }
///   tensor T(3);                     # no symmetries
///
/// Slots are 1-based in the file format. sym/asym declare full (anti)symmetry
/// among the listed slots; sym_pair((a,b),(c,d)) declares symmetry under the
/// simultaneous exchange a<->c, b<->d. In an identity term, the tuple
/// (q1,...,qn) denotes the factor with slot p holding the index from slot
/// q_p of the original; coefficients are optional rationals (default 1).
DeclPtr parse_declarations(std::string_view text);

/// Parses a polynomial:
///
///   poly   := "0" | [sign] term ((+|-) term)*
///   term   := [rational "*"] factor ("*" factor)*
///   factor := NAME "(" NAME ("," NAME)* ")"
///
/// An index name occurring twice in a term is contracted (a dummy); once,
/// free. Names d1, d2, ... are reserved for dummies and may be written
/// explicitly; a term's dummies are renumbered to the contiguous pool 1..k
/// (explicitly written pool names keep their relative order and come before
/// contractions spelled with ordinary names, which number by first
/// occurrence). Round trip is exact: parse(print(p)) == p.
Polynomial parse_polynomial(std::string_view text, const DeclPtr& decls);

}  // namespace tenscanon
