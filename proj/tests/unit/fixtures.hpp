#pragma once

#include <doctest.h>

#include <string>

#include "tenscanon/parse.hpp"

namespace fixtures {

using tenscanon::DeclPtr;
using tenscanon::parse_declarations;
using tenscanon::parse_polynomial;
using tenscanon::Polynomial;

/// Riemann-like rank-4 tensor plus friends used throughout the tests.
inline DeclPtr standard() {
  static DeclPtr d = parse_declarations(R"(
    indices a, b, c, e, f, h, i, j, k, l, m, n;
    tensor Ri(4) {
      asym(1,2);
      asym(3,4);
      sym_pair((1,2),(3,4));
      cyclic3(2,3,4);
    }
    tensor g(2) { sym(1,2); }
    tensor A(2) { asym(1,2); }
    tensor S(3) { sym(1,2,3); }
    tensor T(2);
    tensor V(1);
    tensor W(3) { asym(2,3); }
  )");
  return d;
}

inline Polynomial poly(const std::string& text, const DeclPtr& d = standard()) {
  return parse_polynomial(text, d);
}

inline tenscanon::Monomial mono(const std::string& text, const DeclPtr& d = standard()) {
  Polynomial p = parse_polynomial(text, d);
  REQUIRE(p.term_count() == 1);
  return p.monomials().front();
}

}  // namespace fixtures
