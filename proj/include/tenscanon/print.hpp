#pragma once

#include <string>

#include "tenscanon/polynomial.hpp"

namespace tenscanon {

/// Textual forms accepted back by the parser. For any polynomial built
/// through the public API, parse_polynomial(print(p), decls) == p exactly.
std::string print(const Index& ix);
std::string print(const ElementarySymbol& e);
std::string print(const Monomial& m);
std::string print(const Polynomial& p);

}  // namespace tenscanon
