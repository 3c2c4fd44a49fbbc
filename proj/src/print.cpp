#include "tenscanon/print.hpp"

namespace tenscanon {

std::string print(const Index& ix) { return ix.name(); }

std::string print(const ElementarySymbol& e) {
  std::string s = e.type()->name() + "(";
  for (std::size_t i = 0; i < e.indices().size(); ++i) {
    if (i) s += ",";
    s += e.indices()[i].name();
  }
  s += ")";
  return s;
}

namespace {

// Factor list with the coefficient's magnitude, no sign: "1/2*g(i,d1)*T(d1)".
std::string print_unsigned(const Rational& coeff, const std::vector<ElementarySymbol>& factors) {
  std::string s;
  Rational mag = coeff.abs();
  if (!mag.is_one()) s += mag.str() + "*";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "*";
    s += print(factors[i]);
  }
  return s;
}

}  // namespace

std::string print(const Monomial& m) {
  if (m.coeff().is_zero()) return "0";
  return (m.coeff().sign() < 0 ? "-" : "") + print_unsigned(m.coeff(), m.factors());
}

std::string print(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [factors, coeff] : p.terms()) {
    if (first) {
      if (coeff.sign() < 0) s += "-";
      first = false;
    } else {
      s += coeff.sign() < 0 ? " - " : " + ";
    }
    s += print_unsigned(coeff, factors);
  }
  return s;
}

}  // namespace tenscanon
