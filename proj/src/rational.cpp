#include "tenscanon/rational.hpp"

#include <cctype>

#include "tenscanon/errors.hpp"

namespace tenscanon {

Rational::Rational(long long num, long long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  v_ = Rep(num);
  v_ /= den;
}

Rational Rational::parse(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!is_int(num) || !is_int(den))
    throw InputError("malformed rational '" + std::string(text) + "'");
  Rep d{std::string(den)};
  if (d.is_zero()) throw InputError("rational with zero denominator: '" + std::string(text) + "'");
  Rep v{std::string(num)};
  v /= d;
  return Rational(std::move(v));
}

bool Rational::is_one() const { return v_ == 1; }
bool Rational::is_minus_one() const { return v_ == -1; }

std::string Rational::str() const {
  const auto& num = boost::multiprecision::numerator(v_);
  const auto& den = boost::multiprecision::denominator(v_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw InputError("division by zero");
  return Rational(Rational::Rep(a.v_ / b.v_));
}

Rational& Rational::operator/=(const Rational& b) {
  if (b.is_zero()) throw InputError("division by zero");
  v_ /= b.v_;
  return *this;
}

}  // namespace tenscanon
