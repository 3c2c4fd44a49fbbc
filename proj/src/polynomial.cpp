#include "tenscanon/polynomial.hpp"

#include <algorithm>

#include "tenscanon/errors.hpp"

namespace tenscanon {

namespace {

std::vector<Index> free_set_of(const Monomial& m) {
  std::vector<Index> f;
  for (const auto& fac : m.factors())
    for (const auto& ix : fac.indices())
      if (ix.is_free()) f.push_back(ix);
  std::sort(f.begin(), f.end());
  return f;
}

std::string free_set_str(const std::vector<Index>& f) {
  if (f.empty()) return "(none)";
  std::string s;
  for (const auto& ix : f) {
    if (!s.empty()) s += ",";
    s += ix.name();
  }
  return s;
}

}  // namespace

void Polynomial::add_term(const Monomial& m) {
  if (m.coeff().is_zero()) return;
  std::vector<Index> f = free_set_of(m);
  if (terms_.empty()) {
    free_ = std::move(f);
  } else if (f != free_) {
    throw InputError("terms with different free indices in one polynomial: " +
                     free_set_str(free_) + " vs " + free_set_str(f));
  }
  auto [it, inserted] = terms_.emplace(m.factors(), m.coeff());
  if (!inserted) {
    it->second += m.coeff();
    if (it->second.is_zero()) terms_.erase(it);
  }
  if (terms_.empty()) free_.clear();
}

std::vector<Monomial> Polynomial::monomials() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& [factors, coeff] : terms_) out.emplace_back(coeff, factors);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  for (const auto& [factors, coeff] : q.terms_) add_term(Monomial(coeff, factors));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  for (const auto& [factors, coeff] : q.terms_) add_term(Monomial(-coeff, factors));
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    free_.clear();
    return *this;
  }
  for (auto& [factors, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  Polynomial out;
  for (const auto& [pf, pc] : p.terms())
    for (const auto& [qf, qc] : q.terms())
      out.add_term(Monomial::product(Monomial(pc, pf), Monomial(qc, qf)));
  return out;
}

}  // namespace tenscanon
