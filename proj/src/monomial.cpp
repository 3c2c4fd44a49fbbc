#include "tenscanon/monomial.hpp"

#include <algorithm>
#include <map>

#include "tenscanon/errors.hpp"

namespace tenscanon {

Monomial::Monomial(Rational coeff, std::vector<ElementarySymbol> factors)
    : coeff_(std::move(coeff)), factors_(std::move(factors)), dummy_count_(0) {
  if (factors_.empty()) throw InputError("monomial with no factors");
  std::sort(factors_.begin(), factors_.end());

  std::map<Index, int> count;
  for (const auto& f : factors_)
    for (const auto& ix : f.indices()) ++count[ix];
  for (const auto& [ix, n] : count) {
    if (ix.is_free()) {
      if (n != 1)
        throw InputError("free index '" + ix.name() + "' occurs " + std::to_string(n) +
                         " times in a monomial (must be exactly once)");
    } else {
      if (n != 2)
        throw InputError("dummy index '" + ix.name() + "' occurs " + std::to_string(n) +
                         " times in a monomial (must be exactly twice)");
      ++dummy_count_;
    }
  }
  // Dummy numbers must be the contiguous pool 1..k; the map is ordered, so
  // the dummies are visited in increasing number.
  int expect = 1;
  for (const auto& [ix, n] : count) {
    if (!ix.is_dummy()) continue;
    if (ix.dummy_number() != expect)
      throw InputError("dummy pool not contiguous: expected d" + std::to_string(expect) +
                       ", found " + ix.name());
    ++expect;
  }
}

MonomialSignature Monomial::signature() const {
  MonomialSignature sig;
  sig.reserve(factors_.size());
  for (const auto& f : factors_) sig.push_back(Signature::of(f));
  std::sort(sig.begin(), sig.end());
  return sig;
}

Monomial Monomial::product(const Monomial& a, const Monomial& b) {
  const int ka = a.dummy_count();
  const int kb = b.dummy_count();

  // Which free indices are shared (to be contracted)?
  std::map<Index, int> free_count;
  for (const auto& m : {a, b})
    for (const auto& f : m.factors())
      for (const auto& ix : f.indices())
        if (ix.is_free()) ++free_count[ix];

  // Fresh dummy numbers for contractions, in first-occurrence order over the
  // concatenated factor sequence (left operand first).
  std::map<Index, int> contraction;
  int next = ka + kb;
  for (const auto& m : {a, b})
    for (const auto& f : m.factors())
      for (const auto& ix : f.indices())
        if (ix.is_free() && free_count[ix] == 2 && !contraction.count(ix))
          contraction[ix] = ++next;

  std::vector<ElementarySymbol> factors;
  factors.reserve(a.factors().size() + b.factors().size());
  for (int side = 0; side < 2; ++side) {
    const Monomial& m = side == 0 ? a : b;
    const int offset = side == 0 ? 0 : ka;
    for (const auto& f : m.factors()) {
      std::vector<Index> idx;
      idx.reserve(f.indices().size());
      for (const auto& ix : f.indices()) {
        if (ix.is_dummy())
          idx.push_back(Index::dummy(ix.dummy_number() + offset));
        else if (auto it = contraction.find(ix); it != contraction.end())
          idx.push_back(Index::dummy(it->second));
        else
          idx.push_back(ix);
      }
      factors.emplace_back(f.type(), std::move(idx));
    }
  }
  return Monomial(a.coeff() * b.coeff(), std::move(factors));
}

}  // namespace tenscanon
