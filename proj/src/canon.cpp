#include "tenscanon/canon.hpp"

#include <algorithm>

#include "tenscanon/errors.hpp"
#include "tenscanon/print.hpp"

namespace tenscanon {

Engine::Engine(DeclPtr decls, Limits limits)
    : decls_(std::move(decls)), limits_(limits), cache_(limits) {
  if (!decls_) throw InputError("engine without a declaration set");
}

SignatureSpace Engine::signature_space(const Signature& sig) const {
  return bind_signature_space(sig, cache_);
}

Polynomial Engine::reduce(const Monomial& m) const {
  // Rewrite options per factor, then multiply out.
  std::vector<std::vector<std::pair<ElementarySymbol, Rational>>> choices;
  choices.reserve(m.factors().size());
  for (const auto& f : m.factors()) {
    SignatureSpace space = bind_signature_space(Signature::of(f), cache_);
    const auto& rewrite = space.rewrite(space.id_of(f));
    if (rewrite.empty()) return Polynomial::zero();  // factor vanishes identically
    std::vector<std::pair<ElementarySymbol, Rational>> opts;
    opts.reserve(rewrite.size());
    for (const auto& [id, c] : rewrite) opts.emplace_back(space.symbol(id), c);
    choices.push_back(std::move(opts));
  }

  Polynomial out;
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    Rational coeff = m.coeff();
    std::vector<ElementarySymbol> factors;
    factors.reserve(choices.size());
    for (std::size_t i = 0; i < choices.size(); ++i) {
      factors.push_back(choices[i][pick[i]].first);
      coeff *= choices[i][pick[i]].second;
    }
    out.add_term(Monomial(std::move(coeff), std::move(factors)));
    std::size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < choices[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return out;
}

Polynomial Engine::reduce(const Polynomial& p) const {
  Polynomial out;
  for (const auto& m : p.monomials()) out += reduce(m);
  return out;
}

GraphCertificate Engine::certificate(const Monomial& m) const {
  return canonical_graph_certificate(build_monomial_graph(m), limits_);
}

ExtremalResult Engine::extremal(const Monomial& m) const {
  GraphCertificate cert = certificate(m);
  ExtremalResult res = extremal_signature_search(m.signature(), m.dummy_count(),
                                                 cert.seed_renamings, limits_);
  res.nodes += cert.nodes;
  return res;
}

std::shared_ptr<const Engine::SigInfo> Engine::signature_info(const MonomialSignature& sig,
                                                              const Monomial& m,
                                                              CanonStats* stats) const {
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    if (auto it = memo_.find(sig); it != memo_.end()) {
      if (stats)
        stats->stabilizer = std::max<std::uint64_t>(stats->stabilizer,
                                                    it->second->stabilizer.size());
      return it->second;
    }
  }
  ExtremalResult res = extremal(m);
  if (stats) {
    stats->orbit += res.nodes;
    stats->stabilizer = std::max<std::uint64_t>(stats->stabilizer, res.stabilizer.size());
  }
  auto info = std::make_shared<SigInfo>();
  info->witness = res.witness;
  info->stabilizer = std::move(res.stabilizer);
  std::lock_guard<std::mutex> lock(memo_mu_);
  auto [it, inserted] = memo_.emplace(sig, std::move(info));
  return it->second;
}

Polynomial Engine::canonicalize(const Polynomial& p, CanonStats* stats) const {
  Polynomial out;
  for (const auto& m : p.monomials()) {
    for (const auto& rm : reduce(m).monomials()) {
      auto info = signature_info(rm.signature(), rm, stats);
      const auto& stab = info->stabilizer;
      if (stats) stats->orbit += stab.size();
      Rational weight = Rational(1) / Rational(static_cast<long long>(stab.size()));
      for (const auto& h : stab) {
        Monomial moved = h.after(info->witness).apply(rm);
        out += reduce(moved) * weight;
      }
    }
  }
  return out;
}

void Engine::require_reduced(const Monomial& m, const char* op) const {
  for (const auto& f : m.factors()) {
    SignatureSpace space = bind_signature_space(Signature::of(f), cache_);
    if (!space.is_canonical(space.id_of(f)))
      throw InputError(std::string(op) + ": factor '" + print(f) +
                       "' is not on its canonical basis (reduce first)");
  }
}

Polynomial Engine::average(const Monomial& m) const {
  require_reduced(m, "average");
  ExtremalResult res = extremal(m);
  if (!(res.extremal == m.signature()))
    throw InputError("average: monomial signature is not extremal in its renaming orbit");
  Polynomial out;
  Rational weight = Rational(1) / Rational(static_cast<long long>(res.stabilizer.size()));
  for (const auto& h : res.stabilizer) {
    // The witness fixes the signature here, so fold it into the coset.
    Monomial moved = h.after(res.witness).apply(m);
    out += reduce(moved) * weight;
  }
  return out;
}

bool Engine::equal_mod_relations(const Polynomial& p, const Polynomial& q,
                                 CanonStats* stats) const {
  // Relations never mix free-index supports, so polynomials with different
  // free sets (where p - q would be a malformed sum) are equal only in the
  // degenerate sense that both vanish.
  if (!p.is_zero() && !q.is_zero() && p.free_indices() != q.free_indices())
    return canonicalize(p, stats).is_zero() && canonicalize(q, stats).is_zero();
  Polynomial diff = p;
  diff -= q;
  return canonicalize(diff, stats).is_zero();
}

bool Engine::are_independent(const Monomial& a, const Monomial& b) const {
  require_reduced(a, "are_independent");
  require_reduced(b, "are_independent");
  if (certificate(a).certificate == certificate(b).certificate) return false;
  // A monomial whose class is zero is linearly related to everything.
  if (canonicalize(Polynomial(a.with_coeff(Rational(1)))).is_zero()) return false;
  if (canonicalize(Polynomial(b.with_coeff(Rational(1)))).is_zero()) return false;
  return true;
}

}  // namespace tenscanon
