#include "tenscanon/oracle.hpp"

#include <algorithm>
#include <vector>

#include "tenscanon/errors.hpp"
#include "tenscanon/linalg.hpp"
#include "tenscanon/orbits.hpp"
#include "tenscanon/renaming.hpp"

namespace tenscanon {

/// One signature orbit: its full monomial basis and the row-reduced relation
/// hyperplane. Column order is reversed (col = size-1-id) so the reducer's
/// smallest-leading-column pivots consume the lexicographically largest
/// monomials and the surviving complement is the greedy lex-smallest one.
struct Oracle::Block {
  std::vector<std::vector<ElementarySymbol>> monomials;            // id -> factors
  std::map<std::vector<ElementarySymbol>, int, FactorsLess> ids;   // factors -> id
  RowReducer reducer;

  int col_of(int id) const { return static_cast<int>(monomials.size()) - 1 - id; }
  int id_of_col(int col) const { return static_cast<int>(monomials.size()) - 1 - col; }

  int id_of(const std::vector<ElementarySymbol>& factors) const {
    auto it = ids.find(factors);
    if (it == ids.end()) throw Error("oracle: monomial missing from its own block basis");
    return it->second;
  }
};

namespace {

/// All distinct slot arrangements (as index vectors) of one factor.
std::vector<std::vector<Index>> factor_arrangements(const Signature& sig) {
  std::vector<Index> idx = sig.indices();  // already sorted ascending
  std::vector<std::vector<Index>> out;
  do {
    out.push_back(idx);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

SparseRow to_sparse(const std::map<int, Rational>& cols) {
  SparseRow r;
  for (const auto& [col, c] : cols)
    if (!c.is_zero()) r.emplace_back(col, c);
  return r;
}

}  // namespace

Oracle::Oracle(DeclPtr decls, Limits limits) : decls_(std::move(decls)), limits_(limits) {
  if (!decls_) throw InputError("oracle without a declaration set");
}

std::shared_ptr<const Oracle::Block> Oracle::block_for(const Monomial& m) const {
  const int k = m.dummy_count();
  MonomialSignature key = extremal_signature_brute(m.signature(), k, limits_);
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = blocks_.find(key); it != blocks_.end()) return it->second;
  }

  auto block = std::make_shared<Block>();

  // Basis: every arrangement of every signature in the renaming orbit.
  for (const MonomialSignature& sig : signature_orbit_brute(key, k, limits_)) {
    std::vector<std::vector<std::vector<Index>>> options;
    options.reserve(sig.size());
    for (const Signature& fs : sig) options.push_back(factor_arrangements(fs));

    std::vector<std::size_t> pick(options.size(), 0);
    while (true) {
      std::vector<ElementarySymbol> factors;
      factors.reserve(options.size());
      for (std::size_t f = 0; f < options.size(); ++f)
        factors.emplace_back(sig[f].type(), options[f][pick[f]]);
      std::sort(factors.begin(), factors.end());
      if (block->ids.emplace(std::move(factors), static_cast<int>(block->monomials.size()))
              .second) {
        if (block->monomials.size() + 1 > static_cast<std::size_t>(limits_.max_oracle_monomials))
          throw ResourceError("oracle basis monomials", block->monomials.size() + 1,
                              limits_.max_oracle_monomials);
        // ids owns the key; mirror it back for id -> factors lookups.
        block->monomials.emplace_back();
      }
      std::size_t f = 0;
      for (; f < options.size(); ++f) {
        if (++pick[f] < options[f].size()) break;
        pick[f] = 0;
      }
      if (f == options.size()) break;
    }
  }
  for (const auto& [factors, id] : block->ids) block->monomials[id] = factors;

  // Relation rows, instantiated on every basis monomial.
  const int size = static_cast<int>(block->monomials.size());
  for (int id = 0; id < size; ++id) {
    const auto& factors = block->monomials[id];

    auto image_id = [&](std::size_t f, const Perm& perm) {
      std::vector<ElementarySymbol> moved = factors;
      moved[f] = ElementarySymbol(factors[f].type(), perm.apply(factors[f].indices()));
      std::sort(moved.begin(), moved.end());
      return block->id_of(moved);
    };

    for (std::size_t f = 0; f < factors.size(); ++f) {
      const auto& type = factors[f].type();
      for (const auto& sym : type->symmetries()) {
        std::map<int, Rational> cols;
        cols[block->col_of(id)] += Rational(1);
        cols[block->col_of(image_id(f, sym.perm))] -= Rational(sym.sign);
        block->reducer.insert(to_sparse(cols));
      }
      for (const auto& identity : type->identities()) {
        std::map<int, Rational> cols;
        for (const auto& [coeff, perm] : identity.terms)
          cols[block->col_of(image_id(f, perm))] += coeff;
        block->reducer.insert(to_sparse(cols));
      }
    }

    for (int d = 1; d < k; ++d) {
      std::vector<int> img(k);
      for (int i = 0; i < k; ++i) img[i] = i + 1;
      std::swap(img[d - 1], img[d]);
      Renaming swap_adjacent(std::move(img));
      std::vector<ElementarySymbol> renamed;
      renamed.reserve(factors.size());
      for (const auto& fac : factors) renamed.push_back(swap_adjacent.apply(fac));
      std::sort(renamed.begin(), renamed.end());
      int rid = block->id_of(renamed);
      if (rid == id) continue;
      std::map<int, Rational> cols;
      cols[block->col_of(id)] += Rational(1);
      cols[block->col_of(rid)] -= Rational(1);
      block->reducer.insert(to_sparse(cols));
    }
  }

  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = blocks_.emplace(std::move(key), std::move(block));
  if (inserted) ++builds_;
  return it->second;
}

Polynomial Oracle::canonical(const Polynomial& p) const {
  Polynomial out;
  for (const Monomial& m : p.monomials()) {
    auto block = block_for(m);
    SparseRow row{{block->col_of(block->id_of(m.factors())), Rational(1)}};
    for (const auto& [col, c] : block->reducer.reduce(std::move(row))) {
      Rational coeff = c * m.coeff();
      out.add_term(Monomial(std::move(coeff), block->monomials[block->id_of_col(col)]));
    }
  }
  return out;
}

bool Oracle::equal(const Polynomial& p, const Polynomial& q) const {
  // Relation rows never mix free-index supports, so polynomials with
  // different free sets (where p - q would be a malformed sum) are equal
  // only in the degenerate sense that both vanish.
  if (!p.is_zero() && !q.is_zero() && p.free_indices() != q.free_indices())
    return canonical(p).is_zero() && canonical(q).is_zero();
  Polynomial diff = p;
  diff -= q;
  return canonical(diff).is_zero();
}

std::uint64_t Oracle::block_builds() const {
  std::lock_guard<std::mutex> lock(mu_);
  return builds_;
}

}  // namespace tenscanon
