#include "tenscanon/relspace.hpp"

#include <algorithm>
#include <map>

#include "tenscanon/errors.hpp"

namespace tenscanon {

namespace {

int find_arrangement(const std::vector<std::vector<int>>& symbols, const std::vector<int>& t) {
  auto it = std::lower_bound(symbols.begin(), symbols.end(), t);
  if (it == symbols.end() || *it != t) throw Error("arrangement not in its relation space");
  return static_cast<int>(it - symbols.begin());
}

}  // namespace

std::shared_ptr<const PatternSpace> build_pattern_space(const TypePtr& type,
                                                        const std::vector<int>& multiplicities,
                                                        const Limits& limits) {
  auto space = std::make_shared<PatternSpace>();
  space->type = type;
  space->multiplicities = multiplicities;

  std::vector<int> tuple;
  for (std::size_t code = 0; code < multiplicities.size(); ++code)
    tuple.insert(tuple.end(), multiplicities[code], static_cast<int>(code));
  if (static_cast<int>(tuple.size()) != type->arity())
    throw Error("multiplicity pattern does not match arity of '" + type->name() + "'");

  do {
    if (space->symbols.size() >= limits.max_space_symbols)
      throw ResourceError("relation space symbols (type '" + type->name() + "')",
                          space->symbols.size() + 1, limits.max_space_symbols);
    space->symbols.push_back(tuple);
  } while (std::next_permutation(tuple.begin(), tuple.end()));

  const int n = static_cast<int>(space->symbols.size());
  // Columns run over symbols in decreasing order: pivots eat the largest
  // symbol of each relation, leaving the greedy smallest basis.
  auto col_of = [n](int id) { return n - 1 - id; };
  auto id_of_col = [n](int col) { return n - 1 - col; };

  auto make_row = [&](const std::map<int, Rational>& by_id) {
    SparseRow row;
    row.reserve(by_id.size());
    for (auto it = by_id.rbegin(); it != by_id.rend(); ++it)
      if (!it->second.is_zero()) row.emplace_back(col_of(it->first), it->second);
    return row;
  };

  RowReducer reducer;
  for (int id = 0; id < n; ++id) {
    const std::vector<int>& t = space->symbols[id];
    for (const auto& sym : type->symmetries()) {
      std::map<int, Rational> by_id;
      by_id[id] += Rational(1);
      by_id[find_arrangement(space->symbols, sym.perm.apply(t))] -= Rational(sym.sign);
      reducer.insert(make_row(by_id));
    }
    for (const auto& identity : type->identities()) {
      std::map<int, Rational> by_id;
      for (const auto& [coeff, perm] : identity.terms)
        by_id[find_arrangement(space->symbols, perm.apply(t))] += coeff;
      reducer.insert(make_row(by_id));
    }
  }

  space->rank = reducer.rank();
  for (int id = 0; id < n; ++id)
    if (!reducer.is_pivot(col_of(id))) space->basis.push_back(id);

  space->rewrites.resize(n);
  for (int id = 0; id < n; ++id) {
    auto pivot = reducer.pivots().find(col_of(id));
    if (pivot == reducer.pivots().end()) {
      space->rewrites[id] = {{id, Rational(1)}};
      continue;
    }
    // Pivot row: [id] + sum coeff * [smaller symbols] = 0.
    std::vector<std::pair<int, Rational>> rewrite;
    for (const auto& [col, coeff] : reducer.rows()[pivot->second])
      if (col != col_of(id)) rewrite.emplace_back(id_of_col(col), -coeff);
    std::sort(rewrite.begin(), rewrite.end());
    space->rewrites[id] = std::move(rewrite);
  }

  for (const auto& row : reducer.rows()) {
    std::vector<std::pair<int, Rational>> by_id;
    by_id.reserve(row.size());
    for (const auto& [col, coeff] : row) by_id.emplace_back(id_of_col(col), coeff);
    std::sort(by_id.begin(), by_id.end());
    space->relation_rows.push_back(std::move(by_id));
  }

  return space;
}

std::shared_ptr<const PatternSpace> SpaceCache::get(const TypePtr& type,
                                                    const std::vector<int>& multiplicities) {
  std::pair<int, std::vector<int>> key{type->decl_rank(), multiplicities};
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = spaces_.find(key); it != spaces_.end()) return it->second;
  }
  // Build outside the lock; a racing duplicate build is harmless.
  auto built = build_pattern_space(type, multiplicities, limits_);
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = spaces_.emplace(std::move(key), std::move(built));
  if (inserted) ++builds_;
  return it->second;
}

std::uint64_t SpaceCache::builds() const {
  std::lock_guard<std::mutex> lock(mu_);
  return builds_;
}

int SignatureSpace::id_of(const ElementarySymbol& e) const {
  if (e.type() != signature.type() && e.type()->name() != signature.type()->name())
    throw Error("factor type does not match its signature space");
  std::vector<int> t;
  t.reserve(e.indices().size());
  for (const auto& ix : e.indices()) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), ix);
    if (it == distinct.end() || !(*it == ix))
      throw Error("factor index not in its signature space");
    t.push_back(static_cast<int>(it - distinct.begin()));
  }
  return find_arrangement(pattern->symbols, t);
}

ElementarySymbol SignatureSpace::symbol(int id) const {
  std::vector<Index> idx;
  const std::vector<int>& t = pattern->symbols.at(id);
  idx.reserve(t.size());
  for (int code : t) idx.push_back(distinct.at(code));
  return ElementarySymbol(signature.type(), std::move(idx));
}

bool SignatureSpace::is_canonical(int id) const {
  return std::binary_search(pattern->basis.begin(), pattern->basis.end(), id);
}

SignatureSpace bind_signature_space(const Signature& sig, SpaceCache& cache) {
  SignatureSpace space{sig, {}, nullptr};
  std::vector<int> mult;
  for (const auto& ix : sig.indices()) {
    if (space.distinct.empty() || !(space.distinct.back() == ix)) {
      space.distinct.push_back(ix);
      mult.push_back(1);
    } else {
      ++mult.back();
    }
  }
  space.pattern = cache.get(sig.type(), mult);
  return space;
}

}  // namespace tenscanon
