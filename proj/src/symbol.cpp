#include "tenscanon/symbol.hpp"

#include <map>

#include "tenscanon/errors.hpp"

namespace tenscanon {

ElementarySymbol::ElementarySymbol(TypePtr type, std::vector<Index> indices)
    : type_(std::move(type)), indices_(std::move(indices)) {
  if (!type_) throw InputError("factor with null tensor type");
  if (static_cast<int>(indices_.size()) != type_->arity())
    throw InputError("factor '" + type_->name() + "' takes " +
                     std::to_string(type_->arity()) + " indices, got " +
                     std::to_string(indices_.size()));
  std::map<Index, int> count;
  for (const auto& ix : indices_) ++count[ix];
  for (const auto& [ix, n] : count) {
    if (ix.is_free() && n > 1)
      throw InputError("free index '" + ix.name() + "' repeated within factor '" +
                       type_->name() + "'");
    if (ix.is_dummy() && n > 2)
      throw InputError("dummy index '" + ix.name() + "' occurs more than twice in factor '" +
                       type_->name() + "'");
  }
}

}  // namespace tenscanon
