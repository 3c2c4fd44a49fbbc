#include "tenscanon/declarations.hpp"

#include <cctype>

#include "tenscanon/errors.hpp"

namespace tenscanon {

bool is_dummy_pool_name(const std::string& name) {
  if (name.size() < 2 || name[0] != 'd') return false;
  if (name[1] == '0') return false;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  return true;
}

int dummy_pool_number(const std::string& name) { return std::stoi(name.substr(1)); }

DeclarationSet::DeclarationSet(std::vector<TypePtr> types, std::vector<std::string> free_names)
    : types_(std::move(types)), free_names_(std::move(free_names)) {
  for (const auto& t : types_) {
    if (!by_name_.emplace(t->name(), t).second)
      throw InputError("tensor type '" + t->name() + "' declared twice");
  }
  int rank = 0;
  for (const auto& n : free_names_) {
    if (is_dummy_pool_name(n))
      throw InputError("'" + n + "' is reserved for the dummy pool and cannot be declared free");
    if (by_name_.count(n))
      throw InputError("'" + n + "' is both a tensor type and a free index");
    if (!free_rank_.emplace(n, rank++).second)
      throw InputError("free index '" + n + "' declared twice");
  }
}

TypePtr DeclarationSet::find_type(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : it->second;
}

TypePtr DeclarationSet::require_type(const std::string& name) const {
  if (TypePtr t = find_type(name)) return t;
  throw InputError("unknown tensor type '" + name + "'");
}

Index DeclarationSet::make_free_index(const std::string& name) const {
  if (is_dummy_pool_name(name))
    throw InputError("index '" + name + "' uses a dummy-pool name but occurs only once");
  auto it = free_rank_.find(name);
  return Index::free(name, it == free_rank_.end() ? Index::kUndeclaredRank : it->second);
}

}  // namespace tenscanon
