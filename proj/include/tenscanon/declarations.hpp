#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tenscanon/index.hpp"
#include "tenscanon/tensor_type.hpp"

namespace tenscanon {

/// True for names reserved for the canonical dummy pool: d1, d2, ...
/// (a 'd' followed by a positive decimal number without leading zeros).
bool is_dummy_pool_name(const std::string& name);

/// Parses the number out of a pool name ("d12" -> 12); name must satisfy
/// is_dummy_pool_name.
int dummy_pool_number(const std::string& name);

/// An immutable set of tensor type declarations plus an optional ordered list
/// of declared free-index names. Expressions are always parsed and evaluated
/// against one declaration set; mixing sets is not supported.
class DeclarationSet {
 public:
  DeclarationSet(std::vector<TypePtr> types, std::vector<std::string> free_names);

  const std::vector<TypePtr>& types() const { return types_; }

  /// Null when absent.
  TypePtr find_type(const std::string& name) const;

  /// Throws InputError when absent.
  TypePtr require_type(const std::string& name) const;

  const std::vector<std::string>& declared_free_names() const { return free_names_; }

  /// Builds the free Index for a name: declared names get their declaration
  /// rank, other names are undeclared (ordered after all declared names, by
  /// spelling). Rejects dummy-pool names: those may never denote a free index.
  Index make_free_index(const std::string& name) const;

 private:
  std::vector<TypePtr> types_;
  std::map<std::string, TypePtr> by_name_;
  std::vector<std::string> free_names_;
  std::map<std::string, int> free_rank_;
};

using DeclPtr = std::shared_ptr<const DeclarationSet>;

}  // namespace tenscanon
