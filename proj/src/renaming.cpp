#include "tenscanon/renaming.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tenscanon/errors.hpp"

namespace tenscanon {

Renaming::Renaming(std::vector<int> image_1based) : img_(std::move(image_1based)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 1 || static_cast<std::size_t>(v) > img_.size() || seen[v - 1])
      throw Error("invalid renaming image table");
    seen[v - 1] = true;
  }
}

Renaming Renaming::identity(int k) {
  std::vector<int> img(k);
  std::iota(img.begin(), img.end(), 1);
  return Renaming(std::move(img));
}

int Renaming::map(int i) const {
  if (i < 1 || i > size())
    throw Error("renaming over pool of " + std::to_string(size()) +
                " applied to dummy d" + std::to_string(i));
  return img_[i - 1];
}

bool Renaming::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

Renaming Renaming::after(const Renaming& first) const {
  if (size() != first.size()) throw Error("composing renamings of different pool sizes");
  std::vector<int> img(img_.size());
  for (int i = 0; i < size(); ++i) img[i] = img_[first.img_[i] - 1];
  return Renaming(std::move(img));
}

Renaming Renaming::inverse() const {
  std::vector<int> img(img_.size());
  for (int i = 0; i < size(); ++i) img[img_[i] - 1] = i + 1;
  return Renaming(std::move(img));
}

Index Renaming::apply(const Index& ix) const {
  if (!ix.is_dummy()) return ix;
  return Index::dummy(map(ix.dummy_number()));
}

ElementarySymbol Renaming::apply(const ElementarySymbol& e) const {
  std::vector<Index> idx;
  idx.reserve(e.indices().size());
  for (const auto& ix : e.indices()) idx.push_back(apply(ix));
  return ElementarySymbol(e.type(), std::move(idx));
}

Monomial Renaming::apply(const Monomial& m) const {
  std::vector<ElementarySymbol> factors;
  factors.reserve(m.factors().size());
  for (const auto& f : m.factors()) factors.push_back(apply(f));
  return Monomial(m.coeff(), std::move(factors));
}

Signature Renaming::apply(const Signature& s) const {
  std::vector<Index> idx;
  idx.reserve(s.indices().size());
  for (const auto& ix : s.indices()) idx.push_back(apply(ix));
  std::sort(idx.begin(), idx.end());
  return Signature(s.type(), std::move(idx));
}

MonomialSignature Renaming::apply(const MonomialSignature& sig) const {
  MonomialSignature out;
  out.reserve(sig.size());
  for (const auto& s : sig) out.push_back(apply(s));
  std::sort(out.begin(), out.end());
  return out;
}

RenamingGroup RenamingGroup::trivial(int k) { return RenamingGroup(k, {Renaming::identity(k)}); }

RenamingGroup RenamingGroup::symmetric(int k, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (int i = 2; i <= k; ++i) {
    count *= i;
    if (count > cap) throw ResourceError("renaming enumeration", count, cap);
  }
  std::vector<int> img(k);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Renaming> elems;
  elems.reserve(count);
  do {
    elems.push_back(Renaming(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return RenamingGroup(k, std::move(elems));
}

RenamingGroup RenamingGroup::closure(int k, std::span<const Renaming> generators,
                                     std::size_t cap) {
  std::set<Renaming> elems{Renaming::identity(k)};
  std::vector<Renaming> queue{Renaming::identity(k)};
  for (const auto& g : generators)
    if (g.size() != k) throw Error("generator pool size mismatch in group closure");
  while (!queue.empty()) {
    Renaming cur = std::move(queue.back());
    queue.pop_back();
    for (const auto& g : generators) {
      Renaming next = g.after(cur);
      if (elems.insert(next).second) {
        if (elems.size() > cap)
          throw ResourceError("stabilizer enumeration", elems.size(), cap);
        queue.push_back(std::move(next));
      }
    }
  }
  return RenamingGroup(k, std::vector<Renaming>(elems.begin(), elems.end()));
}

bool RenamingGroup::contains(const Renaming& r) const {
  return std::binary_search(elements_.begin(), elements_.end(), r);
}

}  // namespace tenscanon
