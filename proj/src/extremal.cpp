#include "tenscanon/extremal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tenscanon/errors.hpp"

namespace tenscanon {

namespace {

// One factor signature, re-encoded over small integer codes: free indices get
// 0..F-1 by their global sort order, dummy name v gets F+v-1. The encoding is
// order-isomorphic to the Index ordering, so minimizing re-encoded keys
// minimizes the real signature.
struct Part {
  int type_rank;
  std::vector<int> fixed_codes;  // free codes, ascending
  std::vector<int> dummy_olds;   // old dummy numbers (repeats allowed)
};

using Key = std::vector<std::vector<int>>;  // sorted part keys

class Searcher {
 public:
  Searcher(const MonomialSignature& sig, int k, std::span<const Renaming> seeds,
           const Limits& limits)
      : k_(k), limits_(limits) {
    // Global free-code table.
    std::set<Index> frees;
    for (const auto& s : sig)
      for (const auto& ix : s.indices())
        if (ix.is_free()) frees.insert(ix);
    std::map<Index, int> free_code;
    for (const auto& ix : frees) free_code.emplace(ix, static_cast<int>(free_code.size()));
    free_count_ = static_cast<int>(free_code.size());

    parts_.reserve(sig.size());
    for (const auto& s : sig) {
      Part p;
      p.type_rank = s.type()->decl_rank();
      for (const auto& ix : s.indices()) {
        if (ix.is_free())
          p.fixed_codes.push_back(free_code.at(ix));
        else
          p.dummy_olds.push_back(ix.dummy_number());
      }
      std::sort(p.fixed_codes.begin(), p.fixed_codes.end());
      parts_.push_back(std::move(p));
    }

    group_.insert(Renaming::identity(k_));
    for (const auto& seed : seeds) {
      ++nodes_;  // a seed verification costs one signature evaluation
      if (seed.size() == k_ && seed.apply(sig) == sig) add_stabilizer(seed);
    }

    new_of_old_.assign(k_ + 1, 0);
  }

  ExtremalResult run(const MonomialSignature& sig) {
    dfs();
    ExtremalResult res;
    res.witness = assignment_renaming(best_assignment_);
    res.extremal = res.witness.apply(sig);
    res.nodes = nodes_;
    // Conjugate the input-signature stabilizer to the extremal signature:
    // h = witness . sigma . witness^-1 fixes the extremal image.
    Renaming w = res.witness, w_inv = w.inverse();
    std::set<Renaming> stab;
    for (const auto& sigma : group_) stab.insert(w.after(sigma.after(w_inv)));
    res.stabilizer.assign(stab.begin(), stab.end());
    return res;
  }

 private:
  Renaming assignment_renaming(const std::vector<int>& new_of_old) const {
    std::vector<int> img(k_);
    for (int i = 1; i <= k_; ++i) img[i - 1] = new_of_old[i];
    return Renaming(std::move(img));
  }

  // Key of one part under the current partial assignment; unassigned dummies
  // are filled optimistically (equal smallest unused names, doubled
  // occurrences first), which never exceeds any real completion.
  std::vector<int> part_key(const Part& p, int v) const {
    std::vector<int> assigned;
    int unassigned_single = 0;
    std::map<int, int> unassigned_mult;
    for (int old : p.dummy_olds) {
      int nn = new_of_old_[old];
      if (nn)
        assigned.push_back(free_count_ + nn - 1);
      else
        ++unassigned_mult[old];
    }
    std::sort(assigned.begin(), assigned.end());

    std::vector<int> key;
    key.reserve(1 + p.fixed_codes.size() + p.dummy_olds.size());
    key.push_back(p.type_rank);
    key.insert(key.end(), p.fixed_codes.begin(), p.fixed_codes.end());
    key.insert(key.end(), assigned.begin(), assigned.end());
    // Optimistic tail: next names v+1, v+2, ... with double occurrences
    // drawing the smallest names. All tail codes exceed every assigned code,
    // so appending keeps the key sorted past the type rank.
    int doubles = 0;
    for (const auto& [old, mult] : unassigned_mult)
      if (mult == 2)
        ++doubles;
      else
        ++unassigned_single;
    int name = v;
    for (int i = 0; i < doubles; ++i) {
      ++name;
      key.push_back(free_count_ + name - 1);
      key.push_back(free_count_ + name - 1);
    }
    for (int i = 0; i < unassigned_single; ++i) {
      ++name;
      key.push_back(free_count_ + name - 1);
    }
    return key;
  }

  Key signature_key(int v) const {
    Key key;
    key.reserve(parts_.size());
    for (const auto& p : parts_) key.push_back(part_key(p, v));
    std::sort(key.begin(), key.end());
    return key;
  }

  void add_stabilizer(const Renaming& sigma) {
    if (group_.count(sigma)) return;
    std::vector<Renaming> work{sigma};
    while (!work.empty()) {
      Renaming x = std::move(work.back());
      work.pop_back();
      if (!group_.insert(x).second) continue;
      if (group_.size() > limits_.max_group_order)
        throw ResourceError("stabilizer enumeration", group_.size(), limits_.max_group_order);
      std::vector<Renaming> snapshot(group_.begin(), group_.end());
      for (const auto& y : snapshot) {
        work.push_back(x.after(y));
        work.push_back(y.after(x));
      }
    }
  }

  void dfs() {
    if (++nodes_ > limits_.max_orbit_nodes)
      throw ResourceError("extremal search nodes", nodes_, limits_.max_orbit_nodes);
    const int v = static_cast<int>(assigned_olds_.size());
    if (v == k_) {
      Key key = signature_key(v);
      if (!have_incumbent_ || key < best_key_) {
        best_key_ = std::move(key);
        best_assignment_ = new_of_old_;
        have_incumbent_ = true;
      } else if (key == best_key_) {
        // Two assignments with one image: rep^-1 . current fixes the input.
        Renaming rep = assignment_renaming(best_assignment_);
        Renaming cur = assignment_renaming(new_of_old_);
        add_stabilizer(rep.inverse().after(cur));
      }
      return;
    }

    // Candidate old dummies for new name v+1, best-first.
    std::vector<std::pair<Key, int>> candidates;
    for (int old = 1; old <= k_; ++old) {
      if (new_of_old_[old]) continue;
      new_of_old_[old] = v + 1;
      candidates.push_back({signature_key(v + 1), old});
      new_of_old_[old] = 0;
    }
    std::sort(candidates.begin(), candidates.end());

    std::set<int> explored;
    for (const auto& [child_key, old] : candidates) {
      if (have_incumbent_ && child_key > best_key_) break;  // sorted: the rest are worse
      // Orbit pruning: a stabilizer element fixing the assigned prefix and
      // carrying an explored candidate to this one makes the subtree a
      // duplicate.
      bool dup = false;
      for (const auto& sigma : group_) {
        if (sigma.is_identity()) continue;
        bool fixes = true;
        for (int a : assigned_olds_)
          if (sigma.map(a) != a) {
            fixes = false;
            break;
          }
        if (fixes && explored.count(sigma.map(old))) {
          dup = true;
          break;
        }
      }
      explored.insert(old);
      if (dup) continue;

      new_of_old_[old] = v + 1;
      assigned_olds_.push_back(old);
      dfs();
      assigned_olds_.pop_back();
      new_of_old_[old] = 0;
    }
  }

  int k_;
  const Limits& limits_;
  int free_count_ = 0;
  std::vector<Part> parts_;

  std::set<Renaming> group_;  // known stabilizer of the input signature

  bool have_incumbent_ = false;
  Key best_key_;
  std::vector<int> best_assignment_;
  std::uint64_t nodes_ = 0;

  std::vector<int> new_of_old_;     // 1-based; 0 = unassigned
  std::vector<int> assigned_olds_;  // assignment order
};

}  // namespace

ExtremalResult extremal_signature_search(const MonomialSignature& sig, int k,
                                         std::span<const Renaming> seed_automorphisms,
                                         const Limits& limits) {
  if (k == 0) {
    ExtremalResult res;
    res.extremal = sig;
    res.witness = Renaming::identity(0);
    res.stabilizer = {Renaming::identity(0)};
    res.nodes = 1;
    return res;
  }
  Searcher searcher(sig, k, seed_automorphisms, limits);
  return searcher.run(sig);
}

}  // namespace tenscanon
