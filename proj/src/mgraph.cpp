#include "tenscanon/mgraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "tenscanon/errors.hpp"

namespace tenscanon {

namespace {

std::string free_tag(const Index& ix) {
  // Identity of a free index for cross-monomial color comparison.
  if (ix.declared_rank() == Index::kUndeclaredRank) return ix.name() + "#u";
  return ix.name() + "#" + std::to_string(ix.declared_rank());
}

}  // namespace

MonomialGraph build_monomial_graph(const Monomial& m) {
  MonomialGraph g;
  g.dummy_count = m.dummy_count();

  // (vertex, slot class) attachment points of each dummy, in slot order.
  std::map<int, std::vector<std::pair<int, int>>> dummy_ends;

  for (std::size_t f = 0; f < m.factors().size(); ++f) {
    const auto& factor = m.factors()[f];
    const auto& type = factor.type();
    std::vector<std::pair<int, std::string>> frees;  // (slot class, tag)
    for (std::size_t s = 0; s < factor.indices().size(); ++s) {
      const Index& ix = factor.indices()[s];
      int cls = type->slot_class()[s];
      if (ix.is_free())
        frees.emplace_back(cls, free_tag(ix));
      else
        dummy_ends[ix.dummy_number()].emplace_back(static_cast<int>(f), cls);
    }
    std::sort(frees.begin(), frees.end());
    std::string color = type->name() + "#" + std::to_string(type->decl_rank());
    for (const auto& [cls, tag] : frees) color += ";" + std::to_string(cls) + "@" + tag;
    g.vertices.push_back({static_cast<int>(f), std::move(color)});
  }

  for (const auto& [dummy, ends] : dummy_ends) {
    if (ends.size() != 2) throw Error("dummy without exactly two attachment points");
    auto [v1, c1] = ends[0];
    auto [v2, c2] = ends[1];
    if (std::tie(v1, c1) > std::tie(v2, c2)) {
      std::swap(v1, v2);
      std::swap(c1, c2);
    }
    g.edges.push_back({v1, c1, v2, c2, dummy});
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.v1, a.c1, a.v2, a.c2, a.dummy) < std::tie(b.v1, b.c1, b.v2, b.c2, b.dummy);
  });
  return g;
}

namespace {

using Ends = std::tuple<int, int, int, int>;  // v1, c1, v2, c2 normalized

Ends normalized_ends(int v1, int c1, int v2, int c2) {
  if (std::tie(v1, c1) > std::tie(v2, c2)) return {v2, c2, v1, c1};
  return {v1, c1, v2, c2};
}

class Labeler {
 public:
  Labeler(const MonomialGraph& g, const Limits& limits) : g_(g), limits_(limits) {
    const int n = static_cast<int>(g_.vertices.size());
    inc_.resize(n);
    for (const auto& e : g_.edges) {
      if (e.v1 == e.v2) {
        inc_[e.v1].push_back({e.c1, e.v2, e.c2, true});
        inc_[e.v1].push_back({e.c2, e.v1, e.c1, true});
      } else {
        inc_[e.v1].push_back({e.c1, e.v2, e.c2, false});
        inc_[e.v2].push_back({e.c2, e.v1, e.c1, false});
      }
      bundles_[normalized_ends(e.v1, e.c1, e.v2, e.c2)].push_back(e.dummy);
    }

    // Initial colors: rank of the vertex color string.
    std::vector<std::string> palette;
    for (const auto& v : g_.vertices) palette.push_back(v.color);
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v)
      colors[v] = static_cast<int>(
          std::lower_bound(palette.begin(), palette.end(), g_.vertices[v].color) -
          palette.begin());
    search(std::move(colors));
  }

  GraphCertificate result() && {
    GraphCertificate out;
    out.certificate = std::move(best_cert_);
    out.nodes = nodes_;
    std::set<Renaming> uniq;
    for (auto& r : seeds_)
      if (!r.is_identity()) uniq.insert(std::move(r));
    // Parallel edges are interchangeable outright: swapping two dummies that
    // join the same attachment points is always a signature stabilizer.
    for (const auto& [ends, dummies] : bundles_) {
      for (std::size_t i = 0; i + 1 < dummies.size(); ++i) {
        std::vector<int> img(g_.dummy_count);
        for (int d = 1; d <= g_.dummy_count; ++d) img[d - 1] = d;
        std::swap(img[dummies[i] - 1], img[dummies[i + 1] - 1]);
        uniq.insert(Renaming(std::move(img)));
      }
    }
    out.seed_renamings.assign(uniq.begin(), uniq.end());
    return out;
  }

 private:
  // Color refinement: rank vertices by (color, sorted edge views) until the
  // coloring stops changing.
  std::vector<int> refine(std::vector<int> colors) const {
    const int n = static_cast<int>(colors.size());
    while (true) {
      std::vector<std::vector<long long>> keys(n);
      for (int v = 0; v < n; ++v) {
        std::vector<std::tuple<int, int, int, int>> views;
        views.reserve(inc_[v].size());
        for (const auto& [own_cls, other_v, other_cls, loop] : inc_[v])
          views.push_back({own_cls, colors[other_v], other_cls, loop ? 1 : 0});
        std::sort(views.begin(), views.end());
        keys[v].push_back(colors[v]);
        for (const auto& [a, b, c, l] : views) {
          keys[v].push_back(a);
          keys[v].push_back(b);
          keys[v].push_back(c);
          keys[v].push_back(l);
        }
      }
      std::vector<std::vector<long long>> palette = keys;
      std::sort(palette.begin(), palette.end());
      palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
      std::vector<int> next(n);
      for (int v = 0; v < n; ++v)
        next[v] = static_cast<int>(
            std::lower_bound(palette.begin(), palette.end(), keys[v]) - palette.begin());
      if (next == colors) return colors;
      colors = std::move(next);
    }
  }

  void search(std::vector<int> colors) {
    if (++nodes_ > limits_.max_orbit_nodes)
      throw ResourceError("graph refinement nodes", nodes_, limits_.max_orbit_nodes);
    colors = refine(std::move(colors));
    const int n = static_cast<int>(colors.size());

    // Find the smallest-color non-singleton cell.
    std::map<int, std::vector<int>> cells;
    for (int v = 0; v < n; ++v) cells[colors[v]].push_back(v);
    const std::vector<int>* branch_cell = nullptr;
    for (const auto& [color, members] : cells)
      if (members.size() > 1) {
        branch_cell = &members;
        break;
      }

    if (!branch_cell) {
      leaf(colors);
      return;
    }
    for (int v : *branch_cell) {
      std::vector<int> child = colors;
      child[v] = n + static_cast<int>(cells.size());  // unique marker, re-ranked by refine
      search(std::move(child));
    }
  }

  void leaf(const std::vector<int>& colors) {
    const int n = static_cast<int>(colors.size());
    // Discrete coloring: order vertices by color.
    std::vector<int> pos(n);  // vertex -> position
    {
      std::vector<std::pair<int, int>> by_color(n);
      for (int v = 0; v < n; ++v) by_color[v] = {colors[v], v};
      std::sort(by_color.begin(), by_color.end());
      for (int p = 0; p < n; ++p) pos[by_color[p].second] = p;
    }

    std::string cert = "V[";
    {
      std::vector<std::string> ordered(n);
      for (int v = 0; v < n; ++v) ordered[pos[v]] = g_.vertices[v].color;
      for (int p = 0; p < n; ++p) {
        if (p) cert += "|";
        cert += ordered[p];
      }
    }
    cert += "];E[";
    {
      std::vector<Ends> mapped;
      mapped.reserve(g_.edges.size());
      for (const auto& e : g_.edges)
        mapped.push_back(normalized_ends(pos[e.v1], e.c1, pos[e.v2], e.c2));
      std::sort(mapped.begin(), mapped.end());
      for (const auto& [a, b, c, d] : mapped)
        cert += "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                "," + std::to_string(d) + ")";
    }
    cert += "]";

    if (best_cert_.empty() || cert < best_cert_) {
      best_cert_ = cert;
      best_pos_ = pos;
    } else if (cert == best_cert_) {
      // Same labeled form twice: positions compose to a graph automorphism,
      // which transports each edge bundle onto an equal-sized image bundle;
      // matching the bundles dummy-by-dummy yields a candidate renaming.
      derive_seed(pos);
    }
  }

  void derive_seed(const std::vector<int>& pos) {
    const int n = static_cast<int>(pos.size());
    std::vector<int> from_pos(n);
    for (int v = 0; v < n; ++v) from_pos[best_pos_[v]] = v;
    std::vector<int> phi(n);  // vertex map of the automorphism
    for (int v = 0; v < n; ++v) phi[v] = from_pos[pos[v]];

    std::vector<int> img(g_.dummy_count, 0);
    for (const auto& [ends, dummies] : bundles_) {
      const auto& [v1, c1, v2, c2] = ends;
      auto it = bundles_.find(normalized_ends(phi[v1], c1, phi[v2], c2));
      if (it == bundles_.end() || it->second.size() != dummies.size()) return;
      for (std::size_t j = 0; j < dummies.size(); ++j) img[dummies[j] - 1] = it->second[j];
    }
    for (int v : img)
      if (v == 0) return;
    try {
      seeds_.push_back(Renaming(std::move(img)));
    } catch (const Error&) {
      // Not a bijection: the leaf pair did not induce a usable renaming.
      // Seeds are best-effort, the search stays correct without this one.
    }
  }

  const MonomialGraph& g_;
  const Limits& limits_;
  // Per vertex: (own slot class, peer vertex, peer slot class, is loop).
  std::vector<std::vector<std::tuple<int, int, int, bool>>> inc_;
  std::map<Ends, std::vector<int>> bundles_;  // normalized ends -> dummies (sorted)

  std::string best_cert_;
  std::vector<int> best_pos_;
  std::vector<Renaming> seeds_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

GraphCertificate canonical_graph_certificate(const MonomialGraph& g, const Limits& limits) {
  return Labeler(g, limits).result();
}

}  // namespace tenscanon
