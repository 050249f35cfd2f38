//
// ... Standard header files
//
#include <algorithm>
#include <numeric>
#include <string>

//
// ... chordext header files
//
#include <chordext/pattern.hpp>

namespace chordext {

  namespace {

    std::size_t
    idx(Vertex v) { return static_cast<std::size_t>(v); }

    bool
    is_subset(Vertex_set const& a, Vertex_set const& b)
    {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    }

    Vertex_set
    intersection(Vertex_set const& a, Vertex_set const& b)
    {
      Vertex_set out;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(out));
      return out;
    }

    struct Disjoint_sets {
      explicit Disjoint_sets(std::size_t n) : parent(n)
      {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
      }

      std::size_t
      find(std::size_t x)
      {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x = parent[x];
        }
        return x;
      }

      bool
      unite(std::size_t a, std::size_t b)
      {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
      }

      std::vector<std::size_t> parent;
    };

    void
    bron_kerbosch(Pattern const& p, Vertex_set& r, Vertex_set candidates,
                  Vertex_set excluded, std::vector<Vertex_set>& out)
    {
      if (candidates.empty() && excluded.empty()) {
        auto clique = r;
        std::sort(clique.begin(), clique.end());
        out.push_back(std::move(clique));
        return;
      }

      // Pivot on the vertex with the most neighbours among the candidates.
      Vertex pivot = candidates.empty() ? excluded.front() : candidates.front();
      std::size_t best = 0;
      for (auto const* group : {&candidates, &excluded}) {
        for (auto u : *group) {
          auto k = intersection(p.neighbors(u), candidates).size();
          if (k > best) {
            best = k;
            pivot = u;
          }
        }
      }

      Vertex_set branch;
      std::set_difference(candidates.begin(), candidates.end(),
                          p.neighbors(pivot).begin(), p.neighbors(pivot).end(),
                          std::back_inserter(branch));
      for (auto v : branch) {
        auto const& nv = p.neighbors(v);
        r.push_back(v);
        bron_kerbosch(p, r, intersection(candidates, nv),
                      intersection(excluded, nv), out);
        r.pop_back();
        candidates.erase(std::find(candidates.begin(), candidates.end(), v));
        excluded.insert(std::lower_bound(excluded.begin(), excluded.end(), v), v);
      }
    }

    std::vector<Vertex_set>
    cliques_from_elimination_order(Pattern const& p,
                                   std::span<Vertex const> order)
    {
      std::vector<int> position(idx(p.size()));
      for (std::size_t k = 0; k < order.size(); ++k) {
        position[idx(order[k])] = static_cast<int>(k);
      }

      std::vector<Vertex_set> candidates;
      candidates.reserve(order.size());
      for (auto v : order) {
        Vertex_set c{v};
        for (auto w : p.neighbors(v)) {
          if (position[idx(w)] > position[idx(v)]) c.push_back(w);
        }
        std::sort(c.begin(), c.end());
        candidates.push_back(std::move(c));
      }

      // Larger candidates first so containment only needs a backward look.
      std::sort(candidates.begin(), candidates.end(),
        [](Vertex_set const& a, Vertex_set const& b) {
          return a.size() != b.size() ? a.size() > b.size() : a < b;
        });

      std::vector<Vertex_set> maximal;
      for (auto& c : candidates) {
        bool contained = std::any_of(maximal.begin(), maximal.end(),
          [&c](Vertex_set const& m) { return is_subset(c, m); });
        if (!contained) maximal.push_back(std::move(c));
      }
      std::sort(maximal.begin(), maximal.end());
      return maximal;
    }

  } // end of unnamed namespace

  Pattern::Pattern(int n, std::span<Edge const> edges)
    : n_(n)
  {
    if (n < 0) {
      throw Error(Error_kind::index_out_of_range,
                  "pattern size must be non-negative");
    }
    adjacency_.resize(idx(n));
    for (auto [i, j] : edges) {
      if (i < 0 || j < 0 || i >= n || j >= n) {
        throw Error(Error_kind::index_out_of_range,
                    "edge (" + std::to_string(i) + "," + std::to_string(j)
                    + ") outside [0," + std::to_string(n) + ")");
      }
      if (i == j) continue;
      adjacency_[idx(i)].push_back(j);
      adjacency_[idx(j)].push_back(i);
    }
    for (auto& nbrs : adjacency_) {
      std::sort(nbrs.begin(), nbrs.end());
      nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
  }

  bool
  Pattern::contains(Vertex i, Vertex j) const
  {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) return false;
    if (i == j) return true;
    auto const& nbrs = adjacency_[idx(i)];
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
  }

  std::vector<Edge>
  Pattern::edges() const
  {
    std::vector<Edge> out;
    for (Vertex i = 0; i < n_; ++i) {
      for (auto j : adjacency_[idx(i)]) {
        if (i < j) out.emplace_back(i, j);
      }
    }
    return out;
  }

  std::size_t
  Pattern::edge_count() const noexcept
  {
    std::size_t total = 0;
    for (auto const& nbrs : adjacency_) total += nbrs.size();
    return total / 2;
  }

  bool
  Pattern::is_clique(std::span<Vertex const> vs) const
  {
    for (std::size_t a = 0; a < vs.size(); ++a) {
      for (std::size_t b = a + 1; b < vs.size(); ++b) {
        if (!contains(vs[a], vs[b])) return false;
      }
    }
    return true;
  }

  Pattern
  complete_pattern(int n)
  {
    return band_pattern(n, std::max(n - 1, 0));
  }

  Pattern
  diagonal_pattern(int n)
  {
    return Pattern(n, {});
  }

  Pattern
  band_pattern(int n, int bandwidth)
  {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) {
      for (Vertex j = i + 1; j < n && j - i <= bandwidth; ++j) {
        edges.emplace_back(i, j);
      }
    }
    return Pattern(n, edges);
  }

  Pattern
  cycle_pattern(int n)
  {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Pattern(n, edges);
  }

  Pattern
  validate_pattern(int n, std::span<Edge const> edges)
  {
    return Pattern(n, edges);
  }

  std::vector<Vertex>
  maximum_cardinality_search(Pattern const& p)
  {
    auto n = p.size();
    std::vector<int> weight(idx(n), 0);
    std::vector<bool> visited(idx(n), false);
    std::vector<Vertex> visit;
    visit.reserve(idx(n));

    for (int step = 0; step < n; ++step) {
      Vertex pick = -1;
      for (Vertex v = n - 1; v >= 0; --v) {
        if (visited[idx(v)]) continue;
        if (pick < 0 || weight[idx(v)] > weight[idx(pick)]) pick = v;
      }
      visited[idx(pick)] = true;
      visit.push_back(pick);
      for (auto w : p.neighbors(pick)) {
        if (!visited[idx(w)]) ++weight[idx(w)];
      }
    }
    return visit;
  }

  bool
  is_perfect_elimination_order(Pattern const& p, std::span<Vertex const> order)
  {
    auto n = p.size();
    if (static_cast<int>(order.size()) != n) return false;

    std::vector<int> position(idx(n), -1);
    for (std::size_t k = 0; k < order.size(); ++k) {
      auto v = order[k];
      if (v < 0 || v >= n || position[idx(v)] >= 0) return false;
      position[idx(v)] = static_cast<int>(k);
    }

    Vertex_set later;
    for (Vertex v = 0; v < n; ++v) {
      later.clear();
      for (auto w : p.neighbors(v)) {
        if (position[idx(w)] > position[idx(v)]) later.push_back(w);
      }
      if (!p.is_clique(later)) return false;
    }
    return true;
  }

  bool
  is_chordal(Pattern const& p)
  {
    auto order = maximum_cardinality_search(p);
    std::reverse(order.begin(), order.end());
    return is_perfect_elimination_order(p, order);
  }

  Elimination_order
  perfect_elimination_order(Pattern const& p)
  {
    auto order = maximum_cardinality_search(p);
    std::reverse(order.begin(), order.end());
    if (!is_perfect_elimination_order(p, order)) {
      throw Error(Error_kind::not_chordal,
                  "pattern has no perfect elimination order");
    }
    return Elimination_order{std::move(order)};
  }

  std::vector<Vertex_set>
  maximal_cliques(Pattern const& p)
  {
    auto order = maximum_cardinality_search(p);
    std::reverse(order.begin(), order.end());
    if (is_perfect_elimination_order(p, order)) {
      return cliques_from_elimination_order(p, order);
    }

    if (p.size() > max_brute_force_clique_vertices) {
      throw Error(Error_kind::too_large,
                  "clique enumeration on a non-chordal pattern is limited to "
                  + std::to_string(max_brute_force_clique_vertices)
                  + " vertices");
    }
    Vertex_set all(idx(p.size()));
    std::iota(all.begin(), all.end(), 0);
    Vertex_set r;
    std::vector<Vertex_set> out;
    bron_kerbosch(p, r, all, {}, out);
    std::sort(out.begin(), out.end());
    return out;
  }

  Clique_tree
  clique_tree(Pattern const& p)
  {
    if (!is_chordal(p)) {
      throw Error(Error_kind::not_chordal, "clique tree needs a chordal pattern");
    }

    Clique_tree tree;
    tree.cliques = maximal_cliques(p);
    auto k = tree.cliques.size();

    struct Candidate {
      std::size_t weight;
      int a;
      int b;
    };
    std::vector<Candidate> candidates;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        candidates.push_back({intersection(tree.cliques[a], tree.cliques[b]).size(),
                              static_cast<int>(a), static_cast<int>(b)});
      }
    }
    std::stable_sort(candidates.begin(), candidates.end(),
      [](Candidate const& x, Candidate const& y) { return x.weight > y.weight; });

    Disjoint_sets components(k);
    for (auto const& c : candidates) {
      if (tree.tree_edges.size() + 1 >= k) break;
      if (components.unite(idx(c.a), idx(c.b))) {
        tree.tree_edges.emplace_back(c.a, c.b);
        tree.separators.push_back(
          intersection(tree.cliques[idx(c.a)], tree.cliques[idx(c.b)]));
      }
    }
    return tree;
  }

  bool
  is_valid_clique_tree(Pattern const& p, Clique_tree const& tree)
  {
    auto k = tree.cliques.size();
    if (p.size() > 0 && k == 0) return false;
    if (k > 0 && tree.tree_edges.size() != k - 1) return false;
    if (tree.separators.size() != tree.tree_edges.size()) return false;

    for (std::size_t a = 0; a < k; ++a) {
      if (!p.is_clique(tree.cliques[a])) return false;
      for (std::size_t b = 0; b < k; ++b) {
        if (a != b && is_subset(tree.cliques[a], tree.cliques[b])) return false;
      }
    }
    for (auto [i, j] : p.edges()) {
      bool covered = std::any_of(tree.cliques.begin(), tree.cliques.end(),
        [i, j](Vertex_set const& c) {
          return std::binary_search(c.begin(), c.end(), i)
              && std::binary_search(c.begin(), c.end(), j);
        });
      if (!covered) return false;
    }
    for (Vertex v = 0; v < p.size(); ++v) {
      bool covered = std::any_of(tree.cliques.begin(), tree.cliques.end(),
        [v](Vertex_set const& c) { return std::binary_search(c.begin(), c.end(), v); });
      if (!covered) return false;
    }

    Disjoint_sets components(k);
    for (std::size_t e = 0; e < tree.tree_edges.size(); ++e) {
      auto [a, b] = tree.tree_edges[e];
      if (a < 0 || b < 0 || idx(a) >= k || idx(b) >= k) return false;
      if (!components.unite(idx(a), idx(b))) return false;
      if (tree.separators[e] != intersection(tree.cliques[idx(a)], tree.cliques[idx(b)])) {
        return false;
      }
    }

    // In a tree, the nodes holding v induce a subtree exactly when the
    // number of edges between them is one less than their count.
    for (Vertex v = 0; v < p.size(); ++v) {
      std::size_t holders = 0;
      for (auto const& c : tree.cliques) {
        holders += std::binary_search(c.begin(), c.end(), v) ? 1 : 0;
      }
      std::size_t links = 0;
      for (auto const& s : tree.separators) {
        links += std::binary_search(s.begin(), s.end(), v) ? 1 : 0;
      }
      if (links + 1 != holders) return false;
    }
    return true;
  }

  std::vector<std::vector<Vertex>>
  chordless_cycles(Pattern const& p, int max_len)
  {
    auto n = p.size();
    if (n > max_chordless_cycle_vertices) {
      throw Error(Error_kind::too_large,
                  "chordless cycle enumeration is limited to "
                  + std::to_string(max_chordless_cycle_vertices) + " vertices");
    }

    std::vector<std::vector<Vertex>> out;
    if (max_len < 4) return out;

    std::vector<Vertex> path;
    std::vector<bool> on_path(idx(n), false);

    // Grow induced paths from `start` through vertices larger than it.
    // The path stays chordless as long as a new vertex touches only the
    // current end and, possibly, the start (which closes the cycle).
    auto extend = [&](auto&& self, Vertex start) -> void {
      auto end = path.back();
      for (auto w : p.neighbors(end)) {
        if (w <= start || on_path[idx(w)]) continue;

        bool touches_interior = false;
        for (std::size_t k = 1; k + 1 < path.size(); ++k) {
          if (p.adjacent(w, path[k])) {
            touches_interior = true;
            break;
          }
        }
        if (touches_interior) continue;

        auto length = static_cast<int>(path.size()) + 1;
        if (path.size() >= 2 && p.adjacent(w, start)) {
          if (length >= 4 && w > path[1]) {
            auto cycle = path;
            cycle.push_back(w);
            out.push_back(std::move(cycle));
          }
          continue;
        }
        if (length >= max_len) continue;

        path.push_back(w);
        on_path[idx(w)] = true;
        self(self, start);
        on_path[idx(w)] = false;
        path.pop_back();
      }
    };

    for (Vertex start = 0; start < n; ++start) {
      path.assign(1, start);
      on_path[idx(start)] = true;
      extend(extend, start);
      on_path[idx(start)] = false;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Vertex_set>
  square_partition(Pattern const& p)
  {
    std::vector<bool> taken(idx(p.size()), false);
    std::vector<Vertex_set> blocks;

    // The greedy choice of the least admissible vertex at every step
    // yields the lexicographically least maximal clique of the remainder.
    for (Vertex seed = 0; seed < p.size(); ++seed) {
      if (taken[idx(seed)]) continue;
      Vertex_set block{seed};
      for (Vertex w = seed + 1; w < p.size(); ++w) {
        if (taken[idx(w)]) continue;
        bool joins = std::all_of(block.begin(), block.end(),
          [&p, w](Vertex u) { return p.adjacent(u, w); });
        if (joins) block.push_back(w);
      }
      for (auto v : block) taken[idx(v)] = true;
      blocks.push_back(std::move(block));
    }
    return blocks;
  }

} // end of namespace chordext
