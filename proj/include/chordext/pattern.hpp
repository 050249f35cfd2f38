#pragma once

//
// ... Standard header files
//
#include <span>
#include <utility>
#include <vector>

//
// ... chordext header files
//
#include <chordext/error.hpp>

namespace chordext {

  using Vertex = int;

  // Sorted ascending, no duplicates.
  using Vertex_set = std::vector<Vertex>;

  using Edge = std::pair<Vertex, Vertex>;

  // A finite symmetric reflexive relation on {0, ..., n-1}.  The diagonal
  // is implicit and never stored; only off-diagonal unordered pairs are
  // kept, normalized so that first < second.
  class Pattern {
  public:
    Pattern() = default;

    // Throws Error(index_out_of_range) for endpoints outside [0, n).
    // Reversed and duplicate pairs are merged; loops are ignored.
    Pattern(int n, std::span<Edge const> edges);

    int
    size() const noexcept { return n_; }

    // True for i == j (the diagonal) and for every stored edge.
    bool
    contains(Vertex i, Vertex j) const;

    bool
    adjacent(Vertex i, Vertex j) const { return i != j && contains(i, j); }

    // Off-diagonal neighbours of v, ascending.
    Vertex_set const&
    neighbors(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }

    // Unordered edges with first < second, lexicographically sorted.
    std::vector<Edge>
    edges() const;

    std::size_t
    edge_count() const noexcept;

    // True when every pair of vertices in `vs` is related.
    bool
    is_clique(std::span<Vertex const> vs) const;

    friend bool
    operator==(Pattern const&, Pattern const&) = default;

  private:
    int n_ = 0;
    std::vector<Vertex_set> adjacency_;
  };

  // Named constructors for common shapes.
  Pattern
  complete_pattern(int n);

  Pattern
  diagonal_pattern(int n);

  // |i - j| <= bandwidth.
  Pattern
  band_pattern(int n, int bandwidth);

  // 0 - 1 - ... - (n-1) - 0.
  Pattern
  cycle_pattern(int n);

  Pattern
  validate_pattern(int n, std::span<Edge const> edges);

  // Position i holds the i-th vertex eliminated.  Each vertex's
  // neighbours that appear later in the order form a clique.
  struct Elimination_order {
    std::vector<Vertex> order;
  };

  // Maximum cardinality search visit order.  Ties go to the highest index,
  // so the reversed visit order lists low indices first.
  std::vector<Vertex>
  maximum_cardinality_search(Pattern const& p);

  bool
  is_perfect_elimination_order(Pattern const& p,
                               std::span<Vertex const> order);

  bool
  is_chordal(Pattern const& p);

  // Throws Error(not_chordal).
  Elimination_order
  perfect_elimination_order(Pattern const& p);

  inline constexpr int max_brute_force_clique_vertices = 20;

  // Inclusion-maximal cliques, each ascending, list sorted
  // lexicographically.  Chordal patterns use the elimination order;
  // other patterns fall back to Bron-Kerbosch, limited to
  // max_brute_force_clique_vertices vertices (Error(too_large) beyond).
  std::vector<Vertex_set>
  maximal_cliques(Pattern const& p);

  struct Clique_tree {
    std::vector<Vertex_set> cliques;
    std::vector<std::pair<int, int>> tree_edges;
    // separators[k] = cliques[a] intersected with cliques[b] for
    // tree_edges[k] = (a, b).
    std::vector<Vertex_set> separators;
  };

  // Maximum-weight spanning tree over clique intersection sizes;
  // disconnected components are joined through empty separators.
  // Throws Error(not_chordal).
  Clique_tree
  clique_tree(Pattern const& p);

  // Checks the structural invariants: tree shape, maximality, edge
  // coverage, separators and the running intersection property.
  bool
  is_valid_clique_tree(Pattern const& p, Clique_tree const& tree);

  inline constexpr int max_chordless_cycle_vertices = 12;

  // Every chordless cycle with 4 <= length <= max_len, rotated to start at
  // its least vertex and oriented so the second vertex is smaller than the
  // last.  Sorted lexicographically.  Throws Error(too_large) past
  // max_chordless_cycle_vertices vertices.
  std::vector<std::vector<Vertex>>
  chordless_cycles(Pattern const& p, int max_len);

  // Greedy partition of the vertex set into cliques: repeatedly remove the
  // lexicographically least maximal clique of what remains.
  std::vector<Vertex_set>
  square_partition(Pattern const& p);

} // end of namespace chordext
