//
// ... Standard header files
//
#include <algorithm>

//
// ... chordext header files
//
#include <chordext/random.hpp>

namespace chordext {

  Pattern
  random_chordal_pattern(Rng& rng, int n)
  {
    if (n <= 0) return Pattern(0, {});

    std::uniform_int_distribution<int> tree_size_dist(1, std::max(1, n));
    auto k = tree_size_dist(rng);
    std::vector<std::vector<int>> tree(static_cast<std::size_t>(k));
    for (int node = 1; node < k; ++node) {
      auto parent = std::uniform_int_distribution<int>(0, node - 1)(rng);
      tree[static_cast<std::size_t>(node)].push_back(parent);
      tree[static_cast<std::size_t>(parent)].push_back(node);
    }

    // Each vertex owns a connected set of tree nodes grown from a random
    // seed node.
    std::vector<std::vector<bool>> owned(static_cast<std::size_t>(n),
                                         std::vector<bool>(static_cast<std::size_t>(k), false));
    for (auto& mine : owned) {
      auto target = std::uniform_int_distribution<int>(1, k)(rng);
      std::vector<int> frontier{std::uniform_int_distribution<int>(0, k - 1)(rng)};
      mine[static_cast<std::size_t>(frontier.front())] = true;
      int grown = 1;
      while (grown < target) {
        std::vector<int> options;
        for (int node = 0; node < k; ++node) {
          if (!mine[static_cast<std::size_t>(node)]) continue;
          for (auto next : tree[static_cast<std::size_t>(node)]) {
            if (!mine[static_cast<std::size_t>(next)]) options.push_back(next);
          }
        }
        if (options.empty()) break;
        auto pick = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
        mine[static_cast<std::size_t>(pick)] = true;
        ++grown;
      }
    }

    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int node = 0; node < k; ++node) {
          if (owned[static_cast<std::size_t>(i)][static_cast<std::size_t>(node)]
              && owned[static_cast<std::size_t>(j)][static_cast<std::size_t>(node)]) {
            edges.emplace_back(i, j);
            break;
          }
        }
      }
    }
    return Pattern(n, edges);
  }

  Pattern
  random_pattern(Rng& rng, int n, double p)
  {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (coin(rng)) edges.emplace_back(i, j);
      }
    }
    return Pattern(n, edges);
  }

  HermitianMatrix
  random_psd(Rng& rng, int n, int rank, bool complex_entries)
  {
    std::normal_distribution<double> normal;
    Matrix b(n, rank);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < rank; ++k) {
        b(i, k) = Complex(normal(rng), complex_entries ? normal(rng) : 0.0);
      }
    }
    auto product = b * b.adjoint();
    HermitianMatrix out(n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) out.set(i, j, product(i, j));
    }
    return out;
  }

  HermitianMatrix
  random_psd_on(Rng& rng, Pattern const& p, bool complex_entries)
  {
    HermitianMatrix out(p.size());
    for (auto const& clique : maximal_cliques(p)) {
      auto k = static_cast<int>(clique.size());
      auto rank = std::uniform_int_distribution<int>(1, k)(rng);
      auto part = random_psd(rng, k, rank, complex_entries);
      for (int a = 0; a < k; ++a) {
        for (int b = a; b < k; ++b) {
          auto i = clique[static_cast<std::size_t>(a)];
          auto j = clique[static_cast<std::size_t>(b)];
          out.set(i, j, out(i, j) + part(a, b));
        }
      }
    }
    return out;
  }

} // end of namespace chordext
