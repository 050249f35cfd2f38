//
// ... Standard header files
//
#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

//
// ... chordext header files
//
#include <chordext/completion.hpp>

namespace chordext {

  namespace {

    std::size_t
    idx(int v) { return static_cast<std::size_t>(v); }

    std::string
    describe(Vertex_set const& vs)
    {
      std::string s = "{";
      for (std::size_t k = 0; k < vs.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(vs[k]);
      }
      return s + "}";
    }

    // Breadth-first traversal of the clique tree from clique 0.
    struct Tree_walk {
      std::vector<int> order;           // cliques in visiting order
      std::vector<int> parent;          // -1 for the root
      std::vector<int> parent_edge;     // index into tree_edges
    };

    Tree_walk
    walk(Clique_tree const& tree)
    {
      auto k = tree.cliques.size();
      std::vector<std::vector<std::pair<int, int>>> adjacent(k);
      for (std::size_t e = 0; e < tree.tree_edges.size(); ++e) {
        auto [a, b] = tree.tree_edges[e];
        adjacent[idx(a)].emplace_back(b, static_cast<int>(e));
        adjacent[idx(b)].emplace_back(a, static_cast<int>(e));
      }
      for (auto& list : adjacent) std::sort(list.begin(), list.end());

      Tree_walk w;
      w.parent.assign(k, -1);
      w.parent_edge.assign(k, -1);
      if (k == 0) return w;

      std::vector<bool> seen(k, false);
      std::queue<int> queue;
      queue.push(0);
      seen[0] = true;
      while (!queue.empty()) {
        auto c = queue.front();
        queue.pop();
        w.order.push_back(c);
        for (auto [next, e] : adjacent[idx(c)]) {
          if (seen[idx(next)]) continue;
          seen[idx(next)] = true;
          w.parent[idx(next)] = c;
          w.parent_edge[idx(next)] = e;
          queue.push(next);
        }
      }
      return w;
    }

    void
    require_supported(HermitianMatrix const& t, Pattern const& p)
    {
      auto limit = 1e-10 * t.max_abs();
      for (int i = 0; i < t.size(); ++i) {
        for (int j = i + 1; j < t.size(); ++j) {
          if (!p.contains(i, j) && std::abs(t(i, j)) > limit) {
            throw Error(Error_kind::not_supported,
                        "matrix entry (" + std::to_string(i) + ","
                        + std::to_string(j) + ") lies outside the pattern");
          }
        }
      }
    }

    Vertex_set
    difference(Vertex_set const& a, Vertex_set const& b)
    {
      Vertex_set out;
      std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
      return out;
    }

    // Rank-one terms of a PSD matrix living on `indices` of an n-vector.
    // Eigenvalues at or below `drop` (including round-off negatives) are
    // discarded.
    void
    append_clique_factors(HermitianMatrix const& part, Vertex_set const& indices,
                          int n, double drop, std::vector<RankOneFactor>& out)
    {
      if (part.size() == 0) return;
      auto eig = eigh(part);
      for (int k = part.size() - 1; k >= 0; --k) {
        auto lambda = eig.values[idx(k)];
        if (lambda <= drop) break;
        auto root = std::sqrt(lambda);
        std::vector<Complex> v(idx(n));
        for (std::size_t a = 0; a < indices.size(); ++a) {
          v[idx(indices[a])] = root * eig.vectors(static_cast<int>(a), k);
        }
        out.push_back(make_factor(std::move(v)));
      }
    }

  } // end of unnamed namespace

  PartialHermitianMatrix::PartialHermitianMatrix(Pattern pattern, int block_size,
                                                 Block_map blocks)
    : pattern_(std::move(pattern)), d_(block_size)
  {
    if (d_ < 1) {
      throw Error(Error_kind::malformed_input, "block size must be at least 1");
    }
    for (auto& [key, block] : blocks) {
      auto [i, j] = key;
      if (i > j) {
        throw Error(Error_kind::malformed_input, "blocks are keyed with i <= j");
      }
      if (!pattern_.contains(i, j)) {
        throw Error(Error_kind::malformed_input,
                    "block (" + std::to_string(i) + "," + std::to_string(j)
                    + ") lies outside the pattern");
      }
      if (block.rows() != d_ || block.cols() != d_) {
        throw Error(Error_kind::dimension_mismatch,
                    "block (" + std::to_string(i) + "," + std::to_string(j)
                    + ") is not " + std::to_string(d_) + "x" + std::to_string(d_));
      }
      if (i == j) {
        // Diagonal blocks are stored exactly Hermitian.
        block = HermitianMatrix(block).matrix();
      }
      blocks_.emplace(key, std::move(block));
    }
    for (int i = 0; i < pattern_.size(); ++i) {
      if (!blocks_.contains({i, i})) {
        throw Error(Error_kind::malformed_input,
                    "missing diagonal block " + std::to_string(i));
      }
    }
    for (auto [i, j] : pattern_.edges()) {
      if (!blocks_.contains({i, j})) {
        throw Error(Error_kind::malformed_input,
                    "missing block (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }

  PartialHermitianMatrix
  PartialHermitianMatrix::restrict(HermitianMatrix const& full, Pattern pattern,
                                   int block_size)
  {
    if (full.size() != pattern.size() * block_size) {
      throw Error(Error_kind::dimension_mismatch,
                  "matrix dimension differs from n * d");
    }
    Block_map blocks;
    std::vector<int> rows(idx(block_size));
    std::vector<int> cols(idx(block_size));
    auto take = [&](int i, int j) {
      for (int a = 0; a < block_size; ++a) {
        rows[idx(a)] = i * block_size + a;
        cols[idx(a)] = j * block_size + a;
      }
      blocks.emplace(std::pair{i, j}, full.matrix().submatrix(rows, cols));
    };
    for (int i = 0; i < pattern.size(); ++i) take(i, i);
    for (auto [i, j] : pattern.edges()) take(i, j);
    return PartialHermitianMatrix(std::move(pattern), block_size, std::move(blocks));
  }

  Matrix
  PartialHermitianMatrix::block(int i, int j) const
  {
    if (!pattern_.contains(i, j)) {
      throw Error(Error_kind::not_supported,
                  "block (" + std::to_string(i) + "," + std::to_string(j)
                  + ") is not specified");
    }
    if (i <= j) return blocks_.at({i, j});
    return blocks_.at({j, i}).adjoint();
  }

  bool
  PartialHermitianMatrix::specified(int r, int c) const
  {
    return pattern_.contains(r / d_, c / d_);
  }

  Complex
  PartialHermitianMatrix::entry(int r, int c) const
  {
    auto i = r / d_;
    auto j = c / d_;
    if (!pattern_.contains(i, j)) {
      throw Error(Error_kind::not_supported, "entry is not specified");
    }
    if (i <= j) return blocks_.at({i, j})(r % d_, c % d_);
    return std::conj(blocks_.at({j, i})(c % d_, r % d_));
  }

  std::vector<int>
  PartialHermitianMatrix::expand(std::span<Vertex const> vertices) const
  {
    std::vector<int> out;
    out.reserve(vertices.size() * idx(d_));
    for (auto v : vertices) {
      for (int a = 0; a < d_; ++a) out.push_back(v * d_ + a);
    }
    return out;
  }

  HermitianMatrix
  PartialHermitianMatrix::principal(Vertex_set const& clique) const
  {
    auto scalar = expand(clique);
    HermitianMatrix h(static_cast<int>(scalar.size()));
    for (std::size_t a = 0; a < scalar.size(); ++a) {
      for (std::size_t b = a; b < scalar.size(); ++b) {
        h.set(static_cast<int>(a), static_cast<int>(b), entry(scalar[a], scalar[b]));
      }
    }
    return h;
  }

  Partial_positivity
  partially_positive(PartialHermitianMatrix const& m, std::optional<double> tol)
  {
    for (auto const& clique : maximal_cliques(m.pattern())) {
      if (!is_psd(m.principal(clique), tol)) {
        return {false, clique};
      }
    }
    return {true, std::nullopt};
  }

  CompletionResult
  positive_completion(PartialHermitianMatrix const& m, std::optional<double> tol)
  {
    auto const& p = m.pattern();
    if (!is_chordal(p)) {
      throw Error(Error_kind::not_chordal, "completion needs a chordal pattern");
    }
    if (auto check = partially_positive(m, tol); !check.positive) {
      throw Error(Error_kind::not_partially_positive,
                  "clique " + describe(*check.witness) + " is not PSD");
    }

    auto d = m.block_size();
    CompletionResult result{HermitianMatrix(m.dimension()), {}};
    auto& full = result.matrix;
    for (auto const& [key, block] : m.blocks()) {
      auto [i, j] = key;
      for (int a = 0; a < d; ++a) {
        for (int b = (i == j ? a : 0); b < d; ++b) {
          full.set(i * d + a, j * d + b, block(a, b));
        }
      }
    }

    auto tree = clique_tree(p);
    auto w = walk(tree);
    std::vector<bool> processed(idx(p.size()), false);
    if (!w.order.empty()) {
      for (auto v : tree.cliques[idx(w.order.front())]) processed[idx(v)] = true;
    }

    for (std::size_t step = 1; step < w.order.size(); ++step) {
      auto c = w.order[step];
      auto const& clique = tree.cliques[idx(c)];
      auto const& sep = tree.separators[idx(w.parent_edge[idx(c)])];

      auto fresh = difference(clique, sep);
      Vertex_set old;
      for (Vertex v = 0; v < p.size(); ++v) {
        if (processed[idx(v)] && !std::binary_search(sep.begin(), sep.end(), v)) {
          old.push_back(v);
        }
      }

      auto old_idx = m.expand(old);
      auto sep_idx = m.expand(sep);
      auto fresh_idx = m.expand(fresh);

      Matrix fill(static_cast<int>(old_idx.size()), static_cast<int>(fresh_idx.size()));
      if (!sep.empty() && !old.empty()) {
        auto const& cur = full.matrix();
        fill = cur.submatrix(old_idx, sep_idx)
             * pseudo_inverse(full.principal(sep_idx)).matrix()
             * cur.submatrix(sep_idx, fresh_idx);
      }

      for (std::size_t a = 0; a < old.size(); ++a) {
        for (std::size_t b = 0; b < fresh.size(); ++b) {
          auto u = old[a];
          auto v = fresh[b];
          if (p.contains(u, v)) continue;
          for (int x = 0; x < d; ++x) {
            for (int y = 0; y < d; ++y) {
              full.set(u * d + x, v * d + y,
                       fill(static_cast<int>(a) * d + x, static_cast<int>(b) * d + y));
            }
          }
          result.fill_log.push_back({sep, std::min(u, v), std::max(u, v)});
        }
      }
      for (auto v : fresh) processed[idx(v)] = true;
    }

    if (!is_psd(full, tol)) {
      throw Error(Error_kind::no_completion,
                  "assembled completion failed the PSD check");
    }
    return result;
  }

  CompletionResult
  positive_extension_multiplier(PartialHermitianMatrix const& m,
                                std::optional<double> tol)
  {
    return positive_completion(m, tol);
  }

  std::vector<RankOneFactor>
  rank_one_positive_decomposition(HermitianMatrix const& t, Pattern const& p,
                                  std::optional<double> tol)
  {
    if (t.size() != p.size()) {
      throw Error(Error_kind::dimension_mismatch,
                  "matrix and pattern sizes differ");
    }
    if (!is_chordal(p)) {
      throw Error(Error_kind::not_chordal, "decomposition needs a chordal pattern");
    }
    if (!is_psd(t, tol)) {
      throw Error(Error_kind::not_psd, "matrix is not PSD");
    }
    require_supported(t, p);

    auto n = t.size();
    auto drop = 1e-12 * (1.0 + t.max_abs());

    HermitianMatrix work(n);
    for (int i = 0; i < n; ++i) {
      work.set(i, i, t(i, i));
      for (auto j : p.neighbors(i)) {
        if (i < j) work.set(i, j, t(i, j));
      }
    }

    std::vector<RankOneFactor> factors;
    auto tree = clique_tree(p);
    auto w = walk(tree);

    for (auto it = w.order.rbegin(); it != w.order.rend(); ++it) {
      auto c = *it;
      auto const& clique = tree.cliques[idx(c)];
      if (w.parent[idx(c)] < 0) {
        append_clique_factors(work.principal(clique), clique, n, drop, factors);
        continue;
      }

      auto const& sep = tree.separators[idx(w.parent_edge[idx(c)])];
      auto own = difference(clique, sep);

      // Split off R = [T_uu, T_us; T_su, T_su T_uu^+ T_us] on the clique;
      // what is left on the separator is a Schur complement, still PSD.
      auto const& cur = work.matrix();
      auto t_us = cur.submatrix(own, sep);
      auto correction = t_us.adjoint() * pseudo_inverse(work.principal(own)).matrix() * t_us;

      auto order = own;
      order.insert(order.end(), sep.begin(), sep.end());
      HermitianMatrix part(static_cast<int>(order.size()));
      auto k_own = static_cast<int>(own.size());
      for (int a = 0; a < part.size(); ++a) {
        for (int b = a; b < part.size(); ++b) {
          if (b < k_own || a < k_own) {
            part.set(a, b, cur(order[idx(a)], order[idx(b)]));
          } else {
            part.set(a, b, correction(a - k_own, b - k_own));
          }
        }
      }
      append_clique_factors(part, order, n, drop, factors);

      for (auto u : own) {
        for (int j = 0; j < n; ++j) work.set(u, j, 0.0);
      }
      for (std::size_t a = 0; a < sep.size(); ++a) {
        for (std::size_t b = a; b < sep.size(); ++b) {
          auto i = sep[a];
          auto j = sep[b];
          work.set(i, j, work(i, j)
                   - correction(static_cast<int>(a), static_cast<int>(b)));
        }
      }
    }
    return factors;
  }

  HermitianMatrix
  apply_multiplier(PartialHermitianMatrix const& m, HermitianMatrix const& t)
  {
    if (t.size() != m.size()) {
      throw Error(Error_kind::dimension_mismatch,
                  "matrix size differs from the multiplier's index set");
    }
    require_supported(t, m.pattern());

    auto d = m.block_size();
    HermitianMatrix out(m.dimension());
    for (auto const& [key, block] : m.blocks()) {
      auto [i, j] = key;
      auto scale = t(i, j);
      for (int a = 0; a < d; ++a) {
        for (int b = (i == j ? a : 0); b < d; ++b) {
          out.set(i * d + a, j * d + b, scale * block(a, b));
        }
      }
    }
    return out;
  }

  double
  cb_norm_positive(HermitianMatrix const& phi, int block_size, std::optional<double> tol)
  {
    if (block_size < 1 || phi.size() % block_size != 0) {
      throw Error(Error_kind::dimension_mismatch,
                  "matrix dimension is not a multiple of the block size");
    }
    if (!is_psd(phi, tol)) {
      throw Error(Error_kind::not_psd, "multiplier is not positive");
    }
    double norm = 0.0;
    std::vector<int> indices(idx(block_size));
    for (int i = 0; i < phi.size() / block_size; ++i) {
      if (block_size == 1) {
        norm = std::max(norm, phi(i, i).real());
        continue;
      }
      for (int a = 0; a < block_size; ++a) indices[idx(a)] = i * block_size + a;
      norm = std::max(norm, eigh(phi.principal(indices)).values.back());
    }
    return norm;
  }

  bool
  verify_extension(PartialHermitianMatrix const& m, HermitianMatrix const& phi,
                   std::optional<double> tol)
  {
    if (phi.size() != m.dimension()) return false;
    for (int r = 0; r < phi.size(); ++r) {
      for (int c = r; c < phi.size(); ++c) {
        if (m.specified(r, c) && phi(r, c) != m.entry(r, c)) return false;
      }
    }
    return is_psd(phi, tol);
  }

} // end of namespace chordext
