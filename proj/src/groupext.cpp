//
// ... Standard header files
//
#include <algorithm>
#include <cmath>
#include <string>

//
// ... chordext header files
//
#include <chordext/groupext.hpp>

namespace chordext {

  namespace {

    std::size_t
    idx(int v) { return static_cast<std::size_t>(v); }

    bool
    is_permutation_of_range(std::vector<Element> const& xs)
    {
      std::vector<bool> seen(xs.size(), false);
      for (auto x : xs) {
        if (seen[idx(x)]) return false;
        seen[idx(x)] = true;
      }
      return true;
    }

    void
    require_hermitian(FiniteGroup const& g, GroupFunction const& u)
    {
      double scale = 0.0;
      for (auto const& [s, value] : u.values) scale = std::max(scale, std::abs(value));
      auto limit = 1e-12 * (1.0 + scale);
      for (auto const& [s, value] : u.values) {
        auto it = u.values.find(g.inverse(s));
        if (it == u.values.end()
            || std::abs(it->second - std::conj(value)) > limit) {
          throw Error(Error_kind::malformed_input,
                      "function is not Hermitian at element " + std::to_string(s));
        }
      }
    }

  } // end of unnamed namespace

  FiniteGroup::FiniteGroup(Table table, Element identity)
    : table_(std::move(table)), identity_(identity)
  {
    auto n = table_.size();
    if (n == 0) {
      throw Error(Error_kind::malformed_input, "group table is empty");
    }
    for (auto const& row : table_) {
      if (row.size() != n) {
        throw Error(Error_kind::malformed_input, "group table is not square");
      }
      for (auto x : row) {
        if (x < 0 || idx(x) >= n) {
          throw Error(Error_kind::malformed_input, "group table entry out of range");
        }
      }
    }

    for (std::size_t s = 0; s < n; ++s) {
      std::vector<Element> column(n);
      for (std::size_t t = 0; t < n; ++t) column[t] = table_[t][s];
      if (!is_permutation_of_range(table_[s]) || !is_permutation_of_range(column)) {
        throw Error(Error_kind::not_latin_square,
                    "row or column " + std::to_string(s) + " repeats an element");
      }
    }

    auto n_int = static_cast<int>(n);
    if (identity_ < 0 || identity_ >= n_int) {
      throw Error(Error_kind::no_identity, "identity index out of range");
    }
    for (Element s = 0; s < n_int; ++s) {
      if (multiply(identity_, s) != s || multiply(s, identity_) != s) {
        throw Error(Error_kind::no_identity,
                    "element " + std::to_string(identity_) + " is not a two-sided identity");
      }
    }

    inverse_.assign(n, -1);
    for (Element s = 0; s < n_int; ++s) {
      for (Element t = 0; t < n_int; ++t) {
        if (multiply(s, t) == identity_ && multiply(t, s) == identity_) {
          inverse_[idx(s)] = t;
          break;
        }
      }
      if (inverse_[idx(s)] < 0) {
        throw Error(Error_kind::no_inverse,
                    "element " + std::to_string(s) + " has no two-sided inverse");
      }
    }

    for (Element a = 0; a < n_int; ++a) {
      for (Element b = 0; b < n_int; ++b) {
        auto ab = multiply(a, b);
        for (Element c = 0; c < n_int; ++c) {
          if (multiply(ab, c) != multiply(a, multiply(b, c))) {
            throw Error(Error_kind::not_associative,
                        "(" + std::to_string(a) + "*" + std::to_string(b) + ")*"
                        + std::to_string(c) + " differs from the other bracketing");
          }
        }
      }
    }
  }

  FiniteGroup
  validate_group(FiniteGroup::Table table, Element identity)
  {
    return FiniteGroup(std::move(table), identity);
  }

  FiniteGroup
  cyclic_group(int n)
  {
    FiniteGroup::Table table(idx(n), std::vector<Element>(idx(n)));
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) table[idx(s)][idx(t)] = (s + t) % n;
    }
    return FiniteGroup(std::move(table), 0);
  }

  FiniteGroup
  dihedral_group(int n)
  {
    auto order = 2 * n;
    FiniteGroup::Table table(idx(order), std::vector<Element>(idx(order)));
    for (int x = 0; x < order; ++x) {
      for (int y = 0; y < order; ++y) {
        auto a = x % n, f = x / n;
        auto b = y % n, g = y / n;
        // r^a s^f r^b s^g = r^(a + (-1)^f b) s^(f + g)
        auto k = ((f == 0 ? a + b : a - b) % n + n) % n;
        table[idx(x)][idx(y)] = k + n * ((f + g) % 2);
      }
    }
    return FiniteGroup(std::move(table), 0);
  }

  FiniteGroup
  direct_product(FiniteGroup const& g, FiniteGroup const& h)
  {
    auto m = h.order();
    auto order = g.order() * m;
    FiniteGroup::Table table(idx(order), std::vector<Element>(idx(order)));
    for (int x = 0; x < order; ++x) {
      for (int y = 0; y < order; ++y) {
        table[idx(x)][idx(y)] = g.multiply(x / m, y / m) * m + h.multiply(x % m, y % m);
      }
    }
    return FiniteGroup(std::move(table), g.identity() * m + h.identity());
  }

  SymmetricSubset::SymmetricSubset(FiniteGroup const& g, std::vector<Element> members)
    : members_(std::move(members))
  {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (auto s : members_) {
      if (s < 0 || s >= g.order()) {
        throw Error(Error_kind::index_out_of_range,
                    "subset member " + std::to_string(s) + " is not a group element");
      }
    }
    if (!contains(g.identity())) {
      throw Error(Error_kind::not_symmetric_subset, "subset misses the identity");
    }
    for (auto s : members_) {
      if (!contains(g.inverse(s))) {
        throw Error(Error_kind::not_symmetric_subset,
                    "subset misses the inverse of " + std::to_string(s));
      }
    }
  }

  bool
  SymmetricSubset::contains(Element s) const
  {
    return std::binary_search(members_.begin(), members_.end(), s);
  }

  std::vector<SymmetricSubset>
  all_symmetric_subsets(FiniteGroup const& g)
  {
    std::vector<std::vector<Element>> orbits;
    std::vector<bool> used(idx(g.order()), false);
    used[idx(g.identity())] = true;
    for (Element s = 0; s < g.order(); ++s) {
      if (used[idx(s)]) continue;
      std::vector<Element> orbit{s};
      used[idx(s)] = true;
      if (!used[idx(g.inverse(s))]) {
        orbit.push_back(g.inverse(s));
        used[idx(g.inverse(s))] = true;
      }
      orbits.push_back(std::move(orbit));
    }

    std::vector<SymmetricSubset> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << orbits.size()); ++mask) {
      std::vector<Element> members{g.identity()};
      for (std::size_t k = 0; k < orbits.size(); ++k) {
        if (mask & (std::size_t{1} << k)) {
          members.insert(members.end(), orbits[k].begin(), orbits[k].end());
        }
      }
      out.emplace_back(g, std::move(members));
    }
    return out;
  }

  Pattern
  star_pattern(FiniteGroup const& g, SymmetricSubset const& e)
  {
    std::vector<Edge> edges;
    for (Element s = 0; s < g.order(); ++s) {
      for (Element t = s + 1; t < g.order(); ++t) {
        if (e.contains(g.multiply(t, g.inverse(s)))) edges.emplace_back(s, t);
      }
    }
    return Pattern(g.order(), edges);
  }

  bool
  is_chordal_subset(FiniteGroup const& g, SymmetricSubset const& e)
  {
    return is_chordal(star_pattern(g, e));
  }

  bool
  word_chordality_oracle(FiniteGroup const& g, SymmetricSubset const& e)
  {
    if (g.order() > max_word_oracle_order) {
      throw Error(Error_kind::too_large,
                  "word oracle is limited to groups of order "
                  + std::to_string(max_word_oracle_order));
    }

    auto const& letters = e.members();
    std::vector<Element> word;  // word[0] = s_1

    // s_{k-1} ... s_i in 1-based positions, i.e. word[k-2] ... word[i-1].
    auto subword = [&](std::size_t i, std::size_t k) {
      auto x = g.identity();
      for (auto p = i; p < k; ++p) x = g.multiply(word[p - 1], x);
      return x;
    };

    // Some s_{k-1} ... s_i in E with lo <= k - i <= hi.
    auto has_chord = [&](std::size_t lo, std::size_t hi) {
      auto n = word.size();
      for (std::size_t len = lo; len <= hi; ++len) {
        for (std::size_t i = 1; i + len <= n + 1; ++i) {
          if (e.contains(subword(i, i + len))) return true;
        }
      }
      return false;
    };

    auto max_len = static_cast<std::size_t>(g.order());
    bool violated = false;

    auto grow = [&](auto&& self) -> void {
      if (violated) return;
      auto n = word.size();
      if (n >= 4 && subword(1, n + 1) == g.identity() && !has_chord(2, n - 2)) {
        violated = true;
        return;
      }
      if (n >= max_len) return;
      // Any subword of length up to n - 1 in E is a chord for every
      // longer word with this prefix.
      if (n >= 3 && has_chord(2, n - 1)) return;
      for (auto s : letters) {
        word.push_back(s);
        self(self);
        word.pop_back();
        if (violated) return;
      }
    };
    grow(grow);
    return !violated;
  }

  PartialHermitianMatrix
  n_transform(FiniteGroup const& g, SymmetricSubset const& e, GroupFunction const& u)
  {
    std::vector<Element> domain;
    for (auto const& [s, value] : u.values) domain.push_back(s);
    if (domain != e.members()) {
      throw Error(Error_kind::domain_mismatch, "function domain differs from E");
    }
    require_hermitian(g, u);

    auto pattern = star_pattern(g, e);
    PartialHermitianMatrix::Block_map blocks;
    auto entry = [](Complex z) {
      Matrix m(1, 1);
      m(0, 0) = z;
      return m;
    };
    for (Element s = 0; s < g.order(); ++s) {
      blocks.emplace(std::pair{s, s}, entry(u.values.at(g.identity())));
    }
    for (auto [s, t] : pattern.edges()) {
      blocks.emplace(std::pair{s, t}, entry(u.values.at(g.multiply(t, g.inverse(s)))));
    }
    return PartialHermitianMatrix(std::move(pattern), 1, std::move(blocks));
  }

  bool
  is_positive_definite_on(FiniteGroup const& g, SymmetricSubset const& e,
                          GroupFunction const& u, std::optional<double> tol)
  {
    return partially_positive(n_transform(g, e, u), tol).positive;
  }

  HermitianMatrix
  group_kernel(FiniteGroup const& g, GroupFunction const& v)
  {
    if (static_cast<int>(v.values.size()) != g.order()) {
      throw Error(Error_kind::domain_mismatch, "function is not defined on all of G");
    }
    HermitianMatrix k(g.order());
    for (Element s = 0; s < g.order(); ++s) {
      for (Element t = s; t < g.order(); ++t) {
        k.set(s, t, v.values.at(g.multiply(t, g.inverse(s))));
      }
    }
    return k;
  }

  GroupFunction
  invariantize(FiniteGroup const& g, HermitianMatrix const& m)
  {
    if (m.size() != g.order()) {
      throw Error(Error_kind::dimension_mismatch,
                  "matrix dimension differs from the group order");
    }
    auto n = g.order();
    GroupFunction v;
    for (Element x = 0; x < n; ++x) {
      auto inv = g.inverse(x);
      if (inv < x) {
        v.values[x] = std::conj(v.values.at(inv));
        continue;
      }
      Complex sum = 0.0;
      for (Element r = 0; r < n; ++r) sum += m(r, g.multiply(x, r));
      auto value = sum / static_cast<double>(n);
      if (inv == x) value = Complex(value.real(), 0.0);
      v.values[x] = value;
    }
    return v;
  }

  GroupFunction
  positive_definite_extension(FiniteGroup const& g, SymmetricSubset const& e,
                              GroupFunction const& u, std::optional<double> tol)
  {
    auto partial = n_transform(g, e, u);
    if (!is_chordal(partial.pattern())) {
      throw Error(Error_kind::not_chordal_subset, "E is not a chordal subset of G");
    }
    if (!partially_positive(partial, tol).positive) {
      throw Error(Error_kind::not_positive_definite,
                  "function is not positive definite on E");
    }

    auto completed = positive_completion(partial, tol);
    auto v = invariantize(g, completed.matrix);
    for (auto const& [s, value] : u.values) v.values[s] = value;
    return v;
  }

} // end of namespace chordext
