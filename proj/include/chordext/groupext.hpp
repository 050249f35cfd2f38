#pragma once

//
// ... Standard header files
//
#include <map>
#include <optional>
#include <vector>

//
// ... chordext header files
//
#include <chordext/completion.hpp>
#include <chordext/linalg.hpp>
#include <chordext/pattern.hpp>

namespace chordext {

  using Element = int;

  // A finite group given by its multiplication table, table[s][t] = s t.
  class FiniteGroup {
  public:
    using Table = std::vector<std::vector<Element>>;

    FiniteGroup() = default;

    // Validates the table.  Throws Error(malformed_input) for a ragged or
    // out-of-range table, Error(not_latin_square), Error(no_identity),
    // Error(no_inverse) and Error(not_associative).
    FiniteGroup(Table table, Element identity);

    int
    order() const noexcept { return static_cast<int>(table_.size()); }

    Element
    identity() const noexcept { return identity_; }

    Element
    multiply(Element s, Element t) const
    {
      return table_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)];
    }

    Element
    inverse(Element s) const { return inverse_[static_cast<std::size_t>(s)]; }

    Table const&
    table() const noexcept { return table_; }

    std::vector<Element> const&
    inverses() const noexcept { return inverse_; }

  private:
    Table table_;
    Element identity_ = 0;
    std::vector<Element> inverse_;
  };

  FiniteGroup
  validate_group(FiniteGroup::Table table, Element identity);

  // Z_n with identity 0.
  FiniteGroup
  cyclic_group(int n);

  // Symmetries of the regular n-gon, order 2n.  Element r^k s^f is
  // numbered k + n f.
  FiniteGroup
  dihedral_group(int n);

  // (g, h) numbered g * |H| + h.
  FiniteGroup
  direct_product(FiniteGroup const& g, FiniteGroup const& h);

  // Contains the identity and is closed under inversion.
  class SymmetricSubset {
  public:
    SymmetricSubset() = default;

    // Throws Error(index_out_of_range) for non-elements and
    // Error(not_symmetric_subset) when e is missing or some inverse is.
    SymmetricSubset(FiniteGroup const& g, std::vector<Element> members);

    std::vector<Element> const&
    members() const noexcept { return members_; }

    bool
    contains(Element s) const;

  private:
    std::vector<Element> members_;
  };

  // Every symmetric subset containing the identity, members ascending,
  // listed in order of the bitmask over inverse pairs.
  std::vector<SymmetricSubset>
  all_symmetric_subsets(FiniteGroup const& g);

  // Complex values keyed by group element.
  struct GroupFunction {
    std::map<Element, Complex> values;
  };

  // {s, t} is an edge iff t s^-1 lies in E.
  Pattern
  star_pattern(FiniteGroup const& g, SymmetricSubset const& e);

  bool
  is_chordal_subset(FiniteGroup const& g, SymmetricSubset const& e);

  inline constexpr int max_word_oracle_order = 8;

  // Checks the word form of chordality directly: for every n >= 4 and
  // s_1, ..., s_n in E with s_n ... s_1 = e there are i < k with
  // 2 <= k - i <= n - 2 and s_{k-1} ... s_i in E.  A violating word visits
  // n distinct group elements, so lengths up to |G| suffice.  Throws
  // Error(too_large) beyond max_word_oracle_order.
  bool
  word_chordality_oracle(FiniteGroup const& g, SymmetricSubset const& e);

  // The kernel N(u)(s, t) = u(t s^-1) on star_pattern(g, e).  Throws
  // Error(domain_mismatch) unless u is defined exactly on E, and
  // Error(malformed_input) when u(s^-1) != conj(u(s)).
  PartialHermitianMatrix
  n_transform(FiniteGroup const& g, SymmetricSubset const& e, GroupFunction const& u);

  bool
  is_positive_definite_on(FiniteGroup const& g, SymmetricSubset const& e,
                          GroupFunction const& u,
                          std::optional<double> tol = std::nullopt);

  // K(s, t) = v(t s^-1) for v defined on all of G.
  HermitianMatrix
  group_kernel(FiniteGroup const& g, GroupFunction const& v);

  // v(g) = (1/|G|) sum_r M(r, g r), the average of M over simultaneous
  // right translations.  Throws Error(dimension_mismatch).
  GroupFunction
  invariantize(FiniteGroup const& g, HermitianMatrix const& m);

  // Completes N(u) along the clique tree of E*, averages the completion
  // over right translations and reads off v(g) = A(e, g).  Values on E are
  // copied from u.  Throws Error(not_chordal_subset) and
  // Error(not_positive_definite).
  GroupFunction
  positive_definite_extension(FiniteGroup const& g, SymmetricSubset const& e,
                              GroupFunction const& u,
                              std::optional<double> tol = std::nullopt);

} // end of namespace chordext
