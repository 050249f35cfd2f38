#pragma once

//
// ... Standard header files
//
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

//
// ... External header files
//
#include <boost/rational.hpp>

//
// ... chordext header files
//
#include <chordext/error.hpp>

namespace chordext {

  using Rational = boost::rational<std::int64_t>;

  // Accepts "p/q", integers and plain decimals such as "-0.25".  Throws
  // Error(malformed_input).
  Rational
  parse_rational(std::string_view text);

  // "p/q", or "p" when the denominator is 1.
  std::string
  format_rational(Rational const& q);

  // Representative of x modulo 2 in (-1, 1].
  Rational
  reduce_mod_two(Rational const& x);

  // An interval of the line with per-endpoint closedness.
  struct Arc {
    Rational lo;
    Rational hi;
    bool lo_closed = true;
    bool hi_closed = true;

    bool
    contains(Rational const& x) const
    {
      return (lo < x || (lo_closed && lo == x)) && (x < hi || (hi_closed && hi == x));
    }

    friend bool
    operator==(Arc const&, Arc const&) = default;
  };

  // A finite union of intervals and isolated points of the circle group
  // (-1, 1] with addition modulo 2.  Canonical form: intervals lie in
  // (-1, 1], are pairwise disjoint, non-touching and sorted; an interval
  // that crosses the cut point 1 is split into a piece ending at 1 and a
  // piece starting just after -1 (lo = -1, open); points are sorted and
  // lie outside every interval.  Equality compares canonical forms.
  class CircleSet {
  public:
    CircleSet() = default;

    std::vector<Arc> const&
    intervals() const noexcept { return intervals_; }

    std::vector<Rational> const&
    points() const noexcept { return points_; }

    bool
    empty() const noexcept { return intervals_.empty() && points_.empty(); }

    // Membership of x modulo 2.
    bool
    contains(Rational const& x) const;

    friend bool
    operator==(CircleSet const&, CircleSet const&) = default;

    friend CircleSet
    normalize(std::span<Arc const> intervals, std::span<Rational const> points);

  private:
    std::vector<Arc> intervals_;
    std::vector<Rational> points_;
  };

  // Raw intervals [lo, hi] run upward from lo and may exceed (-1, 1]; those
  // of length at least 2 cover the circle.  Throws
  // Error(reversed_endpoints) when lo > hi.
  CircleSet
  normalize(std::span<Arc const> intervals, std::span<Rational const> points);

  CircleSet
  negate(CircleSet const& e);

  // Topological interior and closure on the circle.
  CircleSet
  interior(CircleSet const& e);

  CircleSet
  closure(CircleSet const& e);

  bool
  is_symmetric(CircleSet const& e);

  bool
  is_closure_of_interior(CircleSet const& e);

  bool
  contains_symmetric_neighborhood_of_zero(CircleSet const& e);

  // Whether E* is a positivity domain is the conjunction of the first three
  // fields; generated_by_squares says whether E* is generated by squares.
  struct Positivity_domain_report {
    bool symmetric = false;
    bool contains_zero = false;
    bool closure_of_interior = false;
    bool generated_by_squares = false;
  };

  Positivity_domain_report
  is_positivity_domain_star(CircleSet const& e);

  // {0} united with [t_2n, t_2n-1] and [-t_2n-1, -t_2n] for n = 1..depth.
  // The sequence defaults to t_n = 1/n and needs at least 2 * depth terms,
  // strictly decreasing (Error(not_decreasing)), positive, with t_1 <= 1.
  // At every finite depth 0 is an isolated point, so the result is not the
  // closure of its interior.
  CircleSet
  cexi_truncation(int depth, std::optional<std::vector<Rational>> t = std::nullopt);

} // end of namespace chordext
