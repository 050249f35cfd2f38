//
// ... Standard header files
//
#include <algorithm>
#include <charconv>
#include <tuple>

//
// ... chordext header files
//
#include <chordext/circleset.hpp>

namespace chordext {

  namespace {

    Rational const minus_one{-1};
    Rational const one{1};
    Rational const two{2};

    std::int64_t
    floor_of(Rational const& q)
    {
      auto n = q.numerator();
      auto d = q.denominator();
      return n >= 0 ? n / d : -((-n + d - 1) / d);
    }

    std::int64_t
    parse_integer(std::string_view text)
    {
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw Error(Error_kind::malformed_input,
                    "not an integer: \"" + std::string(text) + "\"");
      }
      return value;
    }

    // Sets of the line, the scratch space for all circle computations.
    struct Line_set {
      std::vector<Arc> arcs;
      std::vector<Rational> points;
    };

    // Sorted, merged, with points absorbed; degenerate closed arcs become
    // points and empty arcs vanish.
    Line_set
    canonical(Line_set const& in)
    {
      std::vector<Arc> pieces;
      for (auto const& a : in.arcs) {
        if (a.lo < a.hi || (a.lo == a.hi && a.lo_closed && a.hi_closed)) {
          pieces.push_back(a);
        }
      }
      for (auto const& p : in.points) pieces.push_back(Arc{p, p, true, true});

      std::sort(pieces.begin(), pieces.end(), [](Arc const& x, Arc const& y) {
        return std::make_tuple(x.lo, !x.lo_closed) < std::make_tuple(y.lo, !y.lo_closed);
      });

      std::vector<Arc> merged;
      for (auto const& a : pieces) {
        if (!merged.empty()) {
          auto& cur = merged.back();
          bool touches = a.lo < cur.hi
                      || (a.lo == cur.hi && (cur.hi_closed || a.lo_closed));
          if (touches) {
            if (a.lo == cur.lo) cur.lo_closed = cur.lo_closed || a.lo_closed;
            if (a.hi > cur.hi) {
              cur.hi = a.hi;
              cur.hi_closed = a.hi_closed;
            } else if (a.hi == cur.hi) {
              cur.hi_closed = cur.hi_closed || a.hi_closed;
            }
            continue;
          }
        }
        merged.push_back(a);
      }

      Line_set out;
      for (auto const& a : merged) {
        if (a.lo == a.hi) {
          out.points.push_back(a.lo);
        } else {
          out.arcs.push_back(a);
        }
      }
      return out;
    }

    // Maps an arc of the line onto (-1, 1], splitting at the cut point.
    void
    wrap(Arc a, Line_set& out)
    {
      auto length = a.hi - a.lo;
      if (length > two || (length == two && (a.lo_closed || a.hi_closed))) {
        out.arcs.push_back(Arc{minus_one, one, false, true});
        return;
      }
      auto shift = a.lo - reduce_mod_two(a.lo);
      a.lo -= shift;
      a.hi -= shift;
      if (a.hi <= one) {
        out.arcs.push_back(a);
        return;
      }
      out.arcs.push_back(Arc{a.lo, one, a.lo_closed, true});
      out.arcs.push_back(Arc{minus_one, a.hi - two, false, a.hi_closed});
    }

    // Copies of e shifted by -2, 0 and 2: the periodic set seen through
    // the window (-3, 3], wide enough for neighbourhoods of (-1, 1].
    Line_set
    lift(CircleSet const& e)
    {
      Line_set out;
      for (auto shift : {-two, Rational{0}, two}) {
        for (auto a : e.intervals()) {
          a.lo += shift;
          a.hi += shift;
          out.arcs.push_back(a);
        }
        for (auto const& p : e.points()) out.points.push_back(p + shift);
      }
      return canonical(out);
    }

    // Intersection with (-1, 1].
    Line_set
    restrict_to_circle(Line_set const& in)
    {
      Line_set out;
      for (auto a : in.arcs) {
        if (a.hi < minus_one || a.lo > one) continue;
        if (a.lo <= minus_one) {
          a.lo = minus_one;
          a.lo_closed = false;
        }
        if (a.hi > one) {
          a.hi = one;
          a.hi_closed = true;
        }
        out.arcs.push_back(a);
      }
      for (auto const& p : in.points) {
        if (minus_one < p && p <= one) out.points.push_back(p);
      }
      return out;
    }

  } // end of unnamed namespace

  Rational
  parse_rational(std::string_view text)
  {
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
      auto den = parse_integer(text.substr(slash + 1));
      if (den == 0) {
        throw Error(Error_kind::malformed_input, "zero denominator");
      }
      return Rational{parse_integer(text.substr(0, slash)), den};
    }

    auto dot = text.find('.');
    if (dot == std::string_view::npos) return Rational{parse_integer(text)};

    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (negative || (!whole.empty() && whole.front() == '+')) whole.remove_prefix(1);
    if (frac.empty() || frac.size() > 15 || frac.front() == '-' || frac.front() == '+') {
      throw Error(Error_kind::malformed_input,
                  "unsupported decimal: \"" + std::string(text) + "\"");
    }
    std::int64_t scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    Rational value{whole.empty() ? 0 : parse_integer(whole)};
    value += Rational{parse_integer(frac), scale};
    return negative ? -value : value;
  }

  std::string
  format_rational(Rational const& q)
  {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
  }

  Rational
  reduce_mod_two(Rational const& x)
  {
    // k = ceil((x - 1) / 2) puts x - 2k in (-1, 1].
    auto k = -floor_of(-(x - one) / two);
    return x - two * Rational{k};
  }

  bool
  CircleSet::contains(Rational const& x) const
  {
    auto y = reduce_mod_two(x);
    if (std::binary_search(points_.begin(), points_.end(), y)) return true;
    return std::any_of(intervals_.begin(), intervals_.end(),
                       [&y](Arc const& a) { return a.contains(y); });
  }

  CircleSet
  normalize(std::span<Arc const> intervals, std::span<Rational const> points)
  {
    Line_set raw;
    for (auto const& a : intervals) {
      if (a.lo > a.hi) {
        throw Error(Error_kind::reversed_endpoints,
                    "interval [" + format_rational(a.lo) + ", "
                    + format_rational(a.hi) + "] has reversed endpoints");
      }
      wrap(a, raw);
    }
    for (auto const& p : points) raw.points.push_back(reduce_mod_two(p));

    auto line = canonical(raw);
    CircleSet out;
    out.intervals_ = std::move(line.arcs);
    out.points_ = std::move(line.points);
    return out;
  }

  CircleSet
  negate(CircleSet const& e)
  {
    std::vector<Arc> arcs;
    for (auto const& a : e.intervals()) {
      arcs.push_back(Arc{-a.hi, -a.lo, a.hi_closed, a.lo_closed});
    }
    std::vector<Rational> points;
    for (auto const& p : e.points()) points.push_back(-p);
    return normalize(arcs, points);
  }

  CircleSet
  interior(CircleSet const& e)
  {
    auto line = lift(e);
    Line_set open;
    for (auto a : line.arcs) {
      a.lo_closed = false;
      a.hi_closed = false;
      open.arcs.push_back(a);
    }
    auto restricted = canonical(restrict_to_circle(open));
    return normalize(restricted.arcs, restricted.points);
  }

  CircleSet
  closure(CircleSet const& e)
  {
    auto line = lift(e);
    for (auto& a : line.arcs) {
      a.lo_closed = true;
      a.hi_closed = true;
    }
    auto restricted = canonical(restrict_to_circle(canonical(line)));
    return normalize(restricted.arcs, restricted.points);
  }

  bool
  is_symmetric(CircleSet const& e)
  {
    return negate(e) == e;
  }

  bool
  is_closure_of_interior(CircleSet const& e)
  {
    return closure(interior(e)) == e;
  }

  bool
  contains_symmetric_neighborhood_of_zero(CircleSet const& e)
  {
    return interior(e).contains(Rational{0});
  }

  Positivity_domain_report
  is_positivity_domain_star(CircleSet const& e)
  {
    return Positivity_domain_report{
      is_symmetric(e),
      e.contains(Rational{0}),
      is_closure_of_interior(e),
      contains_symmetric_neighborhood_of_zero(e)};
  }

  CircleSet
  cexi_truncation(int depth, std::optional<std::vector<Rational>> t)
  {
    if (depth < 1) {
      throw Error(Error_kind::malformed_input, "truncation depth must be at least 1");
    }
    auto needed = static_cast<std::size_t>(2 * depth);
    std::vector<Rational> seq;
    if (t) {
      seq = *t;
    } else {
      for (std::size_t n = 1; n <= needed; ++n) {
        seq.emplace_back(1, static_cast<std::int64_t>(n));
      }
    }
    if (seq.size() < needed) {
      throw Error(Error_kind::malformed_input,
                  "sequence needs " + std::to_string(needed) + " terms");
    }
    if (seq.front() > one) {
      throw Error(Error_kind::malformed_input, "sequence must start at or below 1");
    }
    for (std::size_t k = 1; k < seq.size(); ++k) {
      if (!(seq[k] < seq[k - 1])) {
        throw Error(Error_kind::not_decreasing,
                    "sequence is not strictly decreasing at term " + std::to_string(k + 1));
      }
    }
    if (seq.back() <= Rational{0}) {
      throw Error(Error_kind::malformed_input, "sequence terms must be positive");
    }

    std::vector<Arc> arcs;
    for (std::size_t n = 1; n <= static_cast<std::size_t>(depth); ++n) {
      auto upper = seq[2 * n - 2];  // t_{2n-1}
      auto lower = seq[2 * n - 1];  // t_{2n}
      arcs.push_back(Arc{lower, upper});
      arcs.push_back(Arc{-upper, -lower});
    }
    std::vector<Rational> zero{Rational{0}};
    return normalize(arcs, zero);
  }

} // end of namespace chordext
