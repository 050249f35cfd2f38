//
// ... Standard header files
//
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

//
// ... chordext header files
//
#include <chordext/io.hpp>

namespace chordext::io {

  namespace {

    [[noreturn]] void
    malformed(std::string const& what)
    {
      throw Error(Error_kind::malformed_input, what);
    }

    json const&
    field(json const& j, char const* key)
    {
      if (!j.is_object() || !j.contains(key)) {
        malformed(std::string("missing field \"") + key + "\"");
      }
      return j.at(key);
    }

    int
    integer(json const& j, char const* what)
    {
      if (!j.is_number_integer()) malformed(std::string(what) + " must be an integer");
      return j.get<int>();
    }

    double
    number(json const& j, char const* what)
    {
      if (!j.is_number()) malformed(std::string(what) + " must be a number");
      return j.get<double>();
    }

    json const&
    array(json const& j, char const* what)
    {
      if (!j.is_array()) malformed(std::string(what) + " must be an array");
      return j;
    }

    std::string
    format_double(double x)
    {
      if (!std::isfinite(x)) return "null";
      if (x == 0.0) return "0.0";
      char buffer[32];
      std::snprintf(buffer, sizeof buffer, "%.17g", x);
      std::string s(buffer);
      if (s.find_first_of(".eE") == std::string::npos) s += ".0";
      return s;
    }

    void
    write(json const& j, std::ostringstream& out, bool pretty, int depth)
    {
      auto newline = [&](int level) {
        if (!pretty) return;
        out << '\n' << std::string(static_cast<std::size_t>(2 * level), ' ');
      };

      switch (j.type()) {
        case json::value_t::object: {
          if (j.empty()) {
            out << "{}";
            return;
          }
          out << '{';
          bool first = true;
          for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out << ',';
            first = false;
            newline(depth + 1);
            out << json(it.key()).dump() << (pretty ? ": " : ":");
            write(it.value(), out, pretty, depth + 1);
          }
          newline(depth);
          out << '}';
          return;
        }
        case json::value_t::array: {
          if (j.empty()) {
            out << "[]";
            return;
          }
          out << '[';
          bool first = true;
          for (auto const& item : j) {
            if (!first) out << ',';
            first = false;
            newline(depth + 1);
            write(item, out, pretty, depth + 1);
          }
          newline(depth);
          out << ']';
          return;
        }
        case json::value_t::number_float:
          out << format_double(j.get<double>());
          return;
        default:
          out << j.dump();
          return;
      }
    }

  } // end of unnamed namespace

  std::string
  dump(json const& doc, bool pretty)
  {
    std::ostringstream out;
    write(doc, out, pretty, 0);
    return out.str();
  }

  json
  parse(std::string const& text)
  {
    try {
      return json::parse(text);
    } catch (json::exception const& e) {
      malformed(std::string("invalid JSON: ") + e.what());
    }
  }

  json
  read_file(std::string const& path)
  {
    std::ifstream in(path);
    if (!in) malformed("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
  }

  json
  to_json(Complex z)
  {
    return json{{"re", z.real()}, {"im", z.imag()}};
  }

  Complex
  complex_from_json(json const& j)
  {
    if (j.is_number()) return {j.get<double>(), 0.0};
    auto re = number(field(j, "re"), "re");
    auto im = j.contains("im") ? number(j.at("im"), "im") : 0.0;
    return {re, im};
  }

  json
  to_json(Pattern const& p)
  {
    auto edges = json::array();
    for (auto [i, j] : p.edges()) edges.push_back({i, j});
    return json{{"n", p.size()}, {"edges", edges}};
  }

  Pattern
  pattern_from_json(json const& j)
  {
    auto n = integer(field(j, "n"), "n");
    std::vector<Edge> edges;
    for (auto const& e : array(field(j, "edges"), "edges")) {
      if (!e.is_array() || e.size() != 2) malformed("each edge is a pair [i, j]");
      edges.emplace_back(integer(e[0], "edge endpoint"), integer(e[1], "edge endpoint"));
    }
    return validate_pattern(n, edges);
  }

  json
  to_json(HermitianMatrix const& m)
  {
    auto entries = json::array();
    for (int i = 0; i < m.size(); ++i) {
      for (int j = i; j < m.size(); ++j) {
        auto z = m(i, j);
        entries.push_back({{"i", i}, {"j", j}, {"re", z.real()}, {"im", z.imag()}});
      }
    }
    return json{{"n", m.size()}, {"entries", entries}};
  }

  HermitianMatrix
  matrix_from_json(json const& j)
  {
    auto n = integer(field(j, "n"), "n");
    if (n < 0) malformed("n must be non-negative");
    HermitianMatrix m(n);
    std::set<std::pair<int, int>> seen;
    for (auto const& e : array(field(j, "entries"), "entries")) {
      auto r = integer(field(e, "i"), "i");
      auto c = integer(field(e, "j"), "j");
      if (r < 0 || c >= n || r > c) {
        malformed("matrix entries need 0 <= i <= j < n");
      }
      if (!seen.emplace(r, c).second) malformed("duplicate matrix entry");
      Complex z{number(field(e, "re"), "re"),
                e.contains("im") ? number(e.at("im"), "im") : 0.0};
      if (r == c && z.imag() != 0.0) malformed("diagonal entries must be real");
      m.set(r, c, z);
    }
    return m;
  }

  json
  to_json(PartialHermitianMatrix const& m)
  {
    auto blocks = json::array();
    auto d = m.block_size();
    for (auto const& [key, block] : m.blocks()) {
      auto rows = json::array();
      for (int a = 0; a < d; ++a) {
        auto row = json::array();
        for (int b = 0; b < d; ++b) row.push_back(to_json(block(a, b)));
        rows.push_back(row);
      }
      blocks.push_back({{"i", key.first}, {"j", key.second}, {"block", rows}});
    }
    return json{{"n", m.size()}, {"d", d}, {"pattern", to_json(m.pattern())},
                {"blocks", blocks}};
  }

  PartialHermitianMatrix
  partial_from_json(json const& j)
  {
    auto n = integer(field(j, "n"), "n");
    auto d = j.contains("d") ? integer(j.at("d"), "d") : 1;
    if (d < 1) malformed("d must be positive");
    auto pattern = pattern_from_json(field(j, "pattern"));
    if (pattern.size() != n) malformed("n differs from the pattern size");

    PartialHermitianMatrix::Block_map blocks;
    for (auto const& b : array(field(j, "blocks"), "blocks")) {
      auto r = integer(field(b, "i"), "i");
      auto c = integer(field(b, "j"), "j");
      auto const& rows = field(b, "block");
      Matrix block(d, d);
      if (rows.is_number() || (rows.is_object() && d == 1)) {
        if (d != 1) malformed("scalar block given for d > 1");
        block(0, 0) = complex_from_json(rows);
      } else {
        if (!rows.is_array() || static_cast<int>(rows.size()) != d) {
          malformed("block must have d rows");
        }
        for (int a = 0; a < d; ++a) {
          auto const& row = rows[static_cast<std::size_t>(a)];
          if (!row.is_array() || static_cast<int>(row.size()) != d) {
            malformed("block rows must have d entries");
          }
          for (int k = 0; k < d; ++k) {
            block(a, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
          }
        }
      }
      if (!blocks.emplace(std::pair{r, c}, block).second) malformed("duplicate block");
    }
    return PartialHermitianMatrix(std::move(pattern), d, std::move(blocks));
  }

  json
  to_json(RankOneFactor const& f)
  {
    auto v = json::array();
    for (auto const& z : f.vector) v.push_back(to_json(z));
    return json{{"support", f.support}, {"vector", v}};
  }

  json
  to_json(CompletionResult const& r)
  {
    auto log = json::array();
    for (auto const& step : r.fill_log) {
      log.push_back({{"separator", step.separator}, {"pair", {step.row, step.col}}});
    }
    return json{{"matrix", to_json(r.matrix)}, {"fill_log", log}};
  }

  json
  to_json(FiniteGroup const& g)
  {
    return json{{"order", g.order()}, {"table", g.table()}, {"identity", g.identity()}};
  }

  FiniteGroup
  group_from_json(json const& j)
  {
    auto const& rows = array(field(j, "table"), "table");
    FiniteGroup::Table table;
    for (auto const& row : rows) {
      std::vector<Element> r;
      for (auto const& x : array(row, "table row")) r.push_back(integer(x, "table entry"));
      table.push_back(std::move(r));
    }
    if (j.contains("order") && integer(j.at("order"), "order") != static_cast<int>(table.size())) {
      malformed("order differs from the table size");
    }
    auto e = j.contains("identity") ? integer(j.at("identity"), "identity") : 0;
    return validate_group(std::move(table), e);
  }

  json
  to_json(SymmetricSubset const& e)
  {
    return json{{"members", e.members()}};
  }

  SymmetricSubset
  subset_from_json(json const& j, FiniteGroup const& g)
  {
    std::vector<Element> members;
    for (auto const& x : array(field(j, "members"), "members")) {
      members.push_back(integer(x, "member"));
    }
    return SymmetricSubset(g, std::move(members));
  }

  json
  to_json(GroupFunction const& f)
  {
    auto values = json::array();
    for (auto const& [g, z] : f.values) {
      values.push_back({{"g", g}, {"re", z.real()}, {"im", z.imag()}});
    }
    return json{{"values", values}};
  }

  GroupFunction
  function_from_json(json const& j)
  {
    GroupFunction f;
    for (auto const& v : array(field(j, "values"), "values")) {
      auto g = integer(field(v, "g"), "g");
      if (!f.values.emplace(g, complex_from_json(v)).second) {
        malformed("duplicate function value");
      }
    }
    return f;
  }

  json
  to_json(CircleSet const& e)
  {
    auto intervals = json::array();
    auto open = json::array();
    bool any_open = false;
    for (auto const& a : e.intervals()) {
      intervals.push_back({format_rational(a.lo), format_rational(a.hi)});
      open.push_back({!a.lo_closed, !a.hi_closed});
      any_open = any_open || !a.lo_closed || !a.hi_closed;
    }
    auto points = json::array();
    for (auto const& p : e.points()) points.push_back(format_rational(p));
    json out{{"intervals", intervals}, {"points", points}};
    if (any_open) out["open_endpoints"] = open;
    return out;
  }

  CircleSet
  circle_from_json(json const& j)
  {
    auto rational = [](json const& x) {
      if (x.is_string()) return parse_rational(x.get<std::string>());
      if (x.is_number_integer()) return Rational{x.get<std::int64_t>()};
      malformed("rationals are given as strings such as \"1/3\"");
    };

    std::vector<Arc> arcs;
    if (j.contains("intervals")) {
      for (auto const& pair : array(j.at("intervals"), "intervals")) {
        if (!pair.is_array() || pair.size() != 2) malformed("intervals are [lo, hi] pairs");
        arcs.push_back(Arc{rational(pair[0]), rational(pair[1])});
      }
    }
    if (j.contains("open_endpoints")) {
      auto const& open = array(j.at("open_endpoints"), "open_endpoints");
      if (open.size() != arcs.size()) malformed("one open_endpoints pair per interval");
      for (std::size_t k = 0; k < arcs.size(); ++k) {
        if (!open[k].is_array() || open[k].size() != 2
            || !open[k][0].is_boolean() || !open[k][1].is_boolean()) {
          malformed("open_endpoints entries are [bool, bool]");
        }
        arcs[k].lo_closed = !open[k][0].get<bool>();
        arcs[k].hi_closed = !open[k][1].get<bool>();
      }
    }
    std::vector<Rational> points;
    if (j.contains("points")) {
      for (auto const& p : array(j.at("points"), "points")) points.push_back(rational(p));
    }
    return normalize(arcs, points);
  }

} // end of namespace chordext::io
