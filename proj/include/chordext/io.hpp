#pragma once

//
// ... Standard header files
//
#include <string>

//
// ... External header files
//
#include <json.hpp>

//
// ... chordext header files
//
#include <chordext/circleset.hpp>
#include <chordext/completion.hpp>
#include <chordext/groupext.hpp>
#include <chordext/linalg.hpp>
#include <chordext/pattern.hpp>

// JSON encodings of the library's values.  Decoders throw
// Error(malformed_input) on schema violations; semantic validation is left
// to the constructors they call.
namespace chordext::io {

  using json = nlohmann::json;

  // Serializes with every floating-point number printed to 17 significant
  // digits, so values survive a round trip bit for bit.
  std::string
  dump(json const& doc, bool pretty = false);

  json
  parse(std::string const& text);

  json
  read_file(std::string const& path);

  json
  to_json(Complex z);

  Complex
  complex_from_json(json const& j);

  // {"n": n, "edges": [[i, j], ...]}
  json
  to_json(Pattern const& p);

  Pattern
  pattern_from_json(json const& j);

  // {"n": n, "entries": [{"i", "j", "re", "im"}, ...]} with i <= j; omitted
  // entries are zero.
  json
  to_json(HermitianMatrix const& m);

  HermitianMatrix
  matrix_from_json(json const& j);

  // {"n", "d", "pattern", "blocks": [{"i", "j", "block": [[{re, im}]]}]}
  json
  to_json(PartialHermitianMatrix const& m);

  PartialHermitianMatrix
  partial_from_json(json const& j);

  json
  to_json(RankOneFactor const& f);

  json
  to_json(CompletionResult const& r);

  // {"order": n, "table": [[...]], "identity": e}
  json
  to_json(FiniteGroup const& g);

  FiniteGroup
  group_from_json(json const& j);

  // {"members": [...]}
  json
  to_json(SymmetricSubset const& e);

  SymmetricSubset
  subset_from_json(json const& j, FiniteGroup const& g);

  // {"values": [{"g", "re", "im"}, ...]}
  json
  to_json(GroupFunction const& f);

  GroupFunction
  function_from_json(json const& j);

  // {"intervals": [["p/q", "r/s"], ...], "points": ["p/q", ...]}, plus
  // "open_endpoints": [[lo_open, hi_open], ...] when any endpoint is open.
  json
  to_json(CircleSet const& e);

  CircleSet
  circle_from_json(json const& j);

} // end of namespace chordext::io
