#pragma once

//
// ... Standard header files
//
#include <stdexcept>
#include <string>
#include <string_view>

namespace chordext {

  enum class Error_kind {
    malformed_input,
    index_out_of_range,
    dimension_mismatch,
    domain_mismatch,
    not_supported,
    not_chordal,
    not_psd,
    not_partially_positive,
    no_completion,
    no_convergence,
    too_large,
    not_latin_square,
    no_identity,
    no_inverse,
    not_associative,
    not_symmetric_subset,
    not_chordal_subset,
    not_positive_definite,
    reversed_endpoints,
    not_decreasing
  };

  // CamelCase name used in diagnostics and CLI error documents,
  // e.g. "NotChordal".
  std::string_view
  error_name(Error_kind kind) noexcept;

  // Every failure raised by the library carries one of the kinds above so
  // that callers (the CLI in particular) can classify it without parsing
  // the message.
  class Error : public std::runtime_error {
  public:
    Error(Error_kind kind, std::string const& message)
      : std::runtime_error(message), kind_(kind) {}

    Error_kind
    kind() const noexcept { return kind_; }

    std::string_view
    name() const noexcept { return error_name(kind_); }

  private:
    Error_kind kind_;
  };

} // end of namespace chordext
