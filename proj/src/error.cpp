#include <chordext/error.hpp>

namespace chordext {

  std::string_view
  error_name(Error_kind kind) noexcept
  {
    switch (kind) {
      case Error_kind::malformed_input: return "MalformedInput";
      case Error_kind::index_out_of_range: return "IndexOutOfRange";
      case Error_kind::dimension_mismatch: return "DimensionMismatch";
      case Error_kind::domain_mismatch: return "DomainMismatch";
      case Error_kind::not_supported: return "NotSupported";
      case Error_kind::not_chordal: return "NotChordal";
      case Error_kind::not_psd: return "NotPSD";
      case Error_kind::not_partially_positive: return "NotPartiallyPositive";
      case Error_kind::no_completion: return "NoCompletion";
      case Error_kind::no_convergence: return "NoConvergence";
      case Error_kind::too_large: return "TooLarge";
      case Error_kind::not_latin_square: return "NotLatinSquare";
      case Error_kind::no_identity: return "NoIdentity";
      case Error_kind::no_inverse: return "NoInverse";
      case Error_kind::not_associative: return "NotAssociative";
      case Error_kind::not_symmetric_subset: return "NotSymmetricSubset";
      case Error_kind::not_chordal_subset: return "NotChordalSubset";
      case Error_kind::not_positive_definite: return "NotPositiveDefinite";
      case Error_kind::reversed_endpoints:
        return "EmptyIntervalWithReversedEndpoints";
      case Error_kind::not_decreasing: return "NotDecreasing";
    }
    return "Unknown";
  }

} // end of namespace chordext
