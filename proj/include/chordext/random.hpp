#pragma once

//
// ... Standard header files
//
#include <random>

//
// ... chordext header files
//
#include <chordext/linalg.hpp>
#include <chordext/pattern.hpp>

namespace chordext {

  using Rng = std::mt19937_64;

  // Intersection graph of random subtrees of a random tree, which is always
  // chordal.
  Pattern
  random_chordal_pattern(Rng& rng, int n);

  // Every off-diagonal pair present independently with probability p.
  Pattern
  random_pattern(Rng& rng, int n, double p);

  // B B* for a standard normal n x rank matrix B, complex when requested.
  HermitianMatrix
  random_psd(Rng& rng, int n, int rank, bool complex_entries = true);

  // A PSD matrix supported on a chordal pattern: a sum of random PSD
  // blocks, one per maximal clique.
  HermitianMatrix
  random_psd_on(Rng& rng, Pattern const& p, bool complex_entries = true);

} // end of namespace chordext
