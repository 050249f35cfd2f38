#pragma once

//
// ... Standard header files
//
#include <map>
#include <optional>
#include <utility>
#include <vector>

//
// ... chordext header files
//
#include <chordext/linalg.hpp>
#include <chordext/pattern.hpp>

namespace chordext {

  // A Hermitian matrix of d x d blocks, specified only on the pairs of a
  // pattern.  Blocks are stored for i <= j; block(j, i) is the conjugate
  // transpose of block(i, j).  Every diagonal block must be present.
  class PartialHermitianMatrix {
  public:
    using Block_map = std::map<std::pair<int, int>, Matrix>;

    PartialHermitianMatrix() = default;

    // Throws Error(malformed_input) for missing, extra or non-Hermitian
    // diagonal blocks and Error(dimension_mismatch) for blocks that are
    // not d x d.
    PartialHermitianMatrix(Pattern pattern, int block_size, Block_map blocks);

    // The restriction of a full (n*d) x (n*d) Hermitian matrix.
    static PartialHermitianMatrix
    restrict(HermitianMatrix const& full, Pattern pattern, int block_size = 1);

    Pattern const&
    pattern() const noexcept { return pattern_; }

    int
    block_size() const noexcept { return d_; }

    // Number of block rows.
    int
    size() const noexcept { return pattern_.size(); }

    // Scalar dimension n * d.
    int
    dimension() const noexcept { return pattern_.size() * d_; }

    Block_map const&
    blocks() const noexcept { return blocks_; }

    // Throws Error(not_supported) when (i, j) lies outside the pattern.
    Matrix
    block(int i, int j) const;

    // Scalar view: both indices in [0, n*d).
    bool
    specified(int r, int c) const;

    Complex
    entry(int r, int c) const;

    // Scalar indices of the given block rows, block-major.
    std::vector<int>
    expand(std::span<Vertex const> vertices) const;

    // The fully specified block principal submatrix on a clique.
    HermitianMatrix
    principal(Vertex_set const& clique) const;

  private:
    Pattern pattern_;
    int d_ = 1;
    Block_map blocks_;
  };

  struct Partial_positivity {
    bool positive = false;
    std::optional<Vertex_set> witness;
  };

  // Every maximal-clique principal block is PSD.  Throws Error(too_large)
  // when the pattern is not chordal and too large for clique enumeration.
  Partial_positivity
  partially_positive(PartialHermitianMatrix const& m,
                     std::optional<double> tol = std::nullopt);

  // One entry per filled block pair (row < col), with the separator of
  // the clique tree edge that produced it.
  struct Fill_step {
    Vertex_set separator;
    int row;
    int col;
  };

  struct CompletionResult {
    HermitianMatrix matrix;
    std::vector<Fill_step> fill_log;
  };

  // Clique-tree completion: cliques are visited breadth first from the
  // first clique; each new clique C reached through separator S fills the
  // unknown blocks between the processed vertices A and C \ S with
  //
  //   X = M[A\S, S] M[S, S]^+ M[S, C\S].
  //
  // Throws Error(not_chordal), Error(not_partially_positive) and, if the
  // assembled matrix fails the PSD check, Error(no_completion).
  CompletionResult
  positive_completion(PartialHermitianMatrix const& m,
                      std::optional<double> tol = std::nullopt);

  // The extended multiplier phi on X x X; same algorithm and errors as
  // positive_completion.
  CompletionResult
  positive_extension_multiplier(PartialHermitianMatrix const& m,
                                std::optional<double> tol = std::nullopt);

  // Writes a PSD matrix supported on a chordal pattern as a sum of rank-one
  // PSD terms v v*, each supp(v) inside one maximal clique.  Leaf cliques
  // of the clique tree are peeled off one at a time: the rows private to
  // the leaf, together with the Schur-complement correction on the
  // separator, form a PSD clique-supported summand.
  //
  // Throws Error(dimension_mismatch), Error(not_chordal), Error(not_psd)
  // and Error(not_supported).
  std::vector<RankOneFactor>
  rank_one_positive_decomposition(HermitianMatrix const& t, Pattern const& p,
                                  std::optional<double> tol = std::nullopt);

  // Block (i, j) of the result is t(i, j) * psi(i, j) on the pattern and
  // zero elsewhere.  Throws Error(not_supported) if t has mass outside the
  // pattern.
  HermitianMatrix
  apply_multiplier(PartialHermitianMatrix const& m, HermitianMatrix const& t);

  // The cb norm of a positive Schur multiplier, max_i ||phi(i, i)||.
  // Throws Error(not_psd) and Error(dimension_mismatch).
  double
  cb_norm_positive(HermitianMatrix const& phi, int block_size = 1,
                   std::optional<double> tol = std::nullopt);

  // phi is PSD and matches m bit for bit on every specified block.
  bool
  verify_extension(PartialHermitianMatrix const& m, HermitianMatrix const& phi,
                   std::optional<double> tol = std::nullopt);

} // end of namespace chordext
