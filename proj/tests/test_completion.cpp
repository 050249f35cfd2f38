//
// ... Standard header files
//
#include <algorithm>
#include <cmath>
#include <random>

//
// ... Testing header files
//
#include <gtest/gtest.h>

//
// ... chordext header files
//
#include <chordext/completion.hpp>
#include <chordext/random.hpp>

#include "oracles.hpp"

using namespace chordext;

namespace {

  PartialHermitianMatrix
  scalar_partial(Pattern p, std::vector<std::vector<double>> const& rows)
  {
    return PartialHermitianMatrix::restrict(HermitianMatrix::from_rows(rows), std::move(p));
  }

  Pattern
  four_cycle()
  {
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    return Pattern(4, edges);
  }

  PartialHermitianMatrix
  four_cycle_witness()
  {
    return scalar_partial(four_cycle(), {{1, 1, 0, -1}, {1, 1, 1, 0}, {0, 1, 1, 1}, {-1, 0, 1, 1}});
  }

  PartialHermitianMatrix
  band_09()
  {
    return scalar_partial(band_pattern(3, 1), {{1, 0.9, 0}, {0.9, 1, 0.9}, {0, 0.9, 1}});
  }

  PartialHermitianMatrix
  toeplitz_band(int n, double r)
  {
    std::vector<std::vector<double>> rows(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int i = 0; i < n; ++i) {
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
      if (i + 1 < n) {
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = r;
        rows[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i)] = r;
      }
    }
    return scalar_partial(band_pattern(n, 1), rows);
  }

  double
  real_det(HermitianMatrix const& a)
  {
    return oracle::determinant(oracle::rows_of(a)).real();
  }

  bool
  agrees_on_pattern(PartialHermitianMatrix const& m, HermitianMatrix const& phi)
  {
    for (int r = 0; r < m.dimension(); ++r) {
      for (int c = 0; c < m.dimension(); ++c) {
        if (m.specified(r, c) && phi(r, c) != m.entry(r, c)) return false;
      }
    }
    return true;
  }

  PartialHermitianMatrix
  random_partial(Rng& rng, int n, int d)
  {
    auto pattern = random_chordal_pattern(rng, n);
    auto full = random_psd(rng, n * d, std::uniform_int_distribution<int>(1, n * d)(rng));
    return PartialHermitianMatrix::restrict(full, pattern, d);
  }

  template <typename F>
  Error_kind
  kind_of(F&& f)
  {
    try {
      f();
    } catch (Error const& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return Error_kind::malformed_input;
  }

} // end of unnamed namespace

TEST(PartialHermitianMatrix, Validation)
{
  PartialHermitianMatrix::Block_map blocks;
  blocks[{0, 0}] = Matrix::identity(1);
  EXPECT_EQ(kind_of([&] { PartialHermitianMatrix(band_pattern(2, 1), 1, blocks); }),
            Error_kind::malformed_input);
  blocks[{1, 1}] = Matrix::identity(1);
  blocks[{0, 1}] = Matrix(1, 1);
  EXPECT_NO_THROW(PartialHermitianMatrix(band_pattern(2, 1), 1, blocks));
  EXPECT_ANY_THROW(PartialHermitianMatrix(diagonal_pattern(2), 1, blocks));
  blocks[{0, 1}] = Matrix(2, 2);
  EXPECT_ANY_THROW(PartialHermitianMatrix(band_pattern(2, 1), 1, blocks));
}

TEST(PartialHermitianMatrix, LowerBlocksAreAdjoints)
{
  PartialHermitianMatrix::Block_map blocks;
  blocks[{0, 0}] = Matrix::identity(2);
  blocks[{1, 1}] = Matrix::identity(2);
  Matrix off(2, 2);
  off(0, 1) = Complex(0.25, 0.5);
  blocks[{0, 1}] = off;
  PartialHermitianMatrix m(band_pattern(2, 1), 2, blocks);
  EXPECT_EQ(m.block(1, 0), off.adjoint());
  EXPECT_EQ(m.entry(3, 0), std::conj(off(0, 1)));
  EXPECT_TRUE(m.specified(3, 0));
}

TEST(PartiallyPositive, Examples)
{
  auto ok = scalar_partial(band_pattern(3, 1), {{1, 0.5, 0}, {0.5, 1, 0.5}, {0, 0.5, 1}});
  EXPECT_TRUE(partially_positive(ok).positive);
  EXPECT_FALSE(partially_positive(ok).witness.has_value());

  auto bad = scalar_partial(band_pattern(3, 1), {{1, 2, 0}, {2, 1, 0.5}, {0, 0.5, 1}});
  auto r = partially_positive(bad);
  EXPECT_FALSE(r.positive);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, (Vertex_set{0, 1}));

  EXPECT_TRUE(partially_positive(four_cycle_witness()).positive);
}

TEST(PartiallyPositive, TooLargeNonChordal)
{
  auto p = cycle_pattern(21);
  EXPECT_EQ(kind_of([&] { partially_positive(PartialHermitianMatrix::restrict(HermitianMatrix::identity(21), p)); }),
            Error_kind::too_large);
}

TEST(PositiveCompletion, ThreeByThreeMatchesMaxDeterminant)
{
  auto result = positive_completion(band_09());
  EXPECT_NEAR(result.matrix(0, 2).real(), 0.81, 1e-12);
  EXPECT_NEAR(result.matrix(0, 2).imag(), 0.0, 1e-15);
  EXPECT_GE(oracle::min_eigenvalue(result.matrix), -1e-9);
  ASSERT_EQ(result.fill_log.size(), 1u);
  EXPECT_EQ(result.fill_log[0].separator, (Vertex_set{1}));
  EXPECT_EQ(result.fill_log[0].row, 0);
  EXPECT_EQ(result.fill_log[0].col, 2);

  double best = -1.0;
  double argmax = 0.0;
  for (int k = -1000; k <= 1000; ++k) {
    auto x = k * 1e-3;
    auto trial = HermitianMatrix::from_rows({{1, 0.9, x}, {0.9, 1, 0.9}, {x, 0.9, 1}});
    auto det = real_det(trial);
    if (det > best) {
      best = det;
      argmax = x;
    }
  }
  EXPECT_NEAR(argmax, 0.81, 1e-2);
}

TEST(PositiveCompletion, CompleteInputUnchanged)
{
  Rng rng(4);
  auto full = random_psd(rng, 5, 3);
  auto m = PartialHermitianMatrix::restrict(full, complete_pattern(5));
  auto result = positive_completion(m);
  EXPECT_EQ(result.matrix, full);
  EXPECT_TRUE(result.fill_log.empty());
}

TEST(PositiveCompletion, ToeplitzBandIsGeometric)
{
  auto result = positive_completion(toeplitz_band(5, 0.5));
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      EXPECT_NEAR(std::abs(result.matrix(i, j) - std::pow(0.5, std::abs(i - j))), 0.0, 1e-12);
    }
  }
}

TEST(PositiveCompletion, ToeplitzFillIsCoordinatewiseMaxDeterminant)
{
  auto completed = positive_completion(toeplitz_band(5, 0.5)).matrix;
  for (int i = 0; i < 5; ++i) {
    for (int j = i + 2; j < 5; ++j) {
      double best = -1.0;
      double argmax = 0.0;
      for (int k = -1000; k <= 1000; ++k) {
        auto trial = completed;
        trial.set(i, j, k * 1e-3);
        auto det = real_det(trial);
        if (det > best) {
          best = det;
          argmax = k * 1e-3;
        }
      }
      EXPECT_NEAR(argmax, completed(i, j).real(), 1e-2) << i << "," << j;
    }
  }
}

TEST(PositiveCompletion, Errors)
{
  EXPECT_EQ(kind_of([] { positive_completion(four_cycle_witness()); }), Error_kind::not_chordal);
  auto bad = scalar_partial(band_pattern(3, 1), {{1, 2, 0}, {2, 1, 0.5}, {0, 0.5, 1}});
  EXPECT_EQ(kind_of([&] { positive_completion(bad); }), Error_kind::not_partially_positive);
}

TEST(PositiveCompletion, DisconnectedPatternFillsZero)
{
  std::vector<Edge> edges{{0, 1}, {2, 3}};
  auto m = scalar_partial(Pattern(4, edges), {{2, 1, 0, 0}, {1, 2, 0, 0}, {0, 0, 1, 0.5}, {0, 0, 0.5, 1}});
  auto result = positive_completion(m);
  EXPECT_EQ(result.matrix(0, 2), Complex(0.0));
  EXPECT_EQ(result.matrix(1, 3), Complex(0.0));
  EXPECT_TRUE(verify_extension(m, result.matrix));
}

TEST(PositiveExtensionMultiplier, Examples)
{
  auto phi = positive_extension_multiplier(
    scalar_partial(band_pattern(3, 1), {{1, 0.5, 0}, {0.5, 1, 0.5}, {0, 0.5, 1}}));
  EXPECT_NEAR(phi.matrix(0, 2).real(), 0.25, 1e-15);

  PartialHermitianMatrix::Block_map ones;
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) ones[{i, j}] = Matrix::identity(2);
  }
  PartialHermitianMatrix all_identity(complete_pattern(3), 2, ones);
  auto same = positive_extension_multiplier(all_identity).matrix;
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) EXPECT_EQ(same(r, c), Complex(r % 2 == c % 2 ? 1.0 : 0.0));
  }

  PartialHermitianMatrix::Block_map band;
  for (int i = 0; i < 3; ++i) band[{i, i}] = Matrix::identity(2);
  band[{0, 1}] = Matrix(2, 2);
  band[{1, 2}] = Matrix(2, 2);
  auto zero_fill = positive_extension_multiplier(PartialHermitianMatrix(band_pattern(3, 1), 2, band)).matrix;
  EXPECT_EQ(zero_fill, HermitianMatrix::identity(6));
}

TEST(RankOneDecomposition, Examples)
{
  auto factors = rank_one_positive_decomposition(HermitianMatrix::identity(4), band_pattern(4, 1));
  ASSERT_EQ(factors.size(), 4u);
  std::vector<int> seen;
  for (auto const& f : factors) {
    ASSERT_EQ(f.support.size(), 1u);
    EXPECT_NEAR(std::abs(f.vector[static_cast<std::size_t>(f.support[0])]), 1.0, 1e-15);
    seen.push_back(f.support[0]);
  }
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(seen, (std::vector<int>{0, 1, 2, 3}));

  auto t = HermitianMatrix::from_rows({{1, 0.5, 0}, {0.5, 1, 0.5}, {0, 0.5, 1}});
  auto band = band_pattern(3, 1);
  auto g = rank_one_positive_decomposition(t, band);
  for (auto const& f : g) {
    std::vector<int> const left{0, 1};
    std::vector<int> const right{1, 2};
    EXPECT_TRUE(std::includes(left.begin(), left.end(), f.support.begin(), f.support.end())
                || std::includes(right.begin(), right.end(), f.support.begin(), f.support.end()));
    EXPECT_TRUE(band.is_clique(f.support));
  }
  EXPECT_LE((outer_sum(g, 3).matrix() - t.matrix()).max_abs(), 1e-8 * 2.0);

  EXPECT_TRUE(rank_one_positive_decomposition(HermitianMatrix(3), band).empty());
}

TEST(RankOneDecomposition, Errors)
{
  auto t = HermitianMatrix::from_rows({{1, 0.5, 0.1}, {0.5, 1, 0.5}, {0.1, 0.5, 1}});
  EXPECT_EQ(kind_of([&] { rank_one_positive_decomposition(t, band_pattern(3, 1)); }),
            Error_kind::not_supported);
  EXPECT_EQ(kind_of([] { rank_one_positive_decomposition(HermitianMatrix::identity(4), four_cycle()); }),
            Error_kind::not_chordal);
  auto indefinite = HermitianMatrix::from_rows({{1, 2, 0}, {2, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(kind_of([&] { rank_one_positive_decomposition(indefinite, band_pattern(3, 1)); }),
            Error_kind::not_psd);
}

TEST(ApplyMultiplier, Examples)
{
  auto band = band_pattern(3, 1);
  auto ones = scalar_partial(band, {{1, 1, 0}, {1, 1, 1}, {0, 1, 1}});
  auto t = HermitianMatrix::from_rows({{2, 0.3, 0}, {0.3, 1, -0.4}, {0, -0.4, 5}});
  EXPECT_EQ(apply_multiplier(ones, t), t);

  auto zero = scalar_partial(band, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  EXPECT_EQ(apply_multiplier(zero, t), HermitianMatrix(3));

  auto doubled = scalar_partial(band, {{1, 2, 0}, {2, 1, 1}, {0, 1, 1}});
  auto all_ones = HermitianMatrix::from_rows({{1, 1, 0}, {1, 1, 1}, {0, 1, 1}});
  EXPECT_EQ(apply_multiplier(doubled, all_ones),
            HermitianMatrix::from_rows({{1, 2, 0}, {2, 1, 1}, {0, 1, 1}}));

  EXPECT_EQ(kind_of([&] { apply_multiplier(ones, HermitianMatrix::from_rows({{1, 0, 1}, {0, 1, 0}, {1, 0, 1}})); }),
            Error_kind::not_supported);
}

TEST(CbNormPositive, Examples)
{
  EXPECT_EQ(cb_norm_positive(HermitianMatrix::identity(3)), 1.0);
  EXPECT_EQ(cb_norm_positive(HermitianMatrix::from_rows({{2, 1}, {1, 3}})), 3.0);
  EXPECT_EQ(cb_norm_positive(HermitianMatrix::from_rows({{0.5, 0}, {0, 0.2}})), 0.5);
  EXPECT_EQ(kind_of([] { cb_norm_positive(HermitianMatrix::from_rows({{1, 2}, {2, 1}})); }),
            Error_kind::not_psd);
}

TEST(CbNormPositive, BlockNormIsLargestDiagonalBlockEigenvalue)
{
  auto phi = HermitianMatrix::from_rows({{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  EXPECT_NEAR(cb_norm_positive(phi, 2), 2.0, 1e-14);
  EXPECT_ANY_THROW(cb_norm_positive(phi, 3));
}

TEST(VerifyExtension, Examples)
{
  auto m = band_09();
  auto phi = positive_completion(m).matrix;
  EXPECT_TRUE(verify_extension(m, phi));

  auto perturbed = phi;
  perturbed.set(0, 1, phi(0, 1) + 1e-3);
  EXPECT_FALSE(verify_extension(m, perturbed));

  auto indefinite = phi;
  indefinite.set(0, 2, -0.9);
  EXPECT_FALSE(verify_extension(m, indefinite));
}

TEST(CompletionProperties, SoundnessOnRandomChordalPatterns)
{
  Rng rng(101);
  for (int sample = 0; sample < 200; ++sample) {
    auto n = std::uniform_int_distribution<int>(1, 8)(rng);
    auto d = std::uniform_int_distribution<int>(1, 2)(rng);
    auto m = random_partial(rng, n, d);
    EXPECT_TRUE(partially_positive(m).positive);
    auto result = positive_completion(m);
    EXPECT_TRUE(verify_extension(m, result.matrix));
    EXPECT_TRUE(agrees_on_pattern(m, result.matrix));
    EXPECT_GE(oracle::min_eigenvalue(result.matrix),
              -1e-9 * (1.0 + result.matrix.max_diagonal()));
  }
}

TEST(CompletionProperties, DecompositionIsExactAndCliqueSupported)
{
  Rng rng(202);
  for (int sample = 0; sample < 200; ++sample) {
    auto n = std::uniform_int_distribution<int>(1, 8)(rng);
    auto p = random_chordal_pattern(rng, n);
    auto t = random_psd_on(rng, p, sample % 3 != 0);
    auto factors = rank_one_positive_decomposition(t, p);
    EXPECT_LE((outer_sum(factors, n).matrix() - t.matrix()).max_abs(), 1e-8 * (1.0 + t.max_abs()));
    for (auto const& f : factors) EXPECT_TRUE(oracle::inside_some_clique(p, f.support));
  }
}

TEST(CompletionProperties, FourCycleWitnessHasNoCompletion)
{
  auto m = four_cycle_witness();
  ASSERT_TRUE(partially_positive(m).positive);
  double worst = -1e300;
  for (int a = -100; a <= 100; ++a) {
    for (int b = -100; b <= 100; ++b) {
      auto x = a * 1e-2;
      auto y = b * 1e-2;
      auto trial = HermitianMatrix::from_rows({{1, 1, x, -1}, {1, 1, 1, y}, {x, 1, 1, 1}, {-1, y, 1, 1}});
      worst = std::max(worst, oracle::min_eigenvalue(trial));
    }
  }
  EXPECT_LT(worst, -1e-3);
}

TEST(CompletionProperties, IdempotentOnCompletedMatrices)
{
  Rng rng(303);
  for (int sample = 0; sample < 50; ++sample) {
    auto n = std::uniform_int_distribution<int>(1, 7)(rng);
    auto m = random_partial(rng, n, 1);
    auto once = positive_completion(m).matrix;
    auto twice = positive_completion(PartialHermitianMatrix::restrict(once, complete_pattern(n))).matrix;
    EXPECT_EQ(once, twice);
  }
}

TEST(CompletionProperties, MultiplierConsistency)
{
  Rng rng(404);
  for (int sample = 0; sample < 100; ++sample) {
    auto n = std::uniform_int_distribution<int>(1, 7)(rng);
    auto d = std::uniform_int_distribution<int>(1, 2)(rng);
    auto m = random_partial(rng, n, d);
    auto phi = positive_completion(m).matrix;
    auto restricted = PartialHermitianMatrix::restrict(phi, m.pattern(), d);
    auto t = random_psd_on(rng, m.pattern());
    EXPECT_EQ(apply_multiplier(restricted, t), apply_multiplier(m, t));
  }
}
