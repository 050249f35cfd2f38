#pragma once

//
// ... Standard header files
//
#include <complex>
#include <optional>
#include <span>
#include <vector>

//
// ... chordext header files
//
#include <chordext/error.hpp>

namespace chordext {

  using Complex = std::complex<double>;

  // Dense row-major complex matrix.
  class Matrix {
  public:
    Matrix() = default;

    Matrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    static Matrix
    identity(int n);

    int
    rows() const noexcept { return rows_; }

    int
    cols() const noexcept { return cols_; }

    Complex&
    operator()(int i, int j) { return data_[offset(i, j)]; }

    Complex const&
    operator()(int i, int j) const { return data_[offset(i, j)]; }

    std::span<Complex const>
    data() const noexcept { return data_; }

    Matrix
    adjoint() const;

    // Rows `rs` and columns `cs`, in the given orders.
    Matrix
    submatrix(std::span<int const> rs, std::span<int const> cs) const;

    double
    max_abs() const noexcept;

    double
    frobenius_norm() const noexcept;

    friend Matrix
    operator*(Matrix const& a, Matrix const& b);

    friend Matrix
    operator+(Matrix const& a, Matrix const& b);

    friend Matrix
    operator-(Matrix const& a, Matrix const& b);

    friend bool
    operator==(Matrix const&, Matrix const&) = default;

  private:
    std::size_t
    offset(int i, int j) const
    {
      return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_)
           + static_cast<std::size_t>(j);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> data_;
  };

  // Square matrix with m(i,j) == conj(m(j,i)) and a real diagonal, held
  // exactly.  Writes go through set(), which updates the mirror entry.
  class HermitianMatrix {
  public:
    HermitianMatrix() = default;

    explicit HermitianMatrix(int n) : m_(n, n) {}

    // Accepts matrices that are Hermitian up to a relative 1e-12 and
    // stores the upper triangle mirrored.  Throws
    // Error(dimension_mismatch) for non-square input and
    // Error(malformed_input) when the asymmetry is larger.
    explicit HermitianMatrix(Matrix const& m);

    static HermitianMatrix
    identity(int n);

    static HermitianMatrix
    diagonal(std::span<double const> values);

    // Real-symmetric convenience constructor from nested rows.
    static HermitianMatrix
    from_rows(std::vector<std::vector<double>> const& rows);

    int
    size() const noexcept { return m_.rows(); }

    Complex
    operator()(int i, int j) const { return m_(i, j); }

    void
    set(int i, int j, Complex value);

    Matrix const&
    matrix() const noexcept { return m_; }

    HermitianMatrix
    principal(std::span<int const> indices) const;

    double
    max_abs() const noexcept { return m_.max_abs(); }

    // Largest real diagonal entry, 0 for the empty matrix.
    double
    max_diagonal() const noexcept;

    friend bool
    operator==(HermitianMatrix const&, HermitianMatrix const&) = default;

  private:
    Matrix m_;
  };

  struct Eigen_decomposition {
    std::vector<double> values;  // ascending
    Matrix vectors;              // unitary, column k pairs with values[k]
  };

  inline constexpr int jacobi_max_sweeps = 100;

  // Cyclic complex Jacobi.  Throws Error(no_convergence).
  Eigen_decomposition
  eigh(HermitianMatrix const& a);

  double
  min_eigenvalue(HermitianMatrix const& a);

  // 1e-9 * (1 + max diagonal entry).
  double
  default_psd_tolerance(HermitianMatrix const& a) noexcept;

  bool
  is_psd(HermitianMatrix const& a, std::optional<double> tol = std::nullopt);

  // Lower-triangular L with L L* == A for PSD A.  Pivots below
  // tol * (max diagonal) are zeroed together with their column; a pivot
  // below -tol * (max diagonal), or a zeroed pivot whose column is not
  // negligible, throws Error(not_psd).
  Matrix
  psd_cholesky(HermitianMatrix const& a, double tol = 1e-9);

  // Eigenvalues with |lambda| <= 1e-12 * max|lambda| are treated as zero.
  HermitianMatrix
  pseudo_inverse(HermitianMatrix const& a);

  // M_cc - M_cb (M_bb)^+ M_bc, where c is the complement of `block`.
  HermitianMatrix
  schur_complement(HermitianMatrix const& a, std::span<int const> block);

  struct RankOneFactor {
    std::vector<Complex> vector;
    std::vector<int> support;
  };

  // Indices where |v_i| exceeds 1e-14 * max|v|.
  std::vector<int>
  support_of(std::span<Complex const> v);

  RankOneFactor
  make_factor(std::vector<Complex> v);

  // sqrt(lambda_k) u_k over the eigenpairs with lambda_k > tol.  Throws
  // Error(not_psd) when the smallest eigenvalue is below -tol.  The
  // default tolerance is default_psd_tolerance(a).
  std::vector<RankOneFactor>
  rank_one_factors(HermitianMatrix const& a,
                   std::optional<double> tol = std::nullopt);

  // Sum of v v* over the factors, as an n x n matrix.
  HermitianMatrix
  outer_sum(std::span<RankOneFactor const> factors, int n);

} // end of namespace chordext
