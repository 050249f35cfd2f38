//
// ... Standard header files
//
#include <algorithm>
#include <cmath>
#include <numeric>

//
// ... chordext header files
//
#include <chordext/linalg.hpp>

namespace chordext {

  namespace {

    void
    require_square_product(Matrix const& a, Matrix const& b)
    {
      if (a.cols() != b.rows()) {
        throw Error(Error_kind::dimension_mismatch,
                    "matrix product with incompatible shapes");
      }
    }

    void
    require_same_shape(Matrix const& a, Matrix const& b)
    {
      if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(Error_kind::dimension_mismatch,
                    "matrix sum with incompatible shapes");
      }
    }

    // Hermitian matrix built from the upper triangle of `m`.
    HermitianMatrix
    from_upper(Matrix const& m)
    {
      HermitianMatrix h(m.rows());
      for (int i = 0; i < m.rows(); ++i) {
        for (int j = i; j < m.cols(); ++j) h.set(i, j, m(i, j));
      }
      return h;
    }

    double
    off_diagonal_norm(Matrix const& a)
    {
      double sum = 0.0;
      for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
          if (i != j) sum += std::norm(a(i, j));
        }
      }
      return std::sqrt(sum);
    }

  } // end of unnamed namespace

  Matrix
  Matrix::identity(int n)
  {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  Matrix
  Matrix::adjoint() const
  {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
      for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    }
    return out;
  }

  Matrix
  Matrix::submatrix(std::span<int const> rs, std::span<int const> cs) const
  {
    Matrix out(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
    for (std::size_t a = 0; a < rs.size(); ++a) {
      for (std::size_t b = 0; b < cs.size(); ++b) {
        out(static_cast<int>(a), static_cast<int>(b)) = (*this)(rs[a], cs[b]);
      }
    }
    return out;
  }

  double
  Matrix::max_abs() const noexcept
  {
    double m = 0.0;
    for (auto const& z : data_) m = std::max(m, std::abs(z));
    return m;
  }

  double
  Matrix::frobenius_norm() const noexcept
  {
    double sum = 0.0;
    for (auto const& z : data_) sum += std::norm(z);
    return std::sqrt(sum);
  }

  Matrix
  operator*(Matrix const& a, Matrix const& b)
  {
    require_square_product(a, b);
    Matrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
      for (int k = 0; k < a.cols(); ++k) {
        auto aik = a(i, k);
        if (aik == Complex{}) continue;
        for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  Matrix
  operator+(Matrix const& a, Matrix const& b)
  {
    require_same_shape(a, b);
    Matrix out = a;
    for (int i = 0; i < a.rows(); ++i) {
      for (int j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
    }
    return out;
  }

  Matrix
  operator-(Matrix const& a, Matrix const& b)
  {
    require_same_shape(a, b);
    Matrix out = a;
    for (int i = 0; i < a.rows(); ++i) {
      for (int j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
    }
    return out;
  }

  HermitianMatrix::HermitianMatrix(Matrix const& m)
    : m_(m.rows(), m.cols())
  {
    if (m.rows() != m.cols()) {
      throw Error(Error_kind::dimension_mismatch, "Hermitian matrix must be square");
    }
    auto limit = 1e-12 * (1.0 + m.max_abs());
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = i; j < m.cols(); ++j) {
        if (std::abs(m(i, j) - std::conj(m(j, i))) > limit) {
          throw Error(Error_kind::malformed_input, "matrix is not Hermitian");
        }
        set(i, j, m(i, j));
      }
    }
  }

  HermitianMatrix
  HermitianMatrix::identity(int n)
  {
    HermitianMatrix h(n);
    for (int i = 0; i < n; ++i) h.set(i, i, 1.0);
    return h;
  }

  HermitianMatrix
  HermitianMatrix::diagonal(std::span<double const> values)
  {
    HermitianMatrix h(static_cast<int>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
      h.set(static_cast<int>(i), static_cast<int>(i), values[i]);
    }
    return h;
  }

  HermitianMatrix
  HermitianMatrix::from_rows(std::vector<std::vector<double>> const& rows)
  {
    auto n = static_cast<int>(rows.size());
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
        throw Error(Error_kind::dimension_mismatch, "rows must form a square matrix");
      }
      for (int j = 0; j < n; ++j) {
        m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
    }
    return HermitianMatrix(m);
  }

  void
  HermitianMatrix::set(int i, int j, Complex value)
  {
    if (i == j) {
      m_(i, i) = value.real();
      return;
    }
    m_(i, j) = value;
    m_(j, i) = std::conj(value);
  }

  HermitianMatrix
  HermitianMatrix::principal(std::span<int const> indices) const
  {
    return from_upper(m_.submatrix(indices, indices));
  }

  double
  HermitianMatrix::max_diagonal() const noexcept
  {
    if (size() == 0) return 0.0;
    double m = m_(0, 0).real();
    for (int i = 1; i < size(); ++i) m = std::max(m, m_(i, i).real());
    return m;
  }

  Eigen_decomposition
  eigh(HermitianMatrix const& h)
  {
    auto n = h.size();
    Matrix a = h.matrix();
    Matrix v = Matrix::identity(n);

    auto target = 1e-13 * a.frobenius_norm();
    bool converged = false;
    for (int sweep = 0; sweep <= jacobi_max_sweeps; ++sweep) {
      if (off_diagonal_norm(a) <= target) {
        converged = true;
        break;
      }
      if (sweep == jacobi_max_sweeps) break;

      for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
          auto apq = a(p, q);
          auto r = std::abs(apq);
          if (r == 0.0) continue;

          // Rotate the phase of a_pq away, then apply a real Jacobi
          // rotation to the resulting real symmetric 2x2 block.
          auto phase = std::conj(apq / r);
          auto theta = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
          auto t = (theta >= 0.0 ? 1.0 : -1.0)
                 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          auto c = 1.0 / std::sqrt(t * t + 1.0);
          auto s = t * c;

          Complex u_pp = c;
          Complex u_pq = s;
          Complex u_qp = -s * phase;
          Complex u_qq = c * phase;

          for (int k = 0; k < n; ++k) {
            auto akp = a(k, p);
            auto akq = a(k, q);
            a(k, p) = akp * u_pp + akq * u_qp;
            a(k, q) = akp * u_pq + akq * u_qq;
          }
          for (int k = 0; k < n; ++k) {
            auto apk = a(p, k);
            auto aqk = a(q, k);
            a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
            a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
          }
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          a(p, p) = a(p, p).real();
          a(q, q) = a(q, q).real();

          for (int k = 0; k < n; ++k) {
            auto vkp = v(k, p);
            auto vkq = v(k, q);
            v(k, p) = vkp * u_pp + vkq * u_qp;
            v(k, q) = vkp * u_pq + vkq * u_qq;
          }
        }
      }
    }
    if (!converged) {
      throw Error(Error_kind::no_convergence,
                  "Jacobi eigensolver did not converge");
    }

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
      [&a](int x, int y) { return a(x, x).real() < a(y, y).real(); });

    Eigen_decomposition out;
    out.values.reserve(perm.size());
    out.vectors = Matrix(n, n);
    for (int k = 0; k < n; ++k) {
      auto src = perm[static_cast<std::size_t>(k)];
      out.values.push_back(a(src, src).real());
      for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, src);
    }
    return out;
  }

  double
  min_eigenvalue(HermitianMatrix const& a)
  {
    if (a.size() == 0) return 0.0;
    return eigh(a).values.front();
  }

  double
  default_psd_tolerance(HermitianMatrix const& a) noexcept
  {
    return 1e-9 * (1.0 + a.max_diagonal());
  }

  bool
  is_psd(HermitianMatrix const& a, std::optional<double> tol)
  {
    auto limit = tol.value_or(default_psd_tolerance(a));
    return min_eigenvalue(a) >= -limit;
  }

  Matrix
  psd_cholesky(HermitianMatrix const& a, double tol)
  {
    auto n = a.size();
    Matrix l(n, n);
    auto scale = std::max(a.max_diagonal(), 0.0);
    auto drop = tol * scale;
    auto column_limit = std::sqrt(tol) * scale;

    for (int j = 0; j < n; ++j) {
      auto pivot = a(j, j).real();
      for (int k = 0; k < j; ++k) pivot -= std::norm(l(j, k));

      if (pivot < -drop) {
        throw Error(Error_kind::not_psd, "negative pivot in Cholesky factorization");
      }

      if (pivot <= drop) {
        // Zero pivot: the remaining column must vanish for A to be PSD.
        for (int i = j + 1; i < n; ++i) {
          auto r = a(i, j);
          for (int k = 0; k < j; ++k) r -= l(i, k) * std::conj(l(j, k));
          if (std::abs(r) > column_limit) {
            throw Error(Error_kind::not_psd,
                        "non-zero column below a vanishing pivot");
          }
        }
        continue;
      }

      auto d = std::sqrt(pivot);
      l(j, j) = d;
      for (int i = j + 1; i < n; ++i) {
        auto r = a(i, j);
        for (int k = 0; k < j; ++k) r -= l(i, k) * std::conj(l(j, k));
        l(i, j) = r / d;
      }
    }
    return l;
  }

  HermitianMatrix
  pseudo_inverse(HermitianMatrix const& a)
  {
    auto n = a.size();
    HermitianMatrix out(n);
    if (n == 0) return out;

    auto eig = eigh(a);
    double largest = 0.0;
    for (auto lambda : eig.values) largest = std::max(largest, std::abs(lambda));
    auto cutoff = 1e-12 * largest;

    Matrix sum(n, n);
    for (int k = 0; k < n; ++k) {
      auto lambda = eig.values[static_cast<std::size_t>(k)];
      if (std::abs(lambda) <= cutoff) continue;
      for (int i = 0; i < n; ++i) {
        auto scaled = eig.vectors(i, k) / lambda;
        for (int j = i; j < n; ++j) sum(i, j) += scaled * std::conj(eig.vectors(j, k));
      }
    }
    return from_upper(sum);
  }

  HermitianMatrix
  schur_complement(HermitianMatrix const& a, std::span<int const> block)
  {
    std::vector<bool> in_block(static_cast<std::size_t>(a.size()), false);
    for (auto b : block) {
      if (b < 0 || b >= a.size()) {
        throw Error(Error_kind::index_out_of_range, "Schur complement block index");
      }
      in_block[static_cast<std::size_t>(b)] = true;
    }
    std::vector<int> keep;
    for (int i = 0; i < a.size(); ++i) {
      if (!in_block[static_cast<std::size_t>(i)]) keep.push_back(i);
    }
    std::vector<int> b(block.begin(), block.end());

    auto const& m = a.matrix();
    auto m_cb = m.submatrix(keep, b);
    auto correction = m_cb * pseudo_inverse(a.principal(b)).matrix() * m_cb.adjoint();
    return from_upper(m.submatrix(keep, keep) - correction);
  }

  std::vector<int>
  support_of(std::span<Complex const> v)
  {
    double largest = 0.0;
    for (auto const& z : v) largest = std::max(largest, std::abs(z));
    std::vector<int> support;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (largest > 0.0 && std::abs(v[i]) > 1e-14 * largest) {
        support.push_back(static_cast<int>(i));
      }
    }
    return support;
  }

  RankOneFactor
  make_factor(std::vector<Complex> v)
  {
    auto support = support_of(v);
    return RankOneFactor{std::move(v), std::move(support)};
  }

  std::vector<RankOneFactor>
  rank_one_factors(HermitianMatrix const& a, std::optional<double> tol)
  {
    auto limit = tol.value_or(default_psd_tolerance(a));
    std::vector<RankOneFactor> out;
    if (a.size() == 0) return out;

    auto eig = eigh(a);
    if (eig.values.front() < -limit) {
      throw Error(Error_kind::not_psd, "matrix has a negative eigenvalue");
    }
    for (int k = a.size() - 1; k >= 0; --k) {
      auto lambda = eig.values[static_cast<std::size_t>(k)];
      if (lambda <= limit) break;
      auto root = std::sqrt(lambda);
      std::vector<Complex> v(static_cast<std::size_t>(a.size()));
      for (int i = 0; i < a.size(); ++i) v[static_cast<std::size_t>(i)] = root * eig.vectors(i, k);
      out.push_back(make_factor(std::move(v)));
    }
    return out;
  }

  HermitianMatrix
  outer_sum(std::span<RankOneFactor const> factors, int n)
  {
    Matrix sum(n, n);
    for (auto const& f : factors) {
      if (static_cast<int>(f.vector.size()) != n) {
        throw Error(Error_kind::dimension_mismatch, "factor length differs from n");
      }
      for (int i = 0; i < n; ++i) {
        auto vi = f.vector[static_cast<std::size_t>(i)];
        if (vi == Complex{}) continue;
        for (int j = i; j < n; ++j) sum(i, j) += vi * std::conj(f.vector[static_cast<std::size_t>(j)]);
      }
    }
    return from_upper(sum);
  }

} // end of namespace chordext
