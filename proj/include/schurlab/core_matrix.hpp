// Dense complex matrices, the Schur (entrywise) product, and the spectral
// primitives used by every other schurlab header.
//
// Storage is row-major and 0-based; anything that reports an index to a user
// (errors, witnesses, cycles) reports it 1-based.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace schurlab {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An entry that must be nonzero is at or below the absolute floor.
class ZeroEntryError : public Error {
 public:
  ZeroEntryError(std::size_t row, std::size_t col, const std::string& what)
      : Error(what + " at (" + std::to_string(row) + "," + std::to_string(col) + ")"),
        row_(row),
        col_(col) {}
  std::size_t row() const noexcept { return row_; }  // 1-based
  std::size_t col() const noexcept { return col_; }  // 1-based

 private:
  std::size_t row_;
  std::size_t col_;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class NotMultiplicativeError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Tolerance
// ---------------------------------------------------------------------------

/// Relative threshold with an absolute floor: `threshold(s) = max(abs, rel*s)`.
class Tolerance {
 public:
  static constexpr double kDefaultRel = 1e-10;
  static constexpr double kDefaultAbs = 1e-12;

  explicit Tolerance(double rel = kDefaultRel, double abs = kDefaultAbs) : rel_(rel), abs_(abs) {
    if (!std::isfinite(rel) || !std::isfinite(abs) || rel < 0.0 || abs < 0.0)
      throw PreconditionError("tolerance components must be finite and nonnegative");
    if (rel == 0.0 && abs == 0.0)
      throw PreconditionError("tolerance needs a strictly positive component");
  }

  double rel() const noexcept { return rel_; }
  double abs() const noexcept { return abs_; }
  double threshold(double scale) const noexcept { return std::max(abs_, rel_ * scale); }

 private:
  double rel_;
  double abs_;
};

// ---------------------------------------------------------------------------
// ComplexMatrix
// ---------------------------------------------------------------------------

class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  ComplexMatrix(std::size_t rows, std::size_t cols, Complex fill = {})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {
    if (rows == 0 || cols == 0) throw DimensionError("matrix dimensions must be positive");
  }

  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    if (rows_ == 0 || cols_ == 0) throw DimensionError("matrix dimensions must be positive");
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged initializer list");
      data_.insert(data_.end(), row.begin(), row.end());
    }
    check_finite();
  }

  /// Builds from row-major entries; validates shape and finiteness.
  static ComplexMatrix from_entries(std::size_t rows, std::size_t cols, std::vector<Complex> entries) {
    ComplexMatrix m(rows, cols);
    if (entries.size() != rows * cols)
      throw DimensionError("entry count " + std::to_string(entries.size()) + " does not match " +
                           std::to_string(rows) + "x" + std::to_string(cols));
    m.data_ = std::move(entries);
    m.check_finite();
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Complex> entries() const noexcept { return data_; }
  std::span<Complex> entries() noexcept { return data_; }

  bool operator==(const ComplexMatrix&) const = default;

 private:
  void check_finite() const {
    for (const auto& z : data_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw PreconditionError("matrix entries must be finite");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

// ---------------------------------------------------------------------------
// Constructors for the standard matrices
// ---------------------------------------------------------------------------

inline ComplexMatrix all_ones(std::size_t n) { return ComplexMatrix(n, n, Complex{1.0, 0.0}); }

inline ComplexMatrix identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

/// Matrix unit E_ij with 0-based (i, j).
inline ComplexMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
  ComplexMatrix m(n, n);
  m(i, j) = 1.0;
  return m;
}

inline ComplexMatrix diagonal(std::span<const Complex> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

// ---------------------------------------------------------------------------
// Eigen interop
// ---------------------------------------------------------------------------

using EigenMatrix = Eigen::MatrixXcd;
using RowMajorMap =
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

inline EigenMatrix to_eigen(const ComplexMatrix& a) {
  return RowMajorMap(a.entries().data(), static_cast<Eigen::Index>(a.rows()),
                     static_cast<Eigen::Index>(a.cols()));
}

inline ComplexMatrix from_eigen(const EigenMatrix& m) {
  ComplexMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
  return out;
}

// ---------------------------------------------------------------------------
// Elementwise and algebraic helpers
// ---------------------------------------------------------------------------

inline void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
}

inline void require_square(const ComplexMatrix& a, const char* op) {
  if (!a.is_square())
    throw DimensionError(std::string(op) + ": matrix must be square, got " + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()));
}

inline ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "add");
  ComplexMatrix out = a;
  auto dst = out.entries();
  auto src = b.entries();
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] += src[k];
  return out;
}

inline ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "subtract");
  ComplexMatrix out = a;
  auto dst = out.entries();
  auto src = b.entries();
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] -= src[k];
  return out;
}

inline ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (auto& z : out.entries()) z *= s;
  return out;
}

/// Ordinary matrix product.
inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionError("matmul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + ")");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

/// Conjugate transpose A*.
inline ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

/// Entrywise complex conjugate (no transpose).
inline ComplexMatrix conjugate(const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (auto& z : out.entries()) z = std::conj(z);
  return out;
}

inline Complex trace(const ComplexMatrix& a) {
  require_square(a, "trace");
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

/// sup |a_ij|.
inline double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const auto& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

inline double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

inline std::vector<Complex> matvec(const ComplexMatrix& a, std::span<const Complex> x) {
  if (x.size() != a.cols()) throw DimensionError("apply: vector length does not match columns");
  std::vector<Complex> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

inline double vector_norm(std::span<const Complex> x) {
  double s = 0.0;
  for (const auto& z : x) s += std::norm(z);
  return std::sqrt(s);
}

// ---------------------------------------------------------------------------
// Schur product and Schur inverse
// ---------------------------------------------------------------------------

/// A ∘ B = (a_ij b_ij).
inline ComplexMatrix schur_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "schur_product");
  ComplexMatrix out = a;
  auto dst = out.entries();
  auto src = b.entries();
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] *= src[k];
  return out;
}

/// Entrywise reciprocal A^[-1]; any entry with modulus at or below `tol.abs()`
/// is rejected.
inline ComplexMatrix schur_inverse(const ComplexMatrix& a, const Tolerance& tol = Tolerance{}) {
  ComplexMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (std::abs(a(i, j)) <= tol.abs())
        throw ZeroEntryError(i + 1, j + 1, "schur_inverse: zero entry");
      out(i, j) = 1.0 / a(i, j);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Spectral primitives
// ---------------------------------------------------------------------------

/// Singular values in decreasing order.
inline std::vector<double> singular_values(const ComplexMatrix& a) {
  const EigenMatrix m = to_eigen(a);
  Eigen::BDCSVD<EigenMatrix> svd(m);
  if (svd.info() != Eigen::Success) throw ConvergenceError("SVD failed to converge");
  const auto& s = svd.singularValues();
  return {s.data(), s.data() + s.size()};
}

/// Largest singular value.
inline double operator_norm(const ComplexMatrix& a) {
  const auto s = singular_values(a);
  return s.empty() ? 0.0 : s.front();
}

/// Number of singular values above max(abs, rel * sigma_max * max(rows, cols)).
inline std::size_t numerical_rank(const ComplexMatrix& a, const Tolerance& tol = Tolerance{}) {
  const auto s = singular_values(a);
  if (s.empty()) return 0;
  const double cutoff =
      std::max(tol.abs(), tol.rel() * s.front() * static_cast<double>(std::max(a.rows(), a.cols())));
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](double v) { return v > cutoff; }));
}

/// ‖A − A*‖ in Frobenius norm.
inline double hermitian_defect(const ComplexMatrix& a) {
  require_square(a, "hermitian_defect");
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j) - std::conj(a(j, i)));
  return std::sqrt(s);
}

inline bool is_hermitian(const ComplexMatrix& a, const Tolerance& tol = Tolerance{}) {
  return a.is_square() && hermitian_defect(a) <= tol.threshold(frobenius_norm(a));
}

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Eigen-decomposition of the Hermitian part (A + A*)/2.
inline HermitianEigen hermitian_eigen(const ComplexMatrix& a, bool with_vectors = true) {
  require_square(a, "hermitian_eigen");
  const EigenMatrix m = to_eigen(a);
  const EigenMatrix h = (m + m.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<EigenMatrix> es(h, with_vectors ? Eigen::ComputeEigenvectors
                                                                 : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver failed to converge");
  HermitianEigen out;
  out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  if (with_vectors) out.vectors = from_eigen(es.eigenvectors());
  return out;
}

/// Orders eigenvalues by decreasing real part, then decreasing imaginary part.
inline void sort_spectrum(std::vector<Complex>& values) {
  std::sort(values.begin(), values.end(), [](const Complex& x, const Complex& y) {
    if (x.real() != y.real()) return x.real() > y.real();
    return x.imag() > y.imag();
  });
}

/// All n eigenvalues with multiplicity. Hermitian inputs go to the symmetric
/// solver; everything else through Hessenberg reduction and shifted QR.
inline std::vector<Complex> eigenvalues(const ComplexMatrix& a) {
  require_square(a, "eigenvalues");
  std::vector<Complex> values;
  values.reserve(a.rows());
  if (is_hermitian(a)) {
    for (double v : hermitian_eigen(a, false).values) values.emplace_back(v, 0.0);
  } else {
    Eigen::ComplexEigenSolver<EigenMatrix> es(to_eigen(a), false);
    if (es.info() != Eigen::Success) throw ConvergenceError("QR iteration failed to converge");
    const auto& ev = es.eigenvalues();
    values.assign(ev.data(), ev.data() + ev.size());
  }
  sort_spectrum(values);
  return values;
}

/// Eigenvector for the eigenvalue closest to `target`, normalized to unit length.
inline std::vector<Complex> eigenvector_near(const ComplexMatrix& a, Complex target) {
  require_square(a, "eigenvector_near");
  const auto n = static_cast<Eigen::Index>(a.rows());
  Eigen::VectorXcd v;
  if (is_hermitian(a)) {
    const EigenMatrix m = to_eigen(a);
    Eigen::SelfAdjointEigenSolver<EigenMatrix> es((m + m.adjoint()) * 0.5);
    if (es.info() != Eigen::Success) throw ConvergenceError("Hermitian eigensolver failed to converge");
    Eigen::Index best = 0;
    for (Eigen::Index k = 1; k < n; ++k)
      if (std::abs(es.eigenvalues()(k) - target) < std::abs(es.eigenvalues()(best) - target)) best = k;
    v = es.eigenvectors().col(best);
  } else {
    Eigen::ComplexEigenSolver<EigenMatrix> es(to_eigen(a), true);
    if (es.info() != Eigen::Success) throw ConvergenceError("QR iteration failed to converge");
    Eigen::Index best = 0;
    for (Eigen::Index k = 1; k < n; ++k)
      if (std::abs(es.eigenvalues()(k) - target) < std::abs(es.eigenvalues()(best) - target)) best = k;
    v = es.eigenvectors().col(best);
  }
  v.normalize();
  return {v.data(), v.data() + v.size()};
}

/// Greedy multiset matching: after sorting both spectra, each value of `x`
/// takes the nearest unused value of `y`. Returns the largest matched distance.
inline double spectrum_distance(std::vector<Complex> x, std::vector<Complex> y) {
  if (x.size() != y.size()) throw DimensionError("spectrum_distance: multiset sizes differ");
  sort_spectrum(x);
  sort_spectrum(y);
  std::vector<bool> used(y.size(), false);
  double worst = 0.0;
  for (const auto& v : x) {
    std::size_t best = y.size();
    double best_d = 0.0;
    for (std::size_t k = 0; k < y.size(); ++k) {
      if (used[k]) continue;
      const double d = std::abs(v - y[k]);
      if (best == y.size() || d < best_d) {
        best = k;
        best_d = d;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_d);
  }
  return worst;
}

}  // namespace schurlab
