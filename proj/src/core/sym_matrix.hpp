#ifndef KOPTMIX_SYM_MATRIX_HPP
#define KOPTMIX_SYM_MATRIX_HPP

#include <vector>

#include "core/error.hpp"

namespace koptmix {

// Dense symmetric matrix with full row-major storage; writes keep both
// triangles in sync so symmetry holds by construction.
class SymMatrix {
 public:
  explicit SymMatrix(int dim);

  static SymMatrix identity(int dim);
  static SymMatrix diagonal(const std::vector<double>& d);

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, double v);
  void add(int i, int j, double v);

  double trace() const;
  double frobenius_norm() const;
  SymMatrix scaled(double c) const;

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(j);
  }

  int dim_;
  std::vector<double> a_;
};

// Eigenvalues sorted descending.
struct Spectrum {
  std::vector<double> eigenvalues;

  double max() const { return eigenvalues.front(); }
  double min() const { return eigenvalues.back(); }
};

// Full decomposition: values[k] pairs with the k-th column of vectors
// (row-major p x p), values sorted descending.
struct EigenDecomposition {
  std::vector<double> values;
  std::vector<double> vectors;
  int dim = 0;

  double vector_entry(int row, int k) const {
    return vectors[static_cast<std::size_t>(row) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(k)];
  }
};

// Relative threshold below which the smallest eigenvalue is treated as zero.
inline constexpr double kSingularTol = 1e-12;

// Cyclic Jacobi iteration. Stops once the off-diagonal Frobenius norm
// drops below 1e-14 * ||M||_F; reports failure to converge after 100
// sweeps instead of returning a half-finished spectrum.
Spectrum spectrum(const SymMatrix& m);
EigenDecomposition eigen_decomposition(const SymMatrix& m);

// lambda_max / lambda_min, or +infinity when the matrix is singular
// (lambda_min <= kSingularTol * lambda_max).
double condition_number(const SymMatrix& m);
double condition_number(const Spectrum& s);

// Sum of log eigenvalues, or -infinity when singular.
double log_det(const SymMatrix& m);
double log_det(const Spectrum& s);

}  // namespace koptmix

#endif
