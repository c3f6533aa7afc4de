#include "core/sym_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace koptmix {

SymMatrix::SymMatrix(int dim) : dim_(dim) {
  if (dim_ < 1) fail(errc::invalid_argument, "matrix dimension must be positive");
  a_.assign(static_cast<std::size_t>(dim_) * static_cast<std::size_t>(dim_), 0.0);
}

SymMatrix SymMatrix::identity(int dim) {
  SymMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix SymMatrix::diagonal(const std::vector<double>& d) {
  SymMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.dim(); ++i) m.set(i, i, d[static_cast<std::size_t>(i)]);
  return m;
}

void SymMatrix::set(int i, int j, double v) {
  a_[idx(i, j)] = v;
  a_[idx(j, i)] = v;
}

void SymMatrix::add(int i, int j, double v) {
  a_[idx(i, j)] += v;
  if (i != j) a_[idx(j, i)] += v;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

SymMatrix SymMatrix::scaled(double c) const {
  SymMatrix m(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j) m.set(i, j, c * (*this)(i, j));
  return m;
}

namespace {

double off_diagonal_norm(const SymMatrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i + 1; j < m.dim(); ++j) s += 2.0 * m(i, j) * m(i, j);
  return std::sqrt(s);
}

// One cyclic sweep of Jacobi rotations over the upper triangle of `a`,
// accumulating rotations into `v` when it is non-null.
void jacobi_sweep(SymMatrix& a, std::vector<double>* v) {
  int n = a.dim();
  auto vat = [&](int r, int k) -> double& {
    return (*v)[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)];
  };
  for (int p = 0; p < n; ++p) {
    for (int q = p + 1; q < n; ++q) {
      double apq = a(p, q);
      if (apq == 0.0) continue;
      double app = a(p, p);
      double aqq = a(q, q);
      double theta = (aqq - app) / (2.0 * apq);
      double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
      double c = 1.0 / std::sqrt(t * t + 1.0);
      double s = t * c;
      double tau = s / (1.0 + c);

      a.set(p, p, app - t * apq);
      a.set(q, q, aqq + t * apq);
      a.set(p, q, 0.0);
      for (int k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        double akp = a(k, p);
        double akq = a(k, q);
        a.set(k, p, akp - s * (akq + tau * akp));
        a.set(k, q, akq + s * (akp - tau * akq));
      }
      if (v) {
        for (int k = 0; k < n; ++k) {
          double vkp = vat(k, p);
          double vkq = vat(k, q);
          vat(k, p) = vkp - s * (vkq + tau * vkp);
          vat(k, q) = vkq + s * (vkp - tau * vkq);
        }
      }
    }
  }
}

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalStop = 1e-14;

void jacobi(SymMatrix a, std::vector<double>& values, std::vector<double>* vectors) {
  int n = a.dim();
  // The Frobenius norm is invariant under the rotations, so the stopping
  // threshold can be fixed up front.
  double stop = kOffDiagonalStop * a.frobenius_norm();
  if (vectors) {
    vectors->assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
      (*vectors)[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)] = 1.0;
  }
  int sweep = 0;
  while (off_diagonal_norm(a) > stop) {
    if (sweep++ >= kMaxSweeps)
      fail(errc::no_convergence,
           "Jacobi eigensolver did not converge in " + std::to_string(kMaxSweeps) + " sweeps");
    jacobi_sweep(a, vectors);
  }
  values.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = a(i, i);

  // Sort descending, permuting vector columns alongside.
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return values[static_cast<std::size_t>(x)] > values[static_cast<std::size_t>(y)];
  });
  std::vector<double> sorted(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) sorted[static_cast<std::size_t>(k)] = values[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
  values = std::move(sorted);
  if (vectors) {
    std::vector<double> vs(vectors->size());
    for (int r = 0; r < n; ++r)
      for (int k = 0; k < n; ++k)
        vs[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(k)] =
            (*vectors)[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(order[static_cast<std::size_t>(k)])];
    *vectors = std::move(vs);
  }
}

}  // namespace

Spectrum spectrum(const SymMatrix& m) {
  Spectrum s;
  jacobi(m, s.eigenvalues, nullptr);
  return s;
}

EigenDecomposition eigen_decomposition(const SymMatrix& m) {
  EigenDecomposition d;
  d.dim = m.dim();
  jacobi(m, d.values, &d.vectors);
  return d;
}

double condition_number(const Spectrum& s) {
  double lmax = s.max();
  double lmin = s.min();
  if (!(lmin > kSingularTol * lmax) || !(lmax > 0.0))
    return std::numeric_limits<double>::infinity();
  return lmax / lmin;
}

double condition_number(const SymMatrix& m) { return condition_number(spectrum(m)); }

double log_det(const Spectrum& s) {
  double lmax = s.max();
  double lmin = s.min();
  if (!(lmin > kSingularTol * lmax) || !(lmax > 0.0))
    return -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (double v : s.eigenvalues) sum += std::log(v);
  return sum;
}

double log_det(const SymMatrix& m) { return log_det(spectrum(m)); }

}  // namespace koptmix
