#ifndef KOPTMIX_DESIGN_METRICS_HPP
#define KOPTMIX_DESIGN_METRICS_HPP

#include "core/mixture.hpp"
#include "core/scheffe_basis.hpp"
#include "core/sym_matrix.hpp"

namespace koptmix {

// M(w) = sum_i w_i f(x_i) f(x_i)^T
SymMatrix information_matrix(const Design& d, const ModelBasis& b);

struct MetricsReport {
  int p = 0;
  double lambda_max = 0.0;
  double lambda_min = 0.0;
  double kappa = 0.0;    // +inf when singular
  double log_det = 0.0;  // -inf when singular
};

MetricsReport evaluate_design(const Design& d, const ModelBasis& b);

// (det M(candidate) / det M(reference))^(1/p), computed in the log domain.
double d_efficiency(const Design& candidate, const Design& reference, const ModelBasis& b);

// (kappa(M(reference_k)) / kappa(M(other)))^(1/p). The condition-number-
// optimal design goes in the numerator; values near 1 mean `other` loses
// little conditioning.
double k_efficiency(const Design& reference_k, const Design& other, const ModelBasis& b);

}  // namespace koptmix

#endif
