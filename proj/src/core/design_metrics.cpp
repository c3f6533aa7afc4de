#include "core/design_metrics.hpp"

#include <cmath>
#include <string>

namespace koptmix {

SymMatrix information_matrix(const Design& d, const ModelBasis& b) {
  if (d.q() != b.q())
    fail(errc::dimension_mismatch, "design has q = " + std::to_string(d.q()) + ", basis expects q = " +
                                       std::to_string(b.q()));
  int p = b.size();
  SymMatrix m(p);
  for (std::size_t k = 0; k < d.size(); ++k) {
    double w = d.weights()[k];
    if (w == 0.0) continue;
    std::vector<double> f = b.eval(d.points()[k]);
    for (int i = 0; i < p; ++i)
      for (int j = i; j < p; ++j)
        m.add(i, j, w * f[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(j)]);
  }
  return m;
}

MetricsReport evaluate_design(const Design& d, const ModelBasis& b) {
  SymMatrix m = information_matrix(d, b);
  Spectrum s = spectrum(m);
  MetricsReport r;
  r.p = m.dim();
  r.lambda_max = s.max();
  r.lambda_min = s.min();
  r.kappa = condition_number(s);
  r.log_det = log_det(s);
  return r;
}

double d_efficiency(const Design& candidate, const Design& reference, const ModelBasis& b) {
  double ld_cand = log_det(information_matrix(candidate, b));
  double ld_ref = log_det(information_matrix(reference, b));
  if (std::isinf(ld_cand)) fail(errc::singular_design, "candidate design is singular for this basis");
  if (std::isinf(ld_ref)) fail(errc::singular_design, "reference design is singular for this basis");
  return std::exp((ld_cand - ld_ref) / static_cast<double>(b.size()));
}

double k_efficiency(const Design& reference_k, const Design& other, const ModelBasis& b) {
  double kappa_k = condition_number(information_matrix(reference_k, b));
  double kappa_other = condition_number(information_matrix(other, b));
  if (std::isinf(kappa_k)) fail(errc::singular_design, "reference design is singular for this basis");
  if (std::isinf(kappa_other)) fail(errc::singular_design, "compared design is singular for this basis");
  return std::pow(kappa_k / kappa_other, 1.0 / static_cast<double>(b.size()));
}

}  // namespace koptmix
