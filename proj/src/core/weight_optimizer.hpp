#ifndef KOPTMIX_WEIGHT_OPTIMIZER_HPP
#define KOPTMIX_WEIGHT_OPTIMIZER_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "core/design_metrics.hpp"
#include "core/mixture.hpp"
#include "core/scheffe_basis.hpp"

namespace koptmix {

enum class Criterion { K, D };

struct OptimizeSpec {
  Criterion criterion = Criterion::K;
  std::vector<MixturePoint> support;
  ModelBasis basis;
  double tolerance = 1e-9;  // weight-space convergence
  int multistarts = 20;
  std::uint64_t seed = 0;
  bool symmetry_reduction = true;
  int threads = 1;

  OptimizeSpec(Criterion c, std::vector<MixturePoint> sup, ModelBasis b)
      : criterion(c), support(std::move(sup)), basis(b) {}
};

struct OptimizeResult {
  std::vector<double> weights;
  double objective = 0.0;  // kappa for K, -log det for D
  int iterations = 0;
  bool converged = false;
  int starts_used = 0;
};

// kappa(M(w)) for K (infinity when singular), -log det M(w) for D.
double objective_value(Criterion criterion, const std::vector<double>& weights,
                       const std::vector<MixturePoint>& support, const ModelBasis& basis);

// Fixed-support weight optimization. K uses the orbit structure of the
// support when symmetry_reduction is on (golden-section for two weight
// classes, simplex descent on softmax-reparameterized class weights
// otherwise); D runs the multiplicative reweighting iteration. The result
// is deterministic for a fixed seed, independent of thread count.
OptimizeResult optimize_weights(const OptimizeSpec& spec);

struct GoldenResult {
  double x = 0.0;
  double fx = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Golden-section minimization on [lo, hi]; assumes a unimodal objective,
// returns the best bracket midpoint otherwise.
GoldenResult golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                     double x_tol, int max_iterations = 200);

struct SimplexSearchResult {
  std::vector<double> x;
  double fx = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Nelder-Mead downhill simplex.
SimplexSearchResult nelder_mead_minimize(const std::function<double(const std::vector<double>&)>& f,
                                         const std::vector<double>& x0, double step, double x_tol,
                                         int max_iterations);

}  // namespace koptmix

#endif
