#include "core/weight_optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "core/k_optimal.hpp"

namespace koptmix {

namespace {

constexpr double kWeightClamp = 1e-12;
constexpr double kEndpointInset = 1e-9;

SymMatrix info_from_weights(const std::vector<MixturePoint>& support, const std::vector<double>& weights,
                            const ModelBasis& basis) {
  int p = basis.size();
  SymMatrix m(p);
  for (std::size_t k = 0; k < support.size(); ++k) {
    double w = weights[k];
    if (w == 0.0) continue;
    std::vector<double> f = basis.eval(support[k]);
    for (int i = 0; i < p; ++i)
      for (int j = i; j < p; ++j)
        m.add(i, j, w * f[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(j)]);
  }
  return m;
}

double kappa_objective(const std::vector<MixturePoint>& support, const std::vector<double>& weights,
                       const ModelBasis& basis) {
  return condition_number(spectrum(info_from_weights(support, weights, basis)));
}

std::vector<double> softmax(const std::vector<double>& z) {
  double zmax = *std::max_element(z.begin(), z.end());
  std::vector<double> w(z.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    w[i] = std::exp(z[i] - zmax);
    sum += w[i];
  }
  for (double& v : w) v /= sum;
  return w;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double uniform01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

// Dirichlet(1) draw: normalized unit exponentials.
std::vector<double> dirichlet_draw(std::mt19937_64& rng, std::size_t n) {
  std::vector<double> g(n);
  double sum = 0.0;
  for (double& v : g) {
    v = -std::log(uniform01(rng));
    sum += v;
  }
  for (double& v : g) v /= sum;
  return g;
}

struct StartOutcome {
  double fx = std::numeric_limits<double>::infinity();
  std::vector<double> x;
  int iterations = 0;
  bool converged = false;
};

// Runs the per-start payload for starts 0..count-1 on up to `threads`
// workers; outcomes land in a start-indexed vector, so the subsequent
// best-of reduction is identical to a sequential run.
std::vector<StartOutcome> run_starts(int count, int threads,
                                     const std::function<StartOutcome(int)>& payload) {
  std::vector<StartOutcome> outcomes(static_cast<std::size_t>(count));
  int workers = std::max(1, std::min(threads, count));
  if (workers == 1) {
    for (int s = 0; s < count; ++s) outcomes[static_cast<std::size_t>(s)] = payload(s);
    return outcomes;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (int s = next.fetch_add(1); s < count; s = next.fetch_add(1))
        outcomes[static_cast<std::size_t>(s)] = payload(s);
    });
  for (std::thread& t : pool) t.join();
  return outcomes;
}

// Multistart Nelder-Mead over softmax logits of `dim` nonnegative weights
// summing to one. `weights_to_objective` maps the softmax output to the
// criterion value.
StartOutcome multistart_simplex_search(int dim, const OptimizeSpec& spec,
                                       const std::function<double(const std::vector<double>&)>& objective_of_weights,
                                       int* total_iterations, int* starts_used) {
  auto objective_of_logits = [&](const std::vector<double>& z) { return objective_of_weights(softmax(z)); };
  int max_iter = 2000 + 500 * dim;
  auto payload = [&](int s) {
    std::vector<double> z0(static_cast<std::size_t>(dim), 0.0);
    if (s > 0) {
      std::mt19937_64 rng(mix_seed(spec.seed, static_cast<std::uint64_t>(s)));
      std::vector<double> w0 = dirichlet_draw(rng, static_cast<std::size_t>(dim));
      for (std::size_t i = 0; i < w0.size(); ++i) z0[i] = std::log(w0[i]);
    }
    SimplexSearchResult r = nelder_mead_minimize(objective_of_logits, z0, 0.5, spec.tolerance, max_iter);
    StartOutcome o;
    o.fx = r.fx;
    o.x = softmax(r.x);
    o.iterations = r.iterations;
    o.converged = r.converged;
    return o;
  };
  std::vector<StartOutcome> outcomes = run_starts(spec.multistarts, spec.threads, payload);
  StartOutcome best = outcomes.front();
  *total_iterations = 0;
  for (const StartOutcome& o : outcomes) {
    *total_iterations += o.iterations;
    if (o.fx < best.fx) best = o;  // ties keep the lowest start index
  }
  *starts_used = spec.multistarts;
  return best;
}

std::vector<double> clamp_and_renormalize(std::vector<double> w) {
  double sum = 0.0;
  for (double& v : w) {
    if (v < kWeightClamp) v = 0.0;
    sum += v;
  }
  for (double& v : w) v /= sum;
  return w;
}

OptimizeResult optimize_k(const OptimizeSpec& spec, const std::vector<MixturePoint>& support) {
  std::size_t n = support.size();
  OptimizeResult res;
  auto point_objective = [&](const std::vector<double>& w) { return kappa_objective(support, w, spec.basis); };

  if (spec.symmetry_reduction) {
    std::vector<std::vector<std::size_t>> orbits = permutation_orbits(support);
    std::size_t k = orbits.size();
    std::vector<std::size_t> class_of(n);
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t i : orbits[c]) class_of[i] = c;
    auto class_to_point_weights = [&](const std::vector<double>& class_totals) {
      std::vector<double> w(n);
      for (std::size_t i = 0; i < n; ++i)
        w[i] = class_totals[class_of[i]] / static_cast<double>(orbits[class_of[i]].size());
      return w;
    };

    if (k == 1) {
      std::vector<double> w(n, 1.0 / static_cast<double>(n));
      res.objective = point_objective(w);
      if (std::isinf(res.objective))
        fail(errc::singular_design, "every probed weight vector yields a singular information matrix");
      res.weights = std::move(w);
      res.iterations = 0;
      res.converged = true;
      res.starts_used = 1;
      return res;
    }
    if (k == 2) {
      auto f = [&](double s) { return point_objective(class_to_point_weights({1.0 - s, s})); };
      GoldenResult g = golden_section_minimize(f, kEndpointInset, 1.0 - kEndpointInset, spec.tolerance);
      if (std::isinf(g.fx))
        fail(errc::singular_design, "every probed weight vector yields a singular information matrix");
      res.weights = class_to_point_weights({1.0 - g.x, g.x});
      res.objective = g.fx;
      res.iterations = g.iterations;
      res.converged = g.converged;
      res.starts_used = 1;
      return res;
    }
    auto objective_of_class_totals = [&](const std::vector<double>& t) {
      return point_objective(class_to_point_weights(t));
    };
    StartOutcome best = multistart_simplex_search(static_cast<int>(k), spec, objective_of_class_totals,
                                                  &res.iterations, &res.starts_used);
    if (std::isinf(best.fx))
      fail(errc::singular_design, "every probed weight vector yields a singular information matrix");
    res.weights = class_to_point_weights(best.x);
    res.objective = best.fx;
    res.converged = best.converged;
    return res;
  }

  StartOutcome best = multistart_simplex_search(static_cast<int>(n), spec, point_objective,
                                                &res.iterations, &res.starts_used);
  if (std::isinf(best.fx))
    fail(errc::singular_design, "every probed weight vector yields a singular information matrix");
  res.weights = best.x;
  res.objective = best.fx;
  res.converged = best.converged;
  return res;
}

// Multiplicative reweighting for the D criterion:
// w_i <- w_i * f(x_i)^T M(w)^{-1} f(x_i) / p. Monotone in log det and
// stays on the simplex, so only the stopping rule is tunable.
OptimizeResult optimize_d(const OptimizeSpec& spec, const std::vector<MixturePoint>& support) {
  std::size_t n = support.size();
  int p = spec.basis.size();
  std::vector<std::vector<double>> f(n);
  for (std::size_t i = 0; i < n; ++i) f[i] = spec.basis.eval(support[i]);

  std::vector<double> w(n, 1.0 / static_cast<double>(n));
  constexpr int kMaxIterations = 50000;
  OptimizeResult res;
  res.starts_used = 1;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    EigenDecomposition eig = eigen_decomposition(info_from_weights(support, w, spec.basis));
    if (!(eig.values.back() > kSingularTol * eig.values.front()))
      fail(errc::singular_design, "every probed weight vector yields a singular information matrix");
    double delta = 0.0;
    std::vector<double> w_next(n);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double d = 0.0;
      for (int k = 0; k < p; ++k) {
        double proj = 0.0;
        for (int r = 0; r < p; ++r) proj += eig.vector_entry(r, k) * f[i][static_cast<std::size_t>(r)];
        d += proj * proj / eig.values[static_cast<std::size_t>(k)];
      }
      w_next[i] = w[i] * d / static_cast<double>(p);
      sum += w_next[i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      w_next[i] /= sum;
      delta = std::max(delta, std::abs(w_next[i] - w[i]));
    }
    w = std::move(w_next);
    res.iterations = iter + 1;
    if (delta < spec.tolerance) {
      res.converged = true;
      break;
    }
  }
  res.objective = -log_det(info_from_weights(support, w, spec.basis));
  res.weights = std::move(w);
  return res;
}

}  // namespace

double objective_value(Criterion criterion, const std::vector<double>& weights,
                       const std::vector<MixturePoint>& support, const ModelBasis& basis) {
  if (weights.size() != support.size())
    fail(errc::dimension_mismatch, "weight count does not match support size");
  if (support.empty()) fail(errc::invalid_argument, "support is empty");
  double sum = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0)) fail(errc::invalid_argument, "weights must be nonnegative");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-10) fail(errc::invalid_argument, "weights must sum to 1");
  for (const MixturePoint& x : support)
    if (x.dim() != basis.q()) fail(errc::dimension_mismatch, "support point dimension does not match basis");
  Spectrum s = spectrum(info_from_weights(support, weights, basis));
  if (criterion == Criterion::K) return condition_number(s);
  return -log_det(s);
}

OptimizeResult optimize_weights(const OptimizeSpec& spec) {
  std::size_t n = spec.support.size();
  if (n == 0) fail(errc::invalid_argument, "support is empty");
  if (!(spec.tolerance > 0.0)) fail(errc::invalid_argument, "tolerance must be positive");
  if (spec.multistarts < 1) fail(errc::invalid_argument, "multistarts must be >= 1");
  for (const MixturePoint& x : spec.support)
    if (x.dim() != spec.basis.q())
      fail(errc::dimension_mismatch, "support point dimension does not match basis");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (spec.support[i].distance_to(spec.support[j]) <= Design::kPointIdentityTol)
        fail(errc::invalid_argument,
             "support points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

  // Work in a canonical support order so the result is equivariant under
  // permutations of the caller's point order.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lex_descending_less(spec.support[b], spec.support[a]); });
  std::vector<MixturePoint> canon;
  canon.reserve(n);
  for (std::size_t i : order) canon.push_back(spec.support[i]);

  OptimizeResult res =
      spec.criterion == Criterion::D ? optimize_d(spec, canon) : optimize_k(spec, canon);

  res.weights = clamp_and_renormalize(std::move(res.weights));
  std::vector<double> weights(n);
  for (std::size_t i = 0; i < n; ++i) weights[order[i]] = res.weights[i];
  res.weights = std::move(weights);
  return res;
}

GoldenResult golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                     double x_tol, int max_iterations) {
  if (!(lo < hi)) fail(errc::invalid_argument, "golden-section bracket is empty");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  GoldenResult res;
  for (int i = 0; i < max_iterations; ++i) {
    res.iterations = i + 1;
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    if (b - a < x_tol) {
      res.converged = true;
      break;
    }
  }
  res.x = 0.5 * (a + b);
  res.fx = f(res.x);
  return res;
}

SimplexSearchResult nelder_mead_minimize(const std::function<double(const std::vector<double>&)>& f,
                                         const std::vector<double>& x0, double step, double x_tol,
                                         int max_iterations) {
  const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
  std::size_t dim = x0.size();
  if (dim == 0) fail(errc::invalid_argument, "simplex search needs at least one variable");

  std::vector<std::vector<double>> verts(dim + 1, x0);
  for (std::size_t i = 0; i < dim; ++i) verts[i + 1][i] += step;
  std::vector<double> fv(dim + 1);
  for (std::size_t i = 0; i <= dim; ++i) fv[i] = f(verts[i]);

  auto order_vertices = [&] {
    std::vector<std::size_t> idx(dim + 1);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return fv[a] < fv[b]; });
    std::vector<std::vector<double>> vs(dim + 1);
    std::vector<double> fs(dim + 1);
    for (std::size_t i = 0; i <= dim; ++i) {
      vs[i] = verts[idx[i]];
      fs[i] = fv[idx[i]];
    }
    verts = std::move(vs);
    fv = std::move(fs);
  };
  auto diameter = [&] {
    double d = 0.0;
    for (std::size_t i = 1; i <= dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) d = std::max(d, std::abs(verts[i][j] - verts[0][j]));
    return d;
  };

  SimplexSearchResult res;
  for (int iter = 0; iter < max_iterations; ++iter) {
    order_vertices();
    res.iterations = iter + 1;
    if (diameter() < x_tol) {
      res.converged = true;
      break;
    }
    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) centroid[j] += verts[i][j] / static_cast<double>(dim);

    auto blend = [&](double t) {
      std::vector<double> x(dim);
      for (std::size_t j = 0; j < dim; ++j) x[j] = centroid[j] + t * (verts[dim][j] - centroid[j]);
      return x;
    };
    std::vector<double> reflected = blend(-alpha);
    double fr = f(reflected);
    if (fr < fv[0]) {
      std::vector<double> expanded = blend(-alpha * gamma);
      double fe = f(expanded);
      if (fe < fr) {
        verts[dim] = std::move(expanded);
        fv[dim] = fe;
      } else {
        verts[dim] = std::move(reflected);
        fv[dim] = fr;
      }
      continue;
    }
    if (fr < fv[dim - 1]) {
      verts[dim] = std::move(reflected);
      fv[dim] = fr;
      continue;
    }
    std::vector<double> contracted = blend(fr < fv[dim] ? -rho : rho);
    double fc = f(contracted);
    if (fc < std::min(fr, fv[dim])) {
      verts[dim] = std::move(contracted);
      fv[dim] = fc;
      continue;
    }
    for (std::size_t i = 1; i <= dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) verts[i][j] = verts[0][j] + sigma * (verts[i][j] - verts[0][j]);
      fv[i] = f(verts[i]);
    }
  }
  order_vertices();
  res.x = verts[0];
  res.fx = fv[0];
  return res;
}

}  // namespace koptmix
