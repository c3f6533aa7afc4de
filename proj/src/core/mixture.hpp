#ifndef KOPTMIX_MIXTURE_HPP
#define KOPTMIX_MIXTURE_HPP

#include <cstddef>
#include <vector>

#include "core/error.hpp"
#include "core/rational.hpp"

namespace koptmix {

// A point of the simplex: q proportions, each >= 0 up to kCoordSlack,
// summing to 1 within kSumTol. Immutable after construction.
class MixturePoint {
 public:
  static constexpr double kCoordSlack = 1e-12;
  static constexpr double kSumTol = 1e-12;

  explicit MixturePoint(std::vector<double> coords);

  int dim() const { return static_cast<int>(coords_.size()); }
  double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& coords() const { return coords_; }

  // Max-norm distance, used for support-point identity checks.
  double distance_to(const MixturePoint& other) const;

 private:
  std::vector<double> coords_;
};

// Unit vector e_i as a mixture point.
MixturePoint unit_vertex(int q, int i);

// Midpoint of the edge between vertices i and j (i != j).
MixturePoint edge_midpoint(int q, int i, int j);

// Lexicographic-descending comparison on coordinates.
bool lex_descending_less(const MixturePoint& a, const MixturePoint& b);

// An approximate design: support points plus probability weights.
// exact_weights, when non-empty, carries the same weights as exact
// rationals (aligned index-by-index with weights).
class Design {
 public:
  static constexpr double kWeightSumTol = 1e-10;
  static constexpr double kPointIdentityTol = 1e-10;

  Design(int q, std::vector<MixturePoint> points, std::vector<double> weights,
         std::vector<Rational> exact_weights = {});

  // Uniform weights 1/n, carried exactly.
  static Design uniform(int q, std::vector<MixturePoint> points);

  int q() const { return q_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<MixturePoint>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }
  bool has_exact_weights() const { return !exact_weights_.empty(); }
  const std::vector<Rational>& exact_weights() const { return exact_weights_; }

 private:
  int q_;
  std::vector<MixturePoint> points_;
  std::vector<double> weights_;
  std::vector<Rational> exact_weights_;
};

// Per-component bounds for a constrained mixture region.
class ComponentBounds {
 public:
  ComponentBounds(std::vector<double> lower, std::vector<double> upper);

  int dim() const { return static_cast<int>(lower_.size()); }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  double lower_sum() const;
  double upper_sum() const;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
};

}  // namespace koptmix

#endif
