#include "core/mixture.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace koptmix {

namespace {

std::string coord_str(double v) { return std::to_string(v); }

}  // namespace

MixturePoint::MixturePoint(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) fail(errc::invalid_argument, "mixture point needs at least one coordinate");
  double sum = 0.0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!std::isfinite(coords_[i]))
      fail(errc::invalid_argument, "mixture point coordinate " + std::to_string(i) + " is not finite");
    if (coords_[i] < -kCoordSlack)
      fail(errc::invalid_argument, "mixture point coordinate " + std::to_string(i) + " is negative (" +
                                       coord_str(coords_[i]) + ")");
    sum += coords_[i];
  }
  if (std::abs(sum - 1.0) > kSumTol)
    fail(errc::invalid_argument, "mixture point coordinates sum to " + coord_str(sum) + ", not 1");
}

double MixturePoint::distance_to(const MixturePoint& other) const {
  if (other.dim() != dim()) fail(errc::dimension_mismatch, "comparing points of different dimension");
  double d = 0.0;
  for (std::size_t i = 0; i < coords_.size(); ++i)
    d = std::max(d, std::abs(coords_[i] - other.coords_[i]));
  return d;
}

MixturePoint unit_vertex(int q, int i) {
  if (q < 1 || i < 0 || i >= q) fail(errc::invalid_argument, "vertex index out of range");
  std::vector<double> c(static_cast<std::size_t>(q), 0.0);
  c[static_cast<std::size_t>(i)] = 1.0;
  return MixturePoint(std::move(c));
}

MixturePoint edge_midpoint(int q, int i, int j) {
  if (q < 2 || i < 0 || j < 0 || i >= q || j >= q || i == j)
    fail(errc::invalid_argument, "edge midpoint needs two distinct component indices");
  std::vector<double> c(static_cast<std::size_t>(q), 0.0);
  c[static_cast<std::size_t>(i)] = 0.5;
  c[static_cast<std::size_t>(j)] = 0.5;
  return MixturePoint(std::move(c));
}

bool lex_descending_less(const MixturePoint& a, const MixturePoint& b) {
  return std::lexicographical_compare(a.coords().begin(), a.coords().end(), b.coords().begin(),
                                      b.coords().end(), [](double x, double y) { return x > y; });
}

Design::Design(int q, std::vector<MixturePoint> points, std::vector<double> weights,
               std::vector<Rational> exact_weights)
    : q_(q),
      points_(std::move(points)),
      weights_(std::move(weights)),
      exact_weights_(std::move(exact_weights)) {
  if (q_ < 1) fail(errc::invalid_argument, "design needs q >= 1 components");
  if (points_.empty()) fail(errc::invalid_argument, "design needs at least one support point");
  if (points_.size() != weights_.size())
    fail(errc::dimension_mismatch, "design has " + std::to_string(points_.size()) + " points but " +
                                       std::to_string(weights_.size()) + " weights");
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i].dim() != q_)
      fail(errc::dimension_mismatch,
           "support point " + std::to_string(i) + " has dimension " + std::to_string(points_[i].dim()) +
               ", expected " + std::to_string(q_));
  double sum = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!(weights_[i] >= 0.0))
      fail(errc::invalid_argument, "weight " + std::to_string(i) + " is negative");
    sum += weights_[i];
  }
  if (std::abs(sum - 1.0) > kWeightSumTol)
    fail(errc::invalid_argument, "weights sum to " + std::to_string(sum) + ", not 1");
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j)
      if (points_[i].distance_to(points_[j]) <= kPointIdentityTol)
        fail(errc::invalid_argument,
             "support points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
  if (!exact_weights_.empty()) {
    if (exact_weights_.size() != weights_.size())
      fail(errc::dimension_mismatch, "exact weights do not match weight count");
    for (std::size_t i = 0; i < weights_.size(); ++i)
      if (std::abs(exact_weights_[i].value() - weights_[i]) > 1e-9)
        fail(errc::invalid_argument, "exact weight " + std::to_string(i) + " (" + exact_weights_[i].str() +
                                         ") disagrees with its float value");
  }
}

Design Design::uniform(int q, std::vector<MixturePoint> points) {
  std::size_t n = points.size();
  if (n == 0) fail(errc::invalid_argument, "design needs at least one support point");
  Rational w(1, static_cast<std::int64_t>(n));
  std::vector<double> weights(n, w.value());
  std::vector<Rational> exact(n, w);
  return Design(q, std::move(points), std::move(weights), std::move(exact));
}

ComponentBounds::ComponentBounds(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty() || lower_.size() != upper_.size())
    fail(errc::dimension_mismatch, "bounds need matching non-empty lower and upper vectors");
  for (std::size_t i = 0; i < lower_.size(); ++i) {
    if (!std::isfinite(lower_[i]) || !std::isfinite(upper_[i]))
      fail(errc::invalid_argument, "bound " + std::to_string(i) + " is not finite");
    if (lower_[i] < 0.0 || lower_[i] >= 1.0)
      fail(errc::invalid_argument, "lower bound " + std::to_string(i) + " must lie in [0,1)");
    if (upper_[i] <= 0.0 || upper_[i] > 1.0)
      fail(errc::invalid_argument, "upper bound " + std::to_string(i) + " must lie in (0,1]");
    if (lower_[i] > upper_[i])
      fail(errc::invalid_argument, "lower bound " + std::to_string(i) + " exceeds its upper bound");
  }
}

double ComponentBounds::lower_sum() const {
  double s = 0.0;
  for (double v : lower_) s += v;
  return s;
}

double ComponentBounds::upper_sum() const {
  double s = 0.0;
  for (double v : upper_) s += v;
  return s;
}

}  // namespace koptmix
