#include "core/simplex_designs.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

namespace koptmix {

namespace {

// Recursive composition enumeration: leading coordinate runs from the
// largest remaining numerator down to 0, which yields lexicographic-
// descending point order directly.
void enumerate_compositions(int q, int remaining, int m, std::vector<int>& current,
                            std::vector<MixturePoint>& out) {
  if (static_cast<int>(current.size()) == q - 1) {
    current.push_back(remaining);
    std::vector<double> coords(current.size());
    for (std::size_t i = 0; i < current.size(); ++i)
      coords[i] = static_cast<double>(current[i]) / static_cast<double>(m);
    out.emplace_back(std::move(coords));
    current.pop_back();
    return;
  }
  for (int c = remaining; c >= 0; --c) {
    current.push_back(c);
    enumerate_compositions(q, remaining - c, m, current, out);
    current.pop_back();
  }
}

MixturePoint subset_barycenter(int q, const std::vector<int>& subset) {
  std::vector<double> coords(static_cast<std::size_t>(q), 0.0);
  double v = 1.0 / static_cast<double>(subset.size());
  for (int i : subset) coords[static_cast<std::size_t>(i)] = v;
  return MixturePoint(std::move(coords));
}

// k-subsets of {0..q-1} in lexicographic order.
void for_each_subset(int q, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == q - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// Clamp round-off negatives to zero and rescale so the coordinates sum to
// 1 exactly; inputs are already validated, so any residue here is within
// the feasibility tolerance.
MixturePoint finish_point(std::vector<double> coords) {
  double sum = 0.0;
  for (double& c : coords) {
    if (c < 0.0) c = 0.0;
    sum += c;
  }
  if (!(sum > 0.0)) fail(errc::out_of_region, "transformed point collapsed to zero");
  for (double& c : coords) c /= sum;
  return MixturePoint(std::move(coords));
}

}  // namespace

std::vector<MixturePoint> simplex_lattice(int q, int m) {
  if (q < 1) fail(errc::invalid_argument, "lattice needs q >= 1");
  if (m < 1) fail(errc::invalid_argument, "lattice needs m >= 1");
  std::vector<MixturePoint> out;
  std::vector<int> current;
  current.reserve(static_cast<std::size_t>(q));
  enumerate_compositions(q, m, m, current, out);
  return out;
}

std::vector<MixturePoint> simplex_centroid(int q) {
  if (q < 1) fail(errc::invalid_argument, "centroid design needs q >= 1");
  std::vector<MixturePoint> out;
  out.reserve((1u << q) - 1);
  for (int k = 1; k <= q; ++k)
    for_each_subset(q, k, [&](const std::vector<int>& subset) { out.push_back(subset_barycenter(q, subset)); });
  return out;
}

MixturePoint to_pseudo_lower(const MixturePoint& x, const ComponentBounds& b) {
  if (x.dim() != b.dim()) fail(errc::dimension_mismatch, "point and bounds dimension differ");
  double denom = 1.0 - b.lower_sum();
  if (denom <= 0.0)
    fail(errc::infeasible_bounds, "lower bounds sum to " + std::to_string(b.lower_sum()) + " (needs < 1)");
  std::vector<double> coords(static_cast<std::size_t>(x.dim()));
  for (int i = 0; i < x.dim(); ++i) {
    double li = b.lower()[static_cast<std::size_t>(i)];
    if (x[i] < li - kFeasibilityTol)
      fail(errc::out_of_region, "coordinate " + std::to_string(i) + " (" + std::to_string(x[i]) +
                                    ") is below its lower bound " + std::to_string(li));
    coords[static_cast<std::size_t>(i)] = (x[i] - li) / denom;
  }
  return finish_point(std::move(coords));
}

MixturePoint from_pseudo_lower(const MixturePoint& xp, const ComponentBounds& b) {
  if (xp.dim() != b.dim()) fail(errc::dimension_mismatch, "point and bounds dimension differ");
  double denom = 1.0 - b.lower_sum();
  if (denom <= 0.0)
    fail(errc::infeasible_bounds, "lower bounds sum to " + std::to_string(b.lower_sum()) + " (needs < 1)");
  std::vector<double> coords(static_cast<std::size_t>(xp.dim()));
  for (int i = 0; i < xp.dim(); ++i)
    coords[static_cast<std::size_t>(i)] = b.lower()[static_cast<std::size_t>(i)] + denom * xp[i];
  return finish_point(std::move(coords));
}

MixturePoint to_pseudo_upper(const MixturePoint& x, const ComponentBounds& b) {
  if (x.dim() != b.dim()) fail(errc::dimension_mismatch, "point and bounds dimension differ");
  double denom = b.upper_sum() - 1.0;
  if (denom <= 0.0)
    fail(errc::infeasible_bounds, "upper bounds sum to " + std::to_string(b.upper_sum()) + " (needs > 1)");
  std::vector<double> coords(static_cast<std::size_t>(x.dim()));
  for (int i = 0; i < x.dim(); ++i) {
    double ui = b.upper()[static_cast<std::size_t>(i)];
    if (x[i] > ui + kFeasibilityTol)
      fail(errc::out_of_region, "coordinate " + std::to_string(i) + " (" + std::to_string(x[i]) +
                                    ") is above its upper bound " + std::to_string(ui));
    coords[static_cast<std::size_t>(i)] = (ui - x[i]) / denom;
  }
  return finish_point(std::move(coords));
}

MixturePoint from_pseudo_upper(const MixturePoint& xs, const ComponentBounds& b) {
  if (xs.dim() != b.dim()) fail(errc::dimension_mismatch, "point and bounds dimension differ");
  double denom = b.upper_sum() - 1.0;
  if (denom <= 0.0)
    fail(errc::infeasible_bounds, "upper bounds sum to " + std::to_string(b.upper_sum()) + " (needs > 1)");
  std::vector<double> coords(static_cast<std::size_t>(xs.dim()));
  for (int i = 0; i < xs.dim(); ++i) {
    double v = b.upper()[static_cast<std::size_t>(i)] - denom * xs[i];
    if (v < -kFeasibilityTol)
      fail(errc::out_of_region, "pseudo point maps outside the simplex at coordinate " + std::to_string(i));
    coords[static_cast<std::size_t>(i)] = v;
  }
  return finish_point(std::move(coords));
}

Design transform_design(const Design& d, const ComponentBounds& b, TransformDirection direction) {
  std::vector<MixturePoint> points;
  points.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    try {
      switch (direction) {
        case TransformDirection::ToPseudoLower: points.push_back(to_pseudo_lower(d.points()[i], b)); break;
        case TransformDirection::FromPseudoLower: points.push_back(from_pseudo_lower(d.points()[i], b)); break;
        case TransformDirection::ToPseudoUpper: points.push_back(to_pseudo_upper(d.points()[i], b)); break;
        case TransformDirection::FromPseudoUpper: points.push_back(from_pseudo_upper(d.points()[i], b)); break;
      }
    } catch (const Error& e) {
      throw Error(e.code(), "point " + std::to_string(i) + ": " + e.what());
    }
  }
  return Design(d.q(), std::move(points), d.weights(), d.exact_weights());
}

}  // namespace koptmix
