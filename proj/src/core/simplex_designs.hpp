#ifndef KOPTMIX_SIMPLEX_DESIGNS_HPP
#define KOPTMIX_SIMPLEX_DESIGNS_HPP

#include <vector>

#include "core/mixture.hpp"

namespace koptmix {

// All points with coordinates in {0, 1/m, ..., 1} summing to 1, in
// lexicographic-descending order. Count is C(q+m-1, m).
std::vector<MixturePoint> simplex_lattice(int q, int m);

// The q vertices followed by the barycenters of every component subset of
// size k = 2..q (subsets in lexicographic order per k). Count is 2^q - 1.
std::vector<MixturePoint> simplex_centroid(int q);

// Tolerance used when checking a point against its bounds.
inline constexpr double kFeasibilityTol = 1e-10;

// x'_i = (x_i - L_i) / (1 - sum L)
MixturePoint to_pseudo_lower(const MixturePoint& x, const ComponentBounds& b);
// x_i  = L_i + (1 - sum L) * x'_i
MixturePoint from_pseudo_lower(const MixturePoint& xp, const ComponentBounds& b);
// x*_i = (U_i - x_i) / (sum U - 1)
MixturePoint to_pseudo_upper(const MixturePoint& x, const ComponentBounds& b);
// x_i  = U_i - (sum U - 1) * x*_i
MixturePoint from_pseudo_upper(const MixturePoint& xs, const ComponentBounds& b);

enum class TransformDirection { ToPseudoLower, FromPseudoLower, ToPseudoUpper, FromPseudoUpper };

// Pointwise transform of a design; weights are carried over unchanged.
Design transform_design(const Design& d, const ComponentBounds& b, TransformDirection direction);

}  // namespace koptmix

#endif
