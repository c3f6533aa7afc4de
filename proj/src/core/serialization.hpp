#ifndef KOPTMIX_SERIALIZATION_HPP
#define KOPTMIX_SERIALIZATION_HPP

#include <string>

#include "core/design_metrics.hpp"
#include "core/mixture.hpp"
#include "core/weight_optimizer.hpp"

namespace koptmix {

// Design JSON: {"q": 3, "points": [[1,0,0], ...], "weights": [...]}.
// Weights are optional on input (uniform when absent). An optional
// "weights_exact" array of rational strings ("17/99") travels alongside
// the float weights and wins when both are present. Parsed points and
// weights are renormalized when within 1e-8 of the simplex, which lets
// 10-significant-digit output round-trip.
Design design_from_json(const std::string& text);
std::string design_to_json(const Design& d);

// CSV: header x1..xq,weight; one row per support point; LF endings.
std::string design_to_csv(const Design& d);

// Bounds JSON: {"lower": [...], "upper": [...]}; either key may be
// omitted (defaults: zeros / ones).
ComponentBounds bounds_from_json(const std::string& text);

std::string metrics_to_json(const MetricsReport& r);

std::string optimize_result_to_json(const OptimizeResult& r);

}  // namespace koptmix

#endif
