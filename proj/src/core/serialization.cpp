#include "core/serialization.hpp"

#include <cmath>
#include <cstddef>
#include <sstream>

#include <json.hpp>

#include "core/format.hpp"

namespace koptmix {

namespace {

using nlohmann::ordered_json;

constexpr double kParseNormalizeTol = 1e-8;

ordered_json parse(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse_error, "input is not valid JSON");
  return j;
}

std::vector<double> number_array(const ordered_json& j, const std::string& what) {
  if (!j.is_array()) fail(errc::parse_error, what + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number()) fail(errc::parse_error, what + " must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

// Accept small print/round-off residue, then restore the exact-simplex
// invariants expected by the core types.
std::vector<double> normalize_simplex_vector(std::vector<double> v, const std::string& what) {
  double sum = 0.0;
  for (double& c : v) {
    if (c < 0.0) {
      if (c < -kParseNormalizeTol)
        fail(errc::invalid_argument, what + " has a negative entry (" + format_sig(c) + ")");
      c = 0.0;
    }
    sum += c;
  }
  if (std::abs(sum - 1.0) > kParseNormalizeTol)
    fail(errc::invalid_argument, what + " sums to " + format_sig(sum) + ", not 1");
  for (double& c : v) c /= sum;
  return v;
}

ordered_json round10(double v) { return ordered_json(round_sig(v)); }

}  // namespace

Design design_from_json(const std::string& text) {
  ordered_json j = parse(text);
  if (!j.is_object()) fail(errc::parse_error, "design must be a JSON object");
  if (!j.contains("q") || !j["q"].is_number_integer())
    fail(errc::parse_error, "design needs an integer \"q\" field");
  int q = j["q"].get<int>();
  if (q < 1) fail(errc::invalid_argument, "design needs q >= 1");
  if (!j.contains("points")) fail(errc::parse_error, "design needs a \"points\" array");

  std::vector<MixturePoint> points;
  for (std::size_t i = 0; i < j["points"].size(); ++i) {
    std::vector<double> coords = number_array(j["points"][i], "point " + std::to_string(i));
    if (static_cast<int>(coords.size()) != q)
      fail(errc::dimension_mismatch, "point " + std::to_string(i) + " has " +
                                         std::to_string(coords.size()) + " coordinates, expected " +
                                         std::to_string(q));
    points.emplace_back(normalize_simplex_vector(std::move(coords), "point " + std::to_string(i)));
  }
  if (points.empty()) fail(errc::invalid_argument, "design needs at least one support point");

  std::vector<Rational> exact;
  if (j.contains("weights_exact")) {
    if (!j["weights_exact"].is_array()) fail(errc::parse_error, "weights_exact must be an array");
    for (const auto& v : j["weights_exact"]) {
      if (!v.is_string()) fail(errc::parse_error, "weights_exact must contain rational strings");
      exact.push_back(parse_rational(v.get<std::string>()));
    }
    if (exact.size() != points.size())
      fail(errc::dimension_mismatch, "weights_exact length does not match point count");
  }

  std::vector<double> weights;
  if (!exact.empty()) {
    weights.reserve(exact.size());
    for (const Rational& r : exact) {
      if (r.num() < 0) fail(errc::invalid_argument, "weights must be nonnegative");
      weights.push_back(r.value());
    }
    if (j.contains("weights")) {
      std::vector<double> stated = number_array(j["weights"], "weights");
      if (stated.size() != weights.size())
        fail(errc::dimension_mismatch, "weights length does not match point count");
      for (std::size_t i = 0; i < stated.size(); ++i)
        if (std::abs(stated[i] - weights[i]) > 1e-6)
          fail(errc::invalid_argument, "weights_exact[" + std::to_string(i) + "] = " + exact[i].str() +
                                           " disagrees with weights[" + std::to_string(i) + "]");
    }
  } else if (j.contains("weights")) {
    weights = number_array(j["weights"], "weights");
    if (weights.size() != points.size())
      fail(errc::dimension_mismatch, "weights length does not match point count");
    weights = normalize_simplex_vector(std::move(weights), "weights");
  } else {
    return Design::uniform(q, std::move(points));
  }
  return Design(q, std::move(points), std::move(weights), std::move(exact));
}

std::string design_to_json(const Design& d) {
  ordered_json j;
  j["q"] = d.q();
  ordered_json pts = ordered_json::array();
  for (const MixturePoint& p : d.points()) {
    ordered_json row = ordered_json::array();
    for (double c : p.coords()) row.push_back(round10(c));
    pts.push_back(std::move(row));
  }
  j["points"] = std::move(pts);
  ordered_json ws = ordered_json::array();
  for (double w : d.weights()) ws.push_back(round10(w));
  j["weights"] = std::move(ws);
  if (d.has_exact_weights()) {
    ordered_json ex = ordered_json::array();
    for (const Rational& r : d.exact_weights()) ex.push_back(r.str());
    j["weights_exact"] = std::move(ex);
  }
  return j.dump(2) + "\n";
}

std::string design_to_csv(const Design& d) {
  std::ostringstream out;
  for (int i = 0; i < d.q(); ++i) out << 'x' << (i + 1) << ',';
  out << "weight\n";
  for (std::size_t k = 0; k < d.size(); ++k) {
    for (double c : d.points()[k].coords()) out << format_sig(c) << ',';
    out << format_sig(d.weights()[k]) << '\n';
  }
  return out.str();
}

ComponentBounds bounds_from_json(const std::string& text) {
  ordered_json j = parse(text);
  if (!j.is_object()) fail(errc::parse_error, "bounds must be a JSON object");
  if (!j.contains("lower") && !j.contains("upper"))
    fail(errc::parse_error, "bounds need a \"lower\" or \"upper\" array");
  std::vector<double> lower, upper;
  if (j.contains("lower")) lower = number_array(j["lower"], "lower bounds");
  if (j.contains("upper")) upper = number_array(j["upper"], "upper bounds");
  if (lower.empty()) lower.assign(upper.size(), 0.0);
  if (upper.empty()) upper.assign(lower.size(), 1.0);
  return ComponentBounds(std::move(lower), std::move(upper));
}

std::string metrics_to_json(const MetricsReport& r) {
  ordered_json j;
  j["p"] = r.p;
  j["lambda_max"] = round10(r.lambda_max);
  j["lambda_min"] = round10(r.lambda_min);
  if (std::isinf(r.kappa))
    j["kappa"] = "inf";
  else
    j["kappa"] = round10(r.kappa);
  if (std::isinf(r.log_det))
    j["log_det"] = "-inf";
  else
    j["log_det"] = round10(r.log_det);
  return j.dump(2) + "\n";
}

std::string optimize_result_to_json(const OptimizeResult& r) {
  ordered_json j;
  ordered_json ws = ordered_json::array();
  for (double w : r.weights) ws.push_back(round10(w));
  j["weights"] = std::move(ws);
  j["objective"] = round10(r.objective);
  j["converged"] = r.converged;
  j["iterations"] = r.iterations;
  j["starts_used"] = r.starts_used;
  return j.dump(2) + "\n";
}

}  // namespace koptmix
