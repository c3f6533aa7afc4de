#include "core/k_optimal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>

#include "core/format.hpp"
#include "core/scheffe_basis.hpp"
#include "core/sym_matrix.hpp"

namespace koptmix {

std::vector<MixturePoint> vertices_and_midpoints(int q) {
  if (q < 2) fail(errc::invalid_argument, "vertex/midpoint support needs q >= 2");
  std::vector<MixturePoint> pts;
  pts.reserve(static_cast<std::size_t>(q) * (q + 1) / 2);
  for (int i = 0; i < q; ++i) pts.push_back(unit_vertex(q, i));
  for (auto [i, j] : component_pairs(q)) pts.push_back(edge_midpoint(q, i, j));
  return pts;
}

SymmetricWeights k_optimal_symmetric_weights(int q) {
  if (q < 2) fail(errc::invalid_argument, "second-order K-optimal weights need q >= 2");
  std::int64_t qq = q;
  SymmetricWeights w;
  w.q = q;
  w.vertex_weight = Rational(8 * qq - 7, qq * (16 * qq - 15));
  w.midpoint_weight = Rational(16, qq * (16 * qq - 15));
  return w;
}

Design k_optimal_first_order(int q) {
  if (q < 1) fail(errc::invalid_argument, "first-order K-optimal design needs q >= 1");
  std::vector<MixturePoint> pts;
  pts.reserve(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) pts.push_back(unit_vertex(q, i));
  return Design::uniform(q, std::move(pts));
}

Design k_optimal_second_order(int q) {
  SymmetricWeights w = k_optimal_symmetric_weights(q);
  std::vector<MixturePoint> pts = vertices_and_midpoints(q);
  std::vector<double> weights;
  std::vector<Rational> exact;
  weights.reserve(pts.size());
  exact.reserve(pts.size());
  for (int i = 0; i < q; ++i) {
    weights.push_back(w.vertex_weight.value());
    exact.push_back(w.vertex_weight);
  }
  int n2 = q * (q - 1) / 2;
  for (int i = 0; i < n2; ++i) {
    weights.push_back(w.midpoint_weight.value());
    exact.push_back(w.midpoint_weight);
  }
  return Design(q, std::move(pts), std::move(weights), std::move(exact));
}

double midpoint_weight_limit(int q) {
  return 2.0 / (static_cast<double>(q) * static_cast<double>(q - 1));
}

ExtremeEigenvalues symmetric_extreme_eigenvalues(int q, double r2) {
  if (q < 2) fail(errc::invalid_argument, "symmetric weight class needs q >= 2");
  double limit = midpoint_weight_limit(q);
  if (r2 < -1e-15 || r2 > limit * (1.0 + 1e-12))
    fail(errc::invalid_argument, "midpoint weight " + format_sig(r2) + " outside [0, " + format_sig(limit) + "]");
  double qd = q;
  double disc = qd * qd * (32.0 * qd - 31.0) / 4.0 * r2 * r2 - 8.0 * qd * r2 + 64.0;
  double root = std::sqrt(disc);
  double base = 0.5 * qd * r2 + 8.0;
  ExtremeEigenvalues e;
  e.lambda_max = (base + root) / (16.0 * qd);
  e.lambda_min = (base - root) / (16.0 * qd);
  return e;
}

double symmetric_condition_number(int q, double r2) {
  ExtremeEigenvalues e = symmetric_extreme_eigenvalues(q, r2);
  if (!(e.lambda_min > kSingularTol * e.lambda_max))
    return std::numeric_limits<double>::infinity();
  return e.lambda_max / e.lambda_min;
}

std::vector<WeightTableRow> k_optimal_weight_table(int q_max) {
  if (q_max < 3) fail(errc::invalid_argument, "weight table needs q_max >= 3");
  std::vector<WeightTableRow> rows;
  for (int q = 3; q <= q_max; ++q) {
    SymmetricWeights w = k_optimal_symmetric_weights(q);
    WeightTableRow row;
    row.q = q;
    row.r1 = w.vertex_weight;
    row.r2 = w.midpoint_weight;
    row.n1 = q;
    row.n2 = q * (q - 1) / 2;
    row.n1_r1 = Rational::integer(row.n1) * row.r1;
    row.n2_r2 = Rational::integer(row.n2) * row.r2;
    row.total_points = row.n1 + row.n2;
    rows.push_back(row);
  }
  return rows;
}

std::string weight_table_csv(const std::vector<WeightTableRow>& rows) {
  std::ostringstream out;
  out << "q,r1,n1,n1r1,r2,n2,n2r2,total_points\n";
  for (const WeightTableRow& r : rows)
    out << r.q << ',' << format_sig(r.r1.value()) << ',' << r.n1 << ',' << format_sig(r.n1_r1.value()) << ','
        << format_sig(r.r2.value()) << ',' << r.n2 << ',' << format_sig(r.n2_r2.value()) << ','
        << r.total_points << '\n';
  return out.str();
}

std::string weight_table_text(const std::vector<WeightTableRow>& rows) {
  std::ostringstream out;
  auto col = [&](const std::string& s, int width) {
    out << std::string(width > static_cast<int>(s.size()) ? width - s.size() : 1, ' ') << s;
  };
  col("q", 5);
  col("r1", 14);
  col("n1", 5);
  col("n1*r1", 14);
  col("r2", 14);
  col("n2", 5);
  col("n2*r2", 14);
  col("points", 8);
  col("exact r1, r2", 18);
  out << '\n';
  for (const WeightTableRow& r : rows) {
    col(std::to_string(r.q), 5);
    col(format_sig(r.r1.value()), 14);
    col(std::to_string(r.n1), 5);
    col(format_sig(r.n1_r1.value()), 14);
    col(format_sig(r.r2.value()), 14);
    col(std::to_string(r.n2), 5);
    col(format_sig(r.n2_r2.value()), 14);
    col(std::to_string(r.total_points), 8);
    col(r.r1.str() + ", " + r.r2.str(), 18);
    out << '\n';
  }
  out << "limit q->inf: n1*r1 -> 0.5, n2*r2 -> 0.5\n";
  return out.str();
}

namespace {

constexpr double kOrbitTol = 1e-10;

std::vector<double> sorted_desc(const MixturePoint& p) {
  std::vector<double> c = p.coords();
  std::sort(c.begin(), c.end(), std::greater<double>());
  return c;
}

bool close_vectors(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > kOrbitTol) return false;
  return true;
}

// Direct definition of orbit membership: some coordinate permutation maps
// a onto b within tolerance. Used for q <= 8.
bool same_orbit_exhaustive(const MixturePoint& a, const MixturePoint& b) {
  std::vector<int> perm(static_cast<std::size_t>(a.dim()));
  for (int i = 0; i < a.dim(); ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    bool match = true;
    for (int i = 0; i < a.dim() && match; ++i)
      if (std::abs(a[perm[static_cast<std::size_t>(i)]] - b[i]) > kOrbitTol) match = false;
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool same_orbit(const MixturePoint& a, const MixturePoint& b) {
  if (a.dim() <= 8) return same_orbit_exhaustive(a, b);
  return close_vectors(sorted_desc(a), sorted_desc(b));
}

// Orbit size q! / prod(multiplicity!), from tolerance-clustered
// coordinate multiplicities.
double orbit_size(const MixturePoint& p) {
  std::vector<double> c = sorted_desc(p);
  double size = 1.0;
  std::size_t i = 0;
  std::size_t placed = 0;
  while (i < c.size()) {
    std::size_t j = i;
    while (j < c.size() && std::abs(c[j] - c[i]) <= kOrbitTol) ++j;
    std::size_t mult = j - i;
    // multiply by C(placed + mult, mult)
    for (std::size_t k = 1; k <= mult; ++k) size = size * static_cast<double>(placed + k) / static_cast<double>(k);
    placed += mult;
    i = j;
  }
  return size;
}

std::vector<MixturePoint> enumerate_orbit(const MixturePoint& p) {
  std::vector<double> c = p.coords();
  std::sort(c.begin(), c.end());
  std::vector<MixturePoint> members;
  do {
    members.emplace_back(c);
  } while (std::next_permutation(c.begin(), c.end()));
  return members;
}

}  // namespace

std::vector<std::vector<std::size_t>> permutation_orbits(const std::vector<MixturePoint>& points) {
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool placed = false;
    for (std::vector<std::size_t>& g : groups)
      if (same_orbit(points[g.front()], points[i])) {
        g.push_back(i);
        placed = true;
        break;
      }
    if (!placed) groups.push_back({i});
  }
  return groups;
}

Design symmetrize(const Design& d) {
  std::size_t n = d.size();
  std::vector<std::vector<std::size_t>> groups = permutation_orbits(d.points());
  std::vector<int> group_of(n, -1);
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (std::size_t i : groups[g]) group_of[i] = static_cast<int>(g);

  bool exact = d.has_exact_weights();
  std::vector<double> avg(groups.size(), 0.0);
  std::vector<Rational> avg_exact(groups.size());
  std::vector<std::vector<MixturePoint>> missing(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    double total = 0.0;
    Rational total_exact;
    for (std::size_t i : groups[g]) {
      total += d.weights()[i];
      if (exact) total_exact = total_exact + d.exact_weights()[i];
    }
    double full = orbit_size(d.points()[groups[g].front()]);
    avg[g] = total / full;
    if (exact) {
      if (full > 9e15) fail(errc::invalid_argument, "orbit too large for exact weight averaging");
      avg_exact[g] = total_exact / Rational::integer(static_cast<std::int64_t>(full));
    }
    if (static_cast<double>(groups[g].size()) == full) continue;  // orbit already closed
    if (full > 1e6)
      fail(errc::invalid_argument, "orbit of support point " + std::to_string(groups[g].front()) +
                                       " has " + format_sig(full, 6) + " members; refusing to enumerate");
    for (const MixturePoint& cand : enumerate_orbit(d.points()[groups[g].front()])) {
      bool present = false;
      for (std::size_t i : groups[g])
        if (cand.distance_to(d.points()[i]) <= kOrbitTol) { present = true; break; }
      if (!present) missing[g].push_back(cand);
    }
    std::sort(missing[g].begin(), missing[g].end(), lex_descending_less);
  }

  std::vector<MixturePoint> points;
  std::vector<double> weights;
  std::vector<Rational> exact_weights;
  for (std::size_t i = 0; i < n; ++i) {
    points.push_back(d.points()[i]);
    weights.push_back(avg[static_cast<std::size_t>(group_of[i])]);
    if (exact) exact_weights.push_back(avg_exact[static_cast<std::size_t>(group_of[i])]);
  }
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (const MixturePoint& p : missing[g]) {
      points.push_back(p);
      weights.push_back(avg[g]);
      if (exact) exact_weights.push_back(avg_exact[g]);
    }
  return Design(d.q(), std::move(points), std::move(weights), std::move(exact_weights));
}

}  // namespace koptmix
