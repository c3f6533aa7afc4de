#ifndef KOPTMIX_K_OPTIMAL_HPP
#define KOPTMIX_K_OPTIMAL_HPP

#include <string>
#include <vector>

#include "core/mixture.hpp"

namespace koptmix {

// q vertices followed by the C(q,2) edge midpoints in lexicographic pair
// order: the support of every symmetric second-order design here.
std::vector<MixturePoint> vertices_and_midpoints(int q);

// Per-point weights of the symmetric vertex/midpoint weight class,
// q * vertex_weight + C(q,2) * midpoint_weight = 1 exactly.
struct SymmetricWeights {
  int q = 0;
  Rational vertex_weight;    // r1
  Rational midpoint_weight;  // r2
};

// Closed-form condition-number-minimizing weights for the second-order
// basis: r1 = (8q-7)/(q(16q-15)), r2 = 16/(q(16q-15)).
SymmetricWeights k_optimal_symmetric_weights(int q);

// Equal weights 1/q on the q vertices; its information matrix is
// diag(1/q) with condition number 1.
Design k_optimal_first_order(int q);

// Closed-form K-optimal design on vertices plus edge midpoints.
Design k_optimal_second_order(int q);

struct ExtremeEigenvalues {
  double lambda_max = 0.0;
  double lambda_min = 0.0;
};

// Largest admissible per-point midpoint weight, 2/(q(q-1)) (all weight on
// the midpoints).
double midpoint_weight_limit(int q);

// Closed-form extreme eigenvalues of the symmetric-class information
// matrix as a function of the per-point midpoint weight r2.
ExtremeEigenvalues symmetric_extreme_eigenvalues(int q, double r2);

// lambda_max/lambda_min from the closed forms; +infinity at the singular
// endpoints r2 = 0 and r2 = 2/(q(q-1)).
double symmetric_condition_number(int q, double r2);

struct WeightTableRow {
  int q = 0;
  Rational r1;
  Rational r2;
  int n1 = 0;       // q vertices
  int n2 = 0;       // C(q,2) midpoints
  Rational n1_r1;   // total vertex weight
  Rational n2_r2;   // total midpoint weight
  int total_points = 0;
};

// Rows for q = 3..q_max. Both group weights tend to 1/2 as q grows.
std::vector<WeightTableRow> k_optimal_weight_table(int q_max);

std::string weight_table_csv(const std::vector<WeightTableRow>& rows);
std::string weight_table_text(const std::vector<WeightTableRow>& rows);

// Groups point indices into orbits of the component-permutation group:
// two points share an orbit when some coordinate permutation maps one
// onto the other within tolerance. Orbits are ordered by first
// appearance.
std::vector<std::vector<std::size_t>> permutation_orbits(const std::vector<MixturePoint>& points);

// Averages weights over orbits of the component-permutation group. Points
// whose orbit mates are missing from the support get them appended, each
// carrying the orbit-averaged weight.
Design symmetrize(const Design& d);

}  // namespace koptmix

#endif
