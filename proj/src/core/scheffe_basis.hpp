#ifndef KOPTMIX_SCHEFFE_BASIS_HPP
#define KOPTMIX_SCHEFFE_BASIS_HPP

#include <utility>
#include <vector>

#include "core/mixture.hpp"

namespace koptmix {

enum class ModelOrder { First = 1, Second = 2 };

// Scheffé canonical regression basis. First order has the q proportions;
// second order appends every pairwise product x_i x_j (i < j) in
// lexicographic pair order, for p = q(q+1)/2 terms.
class ModelBasis {
 public:
  ModelBasis(int q, ModelOrder order);

  int q() const { return q_; }
  ModelOrder order() const { return order_; }
  int size() const;  // p

  std::vector<double> eval(const MixturePoint& x) const;

 private:
  int q_;
  ModelOrder order_;
};

// All index pairs (i, j), i < j, in lexicographic order. This ordering is
// shared by the second-order basis, the pair-incidence matrix, and the
// edge-midpoint supports.
std::vector<std::pair<int, int>> component_pairs(int q);

// C(q,2) x q binary matrix whose row for pair (i,j) has ones at columns i
// and j; rows follow component_pairs order.
struct PairIncidenceMatrix {
  int q = 0;
  std::vector<std::vector<int>> rows;
};

PairIncidenceMatrix pair_incidence(int q);

}  // namespace koptmix

#endif
