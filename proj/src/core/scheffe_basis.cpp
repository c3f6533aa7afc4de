#include "core/scheffe_basis.hpp"

#include <string>

namespace koptmix {

ModelBasis::ModelBasis(int q, ModelOrder order) : q_(q), order_(order) {
  if (q_ < 1) fail(errc::invalid_argument, "model basis needs q >= 1");
  if (order_ == ModelOrder::Second && q_ < 2)
    fail(errc::invalid_argument, "second-order basis needs q >= 2");
}

int ModelBasis::size() const {
  return order_ == ModelOrder::First ? q_ : q_ * (q_ + 1) / 2;
}

std::vector<double> ModelBasis::eval(const MixturePoint& x) const {
  if (x.dim() != q_)
    fail(errc::dimension_mismatch, "point has dimension " + std::to_string(x.dim()) + ", basis expects " +
                                       std::to_string(q_));
  std::vector<double> f;
  f.reserve(static_cast<std::size_t>(size()));
  for (int i = 0; i < q_; ++i) f.push_back(x[i]);
  if (order_ == ModelOrder::Second)
    for (int i = 0; i < q_; ++i)
      for (int j = i + 1; j < q_; ++j) f.push_back(x[i] * x[j]);
  return f;
}

std::vector<std::pair<int, int>> component_pairs(int q) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(q) * (q - 1) / 2);
  for (int i = 0; i < q; ++i)
    for (int j = i + 1; j < q; ++j) pairs.emplace_back(i, j);
  return pairs;
}

PairIncidenceMatrix pair_incidence(int q) {
  if (q < 2) fail(errc::invalid_argument, "pair incidence needs q >= 2");
  PairIncidenceMatrix m;
  m.q = q;
  for (auto [i, j] : component_pairs(q)) {
    std::vector<int> row(static_cast<std::size_t>(q), 0);
    row[static_cast<std::size_t>(i)] = 1;
    row[static_cast<std::size_t>(j)] = 1;
    m.rows.push_back(std::move(row));
  }
  return m;
}

}  // namespace koptmix
