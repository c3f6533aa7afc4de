#include "koptmix.h"

#include <cstring>
#include <exception>
#include <string>

#include <json.hpp>

#include "core/design_metrics.hpp"
#include "core/error.hpp"
#include "core/format.hpp"
#include "core/k_optimal.hpp"
#include "core/serialization.hpp"
#include "core/simplex_designs.hpp"
#include "core/weight_optimizer.hpp"

struct koptmix_design {
  koptmix::Design impl;
};

struct koptmix_bounds {
  koptmix::ComponentBounds impl;
};

namespace {

thread_local std::string t_last_error;

koptmix_status status_of(koptmix::errc c) {
  using koptmix::errc;
  switch (c) {
    case errc::invalid_argument: return KOPTMIX_ERR_INVALID_ARGUMENT;
    case errc::dimension_mismatch: return KOPTMIX_ERR_DIMENSION_MISMATCH;
    case errc::infeasible_bounds: return KOPTMIX_ERR_INFEASIBLE_BOUNDS;
    case errc::out_of_region: return KOPTMIX_ERR_OUT_OF_REGION;
    case errc::singular_design: return KOPTMIX_ERR_SINGULAR;
    case errc::no_convergence: return KOPTMIX_ERR_NO_CONVERGENCE;
    case errc::parse_error: return KOPTMIX_ERR_PARSE;
  }
  return KOPTMIX_ERR_INTERNAL;
}

// Runs fn, converting exceptions into status codes + last-error text.
template <typename Fn>
koptmix_status guarded(Fn&& fn) {
  try {
    fn();
    t_last_error.clear();
    return KOPTMIX_OK;
  } catch (const koptmix::Error& e) {
    t_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return KOPTMIX_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return KOPTMIX_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

koptmix::ModelBasis basis_for(const koptmix::Design& d, int order) {
  if (order != 1 && order != 2)
    koptmix::fail(koptmix::errc::invalid_argument, "model order must be 1 or 2");
  return koptmix::ModelBasis(d.q(), order == 1 ? koptmix::ModelOrder::First : koptmix::ModelOrder::Second);
}

void require(bool cond, const char* what) {
  if (!cond) koptmix::fail(koptmix::errc::invalid_argument, what);
}

}  // namespace

extern "C" {

const char* koptmix_version(void) { return "1.0.0"; }

const char* koptmix_last_error(void) { return t_last_error.c_str(); }

void koptmix_string_free(char* s) { delete[] s; }

koptmix_status koptmix_design_lattice(int q, int m, koptmix_design** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new koptmix_design{koptmix::Design::uniform(q, koptmix::simplex_lattice(q, m))};
  });
}

koptmix_status koptmix_design_centroid(int q, koptmix_design** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    *out = new koptmix_design{koptmix::Design::uniform(q, koptmix::simplex_centroid(q))};
  });
}

koptmix_status koptmix_design_k_optimal(int q, int order, koptmix_design** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(order == 1 || order == 2, "model order must be 1 or 2");
    *out = new koptmix_design{order == 1 ? koptmix::k_optimal_first_order(q)
                                         : koptmix::k_optimal_second_order(q)};
  });
}

koptmix_status koptmix_design_parse_json(const char* json, koptmix_design** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(json != nullptr, "null JSON input");
    *out = new koptmix_design{koptmix::design_from_json(json)};
  });
}

void koptmix_design_free(koptmix_design* d) { delete d; }

int koptmix_design_q(const koptmix_design* d) { return d ? d->impl.q() : 0; }

int koptmix_design_point_count(const koptmix_design* d) {
  return d ? static_cast<int>(d->impl.size()) : 0;
}

koptmix_status koptmix_design_point(const koptmix_design* d, int index, double* coords_out) {
  return guarded([&] {
    require(d != nullptr && coords_out != nullptr, "null argument");
    require(index >= 0 && index < static_cast<int>(d->impl.size()), "point index out of range");
    const auto& coords = d->impl.points()[static_cast<std::size_t>(index)].coords();
    for (std::size_t i = 0; i < coords.size(); ++i) coords_out[i] = coords[i];
  });
}

koptmix_status koptmix_design_weight(const koptmix_design* d, int index, double* weight_out) {
  return guarded([&] {
    require(d != nullptr && weight_out != nullptr, "null argument");
    require(index >= 0 && index < static_cast<int>(d->impl.size()), "point index out of range");
    *weight_out = d->impl.weights()[static_cast<std::size_t>(index)];
  });
}

koptmix_status koptmix_design_to_json(const koptmix_design* d, char** out) {
  return guarded([&] {
    require(d != nullptr && out != nullptr, "null argument");
    *out = copy_string(koptmix::design_to_json(d->impl));
  });
}

koptmix_status koptmix_design_to_csv(const koptmix_design* d, char** out) {
  return guarded([&] {
    require(d != nullptr && out != nullptr, "null argument");
    *out = copy_string(koptmix::design_to_csv(d->impl));
  });
}

koptmix_status koptmix_bounds_parse_json(const char* json, koptmix_bounds** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(json != nullptr, "null JSON input");
    *out = new koptmix_bounds{koptmix::bounds_from_json(json)};
  });
}

void koptmix_bounds_free(koptmix_bounds* b) { delete b; }

koptmix_status koptmix_design_transform(const koptmix_design* d, const koptmix_bounds* b,
                                        koptmix_transform direction, koptmix_design** out) {
  return guarded([&] {
    require(d != nullptr && b != nullptr && out != nullptr, "null argument");
    koptmix::TransformDirection dir;
    switch (direction) {
      case KOPTMIX_TO_PSEUDO_LOWER: dir = koptmix::TransformDirection::ToPseudoLower; break;
      case KOPTMIX_FROM_PSEUDO_LOWER: dir = koptmix::TransformDirection::FromPseudoLower; break;
      case KOPTMIX_TO_PSEUDO_UPPER: dir = koptmix::TransformDirection::ToPseudoUpper; break;
      case KOPTMIX_FROM_PSEUDO_UPPER: dir = koptmix::TransformDirection::FromPseudoUpper; break;
      default: koptmix::fail(koptmix::errc::invalid_argument, "unknown transform direction");
    }
    *out = new koptmix_design{koptmix::transform_design(d->impl, b->impl, dir)};
  });
}

koptmix_status koptmix_design_metrics_json(const koptmix_design* d, int order, char** out) {
  return guarded([&] {
    require(d != nullptr && out != nullptr, "null argument");
    koptmix::ModelBasis basis = basis_for(d->impl, order);
    *out = copy_string(koptmix::metrics_to_json(koptmix::evaluate_design(d->impl, basis)));
  });
}

koptmix_status koptmix_efficiency_json(int q, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(q >= 2, "efficiency comparison needs q >= 2");
    koptmix::ModelBasis basis(q, koptmix::ModelOrder::Second);
    koptmix::Design k_design = koptmix::k_optimal_second_order(q);
    koptmix::Design d_design = koptmix::Design::uniform(q, koptmix::simplex_lattice(q, 2));
    nlohmann::ordered_json j;
    j["eff_d_of_k"] = koptmix::round_sig(koptmix::d_efficiency(k_design, d_design, basis));
    j["eff_k_of_d"] = koptmix::round_sig(koptmix::k_efficiency(k_design, d_design, basis));
    *out = copy_string(j.dump(2) + "\n");
  });
}

void koptmix_optimize_options_init(koptmix_optimize_options* opts) {
  if (!opts) return;
  opts->criterion = KOPTMIX_CRITERION_K;
  opts->multistarts = 20;
  opts->seed = 0;
  opts->symmetry_reduction = 1;
  opts->tolerance = 1e-9;
  opts->threads = 1;
}

koptmix_status koptmix_optimize(const koptmix_design* support, int order,
                                const koptmix_optimize_options* opts, char** result_json_out) {
  return guarded([&] {
    require(support != nullptr && result_json_out != nullptr, "null argument");
    koptmix_optimize_options defaults;
    koptmix_optimize_options_init(&defaults);
    const koptmix_optimize_options& o = opts ? *opts : defaults;
    require(o.criterion == KOPTMIX_CRITERION_K || o.criterion == KOPTMIX_CRITERION_D,
            "criterion must be K or D");
    koptmix::ModelBasis basis = basis_for(support->impl, order);
    koptmix::OptimizeSpec spec(
        o.criterion == KOPTMIX_CRITERION_K ? koptmix::Criterion::K : koptmix::Criterion::D,
        support->impl.points(), basis);
    spec.tolerance = o.tolerance;
    spec.multistarts = o.multistarts;
    spec.seed = o.seed;
    spec.symmetry_reduction = o.symmetry_reduction != 0;
    spec.threads = o.threads;
    *result_json_out = copy_string(koptmix::optimize_result_to_json(koptmix::optimize_weights(spec)));
  });
}

koptmix_status koptmix_table(int q_max, int format, char** out) {
  return guarded([&] {
    require(out != nullptr, "null output pointer");
    require(format == 0 || format == 1, "table format must be 0 (text) or 1 (csv)");
    auto rows = koptmix::k_optimal_weight_table(q_max);
    *out = copy_string(format == 1 ? koptmix::weight_table_csv(rows) : koptmix::weight_table_text(rows));
  });
}

}  // extern "C"
