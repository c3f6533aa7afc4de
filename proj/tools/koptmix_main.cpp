// Command-line front end. Talks to the library exclusively through the C
// API in koptmix.h; all JSON/CSV payloads are produced by the library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "koptmix.h"

namespace {

int fail_domain(const std::string& context) {
  std::cerr << "koptmix: " << (context.empty() ? koptmix_last_error() : context) << "\n";
  return 1;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty() || output_path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) return fail_domain("cannot open output file '" + output_path + "'");
  out << text;
  return 0;
}

// Owns a C-API string result.
struct ApiString {
  char* ptr = nullptr;
  ~ApiString() { koptmix_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

struct ApiDesign {
  koptmix_design* ptr = nullptr;
  ~ApiDesign() { koptmix_design_free(ptr); }
};

struct ApiBounds {
  koptmix_bounds* ptr = nullptr;
  ~ApiBounds() { koptmix_bounds_free(ptr); }
};

int design_output(const koptmix_design* d, const std::string& format, const std::string& output_path) {
  ApiString text;
  koptmix_status st = format == "csv" ? koptmix_design_to_csv(d, &text.ptr)
                                      : koptmix_design_to_json(d, &text.ptr);
  if (st != KOPTMIX_OK) return fail_domain("");
  return emit(text.str(), output_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"K-optimal experimental designs for Scheffé mixture models"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("koptmix ") + koptmix_version());

  int threads = 1;
  std::string output_path;
  app.add_option("--threads", threads, "Worker threads for the optimizer (result is unchanged)")
      ->check(CLI::PositiveNumber);
  app.add_option("-o,--output", output_path, "Write output to a file instead of stdout");

  // lattice
  auto* lattice = app.add_subcommand("lattice", "Generate a {q,m} simplex-lattice point set");
  int lat_q = 0, lat_m = 0;
  std::string lat_format = "json";
  lattice->add_option("--q", lat_q, "Number of mixture components")->required();
  lattice->add_option("--m", lat_m, "Lattice resolution")->required();
  lattice->add_option("--format", lat_format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  // centroid
  auto* centroid = app.add_subcommand("centroid", "Generate a simplex-centroid point set");
  int cen_q = 0;
  std::string cen_format = "json";
  centroid->add_option("--q", cen_q, "Number of mixture components")->required();
  centroid->add_option("--format", cen_format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  // koptimal
  auto* koptimal = app.add_subcommand("koptimal", "Closed-form condition-number-optimal design");
  int ko_q = 0, ko_order = 0;
  std::string ko_format = "json";
  koptimal->add_option("--order", ko_order, "Scheffé model order (1 or 2)")->required();
  koptimal->add_option("--q", ko_q, "Number of mixture components")->required();
  koptimal->add_option("--format", ko_format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "Information-matrix metrics of a design");
  std::string ev_design;
  int ev_order = 0;
  evaluate->add_option("--design", ev_design, "Design JSON file ('-' for stdin)")->required();
  evaluate->add_option("--order", ev_order, "Scheffé model order (1 or 2)")->required();

  // optimize
  auto* optimize = app.add_subcommand("optimize", "Optimize weights on a fixed support");
  std::string op_support, op_criterion = "k";
  int op_order = 0, op_multistarts = 20;
  unsigned long long op_seed = 0;
  double op_tol = 1e-9;
  bool op_no_symmetry = false;
  optimize->add_option("--support", op_support, "Design JSON file with support points ('-' for stdin)")
      ->required();
  optimize->add_option("--order", op_order, "Scheffé model order (1 or 2)")->required();
  optimize->add_option("--criterion", op_criterion, "Optimality criterion")
      ->check(CLI::IsMember({"k", "d"}));
  optimize->add_option("--multistarts", op_multistarts, "Random restarts for the simplex search")
      ->check(CLI::PositiveNumber);
  optimize->add_option("--seed", op_seed, "Seed for the multistart draws");
  optimize->add_flag("--no-symmetry", op_no_symmetry, "Do not reduce to permutation-orbit weight classes");
  optimize->add_option("--tol", op_tol, "Weight-space convergence tolerance")->check(CLI::PositiveNumber);

  // efficiency
  auto* efficiency = app.add_subcommand("efficiency", "D/K-efficiency of the K-optimal design vs the equal-weight {q,2} lattice");
  int ef_q = 0;
  efficiency->add_option("--q", ef_q, "Number of mixture components")->required();

  // transform
  auto* transform = app.add_subcommand("transform", "Map a design between original and pseudo-component coordinates");
  std::string tr_design, tr_bounds, tr_direction;
  transform->add_option("--design", tr_design, "Design JSON file ('-' for stdin)")->required();
  transform->add_option("--bounds", tr_bounds, "Bounds JSON file")->required();
  transform->add_option("--direction", tr_direction, "Transform direction")
      ->required()
      ->check(CLI::IsMember({"to-pseudo-lower", "from-pseudo-lower", "to-pseudo-upper", "from-pseudo-upper"}));

  // table
  auto* table = app.add_subcommand("table", "Second-order K-optimal weight table for q = 3..qmax");
  int tb_qmax = 0;
  std::string tb_format = "text";
  table->add_option("--qmax", tb_qmax, "Largest q")->required();
  table->add_option("--format", tb_format, "Output format")->check(CLI::IsMember({"csv", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*lattice) {
      ApiDesign d;
      if (koptmix_design_lattice(lat_q, lat_m, &d.ptr) != KOPTMIX_OK) return fail_domain("");
      return design_output(d.ptr, lat_format, output_path);
    }
    if (*centroid) {
      ApiDesign d;
      if (koptmix_design_centroid(cen_q, &d.ptr) != KOPTMIX_OK) return fail_domain("");
      return design_output(d.ptr, cen_format, output_path);
    }
    if (*koptimal) {
      ApiDesign d;
      if (koptmix_design_k_optimal(ko_q, ko_order, &d.ptr) != KOPTMIX_OK) return fail_domain("");
      return design_output(d.ptr, ko_format, output_path);
    }
    if (*evaluate) {
      ApiDesign d;
      if (koptmix_design_parse_json(read_input(ev_design).c_str(), &d.ptr) != KOPTMIX_OK)
        return fail_domain("");
      ApiString text;
      if (koptmix_design_metrics_json(d.ptr, ev_order, &text.ptr) != KOPTMIX_OK) return fail_domain("");
      return emit(text.str(), output_path);
    }
    if (*optimize) {
      ApiDesign d;
      if (koptmix_design_parse_json(read_input(op_support).c_str(), &d.ptr) != KOPTMIX_OK)
        return fail_domain("");
      koptmix_optimize_options opts;
      koptmix_optimize_options_init(&opts);
      opts.criterion = op_criterion == "d" ? KOPTMIX_CRITERION_D : KOPTMIX_CRITERION_K;
      opts.multistarts = op_multistarts;
      opts.seed = op_seed;
      opts.symmetry_reduction = op_no_symmetry ? 0 : 1;
      opts.tolerance = op_tol;
      opts.threads = threads;
      ApiString text;
      if (koptmix_optimize(d.ptr, op_order, &opts, &text.ptr) != KOPTMIX_OK) return fail_domain("");
      return emit(text.str(), output_path);
    }
    if (*efficiency) {
      ApiString text;
      if (koptmix_efficiency_json(ef_q, &text.ptr) != KOPTMIX_OK) return fail_domain("");
      return emit(text.str(), output_path);
    }
    if (*transform) {
      ApiDesign d;
      if (koptmix_design_parse_json(read_input(tr_design).c_str(), &d.ptr) != KOPTMIX_OK)
        return fail_domain("");
      ApiBounds b;
      if (koptmix_bounds_parse_json(read_input(tr_bounds).c_str(), &b.ptr) != KOPTMIX_OK)
        return fail_domain("");
      koptmix_transform dir = KOPTMIX_TO_PSEUDO_LOWER;
      if (tr_direction == "from-pseudo-lower") dir = KOPTMIX_FROM_PSEUDO_LOWER;
      if (tr_direction == "to-pseudo-upper") dir = KOPTMIX_TO_PSEUDO_UPPER;
      if (tr_direction == "from-pseudo-upper") dir = KOPTMIX_FROM_PSEUDO_UPPER;
      ApiDesign result;
      if (koptmix_design_transform(d.ptr, b.ptr, dir, &result.ptr) != KOPTMIX_OK) return fail_domain("");
      return design_output(result.ptr, "json", output_path);
    }
    if (*table) {
      ApiString text;
      if (koptmix_table(tb_qmax, tb_format == "csv" ? 1 : 0, &text.ptr) != KOPTMIX_OK)
        return fail_domain("");
      return emit(text.str(), output_path);
    }
  } catch (const std::exception& e) {
    return fail_domain(e.what());
  }
  return 0;
}
