#ifndef KOPTMIX_ERROR_HPP
#define KOPTMIX_ERROR_HPP

#include <stdexcept>
#include <string>

namespace koptmix {

enum class errc {
  invalid_argument,
  dimension_mismatch,
  infeasible_bounds,
  out_of_region,
  singular_design,
  no_convergence,
  parse_error,
};

// Message prefixes are stable; the CLI and C API rely on them to
// distinguish error classes in one-line diagnostics.
inline const char* errc_prefix(errc c) {
  switch (c) {
    case errc::invalid_argument: return "invalid argument";
    case errc::dimension_mismatch: return "dimension mismatch";
    case errc::infeasible_bounds: return "infeasible bounds";
    case errc::out_of_region: return "out of region";
    case errc::singular_design: return "singular design";
    case errc::no_convergence: return "no convergence";
    case errc::parse_error: return "malformed JSON";
  }
  return "error";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) {
  throw Error(code, std::string(errc_prefix(code)) + ": " + msg);
}

}  // namespace koptmix

#endif
