#pragma once

#include <stdexcept>
#include <string>

namespace eds {

enum class errc {
  singular_curve,
  not_on_curve,
  identity_point,
  non_square_denominator,
  division_by_zero,
  non_integer_result,
  insufficient_samples,
  divisibility_violation,
  invalid_seed,
  non_integral_step,
  index_out_of_range,
  torsion_point,
  non_torsion_point,
  not_applicable,
  search_bound_exceeded,
  factorization_failure,
  parse_error,
  invariant_violation,
};

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::singular_curve: return "singular_curve";
    case errc::not_on_curve: return "not_on_curve";
    case errc::identity_point: return "identity_point";
    case errc::non_square_denominator: return "non_square_denominator";
    case errc::division_by_zero: return "division_by_zero";
    case errc::non_integer_result: return "non_integer_result";
    case errc::insufficient_samples: return "insufficient_samples";
    case errc::divisibility_violation: return "divisibility_violation";
    case errc::invalid_seed: return "invalid_seed";
    case errc::non_integral_step: return "non_integral_step";
    case errc::index_out_of_range: return "index_out_of_range";
    case errc::torsion_point: return "torsion_point";
    case errc::non_torsion_point: return "non_torsion_point";
    case errc::not_applicable: return "not_applicable";
    case errc::search_bound_exceeded: return "search_bound_exceeded";
    case errc::factorization_failure: return "factorization_failure";
    case errc::parse_error: return "parse_error";
    case errc::invariant_violation: return "invariant_violation";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace eds
