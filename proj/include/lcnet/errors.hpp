#pragma once

#include <stdexcept>
#include <string>

namespace lcnet {

enum class Errc {
  unknown_vertex,
  unknown_edge,
  bad_edge,
  precondition,
  relation_constraint,
  invalid_arity,
  infeasible_labeling,
  missing_zero_cost,
  search_space_too_large,
  infeasible_parameters,
  parse_error,
  assertion_failure,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace lcnet
