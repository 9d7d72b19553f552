#pragma once

#include <stdexcept>
#include <string>

namespace bfw {

enum class Errc {
  not_irreducible,
  too_large,
  division_by_zero,
  not_in_subfield,
  in_subfield,
  dimension_mismatch,
  zero_mu,
  invalid_lambda,
  unexpected_value,
  no_such_mu,
  invalid_argument,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bfw
