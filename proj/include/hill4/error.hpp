#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hill4 {

enum class Errc {
  invalid_physical_input,
  prolate_unsupported,
  invalid_argument,
  config_error,
  singular_origin,
  singular_at_body,
  no_bracket,
  degenerate_k,
  degenerate_eigenpair,
  no_z_equilibrium,
  not_an_equilibrium,
  frame_mismatch,
  singularity_approach,
  step_underflow,
};

// Stable kebab-case identifier, e.g. "prolate-unsupported".
std::string_view errc_name(Errc code) noexcept;

// True for errors caused by user input rather than by the numerics.
bool is_input_error(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hill4
