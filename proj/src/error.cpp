#include "hill4/error.hpp"

namespace hill4 {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_physical_input: return "invalid-physical-input";
    case Errc::prolate_unsupported: return "prolate-unsupported";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::config_error: return "config-error";
    case Errc::singular_origin: return "singular-origin";
    case Errc::singular_at_body: return "singular-at-body";
    case Errc::no_bracket: return "no-bracket";
    case Errc::degenerate_k: return "degenerate-K";
    case Errc::degenerate_eigenpair: return "degenerate-eigenpair";
    case Errc::no_z_equilibrium: return "no-z-equilibrium";
    case Errc::not_an_equilibrium: return "not-an-equilibrium";
    case Errc::frame_mismatch: return "frame-mismatch";
    case Errc::singularity_approach: return "singularity-approach";
    case Errc::step_underflow: return "step-underflow";
  }
  return "unknown";
}

bool is_input_error(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_physical_input:
    case Errc::prolate_unsupported:
    case Errc::invalid_argument:
    case Errc::config_error:
    case Errc::frame_mismatch:
      return true;
    default:
      return false;
  }
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

}  // namespace hill4
