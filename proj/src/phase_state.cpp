#include "hill4/phase_state.hpp"

#include <string>

#include "hill4/error.hpp"

namespace hill4 {

std::string_view frame_name(Frame f) noexcept {
  switch (f) {
    case Frame::synodic_4bp: return "synodic-4bp";
    case Frame::hill_shifted: return "hill-shifted";
    case Frame::hill_rotated: return "hill-rotated";
  }
  return "unknown";
}

std::string_view representation_name(Representation r) noexcept {
  return r == Representation::velocity ? "velocity" : "canonical-momentum";
}

void require(const PhaseState& s, Frame f, Representation r, std::string_view op) {
  if (s.frame == f && s.rep == r) return;
  throw Error(Errc::frame_mismatch,
              std::string(op) + " expects " + std::string(frame_name(f)) + "/" +
                  std::string(representation_name(r)) + ", got " +
                  std::string(frame_name(s.frame)) + "/" + std::string(representation_name(s.rep)));
}

PhaseState to_canonical(const PhaseState& s) {
  if (s.rep == Representation::canonical_momentum) return s;
  PhaseState out = s;
  out.rep = Representation::canonical_momentum;
  out.motion = {s.motion[0] - s.position[1], s.motion[1] + s.position[0], s.motion[2]};
  return out;
}

PhaseState to_velocity(const PhaseState& s) {
  if (s.rep == Representation::velocity) return s;
  PhaseState out = s;
  out.rep = Representation::velocity;
  out.motion = {s.motion[0] + s.position[1], s.motion[1] - s.position[0], s.motion[2]};
  return out;
}

}  // namespace hill4
