#pragma once

#include <string_view>

#include "hill4/vec.hpp"

namespace hill4 {

enum class Frame { synodic_4bp, hill_shifted, hill_rotated };
enum class Representation { velocity, canonical_momentum };

std::string_view frame_name(Frame f) noexcept;
std::string_view representation_name(Representation r) noexcept;

// Position plus either velocity or canonical momentum, tagged with the frame it
// lives in. All three frames rotate with unit angular velocity, so the momentum
// map is p = v + (-y, x, 0) in each of them.
struct PhaseState {
  Frame frame = Frame::synodic_4bp;
  Representation rep = Representation::velocity;
  Vec3 position{};
  Vec3 motion{};

  State6 packed() const {
    return {position[0], position[1], position[2], motion[0], motion[1], motion[2]};
  }
  static PhaseState unpack(Frame f, Representation r, const State6& s) {
    return {f, r, {s[0], s[1], s[2]}, {s[3], s[4], s[5]}};
  }
};

// Throws Error(frame_mismatch) naming `op` when the tags differ.
void require(const PhaseState& s, Frame f, Representation r, std::string_view op);

PhaseState to_canonical(const PhaseState& s);
PhaseState to_velocity(const PhaseState& s);

}  // namespace hill4
