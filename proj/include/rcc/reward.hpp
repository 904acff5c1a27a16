#pragma once

#include <Eigen/Core>
#include <array>
#include <span>

#include "rcc/drums.hpp"

namespace rcc {

using Vec3 = Eigen::Vector3d;

// Dense contact and regularization weights. Defaults follow the reward-table
// convention: a correct strike earns more than a wrong strike costs, and a
// missed strike costs more than a wrong one.
struct RewardWeights {
  double correct = 1.0;
  double wrong = -0.5;
  double missed = -2.0;
  double proximity = -1.0;
  double action_rate = -1e-3;
  double dof_acc = -2.5e-7;
};

// Everything the contact reward looks at for one control frame.
struct StepContactState {
  DrumSet targets;   // drums requested at this frame (possibly empty)
  DrumSet executed;  // drums actually struck this frame
  std::array<Vec3, 2> stick_positions{};          // [Left, Right] tip positions, meters
  std::array<Vec3, kDrumCount> drum_positions{};  // drum centers, meters
};

// Per-step itemized reward. `total` always equals the sum of the six terms.
struct RewardBreakdown {
  int correct_count = 0;
  int wrong_count = 0;
  int missed_count = 0;
  double correct = 0.0;
  double wrong = 0.0;
  double missed = 0.0;
  double proximity = 0.0;
  double action_rate = 0.0;
  double dof_acc = 0.0;
  double total = 0.0;

  double component_sum() const {
    return correct + wrong + missed + proximity + action_rate + dof_acc;
  }
};

struct RegTerms {
  double action_rate = 0.0;
  double dof_acc = 0.0;
  double sum() const { return action_rate + dof_acc; }
};

// Contact terms only: correct = |executed ∩ targets| * w, wrong =
// |executed \ targets| * w, missed = |targets \ executed| * w, proximity =
// w * Σ over sticks of the distance to the nearest target (0 when targets
// are empty). The returned total covers the contact terms.
RewardBreakdown contact_reward(const StepContactState& state, const RewardWeights& w);

// Itemized action-rate and DoF-acceleration penalties. Throws
// std::invalid_argument on dimension mismatch.
RegTerms regularization_terms(std::span<const double> action, std::span<const double> prev_action,
                              std::span<const double> dof_acceleration, const RewardWeights& w);

double regularization_reward(std::span<const double> action, std::span<const double> prev_action,
                             std::span<const double> dof_acceleration, const RewardWeights& w);

// r = contact + reg; records the sum in breakdown.total and returns it. The
// caller is expected to have stored the itemized regularization terms in the
// breakdown so the component sum stays consistent.
double total_reward(RewardBreakdown& breakdown, double regularization);

}  // namespace rcc
