#include "rcc/reward.hpp"

#include <limits>
#include <stdexcept>

namespace rcc {

RewardBreakdown contact_reward(const StepContactState& state, const RewardWeights& w) {
  RewardBreakdown b;
  b.correct_count = (state.executed & state.targets).count();
  b.wrong_count = (state.executed - state.targets).count();
  b.missed_count = (state.targets - state.executed).count();
  b.correct = b.correct_count * w.correct;
  b.wrong = b.wrong_count * w.wrong;
  b.missed = b.missed_count * w.missed;

  if (!state.targets.empty()) {
    double dist_sum = 0.0;
    for (const auto& tip : state.stick_positions) {
      double nearest = std::numeric_limits<double>::infinity();
      for (int d = 0; d < kDrumCount; ++d) {
        if (!state.targets.contains(d)) continue;
        nearest = std::min(nearest, (tip - state.drum_positions[size_t(d)]).norm());
      }
      dist_sum += nearest;
    }
    b.proximity = w.proximity * dist_sum;
  }
  b.total = b.component_sum();
  return b;
}

RegTerms regularization_terms(std::span<const double> action, std::span<const double> prev_action,
                              std::span<const double> dof_acceleration, const RewardWeights& w) {
  if (action.size() != prev_action.size())
    throw std::invalid_argument("action vectors differ in dimension");
  RegTerms terms;
  double rate_sq = 0.0;
  for (size_t i = 0; i < action.size(); ++i) {
    double d = action[i] - prev_action[i];
    rate_sq += d * d;
  }
  double acc_sq = 0.0;
  for (double a : dof_acceleration) acc_sq += a * a;
  terms.action_rate = w.action_rate * rate_sq;
  terms.dof_acc = w.dof_acc * acc_sq;
  return terms;
}

double regularization_reward(std::span<const double> action, std::span<const double> prev_action,
                             std::span<const double> dof_acceleration, const RewardWeights& w) {
  return regularization_terms(action, prev_action, dof_acceleration, w).sum();
}

double total_reward(RewardBreakdown& breakdown, double regularization) {
  breakdown.total =
      breakdown.correct + breakdown.wrong + breakdown.missed + breakdown.proximity + regularization;
  return breakdown.total;
}

}  // namespace rcc
