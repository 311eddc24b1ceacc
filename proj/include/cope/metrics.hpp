#pragma once

#include "cope/instance.hpp"

namespace cope {

/// Saturation value standing in for log(0); keeps DP arithmetic total.
inline constexpr double kLpfFloor = -1e18;

/// Probability that a process with the given profile and deadline
/// distribution, allocated t_i consecutive units starting at wall time
/// t_b, terminates in time: sum over t' <= t_i of the termination mass
/// at t' weighted by P(deadline > t' + t_b).
double success_prob_single(const DiscreteDistribution& profile,
                           const DiscreteDistribution& deadline, int t_i, int t_b);

/// log(1 - success); <= 0, saturated at kLpfFloor for certain success.
double lpf(const DiscreteDistribution& profile, const DiscreteDistribution& deadline,
           int t_i, int t_b);

/// 1 - prod_i (1 - s_i) over the allocation's per-process blocks.
double overall_success(const CopeInstance& instance, const Allocation& alloc);

/// Most effective computation time: argmin over t in [1, t_max] of
/// lpf(t, t_b)/t, ties resolved to the smallest t. t_max must be >= 1.
int most_effective_time(const DiscreteDistribution& profile,
                        const DiscreteDistribution& deadline, int t_b, int t_max);

/// d_i - dur(H_i); requires a point-mass deadline.
int slack(const CopeInstance& instance, int process);

} // namespace cope
