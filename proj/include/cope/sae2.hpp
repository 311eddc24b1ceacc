#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cope/instance.hpp"

namespace cope {

struct Sae2Process {
    DiscreteDistribution profile;
    DiscreteDistribution deadline;
};

/// Computation-only allocation problem: n processes, no base-level
/// actions. The degenerate CoPE case of all-empty heads.
struct Sae2Instance {
    std::vector<Sae2Process> processes;
    int horizon = 0;

    static Sae2Instance from_cope(const CopeInstance& instance);
    CopeInstance to_cope(std::string id) const;
    void derive_horizon();
};

/// Online decision snapshot of one process: whether it may still be
/// computed and how much computation it has already received.
struct ProcessView {
    bool live = true;
    int consumed = 0;
};

std::vector<ProcessView> fresh_views(const Sae2Instance& instance);

/// Basic greedy scheme: argmax of alpha/E[D_i] - LPF_i(e_i)/e_i over
/// live processes, profiles conditioned on computation already received.
/// Ties go to the smallest index. Throws when no process is live.
int bgs_choose(const Sae2Instance& instance, const std::vector<ProcessView>& views,
               const GreedyParams& params, int clock);

/// Delay-damage aware scheme: argmax of
/// gamma*LPF_i(e_i(t_u), t_u)/e_i(t_u) - LPF_i(e_i, 0)/e_i.
int dda_choose(const Sae2Instance& instance, const std::vector<ProcessView>& views,
               const GreedyParams& params, int clock);

/// Next live process strictly after `cursor`, cyclically.
int round_robin_choose(const Sae2Instance& instance, const std::vector<ProcessView>& views,
                       int cursor);

/// Most promising plan: argmax of success probability given all
/// remaining time. Stickiness is the caller's concern.
int mpp_choose(const Sae2Instance& instance, const std::vector<ProcessView>& views, int clock);

struct ScheduleBlock {
    int process = 0;
    int start = 0;
    int duration = 0;
};

/// Per-process contiguous blocks ordered by start time.
struct LinearSchedule {
    std::vector<ScheduleBlock> blocks;
    Allocation to_allocation(int process_count) const;
};

struct ScheduleResult {
    LinearSchedule schedule;
    std::vector<int> tick_owner;  // absolute tick -> process, -1 idle
    double probability = 0.0;
};

/// Optimal schedule for known (point-mass) deadlines via dynamic
/// programming over deadline-sorted processes. Processes whose deadline
/// is the -1 sentinel are dropped as dead. Throws std::invalid_argument
/// for non-point deadlines.
ScheduleResult dp_schedule(const Sae2Instance& instance);

/// Exhaustive enumeration over deadline-ordered contiguous allocations;
/// the independent oracle for dp_schedule. Throws std::runtime_error
/// when the leaf budget is exceeded.
ScheduleResult brute_force_sae2(const Sae2Instance& instance,
                                std::int64_t leaf_budget = 20'000'000);

/// Success probability of an arbitrary tick-level schedule: process i
/// terminating with its u-th allocated unit does so at the end of that
/// tick, and counts when the deadline falls strictly later.
double schedule_success(const Sae2Instance& instance, const std::vector<int>& tick_owner);

enum class Sae2Alg { kBgs, kDda, kDp, kRr, kMpp };

const char* to_string(Sae2Alg alg);

/// Runs a scheduler to completion under the no-termination assumption,
/// producing the linear schedule it would allocate and that schedule's
/// success probability.
ScheduleResult run_sae2_offline(const Sae2Instance& instance, Sae2Alg alg,
                                const GreedyParams& params);

} // namespace cope
