#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "cope/instance.hpp"
#include "cope/rng.hpp"

namespace cope {

/// MDP state per the model: wall clock T, per-process computation time
/// used (kFailed marks invalidated/failed processes), time left W on the
/// executing base-level action, count L of base-level actions initiated.
struct MdpState {
    enum class Terminal { kNone, kSuccess, kFail };
    static constexpr int kFailed = -1;

    int clock = 0;
    int exec_remaining = 0;
    int executed_count = 0;
    std::vector<int> compute_used;
    Terminal terminal = Terminal::kNone;

    bool failed(int i) const { return compute_used[static_cast<std::size_t>(i)] == kFailed; }
    bool is_terminal() const { return terminal != Terminal::kNone; }

    std::string key() const;
};

MdpState initial_state(const CopeInstance& instance);

struct MdpAction {
    enum class Kind { kCompute, kExecute };
    Kind kind = Kind::kCompute;
    int process = -1;       // for kCompute
    std::string action_id;  // for kExecute

    bool operator==(const MdpAction& other) const {
        return kind == other.kind && process == other.process && action_id == other.action_id;
    }
};

std::string to_string(const MdpAction& action);

/// t_i[S]: earliest wall-clock time at which a solution delivered by
/// process i could finish executing, i.e. clock + W + duration of the
/// unexecuted head tail + 1 for the time unit allocated now. Release
/// times push tail actions later. Throws for failed processes.
int earliest_completion(const CopeInstance& instance, const MdpState& state, int i);

/// True when process i has no remaining chance of a timely execution:
/// its deadline CDF has reached 1 at t_i[S], or an unexecuted head
/// action can no longer meet its latest start.
bool is_tardy(const CopeInstance& instance, const MdpState& state, int i);

/// Compute(i) for running non-tardy processes with termination mass
/// left; Execute(b) for the next unexecuted head action of any running
/// process, when no base-level action is in flight and b's start window
/// contains the current clock. Canonical order: computes by process
/// index, then executes by action-table index.
std::vector<MdpAction> legal_actions(const CopeInstance& instance, const MdpState& state);

MdpState apply_execute(const CopeInstance& instance, const MdpState& state,
                       const std::string& action_id);

struct ComputeBranch {
    double probability = 0.0;
    MdpState state;
};

/// Full branch list of the compute transition; probabilities sum to 1
/// and zero-probability branches are omitted. Processes tardy at the
/// pre-transition state fail deterministically first.
std::vector<ComputeBranch> enumerate_compute(const CopeInstance& instance,
                                             const MdpState& state, int i);

MdpState sample_compute(const CopeInstance& instance, const MdpState& state, int i,
                        SplitMix64& rng);

/// States with every process failed or tardy collapse to FAIL.
MdpState normalized(const CopeInstance& instance, MdpState state);

struct SolveOptions {
    std::int64_t state_budget = 50'000'000;
};

struct SolveResult {
    double value = 0.0;
    std::unordered_map<std::string, MdpAction> policy;  // state key -> best action
    std::unordered_map<std::string, double> values;     // state key -> value
    std::int64_t explored_states = 0;
};

/// Exact finite-horizon expectimax over the (acyclic) state space.
/// Throws std::runtime_error when the state budget is exceeded.
SolveResult optimal_value(const CopeInstance& instance, const SolveOptions& options = {});

/// Text dump of the optimal policy restricted to states reachable under
/// it: one "state -> action" line per decision state.
std::string dump_policy(const CopeInstance& instance, const SolveResult& result);

} // namespace cope
