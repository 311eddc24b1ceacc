#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cope/distribution.hpp"

namespace cope {

/// A base-level (real world) action. `latest_start` is the per-action
/// deadline D(b); `earliest_start` is a release time for actions tied to
/// an external timed event (a scheduled train cannot be ridden before it
/// departs). Both default to unbounded.
struct BaseAction {
    std::string id;
    int duration = 1;
    std::optional<int> earliest_start;
    std::optional<int> latest_start;
};

/// One search process: a known action prefix (head), a performance
/// profile over total computation time, and the induced deadline
/// distribution for starting the yet-unknown plan remainder.
struct Process {
    std::vector<std::string> head;
    DiscreteDistribution profile;
    DiscreteDistribution deadline;
};

class CopeInstance {
public:
    CopeInstance() = default;
    CopeInstance(std::string id, std::vector<BaseAction> actions, std::vector<Process> processes);

    const std::string& id() const { return id_; }
    const std::vector<BaseAction>& actions() const { return actions_; }
    const std::vector<Process>& processes() const { return processes_; }
    const Process& process(int i) const { return processes_[static_cast<std::size_t>(i)]; }
    int process_count() const { return static_cast<int>(processes_.size()); }

    /// Max deadline support, also covering earliest head completions, so
    /// time sweeps never truncate.
    int horizon() const { return horizon_; }

    int action_index(const std::string& id) const;
    const BaseAction& action(const std::string& id) const;

    /// Sum of head durations from position `from` (0-based) to the end.
    int head_tail_duration(int process, int from) const;
    int head_duration(int process) const { return head_tail_duration(process, 0); }

    /// Throws std::invalid_argument on any violated invariant.
    void validate() const;

private:
    std::string id_;
    std::vector<BaseAction> actions_;
    std::vector<Process> processes_;
    std::unordered_map<std::string, int> action_lookup_;
    int horizon_ = 0;
};

/// Per-process contiguous computation block; duration 0 means the
/// process receives no time.
struct AllocationBlock {
    int duration = 0;
    int start = 0;
};
using Allocation = std::vector<AllocationBlock>;

/// Throws if blocks with positive duration overlap or durations are negative.
void validate_allocation(const Allocation& alloc);

struct GreedyParams {
    double alpha = 1.0;
    double gamma = 1.0;
    int t_u = 1;
    /// When set, E[D] in the urgency term skips mass on negative
    /// (already expired) support values.
    bool mean_excludes_negative = false;
};

} // namespace cope
