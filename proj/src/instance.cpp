#include "cope/instance.hpp"

#include <algorithm>
#include <stdexcept>

namespace cope {

CopeInstance::CopeInstance(std::string id, std::vector<BaseAction> actions,
                           std::vector<Process> processes)
    : id_(std::move(id)), actions_(std::move(actions)), processes_(std::move(processes)) {
    for (std::size_t i = 0; i < actions_.size(); ++i) {
        if (!action_lookup_.emplace(actions_[i].id, static_cast<int>(i)).second) {
            throw std::invalid_argument("duplicate action id: " + actions_[i].id);
        }
    }
    validate();
    horizon_ = 1;
    for (int i = 0; i < process_count(); ++i) {
        horizon_ = std::max(horizon_, processes_[static_cast<std::size_t>(i)].deadline.max_support());
        // earliest possible completion of the full head, release times included
        int t = 0;
        for (const std::string& aid : processes_[static_cast<std::size_t>(i)].head) {
            const BaseAction& b = action(aid);
            if (b.earliest_start) t = std::max(t, *b.earliest_start);
            t += b.duration;
        }
        horizon_ = std::max(horizon_, t);
    }
}

int CopeInstance::action_index(const std::string& id) const {
    auto it = action_lookup_.find(id);
    if (it == action_lookup_.end()) {
        throw std::invalid_argument("unknown action id: " + id);
    }
    return it->second;
}

const BaseAction& CopeInstance::action(const std::string& id) const {
    return actions_[static_cast<std::size_t>(action_index(id))];
}

int CopeInstance::head_tail_duration(int process, int from) const {
    const Process& p = processes_[static_cast<std::size_t>(process)];
    int total = 0;
    for (std::size_t m = static_cast<std::size_t>(from); m < p.head.size(); ++m) {
        total += action(p.head[m]).duration;
    }
    return total;
}

void CopeInstance::validate() const {
    if (processes_.empty()) {
        throw std::invalid_argument("instance needs at least one process");
    }
    for (const BaseAction& b : actions_) {
        if (b.duration <= 0) {
            throw std::invalid_argument("action duration must be positive: " + b.id);
        }
        if (b.earliest_start && b.latest_start && *b.earliest_start > *b.latest_start) {
            throw std::invalid_argument("action window empty: " + b.id);
        }
    }
    for (const Process& p : processes_) {
        for (const std::string& aid : p.head) {
            action_index(aid);  // throws on unknown ids
        }
        if (p.profile.empty() || p.deadline.empty()) {
            throw std::invalid_argument("process distributions must be non-empty");
        }
        if (p.profile.min_support() < 1) {
            throw std::invalid_argument("profile support times must be >= 1");
        }
    }
}

void validate_allocation(const Allocation& alloc) {
    std::vector<std::pair<int, int>> intervals;
    for (const AllocationBlock& b : alloc) {
        if (b.duration < 0) {
            throw std::invalid_argument("allocation durations must be non-negative");
        }
        if (b.duration > 0) {
            intervals.emplace_back(b.start, b.start + b.duration);
        }
    }
    std::sort(intervals.begin(), intervals.end());
    for (std::size_t i = 1; i < intervals.size(); ++i) {
        if (intervals[i].first < intervals[i - 1].second) {
            throw std::invalid_argument("allocation blocks overlap");
        }
    }
}

} // namespace cope
