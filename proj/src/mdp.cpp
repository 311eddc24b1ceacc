#include "cope/mdp.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace cope {

namespace {

struct TailWalk {
    bool feasible = true;  // all latest starts can still be met
    int completion = 0;    // earliest completion of the unexecuted tail
};

/// Walks the unexecuted head tail of process i, starting actions as
/// early as legality allows from wall time `base`.
TailWalk walk_tail(const CopeInstance& instance, int i, int executed, int base) {
    TailWalk walk;
    int cursor = base;
    const Process& p = instance.process(i);
    for (std::size_t m = static_cast<std::size_t>(executed); m < p.head.size(); ++m) {
        const BaseAction& b = instance.action(p.head[m]);
        int start = cursor;
        if (b.earliest_start) start = std::max(start, *b.earliest_start);
        if (b.latest_start && start > *b.latest_start) walk.feasible = false;
        cursor = start + b.duration;
    }
    walk.completion = cursor;
    return walk;
}

void require_running(const MdpState& state, int i) {
    if (state.failed(i)) {
        throw std::invalid_argument("process has failed");
    }
}

bool has_running(const MdpState& state) {
    for (int used : state.compute_used) {
        if (used != MdpState::kFailed) return true;
    }
    return false;
}

} // namespace

std::string MdpState::key() const {
    std::string k;
    k.reserve(4 * (compute_used.size() + 4));
    auto push = [&k](int v) {
        for (int shift = 0; shift < 32; shift += 8) {
            k.push_back(static_cast<char>((static_cast<unsigned>(v) >> shift) & 0xff));
        }
    };
    push(static_cast<int>(terminal));
    push(clock);
    push(exec_remaining);
    push(executed_count);
    for (int used : compute_used) push(used);
    return k;
}

MdpState initial_state(const CopeInstance& instance) {
    MdpState s;
    s.compute_used.assign(static_cast<std::size_t>(instance.process_count()), 0);
    return s;
}

std::string to_string(const MdpAction& action) {
    if (action.kind == MdpAction::Kind::kCompute) {
        return "compute " + std::to_string(action.process);
    }
    return "execute " + action.action_id;
}

int earliest_completion(const CopeInstance& instance, const MdpState& state, int i) {
    require_running(state, i);
    const TailWalk walk =
        walk_tail(instance, i, state.executed_count, state.clock + state.exec_remaining);
    return walk.completion + 1;
}

bool is_tardy(const CopeInstance& instance, const MdpState& state, int i) {
    require_running(state, i);
    const TailWalk walk =
        walk_tail(instance, i, state.executed_count, state.clock + state.exec_remaining);
    if (!walk.feasible) return true;
    return instance.process(i).deadline.cdf(walk.completion + 1) >= 1.0 - 1e-12;
}

std::vector<MdpAction> legal_actions(const CopeInstance& instance, const MdpState& state) {
    std::vector<MdpAction> actions;
    if (state.is_terminal()) return actions;
    const int n = instance.process_count();
    for (int i = 0; i < n; ++i) {
        if (state.failed(i)) continue;
        if (is_tardy(instance, state, i)) continue;
        if (instance.process(i).profile.cdf(state.compute_used[static_cast<std::size_t>(i)]) >=
            1.0 - 1e-12) {
            continue;  // no termination mass left to discover
        }
        actions.push_back({MdpAction::Kind::kCompute, i, {}});
    }
    if (state.exec_remaining == 0) {
        std::vector<bool> offered(instance.actions().size(), false);
        for (int i = 0; i < n; ++i) {
            if (state.failed(i)) continue;
            const Process& p = instance.process(i);
            if (static_cast<std::size_t>(state.executed_count) >= p.head.size()) continue;
            const std::string& aid = p.head[static_cast<std::size_t>(state.executed_count)];
            const int idx = instance.action_index(aid);
            if (offered[static_cast<std::size_t>(idx)]) continue;
            const BaseAction& b = instance.actions()[static_cast<std::size_t>(idx)];
            if (b.earliest_start && state.clock < *b.earliest_start) continue;
            if (b.latest_start && state.clock > *b.latest_start) continue;
            offered[static_cast<std::size_t>(idx)] = true;
        }
        for (std::size_t idx = 0; idx < offered.size(); ++idx) {
            if (offered[idx]) {
                actions.push_back({MdpAction::Kind::kExecute, -1, instance.actions()[idx].id});
            }
        }
    }
    return actions;
}

MdpState normalized(const CopeInstance& instance, MdpState state) {
    if (state.is_terminal()) return state;
    if (!has_running(state)) {
        state.terminal = MdpState::Terminal::kFail;
        return state;
    }
    for (int i = 0; i < instance.process_count(); ++i) {
        if (!state.failed(i) && !is_tardy(instance, state, i)) return state;
    }
    state.terminal = MdpState::Terminal::kFail;
    return state;
}

MdpState apply_execute(const CopeInstance& instance, const MdpState& state,
                       const std::string& action_id) {
    const auto legal = legal_actions(instance, state);
    const MdpAction wanted{MdpAction::Kind::kExecute, -1, action_id};
    if (std::find(legal.begin(), legal.end(), wanted) == legal.end()) {
        throw std::invalid_argument("illegal execute: " + action_id);
    }
    MdpState next = state;
    const BaseAction& b = instance.action(action_id);
    next.exec_remaining = b.duration;
    next.executed_count = state.executed_count + 1;
    for (int i = 0; i < instance.process_count(); ++i) {
        if (next.failed(i)) continue;
        const Process& p = instance.process(i);
        const bool compatible =
            p.head.size() > static_cast<std::size_t>(state.executed_count) &&
            p.head[static_cast<std::size_t>(state.executed_count)] == action_id;
        if (!compatible) next.compute_used[static_cast<std::size_t>(i)] = MdpState::kFailed;
    }
    return normalized(instance, std::move(next));
}

std::vector<ComputeBranch> enumerate_compute(const CopeInstance& instance,
                                             const MdpState& state, int i) {
    const auto legal = legal_actions(instance, state);
    const MdpAction wanted{MdpAction::Kind::kCompute, i, {}};
    if (std::find(legal.begin(), legal.end(), wanted) == legal.end()) {
        throw std::invalid_argument("illegal compute for process " + std::to_string(i));
    }

    const Process& p = instance.process(i);
    const int used = state.compute_used[static_cast<std::size_t>(i)];
    const int t_i = earliest_completion(instance, state, i);

    double p_terminate = p.profile.mass_at(used + 1) / (1.0 - p.profile.cdf(used));
    p_terminate = std::clamp(p_terminate, 0.0, 1.0);
    const double p_untimely = p.deadline.cdf(t_i);

    // Processes tardy at the pre-transition state fail deterministically.
    MdpState advanced = state;
    advanced.clock = state.clock + 1;
    advanced.exec_remaining = std::max(0, state.exec_remaining - 1);
    for (int j = 0; j < instance.process_count(); ++j) {
        if (!state.failed(j) && is_tardy(instance, state, j)) {
            advanced.compute_used[static_cast<std::size_t>(j)] = MdpState::kFailed;
        }
    }

    std::vector<ComputeBranch> branches;
    if (p_terminate < 1.0) {
        MdpState cont = advanced;
        cont.compute_used[static_cast<std::size_t>(i)] = used + 1;
        branches.push_back({1.0 - p_terminate, normalized(instance, std::move(cont))});
    }
    if (p_terminate > 0.0) {
        if (p_untimely < 1.0) {
            MdpState success = advanced;
            success.terminal = MdpState::Terminal::kSuccess;
            branches.push_back({p_terminate * (1.0 - p_untimely), std::move(success)});
        }
        if (p_untimely > 0.0) {
            MdpState failed = advanced;
            failed.compute_used[static_cast<std::size_t>(i)] = MdpState::kFailed;
            branches.push_back(
                {p_terminate * p_untimely, normalized(instance, std::move(failed))});
        }
    }
    return branches;
}

MdpState sample_compute(const CopeInstance& instance, const MdpState& state, int i,
                        SplitMix64& rng) {
    const auto branches = enumerate_compute(instance, state, i);
    double u = rng.next_double();
    for (const ComputeBranch& b : branches) {
        u -= b.probability;
        if (u < 0.0) return b.state;
    }
    return branches.back().state;
}

namespace {

class Solver {
public:
    Solver(const CopeInstance& instance, const SolveOptions& options)
        : instance_(instance), options_(options) {}

    SolveResult run() {
        SolveResult result;
        const MdpState start = normalized(instance_, initial_state(instance_));
        result.value = value(start);
        result.policy = std::move(policy_);
        result.values = std::move(values_);
        result.explored_states = static_cast<std::int64_t>(result.values.size());
        return result;
    }

private:
    double value(const MdpState& state) {
        if (state.terminal == MdpState::Terminal::kSuccess) return 1.0;
        if (state.terminal == MdpState::Terminal::kFail) return 0.0;
        const std::string key = state.key();
        if (auto it = values_.find(key); it != values_.end()) return it->second;
        if (static_cast<std::int64_t>(values_.size()) >= options_.state_budget) {
            throw std::runtime_error("state budget exceeded after exploring " +
                                     std::to_string(values_.size()) + " states");
        }

        const auto actions = legal_actions(instance_, state);
        double best = 0.0;
        MdpAction best_action;
        bool have_best = false;
        for (const MdpAction& a : actions) {
            double v = 0.0;
            if (a.kind == MdpAction::Kind::kExecute) {
                v = value(apply_execute(instance_, state, a.action_id));
            } else {
                for (const ComputeBranch& b : enumerate_compute(instance_, state, a.process)) {
                    v += b.probability * value(b.state);
                }
            }
            if (!have_best || v > best) {
                best = v;
                best_action = a;
                have_best = true;
            }
        }
        values_.emplace(key, best);
        if (have_best) policy_.emplace(key, best_action);
        return best;
    }

    const CopeInstance& instance_;
    SolveOptions options_;
    std::unordered_map<std::string, double> values_;
    std::unordered_map<std::string, MdpAction> policy_;
};

std::string describe_state(const MdpState& state) {
    std::ostringstream out;
    out << "T=" << state.clock << " W=" << state.exec_remaining << " L=" << state.executed_count
        << " used=[";
    for (std::size_t i = 0; i < state.compute_used.size(); ++i) {
        if (i) out << ",";
        if (state.compute_used[i] == MdpState::kFailed) {
            out << "F";
        } else {
            out << state.compute_used[i];
        }
    }
    out << "]";
    return out.str();
}

} // namespace

SolveResult optimal_value(const CopeInstance& instance, const SolveOptions& options) {
    return Solver(instance, options).run();
}

std::string dump_policy(const CopeInstance& instance, const SolveResult& result) {
    std::ostringstream out;
    std::deque<MdpState> queue{normalized(instance, initial_state(instance))};
    std::unordered_set<std::string> seen;
    while (!queue.empty()) {
        const MdpState state = std::move(queue.front());
        queue.pop_front();
        if (state.is_terminal()) continue;
        const std::string key = state.key();
        if (!seen.insert(key).second) continue;
        const auto it = result.policy.find(key);
        if (it == result.policy.end()) continue;
        out << describe_state(state) << " -> " << to_string(it->second);
        if (auto vit = result.values.find(key); vit != result.values.end()) {
            out << "  (p=" << vit->second << ")";
        }
        out << "\n";
        const MdpAction& a = it->second;
        if (a.kind == MdpAction::Kind::kExecute) {
            queue.push_back(apply_execute(instance, state, a.action_id));
        } else {
            for (const ComputeBranch& b : enumerate_compute(instance, state, a.process)) {
                queue.push_back(b.state);
            }
        }
    }
    return out.str();
}

} // namespace cope
