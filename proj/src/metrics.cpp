#include "cope/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace cope {

namespace {
constexpr double kCertain = 1.0 - 1e-12;

double saturated_log1m(double s) {
    if (s >= kCertain) return kLpfFloor;
    if (s <= 0.0) return 0.0;
    return std::log1p(-s);
}
} // namespace

double success_prob_single(const DiscreteDistribution& profile,
                           const DiscreteDistribution& deadline, int t_i, int t_b) {
    double s = 0.0;
    for (const auto& e : profile.support()) {
        if (e.time < 0) continue;
        if (e.time > t_i) break;
        s += e.mass * (1.0 - deadline.cdf(e.time + t_b));
    }
    return s;
}

double lpf(const DiscreteDistribution& profile, const DiscreteDistribution& deadline,
           int t_i, int t_b) {
    return saturated_log1m(success_prob_single(profile, deadline, t_i, t_b));
}

double overall_success(const CopeInstance& instance, const Allocation& alloc) {
    if (static_cast<int>(alloc.size()) != instance.process_count()) {
        throw std::invalid_argument("allocation size must match process count");
    }
    validate_allocation(alloc);
    double fail = 1.0;
    for (int i = 0; i < instance.process_count(); ++i) {
        const Process& p = instance.process(i);
        const AllocationBlock& b = alloc[static_cast<std::size_t>(i)];
        fail *= 1.0 - success_prob_single(p.profile, p.deadline, b.duration, b.start);
    }
    return 1.0 - fail;
}

int most_effective_time(const DiscreteDistribution& profile,
                        const DiscreteDistribution& deadline, int t_b, int t_max) {
    if (t_max < 1) {
        throw std::invalid_argument("most_effective_time needs t_max >= 1");
    }
    // Incremental sweep: s grows by the termination mass at each t.
    double s = 0.0;
    double best_ratio = 0.0;
    int best_t = 1;
    bool have_best = false;
    for (int t = 1; t <= t_max; ++t) {
        s += profile.mass_at(t) * (1.0 - deadline.cdf(t + t_b));
        const double ratio = saturated_log1m(s) / t;
        if (!have_best || ratio < best_ratio) {
            best_ratio = ratio;
            best_t = t;
            have_best = true;
        }
    }
    return best_t;
}

int slack(const CopeInstance& instance, int process) {
    const Process& p = instance.process(process);
    if (!p.deadline.is_point_mass()) {
        throw std::invalid_argument("slack defined only for known deadlines");
    }
    return p.deadline.point_value() - instance.head_duration(process);
}

} // namespace cope
