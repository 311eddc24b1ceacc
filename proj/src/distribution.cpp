#include "cope/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cope {

namespace {
constexpr double kMassTolerance = 1e-9;
}

DiscreteDistribution::DiscreteDistribution(std::vector<Entry> support)
    : support_(std::move(support)) {
    cumulative_.reserve(support_.size());
    double acc = 0.0;
    for (const Entry& e : support_) {
        acc += e.mass;
        cumulative_.push_back(acc);
    }
}

DiscreteDistribution DiscreteDistribution::from_pairs(std::vector<Entry> entries) {
    if (entries.empty()) {
        throw std::invalid_argument("distribution needs at least one support point");
    }
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.time < b.time; });
    std::vector<Entry> merged;
    merged.reserve(entries.size());
    for (const Entry& e : entries) {
        if (!merged.empty() && merged.back().time == e.time) {
            merged.back().mass += e.mass;
        } else {
            merged.push_back(e);
        }
    }
    double total = 0.0;
    for (const Entry& e : merged) {
        if (e.time < -1) {
            throw std::invalid_argument("support times must be >= -1");
        }
        if (e.mass <= 0.0) {
            throw std::invalid_argument("masses must be strictly positive");
        }
        total += e.mass;
    }
    if (std::abs(total - 1.0) > kMassTolerance) {
        throw std::invalid_argument("masses must sum to 1");
    }
    return DiscreteDistribution(std::move(merged));
}

DiscreteDistribution DiscreteDistribution::point(int time) {
    return from_pairs({{time, 1.0}});
}

double DiscreteDistribution::cdf(int t) const {
    // index of last support time <= t
    auto it = std::upper_bound(support_.begin(), support_.end(), t,
                               [](int value, const Entry& e) { return value < e.time; });
    if (it == support_.begin()) return 0.0;
    return cumulative_[static_cast<std::size_t>(it - support_.begin()) - 1];
}

double DiscreteDistribution::mass_at(int t) const {
    auto it = std::lower_bound(support_.begin(), support_.end(), t,
                               [](const Entry& e, int value) { return e.time < value; });
    if (it == support_.end() || it->time != t) return 0.0;
    return it->mass;
}

double DiscreteDistribution::mean() const {
    double m = 0.0;
    for (const Entry& e : support_) m += e.mass * e.time;
    return m;
}

double DiscreteDistribution::mean_nonnegative() const {
    double m = 0.0;
    double w = 0.0;
    for (const Entry& e : support_) {
        if (e.time >= 0) {
            m += e.mass * e.time;
            w += e.mass;
        }
    }
    return w > 0.0 ? m / w : 0.0;
}

int DiscreteDistribution::min_support() const { return support_.front().time; }

int DiscreteDistribution::max_support() const { return support_.back().time; }

DiscreteDistribution DiscreteDistribution::conditioned_tail(int consumed) const {
    const double seen = cdf(consumed);
    if (seen >= 1.0 - kMassTolerance) {
        throw std::invalid_argument("cannot condition past the last support point");
    }
    std::vector<Entry> tail;
    for (const Entry& e : support_) {
        if (e.time > consumed) {
            tail.push_back({e.time - consumed, e.mass / (1.0 - seen)});
        }
    }
    return DiscreteDistribution(std::move(tail));
}

DiscreteDistribution DiscreteDistribution::pushforward(const std::function<int(int)>& f) const {
    std::vector<Entry> mapped;
    mapped.reserve(support_.size());
    for (const Entry& e : support_) {
        mapped.push_back({f(e.time), e.mass});
    }
    return from_pairs(std::move(mapped));
}

} // namespace cope
