#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace cope {

/// Discrete distribution over integer time points, stored sparsely as
/// (time, mass) pairs. Used both for performance profiles (supports >= 1)
/// and deadline distributions, where the sentinel time -1 carries the
/// probability that the deadline has already expired.
class DiscreteDistribution {
public:
    struct Entry {
        int time = 0;
        double mass = 0.0;
    };

    DiscreteDistribution() = default;

    /// Sorts, merges duplicate times and validates: masses strictly
    /// positive, times >= -1, total mass 1 within 1e-9.
    static DiscreteDistribution from_pairs(std::vector<Entry> entries);

    static DiscreteDistribution point(int time);

    /// P(X <= t). cdf(-2) is 0 even when the support starts at -1.
    double cdf(int t) const;

    /// P(X == t); 0 off-support.
    double mass_at(int t) const;

    /// Expectation over the full support, sentinel included.
    double mean() const;

    /// Expectation restricted to non-negative support values
    /// (renormalized); 0 if no such values exist.
    double mean_nonnegative() const;

    int min_support() const;
    int max_support() const;

    bool is_point_mass() const { return support_.size() == 1; }
    int point_value() const { return support_.front().time; }

    const std::vector<Entry>& support() const { return support_; }
    bool empty() const { return support_.empty(); }

    /// Residual distribution over *additional* time after `consumed`
    /// units produced no termination. Mass at t becomes mass at
    /// t - consumed, scaled by 1/(1 - cdf(consumed)).
    /// Requires cdf(consumed) < 1.
    DiscreteDistribution conditioned_tail(int consumed) const;

    /// Distribution of f(X). f may collapse support points; masses merge.
    DiscreteDistribution pushforward(const std::function<int(int)>& f) const;

private:
    explicit DiscreteDistribution(std::vector<Entry> support);

    std::vector<Entry> support_;   // strictly increasing times
    std::vector<double> cumulative_;
};

} // namespace cope
