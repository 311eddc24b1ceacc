#include "cope/examples.hpp"

#include <string>

namespace cope {

CopeInstance example1() {
    Process train;
    train.profile = DiscreteDistribution::from_pairs({{8, 1.0}});
    train.deadline = DiscreteDistribution::from_pairs({{-1, 0.2}, {6, 0.8}});
    Process taxi;
    taxi.profile = DiscreteDistribution::from_pairs({{4, 0.5}, {8, 0.5}});
    taxi.deadline = DiscreteDistribution::from_pairs({{-1, 0.5}, {7, 0.5}});
    return CopeInstance("example1", {}, {train, taxi});
}

CopeInstance example2(int overall_deadline) {
    const int x = overall_deadline;
    std::vector<BaseAction> actions = {
        // the train departs at minute 6 whether or not we are on it
        {"ride_train", 22, 6, 6},
        {"phone", 2, std::nullopt, std::nullopt},
        {"take_taxi", 20, std::nullopt, std::nullopt},
    };
    Process train;
    train.head = {"ride_train"};
    train.profile = DiscreteDistribution::from_pairs({{8, 1.0}});
    // remainder after the train: none (0.8) or a ten minute bus (0.2)
    train.deadline = DiscreteDistribution::from_pairs({{x - 10, 0.2}, {x, 0.8}});
    Process taxi;
    taxi.head = {"phone", "take_taxi"};
    taxi.profile = DiscreteDistribution::from_pairs({{4, 0.5}, {8, 0.5}});
    // payment step: one minute (0.5) or ten (0.5)
    taxi.deadline = DiscreteDistribution::from_pairs({{x - 10, 0.5}, {x - 1, 0.5}});

    std::string id = "example2";
    if (overall_deadline != 30) id += "-d" + std::to_string(overall_deadline);
    return CopeInstance(std::move(id), std::move(actions), {train, taxi});
}

} // namespace cope
