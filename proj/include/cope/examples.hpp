#pragma once

#include "cope/instance.hpp"

namespace cope {

/// Two computation-only processes racing a 30-minute trip deadline
/// (commuter train vs taxi), heads empty.
CopeInstance example1();

/// Same scenario with explicit heads: the train departs at minute 6 and
/// rides 22, the taxi plan phones (2) then rides (20). overall_deadline
/// shifts the trip deadline; 30 is the canonical value, 25 the tight
/// variant.
CopeInstance example2(int overall_deadline = 30);

} // namespace cope
