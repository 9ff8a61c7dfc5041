#pragma once

#include "rmt/instance.hpp"

namespace rmt {

// Small named ad hoc instances used throughout the tests and the verify
// suite. All of them corrupt at most one relay per maximal set.

/// S - u - R, adversary may corrupt {u}.
Instance path_instance();

/// Two disjoint S-R paths through v1 and v2, adversary may corrupt {v1} or
/// {v2}. The receiver cannot certify either value when one relay lies.
Instance two_path_instance();

/// Three disjoint S-R paths through v1, v2, v3, same singleton adversary.
/// Two honest relays always out-vote the corrupted one.
Instance three_path_instance();

}  // namespace rmt
