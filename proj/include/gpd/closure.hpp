#pragma once

#include "gpd/groupoid.hpp"

namespace gpd {

struct ClosureOptions {
    int max_elements = 4096;  // guard against non-terminating presentations
};

// Completes a partial composition table to the smallest groupoid extending
// it: identity and inverse products are forced, associativity consequences
// are propagated, and any composable pair still undefined at a fixed point
// receives a fresh element ("_p0", "_p1", ... in scan order).  Derived
// coincidences between fresh elements are merged; a coincidence between
// two distinct input elements is a contradiction and raises MathError.
// Input must have consistent d/r/inv maps (FormatError/MathError otherwise).
GroupoidTable complete_closure(const GroupoidTable& partial, const ClosureOptions& opts = {});

}  // namespace gpd
