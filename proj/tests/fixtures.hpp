#pragma once

#include "fcarel/context.hpp"

namespace fixtures {

// Living beings and water, four-object excerpt.
inline fcarel::FormalContext water4() {
    return fcarel::FormalContext::from_strings({"Bream", "Frog", "Dog", "Spike-weed"}, {"a", "b", "c", "d"},
                                               {"XX..", "XXX.", "X.X.", "XX.X"}, "water4");
}

// Six-object excerpt over nine attributes.
inline fcarel::FormalContext water6() {
    return fcarel::FormalContext::from_strings(
        {"Leach", "Bream", "Frog", "Dog", "Spike-weed", "Bean"}, {"a", "b", "c", "d", "e", "f", "g", "h", "i"},
        {"XX....X..", "XX....XX.", "XXX...XX.", "X.X...XXX", "XX.X.X...", "X.XXX...."}, "water6");
}

// Greedy counterexample: b is the best single attribute, {a, c} the best pair.
inline fcarel::FormalContext cex4() {
    return fcarel::FormalContext::from_strings({"1", "2", "3", "4"}, {"a", "b", "c", "d"},
                                               {"X.XX", "XX..", ".XX.", "...X"}, "cex4");
}

}  // namespace fixtures
