#pragma once

// In-code copies of the golden instances shipped under data/.

#include "sml/instance.hpp"

namespace fixtures {

// Attraction effect: brand-A bar against two brand-B bars (no revenues given).
inline sml::Instance example1() {
    return sml::Instance({{"a1", 1, 0.0, 100.0}, {"b1", 2, 0.0, 40.0}, {"b2", 2, 0.0, 60.0}}, 1.0);
}

// Paradox of choice.
inline sml::Instance example2() {
    return sml::Instance({{"x11", 1, 0.0, 10.0}, {"x21", 2, 0.0, 1.0}, {"x22", 2, 0.0, 10.0}},
                         1.0);
}

// Per-product level-2 bound counterexample; optimum is the full set.
inline sml::Instance example3() {
    return sml::Instance({{"x11", 1, 10.0, 1.0}, {"x21", 2, 9.0, 1.0}, {"x22", 2, 6.0, 3.0}}, 1.0);
}

// A product with revenue above R* that no optimal assortment contains.
inline sml::Instance example4() {
    return sml::Instance({{"x11", 1, 1.0, 10.0}, {"x21", 2, 1.0, 1.0}}, 1.0);
}

// Revenue-ordered baseline is suboptimal (ratio ~89.3%).
inline sml::Instance example5() {
    return sml::Instance({{"x11", 1, 10.0, 10.0}, {"x21", 2, 12.0, 2.0}}, 1.0);
}

// Three levels, one unit-utility/unit-revenue product each, u0 = 1.
inline sml::Instance palm3() {
    return sml::Instance({{"p1", 1, 1.0, 1.0}, {"p2", 2, 1.0, 1.0}, {"p3", 3, 1.0, 1.0}}, 1.0);
}

} // namespace fixtures
