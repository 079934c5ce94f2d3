#ifndef DETKIT_CONSTANTS_HPP
#define DETKIT_CONSTANTS_HPP

#include <vector>

namespace detkit {

/// The implicit constants the underlying bounds leave unspecified, exposed as
/// user-configurable parameters. Defaults make every calculator a pure
/// main-term evaluator; nothing in the pipeline asserts against them.
struct BoundConstants {
    double c_sqrt = 0.0;   // O(p^{1/2}) term in the valuation lower bound
    double c_lin = 0.0;    // O(s) term in the valuation lower bound
    double c_sal2 = 0.0;   // O(1) term in the gcd-of-determinants bound
    double kappa_v = 0.0;  // class-V threshold, audit display only
    double c_m = 1.2;      // multiplier in the auxiliary-degree formula
    double c_add = 1.0;    // additive O(1) companion of log||f||
    std::vector<long long> box_radius_schedule = {1, 2, 4, 8};
};

}  // namespace detkit

#endif
