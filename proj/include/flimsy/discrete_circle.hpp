#pragma once

#include <numeric>
#include <vector>

#include "flimsy/connectivity.hpp"
#include "flimsy/cyclic_order.hpp"
#include "flimsy/error.hpp"

namespace flimsy {

// The n-point discrete circle: the natural rotation (0, ..., n-1) together
// with the arc connectivity (empty set, full set, and every proper cyclic
// interval).  A finite testbed for the conversions; deliberately not
// two-flimsy, since removing two adjacent points leaves a single arc.
struct DiscreteCircle {
    int n;
    CyclicOrder order;
    FiniteConnectivity arcs;
};

inline DiscreteCircle discrete_circle(int n) {
    require(n >= 3, "TooSmall", "a discrete circle needs at least 3 points");
    require(n <= 64, "GroundTooLarge", "bit-indexed sets support at most 64 points");
    std::vector<PointId> rotation(n);
    std::iota(rotation.begin(), rotation.end(), 0);

    std::vector<Mask> members;
    members.push_back(0);
    const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    members.push_back(full);
    for (int start = 0; start < n; ++start)
        for (int len = 1; len < n; ++len) {
            Mask arc = 0;
            for (int k = 0; k < len; ++k) arc |= Mask{1} << ((start + k) % n);
            members.push_back(arc);
        }

    DiscreteCircle circle;
    circle.n = n;
    circle.order = CyclicOrder::from_rotation(std::move(rotation));
    circle.arcs = make_connectivity(
        [n] {
            std::vector<PointId> g(n);
            std::iota(g.begin(), g.end(), 0);
            return g;
        }(),
        std::move(members));
    return circle;
}

// Proper arcs come in n(n-1) flavors (start times length), plus the empty
// and the full set.
inline std::size_t discrete_circle_family_size(int n) {
    return static_cast<std::size_t>(n) * (n - 1) + 2;
}

}  // namespace flimsy
