#pragma once

#include <algorithm>
#include <vector>

#include "flimsy/error.hpp"

namespace flimsy {

using PointId = int;

// A finite linear order with ends, stored as the ordered sequence of its
// points (front = minimum, back = maximum).  The ends may carry the same id:
// that form arises from cyclic rearrangements, where one point is split into
// the two new ends.  Interior points are always pairwise distinct and
// distinct from both ends.
struct LinearOrderWithEnds {
    std::vector<PointId> points;

    std::size_t size() const { return points.size(); }
    PointId minimum() const { return points.front(); }
    PointId maximum() const { return points.back(); }

    bool ends_identified() const { return points.front() == points.back(); }

    void validate() const {
        require(points.size() >= 2, "TooFewPoints", "a linear order with ends needs at least 2 points");
        std::vector<PointId> interior(points.begin() + 1, points.end() - 1);
        std::sort(interior.begin(), interior.end());
        require(std::adjacent_find(interior.begin(), interior.end()) == interior.end(),
                "DuplicatePoint", "repeated interior point");
        for (PointId p : interior) {
            require(p != points.front() && p != points.back(), "DuplicatePoint",
                    "interior point repeats an end");
        }
        if (points.size() > 2) {
            // With only the two ends equal the order is a full-cycle cut.
        }
    }
};

inline LinearOrderWithEnds make_linear_order(std::vector<PointId> points) {
    LinearOrderWithEnds lin{std::move(points)};
    lin.validate();
    return lin;
}

// Splits `cut` into the two new ends and merges the old ends into a single
// interior point (which keeps the old minimum's id).  The induced cyclic
// order is unchanged.
inline LinearOrderWithEnds cyclic_rearrangement(const LinearOrderWithEnds& lin, PointId cut) {
    lin.validate();
    require(cut != lin.minimum() && cut != lin.maximum(), "CutIsEnd",
            "cut point must be interior");
    const auto& pts = lin.points;
    auto it = std::find(pts.begin() + 1, pts.end() - 1, cut);
    require(it != pts.end() - 1, "UnknownPoint", "cut point not in the order");

    std::vector<PointId> out;
    out.reserve(pts.size());
    out.push_back(cut);
    out.insert(out.end(), it + 1, pts.end() - 1);  // strictly after cut, max dropped
    out.push_back(lin.minimum());                  // merged old ends
    out.insert(out.end(), pts.begin() + 1, it);    // strictly before cut
    out.push_back(cut);
    return make_linear_order(std::move(out));
}

}  // namespace flimsy
