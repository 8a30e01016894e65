#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "flimsy/error.hpp"
#include "flimsy/linear_order.hpp"

namespace flimsy {

// Subsets of a ground set with at most 64 points, as bitmasks over ground
// indices.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }

inline bool mask_contains(Mask m, int bit) { return (m >> bit) & 1u; }

inline bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline std::vector<int> mask_bits(Mask m) {
    std::vector<int> out;
    while (m != 0) {
        const int b = std::countr_zero(m);
        out.push_back(b);
        m &= m - 1;
    }
    return out;
}

inline Mask mask_of_bits(const std::vector<int>& bits) {
    Mask m = 0;
    for (int b : bits) {
        require(b >= 0 && b < 64, "GroundTooLarge", "bit-indexed sets support at most 64 points");
        m |= Mask{1} << b;
    }
    return m;
}

// A family of subsets of a common ground set.  `ground` lists the point ids
// (sorted, distinct); bit i of every member refers to ground[i].  Members are
// kept sorted and deduplicated so equality is canonical.
struct SetFamily {
    std::vector<PointId> ground;
    std::vector<Mask> members;

    int n() const { return static_cast<int>(ground.size()); }
    Mask full_mask() const {
        return n() == 64 ? ~Mask{0} : (Mask{1} << n()) - 1;
    }

    bool contains(Mask m) const {
        return std::binary_search(members.begin(), members.end(), m);
    }

    void canonicalize() {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        for (Mask m : members) {
            require(mask_subset(m, full_mask()), "MemberOutOfGround",
                    "family member outside the ground set");
        }
    }

    int index_of(PointId p) const {
        auto it = std::lower_bound(ground.begin(), ground.end(), p);
        require(it != ground.end() && *it == p, "UnknownPoint", "point not in the ground set");
        return static_cast<int>(it - ground.begin());
    }

    std::vector<PointId> points_of(Mask m) const {
        std::vector<PointId> out;
        for (int b : mask_bits(m)) out.push_back(ground[b]);
        return out;
    }

    bool operator==(const SetFamily&) const = default;
};

inline SetFamily make_set_family(std::vector<PointId> ground, std::vector<Mask> members) {
    std::sort(ground.begin(), ground.end());
    require(std::adjacent_find(ground.begin(), ground.end()) == ground.end(),
            "DuplicatePoint", "ground set repeats a point");
    require(ground.size() <= 64, "GroundTooLarge", "bit-indexed sets support at most 64 points");
    SetFamily fam{std::move(ground), std::move(members)};
    fam.canonicalize();
    return fam;
}

}  // namespace flimsy
