#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flimsy/connectivity.hpp"

namespace flimsy {

// Connectivity-model interface over an explicit finite family.  Component
// queries scan the family; the checkers stay agnostic of whether a model is
// analytic or enumerated.
class FiniteModel {
public:
    using Point = PointId;
    using Subset = Mask;

    explicit FiniteModel(FiniteConnectivity space) : space_(std::move(space)) {}

    const FiniteConnectivity& space() const { return space_; }

    std::string name() const { return "finite"; }

    Subset ground() const { return space_.full(); }
    Subset empty_set() const { return 0; }
    Subset singleton(Point p) const { return bit(p); }

    bool is_connected(Subset s) const { return space_.connected(s); }

    bool points_equal(Point a, Point b) const { return a == b; }

    Subset copair_complement(Point x, Point y) const {
        require(x != y, "DegeneratePoints", "the two removed points must differ");
        return space_.full() & ~bit(x) & ~bit(y);
    }

    std::vector<Subset> copair_components(Point x, Point y) const {
        return components(space_, copair_complement(x, y));
    }

    Subset component_of(Point p, Subset s) const {
        require(contains(s, p), "PointNotInSet", "component query for a point outside the set");
        return component_within(space_, s, space_.family.index_of(p));
    }

    Subset complement(Subset s) const { return space_.full() & ~s; }
    Subset unite(Subset a, Subset b) const { return a | b; }
    Subset intersect(Subset a, Subset b) const { return a & b; }
    Subset with_point(Subset s, Point p) const { return s | bit(p); }
    bool contains(Subset s, Point p) const { return (s & bit(p)) != 0; }
    bool equal(Subset a, Subset b) const { return a == b; }
    bool empty(Subset s) const { return s == 0; }
    bool subset(Subset a, Subset b) const { return mask_subset(a, b); }

    std::optional<Point> as_single_point(Subset s) const {
        if (popcount(s) != 1) return std::nullopt;
        return space_.family.ground[mask_bits(s).front()];
    }

    std::vector<std::pair<Point, Point>> boundary_pairs(Subset) const {
        std::vector<std::pair<Point, Point>> out;
        const auto& g = space_.family.ground;
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j)
                if (i != j) out.emplace_back(g[i], g[j]);
        return out;
    }

    Json point_json(Point p) const { return p; }
    Json subset_json(Subset s) const {
        Json arr = Json::array();
        for (PointId p : space_.family.points_of(s)) arr.push_back(p);
        return arr;
    }

private:
    Mask bit(Point p) const { return Mask{1} << space_.family.index_of(p); }

    FiniteConnectivity space_;
};

}  // namespace flimsy
