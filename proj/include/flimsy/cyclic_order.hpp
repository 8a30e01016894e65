#pragma once

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "flimsy/error.hpp"
#include "flimsy/linear_order.hpp"

namespace flimsy {

// A total cyclic arrangement of a finite point set.  The rotation is stored
// normalized: it starts at the smallest id.  [x,y,z] reads "starting from x
// and rotating positively, y is met before z".
class CyclicOrder {
public:
    CyclicOrder() = default;

    static CyclicOrder from_rotation(std::vector<PointId> rotation) {
        require(rotation.size() >= 3, "TooFewPoints", "a cyclic order needs at least 3 points");
        std::vector<PointId> sorted = rotation;
        std::sort(sorted.begin(), sorted.end());
        require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                "DuplicatePoint", "rotation repeats a point");
        CyclicOrder c;
        c.rotation_ = normalize(std::move(rotation));
        c.rebuild_positions();
        return c;
    }

    const std::vector<PointId>& rotation() const { return rotation_; }

    std::vector<PointId> points_sorted() const {
        std::vector<PointId> pts = rotation_;
        std::sort(pts.begin(), pts.end());
        return pts;
    }

    std::size_t size() const { return rotation_.size(); }

    bool contains(PointId p) const { return position_.count(p) != 0; }

    // The ternary relation [x,y,z]; false on non-distinct arguments.
    bool between(PointId x, PointId y, PointId z) const {
        if (x == y || y == z || x == z) return false;
        const int n = static_cast<int>(rotation_.size());
        const int px = position_.at(x);
        const int ry = (position_.at(y) - px + n) % n;
        const int rz = (position_.at(z) - px + n) % n;
        return ry < rz;
    }

    CyclicOrder opposite() const {
        std::vector<PointId> rev(rotation_.rbegin(), rotation_.rend());
        return from_rotation(std::move(rev));
    }

    bool operator==(const CyclicOrder& other) const { return rotation_ == other.rotation_; }
    bool operator!=(const CyclicOrder& other) const { return !(*this == other); }

private:
    static std::vector<PointId> normalize(std::vector<PointId> rot) {
        auto min_it = std::min_element(rot.begin(), rot.end());
        std::rotate(rot.begin(), min_it, rot.end());
        return rot;
    }

    void rebuild_positions() {
        position_.clear();
        for (std::size_t i = 0; i < rotation_.size(); ++i) {
            position_[rotation_[i]] = static_cast<int>(i);
        }
    }

    std::vector<PointId> rotation_;
    std::unordered_map<PointId, int> position_;
};

// Quotient of a linear order with ends: the two ends are merged into a single
// point keeping the minimum's id.  Needs at least 4 sequence entries so the
// quotient has at least 3 points.
inline CyclicOrder linear_to_cyclic(const LinearOrderWithEnds& lin) {
    lin.validate();
    require(lin.size() >= 4, "TooFewPoints", "need at least 4 points to induce a cyclic order");
    std::vector<PointId> rotation(lin.points.begin(), lin.points.end() - 1);
    return CyclicOrder::from_rotation(std::move(rotation));
}

// An inducing linear order for a cyclic order: cut the rotation at its first
// point.  linear_to_cyclic inverts this exactly.
inline LinearOrderWithEnds cyclic_to_linear(const CyclicOrder& c) {
    std::vector<PointId> seq = c.rotation();
    seq.push_back(c.rotation().front());
    return make_linear_order(std::move(seq));
}

}  // namespace flimsy
