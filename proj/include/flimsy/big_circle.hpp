#pragma once

#include <array>
#include <vector>

#include "flimsy/circle_model.hpp"
#include "flimsy/circle_set.hpp"
#include "flimsy/cyclic_order.hpp"
#include "flimsy/error.hpp"
#include "flimsy/lex.hpp"
#include "flimsy/report.hpp"
#include "flimsy/separation.hpp"

namespace flimsy {

inline Json lex_point_json(const LexPoint& p) {
    Json entries = Json::array();
    for (const auto& [i, v] : p.entries) entries.push_back(Json::array({i, rat_str(v)}));
    return Json{{"entries", entries}, {"tail", rat_str(p.tail)}};
}

// The big circle obtained by gluing the two ends of the lexicographic big
// interval.  Representatives live in [min, max); the glued point e is stored
// as the minimum.
struct LexCircleDomain {
    using Value = LexPoint;
    static int compare(const LexPoint& a, const LexPoint& b) {
        const auto c = lex_compare(a, b);
        return c == std::strong_ordering::less ? -1 : (c == std::strong_ordering::equal ? 0 : 1);
    }
    static LexPoint zero() { return lex_min(); }
    static LexPoint one() { return lex_max(); }
    static Json value_json(const LexPoint& v) { return lex_point_json(v); }
    static const char* name() { return "big-circle"; }
};

using LexCircle = CircleModel<LexCircleDomain>;
using LexCircleSet = CircleSet<LexCircleDomain>;

struct LexCirclePoint {
    LexPoint rep;  // canonical: never equals max
};

// The quotient map identifying the two ends.
inline LexCirclePoint bigcircle_project(const LexPoint& p) {
    if (p == lex_max()) return {lex_min()};
    return {p};
}

inline bool bigcircle_is_glued_point(const LexCirclePoint& q) { return q.rep == lex_min(); }

// Membership in the image of the open interval (a, b): for interior
// representatives this is a plain order test; the glued point lies in the
// image only if one of the two ends does.
inline bool bigcircle_between(const LexPoint& a, const LexPoint& b, const LexCirclePoint& q) {
    require(lex_less(a, b), "NotOrdered", "interval bounds must satisfy a < b");
    require(!(bigcircle_project(a).rep == bigcircle_project(b).rep), "SamePoint",
            "interval ends project to the same circle point");
    // No interior point of the cut order projects to the glued point.
    if (bigcircle_is_glued_point(q)) return false;
    return lex_less(a, q.rep) && lex_less(q.rep, b);
}

// Membership in the complement of the image of the closed interval [a, b].
inline bool bigcircle_outside(const LexPoint& a, const LexPoint& b, const LexCirclePoint& q) {
    require(lex_less(a, b), "NotOrdered", "interval bounds must satisfy a < b");
    require(!(bigcircle_project(a).rep == bigcircle_project(b).rep), "SamePoint",
            "interval ends project to the same circle point");
    if (bigcircle_is_glued_point(q)) {
        const bool min_inside = !lex_less(lex_min(), a);  // a == min
        const bool max_inside = !lex_less(b, lex_max());  // b == max
        return !(min_inside || max_inside);
    }
    return lex_less(q.rep, a) || lex_less(b, q.rep);
}

inline bool bigcircle_interval_membership(const LexPoint& a, const LexPoint& b,
                                          const LexCirclePoint& q, bool between_side) {
    return between_side ? bigcircle_between(a, b, q) : bigcircle_outside(a, b, q);
}

namespace detail {

// Cyclic order of circle representatives: the three-case disjunction over the
// cut order, which also handles the glued point (its representative is the
// cut minimum).
inline bool rep_cyclic_between(const LexPoint& x, const LexPoint& y, const LexPoint& z) {
    return (lex_less(x, y) && lex_less(y, z)) || (lex_less(z, x) && lex_less(x, y)) ||
           (lex_less(y, z) && lex_less(z, x));
}

}  // namespace detail

// Whether the chord {a0,a1} crosses the chord {b0,b1} on the big circle.
// Computed along two independent routes and compared:
//   route A: the order route -- cyclic order of representatives, then the
//            chord-crossing formula;
//   route B: the component route -- b0 and b1 fall on different sides of the
//            circle split at {a0,a1}.
// A disagreement would break the order/connectivity correspondence and is
// raised loudly.
inline bool big_circle_seprel(const std::array<LexCirclePoint, 2>& a,
                              const std::array<LexCirclePoint, 2>& b) {
    const LexPoint& a0 = a[0].rep;
    const LexPoint& a1 = a[1].rep;
    const LexPoint& b0 = b[0].rep;
    const LexPoint& b1 = b[1].rep;
    require(!(a0 == a1) && !(b0 == b1), "DegenerateChord",
            "a chord needs two distinct circle points");
    // Chords sharing an endpoint never cross.
    if (a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1) return false;

    const bool route_a =
        (detail::rep_cyclic_between(a0, b0, a1) && detail::rep_cyclic_between(a1, b1, a0)) ||
        (detail::rep_cyclic_between(a0, b1, a1) && detail::rep_cyclic_between(a1, b0, a0));

    const LexCircle model;
    const auto parts = model.copair_components(a0, a1);
    const bool b0_first = parts[0].member(b0);
    const bool b1_first = parts[0].member(b1);
    const bool route_b = b0_first != b1_first;

    if (route_a != route_b) {
        Json transcript{{"chord_a", Json::array({lex_point_json(a0), lex_point_json(a1)})},
                        {"chord_b", Json::array({lex_point_json(b0), lex_point_json(b1)})},
                        {"order_route", route_a},
                        {"component_route", route_b}};
        fail("RouteDisagreement", transcript.dump());
    }
    return route_a;
}

// ---------------------------------------------------------------------------
// Open sub-intervals of the big interval as a one-flimsy testbed.

// Connectivity oracle for subsets of the big interval itself (no gluing):
// connected sets are exactly the intervals, i.e. the one-piece sets.
struct LexLineOracle {
    using Set = IntervalSet<LexCircleDomain>;
    static bool connected(const Set& s) { return s.piece_count() <= 1; }
};

// Removing any single interior point from an open interval leaves two
// non-empty pieces that are separately connected but jointly disconnected;
// the interval itself is connected.  `sample` lists the interior points to
// test; midpoints witness non-emptiness of both sides.
inline Report check_no_ends_one_flimsy(const LexPoint& a, const LexPoint& b,
                                       const std::vector<LexPoint>& sample) {
    require(lex_less(a, b), "NotOrdered", "interval bounds must satisfy a < b");
    using Set = LexLineOracle::Set;
    const std::string check = "one-flimsy(open-interval)";
    const Set whole = Set::interval(a, b, false, false);
    if (!LexLineOracle::connected(whole))
        return Report::fail(check, Json{{"reason", "interval not connected"}});
    if (sample.empty()) return Report::vacuous(check);
    for (const LexPoint& x : sample) {
        require(lex_less(a, x) && lex_less(x, b), "PointNotInSet",
                "sample point outside the open interval");
        const Set left = Set::interval(a, x, false, false);
        const Set right = Set::interval(x, b, false, false);
        const Set punctured = Set::unite(left, right);
        const LexPoint left_witness = lex_midpoint(a, x);
        const LexPoint right_witness = lex_midpoint(x, b);
        const bool ok = LexLineOracle::connected(left) && LexLineOracle::connected(right) &&
                        !LexLineOracle::connected(punctured) && !left.is_empty() &&
                        !right.is_empty() && left.member(left_witness) &&
                        right.member(right_witness);
        if (!ok)
            return Report::fail(check, Json{{"removed", lex_point_json(x)}});
    }
    return Report::pass(check);
}

}  // namespace flimsy
