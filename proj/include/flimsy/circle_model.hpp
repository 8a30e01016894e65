#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flimsy/circle_set.hpp"
#include "flimsy/error.hpp"
#include "flimsy/rational.hpp"
#include "flimsy/report.hpp"

namespace flimsy {

// Circle of rationals in [0,1), cut at 0.
struct RatCircleDomain {
    using Value = Rat;
    static int compare(const Rat& a, const Rat& b) { return a < b ? -1 : (a == b ? 0 : 1); }
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static Json value_json(const Rat& v) { return rat_str(v); }
    static const char* name() { return "rational-circle"; }
};

// Connectivity oracle over a circle of exactly representable points: the
// connected sets are the traces of circle intervals (empty set, single
// points, arcs, the full circle), and the complement of a two-point set
// splits into the two open arcs between them.  All queries are answered by
// interval arithmetic, never by scanning a set family.
template <class Dom>
class CircleModel {
public:
    using Point = typename Dom::Value;
    using Subset = CircleSet<Dom>;

    std::string name() const { return Dom::name(); }

    Subset ground() const { return Subset::full(); }
    Subset empty_set() const { return Subset::empty(); }
    Subset singleton(const Point& p) const { return Subset::point(p); }
    Subset arc(const Point& a, const Point& b, bool ac, bool bc) const {
        return Subset::arc(a, b, ac, bc);
    }

    bool is_connected(const Subset& s) const { return s.connected_on_circle(); }

    bool points_equal(const Point& a, const Point& b) const { return Dom::compare(a, b) == 0; }

    Subset copair_complement(const Point& x, const Point& y) const {
        require(!points_equal(x, y), "DegeneratePoints", "the two removed points must differ");
        return Subset::without_point(Subset::without_point(Subset::full(), x), y);
    }

    std::vector<Subset> copair_components(const Point& x, const Point& y) const {
        require(!points_equal(x, y), "DegeneratePoints", "the two removed points must differ");
        std::vector<Subset> parts = {Subset::arc(x, y, false, false),
                                     Subset::arc(y, x, false, false)};
        std::sort(parts.begin(), parts.end(),
                  [](const Subset& a, const Subset& b) { return Subset::less_canonical(a, b); });
        return parts;
    }

    Subset component_of(const Point& p, const Subset& s) const {
        auto c = s.component_containing(p);
        require(c.has_value(), "PointNotInSet", "component query for a point outside the set");
        return *c;
    }

    Subset complement(const Subset& s) const { return Subset::complement(s); }
    Subset unite(const Subset& a, const Subset& b) const { return Subset::unite(a, b); }
    Subset intersect(const Subset& a, const Subset& b) const { return Subset::intersect(a, b); }
    Subset with_point(const Subset& s, const Point& p) const { return Subset::with_point(s, p); }
    bool contains(const Subset& s, const Point& p) const { return s.member(p); }
    bool equal(const Subset& a, const Subset& b) const { return a.equals(b); }
    bool empty(const Subset& s) const { return s.is_empty(); }
    bool subset(const Subset& a, const Subset& b) const { return a.subset_of(b); }

    std::optional<Point> as_single_point(const Subset& s) const {
        const auto nf = s.normal_form();
        if (!nf.full && nf.arcs.empty() && nf.isolated.size() == 1) return nf.isolated.front();
        return std::nullopt;
    }

    // Candidate witness pairs for classifying a connected set: the endpoints
    // of its (unique) arc in normal form.
    std::vector<std::pair<Point, Point>> boundary_pairs(const Subset& s) const {
        std::vector<std::pair<Point, Point>> out;
        const auto nf = s.normal_form();
        for (const auto& a : nf.arcs)
            if (Dom::compare(a.start, a.end) != 0) out.emplace_back(a.start, a.end);
        return out;
    }

    Json point_json(const Point& p) const { return Dom::value_json(p); }

    Json subset_json(const Subset& s) const {
        const auto nf = s.normal_form();
        Json arcs = Json::array();
        for (const auto& a : nf.arcs)
            arcs.push_back(Json{{"start", Dom::value_json(a.start)},
                                {"end", Dom::value_json(a.end)},
                                {"start_closed", a.start_closed},
                                {"end_closed", a.end_closed}});
        Json pts = Json::array();
        for (const auto& v : nf.isolated) pts.push_back(Dom::value_json(v));
        return Json{{"arcs", arcs}, {"points", pts}, {"full", nf.full}};
    }
};

using RationalCircle = CircleModel<RatCircleDomain>;
using RationalCircleSet = CircleSet<RatCircleDomain>;

inline RationalCircle rational_circle() { return {}; }

}  // namespace flimsy
