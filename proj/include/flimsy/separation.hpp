#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "flimsy/cyclic_order.hpp"
#include "flimsy/error.hpp"
#include "flimsy/report.hpp"
#include "flimsy/set_family.hpp"

namespace flimsy {

// An unordered pair of distinct points.
struct Chord {
    PointId a, b;

    Chord(PointId x, PointId y) : a(std::min(x, y)), b(std::max(x, y)) {
        require(x != y, "DegenerateChord", "a chord needs two distinct points");
    }

    bool touches(PointId p) const { return a == p || b == p; }
    bool disjoint(const Chord& other) const {
        return !touches(other.a) && !touches(other.b);
    }

    auto operator<=>(const Chord&) const = default;
};

// {first, second} with first <= second; all four endpoints distinct.
struct ChordPair {
    Chord first, second;

    ChordPair(Chord x, Chord y)
        : first(std::min(x, y)), second(std::max(x, y)) {}

    auto operator<=>(const ChordPair&) const = default;
};

// A raw candidate relation, prior to any axiom checking.  Entries may violate
// S2 (chords sharing endpoints); violations are reported as data.
struct RawRelation {
    std::vector<PointId> points;                  // sorted, distinct
    std::vector<std::pair<Chord, Chord>> pairs;   // as given, unordered semantics
};

// A validated "chords cross" relation.  S1 and S2 hold structurally: pairs
// are stored unordered and only disjoint chords are kept.
class SeparationRelation {
public:
    SeparationRelation() = default;

    static SeparationRelation from_pairs(std::vector<PointId> points,
                                         const std::vector<std::pair<Chord, Chord>>& pairs) {
        SeparationRelation s;
        std::sort(points.begin(), points.end());
        require(std::adjacent_find(points.begin(), points.end()) == points.end(),
                "DuplicatePoint", "point set repeats a point");
        s.points_ = std::move(points);
        for (const auto& [x, y] : pairs) {
            require(x.disjoint(y), "SharedEndpoint",
                    "separated chords must have four distinct endpoints");
            s.require_point(x.a); s.require_point(x.b);
            s.require_point(y.a); s.require_point(y.b);
            s.separated_.emplace_back(x, y);
        }
        std::sort(s.separated_.begin(), s.separated_.end());
        s.separated_.erase(std::unique(s.separated_.begin(), s.separated_.end()),
                           s.separated_.end());
        return s;
    }

    const std::vector<PointId>& points() const { return points_; }
    const std::vector<ChordPair>& separated_pairs() const { return separated_; }
    std::size_t size() const { return points_.size(); }

    bool contains(PointId p) const {
        return std::binary_search(points_.begin(), points_.end(), p);
    }

    bool separated(const Chord& x, const Chord& y) const {
        if (!x.disjoint(y)) return false;
        return std::binary_search(separated_.begin(), separated_.end(), ChordPair(x, y));
    }

    bool operator==(const SeparationRelation&) const = default;

private:
    void require_point(PointId p) const {
        require(contains(p), "UnknownPoint", "chord endpoint not in the point set");
    }

    std::vector<PointId> points_;
    std::vector<ChordPair> separated_;
};

// {a,b} crosses {c,d} when one of c,d lies on each side of {a,b}:
// ([a,c,b] and [b,d,a]) or ([a,d,b] and [b,c,a]).
inline bool chords_cross(const CyclicOrder& c, const Chord& x, const Chord& y) {
    if (!x.disjoint(y)) return false;
    const PointId a = x.a, b = x.b, u = y.a, v = y.b;
    return (c.between(a, u, b) && c.between(b, v, a)) ||
           (c.between(a, v, b) && c.between(b, u, a));
}

inline SeparationRelation cyclic_to_seprel(const CyclicOrder& c) {
    const std::vector<PointId> pts = c.points_sorted();
    std::vector<std::pair<Chord, Chord>> pairs;
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = i + 1; k < n; ++k) {
                if (k == j) continue;
                for (std::size_t l = k + 1; l < n; ++l) {
                    if (l == j) continue;
                    Chord x(pts[i], pts[j]), y(pts[k], pts[l]);
                    if (chords_cross(c, x, y)) pairs.emplace_back(x, y);
                }
            }
    return SeparationRelation::from_pairs(pts, pairs);
}

// ---------------------------------------------------------------------------
// Axiom checking (S1-S4).

struct ValidationReport {
    std::vector<Report> reports;  // S1..S4 in order
    bool pass = true;

    const Report* first_failure() const {
        for (const auto& r : reports)
            if (!r.passed()) return &r;
        return nullptr;
    }
};

namespace detail {

inline Json points_json(std::initializer_list<PointId> pts) {
    Json arr = Json::array();
    for (PointId p : pts) arr.push_back(p);
    return arr;
}

}  // namespace detail

// Checks a raw relation against the four separation axioms.  Violations are
// data, not errors: each axiom yields a report with the first witness found
// (smallest points first).
inline ValidationReport validate_seprel(const RawRelation& raw) {
    ValidationReport out;

    // S1: symmetry.  Unordered storage makes the relation symmetric by
    // construction; the report records that this is structural.
    out.reports.push_back(Report::pass("S1"));

    // S2: chords sharing an endpoint never cross.
    Report s2 = Report::pass("S2");
    for (const auto& [x, y] : raw.pairs) {
        if (!x.disjoint(y)) {
            s2 = Report::fail("S2", Json{{"chords", Json::array({Json::array({x.a, x.b}),
                                                                 Json::array({y.a, y.b})})}});
            break;
        }
    }
    out.reports.push_back(s2);

    // Remaining checks run on the disjoint-chord part of the relation.
    std::vector<std::pair<Chord, Chord>> clean;
    for (const auto& pr : raw.pairs)
        if (pr.first.disjoint(pr.second)) clean.push_back(pr);
    std::vector<PointId> pts = raw.points;
    std::sort(pts.begin(), pts.end());
    const SeparationRelation rel = SeparationRelation::from_pairs(pts, clean);
    const std::size_t n = pts.size();

    // S3: four distinct points admit exactly one of the three pairings.
    Report s3 = Report::pass("S3");
    for (std::size_t i = 0; i < n && s3.passed(); ++i)
        for (std::size_t j = i + 1; j < n && s3.passed(); ++j)
            for (std::size_t k = j + 1; k < n && s3.passed(); ++k)
                for (std::size_t l = k + 1; l < n && s3.passed(); ++l) {
                    const PointId a = pts[i], b = pts[j], c = pts[k], d = pts[l];
                    const int count = rel.separated(Chord(a, b), Chord(c, d)) +
                                      rel.separated(Chord(a, c), Chord(b, d)) +
                                      rel.separated(Chord(a, d), Chord(b, c));
                    if (count != 1) {
                        s3 = Report::fail("S3", Json{{"points", detail::points_json({a, b, c, d})},
                                                     {"pairings_holding", count}});
                    }
                }
    out.reports.push_back(s3);

    // S4: for a chord {a,b} and three further points c,d,e, either none or
    // exactly two of {a,b}+{c,d}, {a,b}+{d,e}, {a,b}+{c,e} cross.
    Report s4 = Report::pass("S4");
    for (std::size_t i = 0; i < n && s4.passed(); ++i)
        for (std::size_t j = i + 1; j < n && s4.passed(); ++j) {
            const Chord ab(pts[i], pts[j]);
            std::vector<PointId> rest;
            for (std::size_t t = 0; t < n; ++t)
                if (t != i && t != j) rest.push_back(pts[t]);
            const std::size_t m = rest.size();
            for (std::size_t x = 0; x < m && s4.passed(); ++x)
                for (std::size_t y = x + 1; y < m && s4.passed(); ++y)
                    for (std::size_t z = y + 1; z < m && s4.passed(); ++z) {
                        const PointId c = rest[x], d = rest[y], e = rest[z];
                        const int count = rel.separated(ab, Chord(c, d)) +
                                          rel.separated(ab, Chord(d, e)) +
                                          rel.separated(ab, Chord(c, e));
                        if (count != 0 && count != 2) {
                            s4 = Report::fail(
                                "S4", Json{{"chord", Json::array({ab.a, ab.b})},
                                           {"points", detail::points_json({c, d, e})},
                                           {"pairings_holding", count}});
                        }
                    }
        }
    out.reports.push_back(s4);

    for (const auto& r : out.reports) out.pass = out.pass && r.passed();
    return out;
}

inline ValidationReport validate_seprel(const SeparationRelation& s) {
    RawRelation raw;
    raw.points = s.points();
    for (const auto& pr : s.separated_pairs()) raw.pairs.emplace_back(pr.first, pr.second);
    return validate_seprel(raw);
}

// ---------------------------------------------------------------------------
// Intervals of a separation relation.

// I_without_c = { d : {a,b} crosses {c,d} };  I_with_c = (X \ {a,b}) minus that.
inline std::vector<PointId> open_interval(const SeparationRelation& s, PointId a, PointId b,
                                          PointId c, bool containing_c) {
    require(a != b && b != c && a != c, "DegeneratePoints",
            "interval reference points must be pairwise distinct");
    require(s.contains(a) && s.contains(b) && s.contains(c), "UnknownPoint",
            "interval reference point not in the relation");
    const Chord ab(a, b);
    std::vector<PointId> out;
    for (PointId d : s.points()) {
        if (d == a || d == b || d == c) continue;
        const bool sep = s.separated(ab, Chord(c, d));
        if (sep != containing_c) out.push_back(d);
    }
    if (containing_c) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

// Dense when every chord crosses some chord.  On failure, reports the first
// chord with nothing on one side.
inline std::pair<bool, std::optional<Chord>> is_dense(const SeparationRelation& s) {
    require(s.size() >= 3, "TooFewPoints", "density needs at least 3 points");
    const auto& pts = s.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const Chord ab(pts[i], pts[j]);
            bool crossed = false;
            for (const auto& pr : s.separated_pairs()) {
                if (pr.first == ab || pr.second == ab) { crossed = true; break; }
            }
            if (!crossed) return {false, ab};
        }
    return {true, std::nullopt};
}

// All open intervals (both sides, every chord, every reference point),
// deduplicated, as a bit-indexed family over the relation's points.
inline SetFamily order_topology_basis(const SeparationRelation& s) {
    require(s.size() >= 3, "TooFewPoints", "need at least 3 points");
    const auto& pts = s.points();
    SetFamily fam;
    fam.ground = pts;
    auto index = [&](PointId p) {
        return static_cast<int>(std::lower_bound(pts.begin(), pts.end(), p) - pts.begin());
    };
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            for (std::size_t k = 0; k < pts.size(); ++k) {
                if (k == i || k == j) continue;
                for (bool side : {false, true}) {
                    Mask m = 0;
                    for (PointId p : open_interval(s, pts[i], pts[j], pts[k], side))
                        m |= Mask{1} << index(p);
                    fam.members.push_back(m);
                }
            }
    fam.canonicalize();
    return fam;
}

// For finite chains the union is the maximal element, so the union of a chain
// of open intervals is always an open interval.  The checker still verifies
// the chain shape and interval membership so precondition failures surface.
inline bool finite_chain_union_is_interval(const SeparationRelation& s,
                                           const std::vector<std::vector<PointId>>& chain) {
    require(!chain.empty(), "NotAChain", "chain must be non-empty");
    const SetFamily basis = order_topology_basis(s);
    std::vector<Mask> masks;
    for (const auto& iv : chain) {
        std::vector<int> bits;
        for (PointId p : iv) bits.push_back(basis.index_of(p));
        const Mask m = mask_of_bits(bits);
        require(basis.contains(m), "NotAnInterval", "chain element is not an open interval");
        masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end(),
              [](Mask a, Mask b) { return popcount(a) < popcount(b); });
    Mask union_mask = 0;
    for (std::size_t i = 0; i + 1 < masks.size(); ++i) {
        require(mask_subset(masks[i], masks[i + 1]), "NotAChain",
                "chain elements are not totally ordered by inclusion");
    }
    for (Mask m : masks) union_mask |= m;
    return basis.contains(union_mask);
}

// ---------------------------------------------------------------------------
// Recovering a cyclic order from a separation relation.

// Returns the cyclic order c with [anchor0, anchor1, anchor2] holding and
// cyclic_to_seprel(c) equal to the input.  The relation fixes c only up to
// opposite; the anchor picks the sense.  Side ordering: on the side of chord
// {a,b} that runs from a to b, x precedes y exactly when {x,b} crosses {a,y}.
inline CyclicOrder seprel_to_cyclic(const SeparationRelation& s,
                                    const std::array<PointId, 3>& anchor) {
    require(anchor[0] != anchor[1] && anchor[1] != anchor[2] && anchor[0] != anchor[2],
            "AnchorDegenerate", "anchor points must be pairwise distinct");
    for (PointId p : anchor)
        require(s.contains(p), "UnknownPoint", "anchor point not in the relation");
    require(s.size() >= 3, "TooFewPoints", "need at least 3 points");
    {
        const ValidationReport v = validate_seprel(s);
        if (!v.pass)
            fail("InvalidRelation",
                 std::string("relation violates ") + v.first_failure()->check);
    }

    const PointId a = anchor[0], b = anchor[1], c = anchor[2];
    const Chord ab(a, b);
    std::vector<PointId> near_side, far_side;  // near side contains c
    for (PointId p : s.points()) {
        if (p == a || p == b) continue;
        if (p == c || !s.separated(ab, Chord(c, p)))
            near_side.push_back(p);
        else
            far_side.push_back(p);
    }
    // Order a side running from `from` to `to`.
    auto order_side = [&](std::vector<PointId>& side, PointId from, PointId to) {
        std::sort(side.begin(), side.end(), [&](PointId x, PointId y) {
            return s.separated(Chord(x, to), Chord(from, y));
        });
    };
    order_side(near_side, a, b);
    order_side(far_side, b, a);

    std::vector<PointId> rotation;
    rotation.push_back(a);
    rotation.insert(rotation.end(), near_side.begin(), near_side.end());
    rotation.push_back(b);
    rotation.insert(rotation.end(), far_side.begin(), far_side.end());
    CyclicOrder out = CyclicOrder::from_rotation(std::move(rotation));
    if (!out.between(a, b, c)) out = out.opposite();
    return out;
}

}  // namespace flimsy
