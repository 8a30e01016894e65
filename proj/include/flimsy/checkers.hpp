#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "flimsy/error.hpp"
#include "flimsy/report.hpp"
#include "flimsy/separation.hpp"

namespace flimsy {

// Executable checks for the structural facts that hold in two-flimsy
// connectivity spaces.  Each checker runs against any model exposing the
// component-query interface (finite families, the rational circle, the big
// circle) and reports a witness on failure.

// The complement of two distinct points splits into exactly two components.
template <class M>
Report check_only_two_components(const M& model, const typename M::Point& x,
                                 const typename M::Point& y) {
    const auto parts = model.copair_components(x, y);
    const std::string check = "only-two-components";
    if (parts.size() != 2) {
        Json parts_json = Json::array();
        for (const auto& p : parts) parts_json.push_back(model.subset_json(p));
        return Report::fail(check, Json{{"x", model.point_json(x)},
                                        {"y", model.point_json(y)},
                                        {"component_count", parts.size()},
                                        {"components", parts_json}});
    }
    // The two parts must partition the co-pair and each be connected.
    const auto whole = model.copair_complement(x, y);
    const bool cover = model.equal(model.unite(parts[0], parts[1]), whole);
    const bool disjoint = model.empty(model.intersect(parts[0], parts[1]));
    const bool connected = model.is_connected(parts[0]) && model.is_connected(parts[1]);
    if (!cover || !disjoint || !connected)
        return Report::fail(check, Json{{"x", model.point_json(x)},
                                        {"y", model.point_json(y)},
                                        {"cover", cover},
                                        {"disjoint", disjoint},
                                        {"parts_connected", connected}});
    return Report::pass(check);
}

// Adjoining one or both removed points to a component keeps it connected.
template <class M>
Report check_component_extensions(const M& model, const typename M::Point& x,
                                  const typename M::Point& y) {
    const std::string check = "component-extensions";
    const auto parts = model.copair_components(x, y);
    if (parts.empty()) return Report::vacuous(check);
    for (const auto& c : parts) {
        const auto cx = model.with_point(c, x);
        const auto cy = model.with_point(c, y);
        const auto cxy = model.with_point(cx, y);
        if (!model.is_connected(cx) || !model.is_connected(cy) || !model.is_connected(cxy))
            return Report::fail(check, Json{{"x", model.point_json(x)},
                                            {"y", model.point_json(y)},
                                            {"component", model.subset_json(c)}});
    }
    return Report::pass(check);
}

// The complement of a connected set is connected.
template <class M>
Report check_complement_closure(const M& model, const typename M::Subset& a) {
    const std::string check = "complement-closure";
    require(model.is_connected(a), "NotConnected", "input set must be connected");
    const auto comp = model.complement(a);
    if (!model.is_connected(comp))
        return Report::fail(check, Json{{"set", model.subset_json(a)},
                                        {"complement", model.subset_json(comp)}});
    return Report::pass(check);
}

// Two connected sets that do not jointly cover the space have a connected
// intersection.
template <class M>
Report check_intersection_connected(const M& model, const typename M::Subset& a,
                                    const typename M::Subset& b) {
    const std::string check = "intersection-connected";
    require(model.is_connected(a) && model.is_connected(b), "NotConnected",
            "both sets must be connected");
    require(!model.equal(model.unite(a, b), model.ground()), "HypothesisFailed",
            "the union must not cover the space");
    const auto inter = model.intersect(a, b);
    if (!model.is_connected(inter))
        return Report::fail(check, Json{{"a", model.subset_json(a)},
                                        {"b", model.subset_json(b)},
                                        {"intersection", model.subset_json(inter)}});
    return Report::pass(check);
}

// A connected set C avoiding x and y whose closure C u {x,y} is connected is
// a full component of the co-pair.
template <class M>
Report check_touch_edges(const M& model, const typename M::Point& x, const typename M::Point& y,
                         const typename M::Subset& c) {
    const std::string check = "touch-edges";
    require(model.subset(c, model.copair_complement(x, y)), "PreconditionFailed",
            "the set must avoid both removed points");
    require(model.is_connected(c), "PreconditionFailed", "the set must be connected");
    require(model.is_connected(model.with_point(model.with_point(c, x), y)), "PreconditionFailed",
            "the set plus both removed points must be connected");
    for (const auto& part : model.copair_components(x, y))
        if (model.equal(part, c)) return Report::pass(check);
    return Report::fail(check, Json{{"x", model.point_json(x)},
                                    {"y", model.point_json(y)},
                                    {"set", model.subset_json(c)}});
}

// The "two overlapping intervals" identity: the component of c beyond {a,b}
// intersected with the component of b beyond {a,c} equals the component of
// the co-pair {b,c} away from a.
template <class M>
Report check_intersect_intervals(const M& model, const typename M::Point& a,
                                 const typename M::Point& b, const typename M::Point& c) {
    const std::string check = "intersect-intervals";
    require(!model.points_equal(a, b) && !model.points_equal(b, c) && !model.points_equal(a, c),
            "DegeneratePoints", "the three points must be pairwise distinct");
    const auto lhs = model.intersect(model.component_of(c, model.copair_complement(a, b)),
                                     model.component_of(b, model.copair_complement(a, c)));
    // Component of the co-pair {b,c} not containing a.
    const auto with_a = model.component_of(a, model.copair_complement(b, c));
    const auto rhs = model.intersect(model.copair_complement(b, c), model.complement(with_a));
    if (!model.equal(lhs, rhs))
        return Report::fail(check, Json{{"a", model.point_json(a)},
                                        {"b", model.point_json(b)},
                                        {"c", model.point_json(c)},
                                        {"lhs", model.subset_json(lhs)},
                                        {"rhs", model.subset_json(rhs)}});
    return Report::pass(check);
}

// Whether chords {a,b} and {c,d} cross in the component sense: c and d fall
// in different components of the complement of {a,b}.
template <class M>
bool separated_by_components(const M& model, const typename M::Point& a,
                             const typename M::Point& b, const typename M::Point& c,
                             const typename M::Point& d) {
    if (model.points_equal(a, b) || model.points_equal(c, d)) return false;
    if (model.points_equal(a, c) || model.points_equal(a, d) || model.points_equal(b, c) ||
        model.points_equal(b, d))
        return false;
    const auto parts = model.copair_components(a, b);
    require(parts.size() == 2, "ComponentCount", "the co-pair must have exactly two components");
    const bool c_first = model.contains(parts[0], c);
    const bool d_first = model.contains(parts[0], d);
    return c_first != d_first;
}

// The exchange laws of the component-crossing relation on four points:
// crossing pairings exclude each other, two failures force the third, and the
// relation is symmetric.
template <class M>
Report check_four_points(const M& model, const typename M::Point& a, const typename M::Point& b,
                         const typename M::Point& c, const typename M::Point& d) {
    const std::string check = "four-point-exchange";
    const bool ab_cd = separated_by_components(model, a, b, c, d);
    const bool ac_bd = separated_by_components(model, a, c, b, d);
    const bool ad_bc = separated_by_components(model, a, d, b, c);
    const bool bd_ac = separated_by_components(model, b, d, a, c);
    Json pts{{"a", model.point_json(a)},
             {"b", model.point_json(b)},
             {"c", model.point_json(c)},
             {"d", model.point_json(d)}};
    if (ac_bd && ab_cd) {
        pts["violated"] = "crossing pairings must exclude each other";
        return Report::fail(check, pts);
    }
    if (!ab_cd && !ad_bc && !bd_ac) {
        pts["violated"] = "two excluded pairings must force the third";
        return Report::fail(check, pts);
    }
    if (ac_bd != bd_ac) {
        pts["violated"] = "symmetry";
        return Report::fail(check, pts);
    }
    return Report::pass(check);
}

// An "open interval" (a plain component) contained in an interval with its
// ends adjoined cannot reach those ends.
template <class M>
Report check_open_avoids_edges(const M& model, const typename M::Point& v,
                               const typename M::Point& w, const typename M::Point& x,
                               const typename M::Point& y, const typename M::Point& z) {
    const std::string check = "open-avoids-edges";
    require(!model.points_equal(v, w) && !model.points_equal(v, x) && !model.points_equal(w, x),
            "DegeneratePoints", "v, w, x must be pairwise distinct");
    require(!model.points_equal(v, y) && !model.points_equal(v, z) && !model.points_equal(y, z),
            "DegeneratePoints", "v, y, z must be pairwise distinct");
    const auto inner = model.component_of(v, model.copair_complement(w, x));
    const auto outer = model.component_of(v, model.copair_complement(y, z));
    const auto outer_closed = model.with_point(model.with_point(outer, y), z);
    if (!model.subset(inner, outer_closed)) return Report::vacuous(check);
    if (model.contains(inner, y))
        return Report::fail(check, Json{{"v", model.point_json(v)},
                                        {"w", model.point_json(w)},
                                        {"x", model.point_json(x)},
                                        {"y", model.point_json(y)},
                                        {"z", model.point_json(z)}});
    return Report::pass(check);
}

// Finite-sample check of the complement identity: a connected set A with
// a in A and xi outside A is the intersection, over probes x outside A, of
// the components of a in the complements of {xi, x}.  Verified as: every such
// component contains A, and each probe is excluded by its own term.
template <class M>
Report check_complement_representation(const M& model, const typename M::Subset& a_set,
                                       const typename M::Point& a, const typename M::Point& xi,
                                       const std::vector<typename M::Point>& probes) {
    const std::string check = "complement-representation";
    require(model.is_connected(a_set), "NotConnected", "the set must be connected");
    require(model.contains(a_set, a), "PreconditionFailed", "base point must lie in the set");
    require(!model.contains(a_set, xi), "PreconditionFailed",
            "reference point must lie outside the set");
    if (probes.empty()) return Report::vacuous(check);
    for (const auto& x : probes) {
        require(!model.contains(a_set, x) && !model.points_equal(x, xi), "PreconditionFailed",
                "probes must lie outside the set and differ from the reference point");
        const auto term = model.component_of(a, model.copair_complement(xi, x));
        if (!model.subset(a_set, term) || model.contains(term, x))
            return Report::fail(check, Json{{"probe", model.point_json(x)},
                                            {"term", model.subset_json(term)},
                                            {"set", model.subset_json(a_set)}});
    }
    return Report::pass(check);
}

// ---------------------------------------------------------------------------
// Derived separation relation.

// The relation on a finite sample of points where chords cross exactly when
// their endpoints land in different components of the co-pair complement.
// Returned on sample indices 0..k-1 (index i stands for sample[i]).
template <class M>
SeparationRelation derive_seprel(const M& model, const std::vector<typename M::Point>& sample) {
    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = i + 1; j < sample.size(); ++j)
            require(!model.points_equal(sample[i], sample[j]), "DuplicatePoint",
                    "sample points must be pairwise distinct");
    std::vector<PointId> pts(sample.size());
    for (std::size_t i = 0; i < sample.size(); ++i) pts[i] = static_cast<PointId>(i);
    std::vector<std::pair<Chord, Chord>> pairs;
    const std::size_t n = sample.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto parts = model.copair_components(sample[i], sample[j]);
            require(parts.size() == 2, "ComponentCount",
                    "the co-pair must have exactly two components");
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                for (std::size_t l = k + 1; l < n; ++l) {
                    if (l == i || l == j) continue;
                    const bool k_first = model.contains(parts[0], sample[k]);
                    const bool l_first = model.contains(parts[0], sample[l]);
                    if (k_first != l_first)
                        pairs.emplace_back(Chord(static_cast<PointId>(i), static_cast<PointId>(j)),
                                           Chord(static_cast<PointId>(k), static_cast<PointId>(l)));
                }
            }
        }
    return SeparationRelation::from_pairs(pts, pairs);
}

// ---------------------------------------------------------------------------
// Classification of connected subsets.

enum class ConnectedForm {
    Empty,
    Whole,
    Singleton,
    CoSingleton,
    Component,
    ComponentPlusOne,
    ComponentPlusTwo,
};

inline const char* connected_form_str(ConnectedForm f) {
    switch (f) {
        case ConnectedForm::Empty: return "Empty";
        case ConnectedForm::Whole: return "Whole";
        case ConnectedForm::Singleton: return "Singleton";
        case ConnectedForm::CoSingleton: return "CoSingleton";
        case ConnectedForm::Component: return "Component";
        case ConnectedForm::ComponentPlusOne: return "ComponentPlusOne";
        case ConnectedForm::ComponentPlusTwo: return "ComponentPlusTwo";
    }
    return "?";
}

template <class M>
struct Classification {
    ConnectedForm form;
    std::optional<std::pair<typename M::Point, typename M::Point>> pair;

    Json to_json(const M& model) const {
        Json j{{"form", connected_form_str(form)}};
        if (pair) {
            j["x"] = model.point_json(pair->first);
            j["y"] = model.point_json(pair->second);
        }
        return j;
    }
};

// Every connected subset of a two-flimsy space is empty, everything, a
// singleton, a co-singleton, or a component of some co-pair with zero, one,
// or two of the removed points adjoined.  Finding no matching form falsifies
// the classification for the model and is reported loudly.
template <class M>
Classification<M> classify_connected_subset(const M& model, const typename M::Subset& d) {
    using C = Classification<M>;
    require(model.is_connected(d), "NotConnected", "classification needs a connected input");
    if (model.empty(d)) return C{ConnectedForm::Empty, std::nullopt};
    if (model.equal(d, model.ground())) return C{ConnectedForm::Whole, std::nullopt};
    if (model.as_single_point(d)) return C{ConnectedForm::Singleton, std::nullopt};
    if (model.as_single_point(model.complement(d))) return C{ConnectedForm::CoSingleton, std::nullopt};

    for (const auto& [x, y] : model.boundary_pairs(d)) {
        if (model.points_equal(x, y)) continue;
        const auto copair = model.copair_complement(x, y);
        const auto core = model.intersect(d, copair);
        if (model.empty(core)) continue;
        bool is_component = false;
        for (const auto& part : model.copair_components(x, y))
            if (model.equal(part, core)) { is_component = true; break; }
        if (!is_component) continue;
        const bool has_x = model.contains(d, x);
        const bool has_y = model.contains(d, y);
        if (has_x && has_y) return C{ConnectedForm::ComponentPlusTwo, std::make_pair(x, y)};
        if (has_x) return C{ConnectedForm::ComponentPlusOne, std::make_pair(x, y)};
        if (has_y) return C{ConnectedForm::ComponentPlusOne, std::make_pair(y, x)};
        return C{ConnectedForm::Component, std::make_pair(x, y)};
    }
    fail("NoFormMatches", "connected set fits no classified form");
}

}  // namespace flimsy
