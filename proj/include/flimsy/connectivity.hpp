#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "flimsy/report.hpp"
#include "flimsy/set_family.hpp"

namespace flimsy {

// A finite connectivity space: a ground set together with the family of its
// "connected" subsets.  Nothing is assumed about the family; the axioms are
// checked, never presumed.
struct FiniteConnectivity {
    SetFamily family;

    int n() const { return family.n(); }
    Mask full() const { return family.full_mask(); }
    bool connected(Mask m) const { return family.contains(m); }
};

inline FiniteConnectivity make_connectivity(std::vector<PointId> ground,
                                            std::vector<Mask> members) {
    return FiniteConnectivity{make_set_family(std::move(ground), std::move(members))};
}

namespace detail {

inline Json subset_json(const SetFamily& fam, Mask m) {
    Json arr = Json::array();
    for (PointId p : fam.points_of(m)) arr.push_back(p);
    return arr;
}

}  // namespace detail

// C1: every singleton is connected.
inline Report check_c1(const FiniteConnectivity& space) {
    for (int i = 0; i < space.n(); ++i) {
        const Mask single = Mask{1} << i;
        if (!space.connected(single))
            return Report::fail("C1", Json{{"singleton", detail::subset_json(space.family, single)}});
    }
    return Report::pass("C1");
}

// C2, pairwise form: the empty set is connected, and the union of two
// overlapping connected sets is connected.  For finite families this is
// equivalent to the subfamily form: any subfamily with a common point can be
// unioned one member at a time, every partial union keeping that point.
inline Report check_c2(const FiniteConnectivity& space) {
    if (!space.connected(0))
        return Report::fail("C2", Json{{"missing", Json::array()}});
    const auto& members = space.family.members;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const Mask a = members[i], b = members[j];
            if ((a & b) != 0 && !space.connected(a | b))
                return Report::fail("C2", Json{{"a", detail::subset_json(space.family, a)},
                                               {"b", detail::subset_json(space.family, b)},
                                               {"missing_union", detail::subset_json(space.family, a | b)}});
        }
    return Report::pass("C2");
}

// Component of `y` within `Y`: the union of all connected subsets of Y
// containing y.  Meaningful once C1 and C2 hold.
inline Mask component_within(const FiniteConnectivity& space, Mask Y, int y_bit) {
    Mask c = 0;
    for (Mask m : space.family.members)
        if (mask_contains(m, y_bit) && mask_subset(m, Y)) c |= m;
    return c;
}

// C3: for Y connected and x, y in Y, removing from Y the component of y in
// Y \ {x} leaves a connected set.
inline Report check_c3(const FiniteConnectivity& space) {
    for (Mask Y : space.family.members)
        for (int x : mask_bits(Y))
            for (int y : mask_bits(Y)) {
                if (x == y) continue;
                const Mask c = component_within(space, Y & ~(Mask{1} << x), y);
                if (!space.connected(Y & ~c))
                    return Report::fail(
                        "C3", Json{{"Y", detail::subset_json(space.family, Y)},
                                   {"x", space.family.ground[x]},
                                   {"y", space.family.ground[y]},
                                   {"not_connected", detail::subset_json(space.family, Y & ~c)}});
            }
    return Report::pass("C3");
}

// C4: for non-empty connected A, B with A u B connected, either some point x
// of A u B extends both ("button"), or some connected S inside A u B has a
// disconnected trace on A or on B ("seam").
inline Report check_c4(const FiniteConnectivity& space) {
    const auto& members = space.family.members;
    for (Mask a : members) {
        if (a == 0) continue;
        for (Mask b : members) {
            if (b == 0) continue;
            const Mask u = a | b;
            if (!space.connected(u)) continue;
            bool ok = false;
            for (int x : mask_bits(u)) {
                const Mask xm = Mask{1} << x;
                if (space.connected(a | xm) && space.connected(b | xm)) { ok = true; break; }
            }
            if (!ok) {
                for (Mask s : members) {
                    if (s == 0 || !mask_subset(s, u)) continue;
                    if (!space.connected(s & a) || !space.connected(s & b)) { ok = true; break; }
                }
            }
            if (!ok)
                return Report::fail("C4", Json{{"a", detail::subset_json(space.family, a)},
                                               {"b", detail::subset_json(space.family, b)}});
        }
    }
    return Report::pass("C4");
}

inline std::vector<Report> check_axioms(const FiniteConnectivity& space,
                                        const std::vector<std::string>& which = {"C1", "C2", "C3",
                                                                                 "C4"}) {
    std::vector<Report> out;
    for (const std::string& ax : which) {
        if (ax == "C1") out.push_back(check_c1(space));
        else if (ax == "C2") out.push_back(check_c2(space));
        else if (ax == "C3") out.push_back(check_c3(space));
        else if (ax == "C4") out.push_back(check_c4(space));
        else fail("UnknownAxiom", "no such connectivity axiom: " + ax);
    }
    return out;
}

// Maximal connected subsets of Y, as a partition of Y.  Requires C1 and C2
// (pairwise), otherwise the partition is ill-defined.
inline std::vector<Mask> components(const FiniteConnectivity& space, Mask Y) {
    require(check_c1(space).passed() && check_c2(space).passed(), "AxiomPrecondition",
            "components need C1 and C2 to hold");
    std::vector<Mask> parts;
    Mask remaining = Y;
    while (remaining != 0) {
        const int y = mask_bits(remaining).front();
        const Mask c = component_within(space, Y, y);
        parts.push_back(c);
        remaining &= ~c;
    }
    std::sort(parts.begin(), parts.end());
    return parts;
}

// T1: no two-point subset is connected.
inline Report is_t1(const FiniteConnectivity& space) {
    for (int i = 0; i < space.n(); ++i)
        for (int j = i + 1; j < space.n(); ++j) {
            const Mask pair = (Mask{1} << i) | (Mask{1} << j);
            if (space.connected(pair))
                return Report::fail("T1", Json{{"pair", detail::subset_json(space.family, pair)}});
        }
    return Report::pass("T1");
}

namespace detail {

// Enumerates size-k subsets of the ground set in ascending mask order,
// invoking fn(mask); fn returns false to stop early.
template <typename Fn>
bool for_each_subset_of_size(int n, int k, Fn&& fn) {
    if (k > n) return true;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        Mask m = 0;
        for (int i : idx) m |= Mask{1} << i;
        if (!fn(m)) return false;
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) return true;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
}

}  // namespace detail

// n-flimsy: more than n points; removing fewer than n points leaves a
// connected set; removing exactly n points never does.
inline Report is_n_flimsy(const FiniteConnectivity& space, int n) {
    require(n >= 1, "BadArity", "flimsiness index must be positive");
    const std::string check = "flimsy(" + std::to_string(n) + ")";
    if (space.n() <= n)
        return Report::fail(check, Json{{"reason", "cardinality"},
                                        {"ground_size", space.n()},
                                        {"required_minimum", n + 1}});
    Report result = Report::pass(check);
    for (int k = 0; k < n && result.passed(); ++k) {
        detail::for_each_subset_of_size(space.n(), k, [&](Mask s) {
            if (!space.connected(space.full() & ~s)) {
                result = Report::fail(check, Json{{"removed", detail::subset_json(space.family, s)},
                                                  {"expected", "connected"}});
                return false;
            }
            return true;
        });
    }
    if (result.passed()) {
        detail::for_each_subset_of_size(space.n(), n, [&](Mask s) {
            if (space.connected(space.full() & ~s)) {
                result = Report::fail(check, Json{{"removed", detail::subset_json(space.family, s)},
                                                  {"expected", "disconnected"}});
                return false;
            }
            return true;
        });
    }
    return result;
}

}  // namespace flimsy
