#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "flimsy/error.hpp"
#include "flimsy/rational.hpp"

namespace flimsy {

// A point of the big interval of sequences over [0,1] under first-difference
// comparison, restricted to the exactly representable fragment: eventually
// constant sequences of rationals.  Coordinate i is the explicit entry at i
// when present, and `tail` otherwise.  Canonical form stores no entry whose
// value equals the tail, so equality is structural.
struct LexPoint {
    std::vector<std::pair<std::uint32_t, Rat>> entries;  // sorted by index
    Rat tail = 0;

    Rat coord(std::uint32_t i) const {
        auto it = std::lower_bound(entries.begin(), entries.end(), i,
                                   [](const auto& e, std::uint32_t k) { return e.first < k; });
        if (it != entries.end() && it->first == i) return it->second;
        return tail;
    }

    bool operator==(const LexPoint& other) const {
        return tail == other.tail && entries == other.entries;
    }
};

inline LexPoint make_lex_point(std::vector<std::pair<std::uint32_t, Rat>> entries, Rat tail) {
    require(rat_in_unit_interval(tail), "CoordOutOfRange", "tail must lie in [0,1]");
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        require(entries[i].first != entries[i + 1].first, "DuplicateIndex",
                "repeated coordinate index");
    LexPoint p;
    p.tail = std::move(tail);
    for (auto& e : entries) {
        require(rat_in_unit_interval(e.second), "CoordOutOfRange",
                "coordinates must lie in [0,1]");
        if (e.second != p.tail) p.entries.push_back(std::move(e));
    }
    return p;
}

inline LexPoint lex_min() { return {}; }
inline LexPoint lex_max() { return make_lex_point({}, 1); }
inline LexPoint lex_const(const Rat& value) { return make_lex_point({}, value); }

// The first-difference comparison: find the least index where the two
// sequences differ and compare there.  With eventually constant sequences the
// candidate indices are the explicit ones plus any gap, where tails decide.
inline std::strong_ordering lex_compare(const LexPoint& x, const LexPoint& y) {
    std::size_t i = 0, j = 0;
    std::uint32_t next_gap = 0;  // least index not yet examined
    const bool tails_differ = x.tail != y.tail;
    while (i < x.entries.size() || j < y.entries.size()) {
        std::uint32_t idx;
        if (i < x.entries.size() && j < y.entries.size())
            idx = std::min(x.entries[i].first, y.entries[j].first);
        else if (i < x.entries.size())
            idx = x.entries[i].first;
        else
            idx = y.entries[j].first;
        if (tails_differ && next_gap < idx)
            return x.tail < y.tail ? std::strong_ordering::less : std::strong_ordering::greater;
        const Rat xv = (i < x.entries.size() && x.entries[i].first == idx) ? x.entries[i].second : x.tail;
        const Rat yv = (j < y.entries.size() && y.entries[j].first == idx) ? y.entries[j].second : y.tail;
        if (xv != yv) return xv < yv ? std::strong_ordering::less : std::strong_ordering::greater;
        if (i < x.entries.size() && x.entries[i].first == idx) ++i;
        if (j < y.entries.size() && y.entries[j].first == idx) ++j;
        next_gap = idx + 1;
    }
    if (tails_differ)
        return x.tail < y.tail ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

inline bool lex_less(const LexPoint& x, const LexPoint& y) {
    return lex_compare(x, y) == std::strong_ordering::less;
}

// Supremum of a finite non-empty set by the coordinate recursion: m_0 is the
// largest 0-th coordinate, and m_{k+1} is the largest (k+1)-th coordinate
// among the points agreeing with m up to k.  For finite sets this lands on
// the maximum; the result is cross-checked against the comparison order.
inline LexPoint lex_sup(std::span<const LexPoint> points) {
    require(!points.empty(), "EmptySet", "supremum of an empty set");
    std::vector<const LexPoint*> survivors;
    for (const LexPoint& p : points) survivors.push_back(&p);

    std::uint32_t horizon = 0;  // all explicit structure lives below this index
    for (const LexPoint* p : survivors)
        if (!p->entries.empty()) horizon = std::max(horizon, p->entries.back().first + 1);

    std::vector<std::pair<std::uint32_t, Rat>> entries;
    for (std::uint32_t k = 0; k < horizon && survivors.size() > 1; ++k) {
        Rat mk = survivors.front()->coord(k);
        for (const LexPoint* p : survivors) mk = std::max(mk, p->coord(k));
        std::vector<const LexPoint*> next;
        for (const LexPoint* p : survivors)
            if (p->coord(k) == mk) next.push_back(p);
        survivors = std::move(next);
        entries.emplace_back(k, mk);
    }
    // Beyond the horizon every survivor sits on its tail; the largest tail
    // wins and stays constant from here on.
    Rat best_tail = survivors.front()->tail;
    for (const LexPoint* p : survivors) best_tail = std::max(best_tail, p->tail);
    LexPoint result;
    if (survivors.size() == 1) {
        result = *survivors.front();
        // Entries already fixed for indices below the point where the set
        // collapsed to one survivor agree with that survivor by construction.
    } else {
        result = make_lex_point(std::move(entries), best_tail);
    }

    const LexPoint* max_elem = &points.front();
    for (const LexPoint& p : points)
        if (lex_less(*max_elem, p)) max_elem = &p;
    require(result == *max_elem, "SupMismatch",
            "coordinate recursion disagrees with the comparison maximum");
    return result;
}

// Coordinatewise average; strictly between its arguments.
inline LexPoint lex_midpoint(const LexPoint& x, const LexPoint& y) {
    require(lex_less(x, y), "NotOrdered", "midpoint needs x < y");
    std::vector<std::pair<std::uint32_t, Rat>> entries;
    std::vector<std::uint32_t> indices;
    for (const auto& e : x.entries) indices.push_back(e.first);
    for (const auto& e : y.entries) indices.push_back(e.first);
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    for (std::uint32_t i : indices)
        entries.emplace_back(i, (x.coord(i) + y.coord(i)) / 2);
    return make_lex_point(std::move(entries), (x.tail + y.tail) / 2);
}

// The order-reversing involution t -> 1 - t, applied coordinatewise.
inline LexPoint lex_involution(const LexPoint& x) {
    std::vector<std::pair<std::uint32_t, Rat>> entries;
    for (const auto& e : x.entries) entries.emplace_back(e.first, Rat(1) - e.second);
    return make_lex_point(std::move(entries), Rat(1) - x.tail);
}

// Keeps coordinates below k, zeroes everything from k on.
inline LexPoint lex_truncate(const LexPoint& x, std::uint32_t k) {
    std::vector<std::pair<std::uint32_t, Rat>> entries;
    std::uint32_t horizon = k;
    if (!x.entries.empty()) horizon = std::min<std::uint32_t>(k, x.entries.back().first + 1);
    for (std::uint32_t i = 0; i < horizon; ++i) entries.emplace_back(i, x.coord(i));
    for (std::uint32_t i = horizon; i < k; ++i) entries.emplace_back(i, x.tail);
    return make_lex_point(std::move(entries), 0);
}

struct LexInterval {
    std::optional<LexPoint> lower;  // nullopt = unbounded below
    std::optional<LexPoint> upper;  // nullopt = unbounded above

    bool contains(const LexPoint& p) const {
        if (lower && lex_compare(p, *lower) != std::strong_ordering::greater) return false;
        if (upper && lex_compare(p, *upper) != std::strong_ordering::less) return false;
        return true;
    }

    // Inclusion of open intervals with optional endpoints.
    bool subset_of(const LexInterval& other) const {
        if (other.lower && (!lower || lex_less(*lower, *other.lower))) return false;
        if (other.upper && (!upper || lex_less(*other.upper, *upper))) return false;
        return true;
    }
};

// The k-th member of a countable local base at x: an open interval around x
// whose lower bound either scales the last non-zero coordinate by (1 - 1/k)
// (when x ends in zeros) or truncates x after k coordinates (when x has
// infinitely many non-zero coordinates).  Upper bounds are the mirror image
// under the involution.  Ends of the big interval get unbounded sides.
inline LexInterval lex_local_base(const LexPoint& x, int k) {
    require(k >= 1, "BadIndex", "local base index must be positive");
    auto lower_approx = [&](const LexPoint& p) -> LexPoint {
        // p != min.  Canonical form: tail == 0 means the entries are the
        // non-zero coordinates and the last one exists.
        if (p.tail == 0) {
            std::vector<std::pair<std::uint32_t, Rat>> entries = p.entries;
            entries.back().second *= Rat(k - 1, k);
            return make_lex_point(std::move(entries), 0);
        }
        return lex_truncate(p, static_cast<std::uint32_t>(k));
    };
    LexInterval out;
    if (!(x == lex_min())) out.lower = lower_approx(x);
    if (!(x == lex_max())) out.upper = lex_involution(lower_approx(lex_involution(x)));
    return out;
}

// Position of x in the three-block partition cut at the reference points
// one-third and two-thirds: [min, 1/3-tail], (1/3-tail, 2/3-tail), the rest.
inline int lex_partition_class(const LexPoint& x) {
    const LexPoint l1 = lex_const(Rat(1, 3));
    const LexPoint l2 = lex_const(Rat(2, 3));
    if (lex_compare(x, l1) != std::strong_ordering::greater) return 1;
    if (lex_less(x, l2)) return 2;
    return 3;
}

}  // namespace flimsy
