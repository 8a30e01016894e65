#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "flimsy/error.hpp"

namespace flimsy {

// Finite unions of intervals over a dense linear order, with independent
// open/closed flags per endpoint.  `Ord` supplies the point type and a
// three-way compare.  Density matters to the normal form: (a,a) is empty and
// [x,p) u (p,y) has a genuine gap at p, so pieces merge only when no point is
// skipped.
template <class Ord>
class IntervalSet {
public:
    using Value = typename Ord::Value;

    struct Piece {
        Value lo, hi;
        bool lo_closed, hi_closed;
    };

    IntervalSet() = default;

    static IntervalSet empty() { return {}; }

    static IntervalSet point(const Value& v) {
        IntervalSet s;
        s.pieces_.push_back({v, v, true, true});
        return s;
    }

    static IntervalSet interval(const Value& lo, const Value& hi, bool lo_closed, bool hi_closed) {
        IntervalSet s;
        const int c = Ord::compare(lo, hi);
        if (c > 0) return s;
        if (c == 0 && !(lo_closed && hi_closed)) return s;
        s.pieces_.push_back({lo, hi, lo_closed, hi_closed});
        return s;
    }

    const std::vector<Piece>& pieces() const { return pieces_; }
    bool is_empty() const { return pieces_.empty(); }

    bool member(const Value& v) const {
        for (const Piece& p : pieces_) {
            const int cl = Ord::compare(v, p.lo);
            if (cl < 0) return false;
            const int ch = Ord::compare(v, p.hi);
            if ((cl > 0 || p.lo_closed) && (ch < 0 || (ch == 0 && p.hi_closed))) return true;
            if (ch <= 0) return false;
        }
        return false;
    }

    static IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
        std::vector<Piece> all = a.pieces_;
        all.insert(all.end(), b.pieces_.begin(), b.pieces_.end());
        return from_pieces(std::move(all));
    }

    static IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
        std::vector<Piece> out;
        for (const Piece& p : a.pieces_)
            for (const Piece& q : b.pieces_) {
                Piece r;
                const int cl = Ord::compare(p.lo, q.lo);
                r.lo = cl >= 0 ? p.lo : q.lo;
                r.lo_closed = cl > 0 ? p.lo_closed : (cl < 0 ? q.lo_closed : (p.lo_closed && q.lo_closed));
                const int ch = Ord::compare(p.hi, q.hi);
                r.hi = ch <= 0 ? p.hi : q.hi;
                r.hi_closed = ch < 0 ? p.hi_closed : (ch > 0 ? q.hi_closed : (p.hi_closed && q.hi_closed));
                const int c = Ord::compare(r.lo, r.hi);
                if (c < 0 || (c == 0 && r.lo_closed && r.hi_closed)) out.push_back(r);
            }
        return from_pieces(std::move(out));
    }

    // Complement relative to the universe interval [lo, hi] with the given
    // endpoint flags.  The set must be contained in that universe.
    static IntervalSet complement_within(const IntervalSet& s, const Value& lo, const Value& hi,
                                         bool lo_closed, bool hi_closed) {
        std::vector<Piece> out;
        Value cursor = lo;
        bool cursor_closed = lo_closed;  // next gap starts at cursor with this closedness
        for (const Piece& p : s.pieces_) {
            const int c = Ord::compare(cursor, p.lo);
            if (c < 0 || (c == 0 && cursor_closed && !p.lo_closed)) {
                out.push_back({cursor, p.lo, cursor_closed, !p.lo_closed});
            }
            cursor = p.hi;
            cursor_closed = !p.hi_closed;
        }
        const int c = Ord::compare(cursor, hi);
        if (c < 0 || (c == 0 && cursor_closed && hi_closed)) {
            out.push_back({cursor, hi, cursor_closed, hi_closed});
        }
        return from_pieces(std::move(out));
    }

    bool equals(const IntervalSet& other) const {
        if (pieces_.size() != other.pieces_.size()) return false;
        for (std::size_t i = 0; i < pieces_.size(); ++i) {
            const Piece& p = pieces_[i];
            const Piece& q = other.pieces_[i];
            if (Ord::compare(p.lo, q.lo) != 0 || Ord::compare(p.hi, q.hi) != 0 ||
                p.lo_closed != q.lo_closed || p.hi_closed != q.hi_closed)
                return false;
        }
        return true;
    }

    bool subset_of(const IntervalSet& other) const {
        return intersect(*this, other).equals(*this);
    }

    std::size_t piece_count() const { return pieces_.size(); }

    static IntervalSet from_pieces(std::vector<Piece> raw) {
        IntervalSet s;
        std::sort(raw.begin(), raw.end(), [](const Piece& x, const Piece& y) {
            const int c = Ord::compare(x.lo, y.lo);
            if (c != 0) return c < 0;
            return x.lo_closed && !y.lo_closed;
        });
        for (Piece p : raw) {
            if (s.pieces_.empty()) {
                s.pieces_.push_back(p);
                continue;
            }
            Piece& last = s.pieces_.back();
            const int c = Ord::compare(p.lo, last.hi);
            const bool joins = c < 0 || (c == 0 && (last.hi_closed || p.lo_closed));
            if (!joins) {
                s.pieces_.push_back(p);
                continue;
            }
            const int ch = Ord::compare(p.hi, last.hi);
            if (ch > 0) {
                last.hi = p.hi;
                last.hi_closed = p.hi_closed;
            } else if (ch == 0) {
                last.hi_closed = last.hi_closed || p.hi_closed;
            }
        }
        return s;
    }

private:
    std::vector<Piece> pieces_;
};

// Subsets of a circle, represented on the cut line [zero, one) where the cut
// point e has representative zero and one is the excluded upper sentinel
// (one on the line means "just below e").  Circular structure enters only in
// arc construction, complements, and the component queries, which re-join the
// two line pieces around e when e itself belongs to the set.
template <class Dom>
class CircleSet {
public:
    using Value = typename Dom::Value;
    using Line = IntervalSet<Dom>;
    using Piece = typename Line::Piece;

    CircleSet() = default;
    explicit CircleSet(Line line) : line_(std::move(line)) {}

    static CircleSet empty() { return {}; }

    static CircleSet full() {
        return CircleSet(Line::interval(Dom::zero(), Dom::one(), true, false));
    }

    static CircleSet point(const Value& v) {
        check_rep(v);
        return CircleSet(Line::point(v));
    }

    // Counterclockwise arc from `start` to `end`; wraps through e when
    // end <= start.  A start == end arc with both ends open is the complement
    // of the point; with any end closed it covers the whole circle.
    static CircleSet arc(const Value& start, const Value& end, bool start_closed, bool end_closed) {
        check_rep(start);
        check_rep(end);
        const int c = Dom::compare(start, end);
        if (c < 0) return CircleSet(Line::interval(start, end, start_closed, end_closed));
        if (c == 0) {
            if (start_closed || end_closed) return full();
            return complement(point(start));
        }
        Line lower = Line::interval(Dom::zero(), end, true, end_closed);
        Line upper = Line::interval(start, Dom::one(), start_closed, false);
        return CircleSet(Line::unite(lower, upper));
    }

    const Line& line() const { return line_; }
    bool is_empty() const { return line_.is_empty(); }

    bool is_full() const { return equals(full()); }

    bool member(const Value& v) const {
        check_rep(v);
        return line_.member(v);
    }

    static CircleSet unite(const CircleSet& a, const CircleSet& b) {
        return CircleSet(Line::unite(a.line_, b.line_));
    }
    static CircleSet intersect(const CircleSet& a, const CircleSet& b) {
        return CircleSet(Line::intersect(a.line_, b.line_));
    }
    static CircleSet complement(const CircleSet& a) {
        return CircleSet(Line::complement_within(a.line_, Dom::zero(), Dom::one(), true, false));
    }
    static CircleSet with_point(const CircleSet& a, const Value& v) { return unite(a, point(v)); }
    static CircleSet without_point(const CircleSet& a, const Value& v) {
        return intersect(a, complement(point(v)));
    }

    bool equals(const CircleSet& other) const { return line_.equals(other.line_); }
    bool subset_of(const CircleSet& other) const { return line_.subset_of(other.line_); }

    // The two line pieces flanking e fuse into one circular piece when e is
    // in the set: the last piece must reach the sentinel and the first must
    // start closed at zero.
    bool wrap_joined() const {
        const auto& ps = line_.pieces();
        if (ps.size() < 2) return false;
        return Dom::compare(ps.front().lo, Dom::zero()) == 0 && ps.front().lo_closed &&
               Dom::compare(ps.back().hi, Dom::one()) == 0;
    }

    std::size_t circle_piece_count() const {
        const std::size_t k = line_.pieces().size();
        return wrap_joined() ? k - 1 : k;
    }

    // Connected as a trace on the circle: empty, a single point, a single
    // arc, or the full circle.
    bool connected_on_circle() const { return circle_piece_count() <= 1; }

    std::vector<CircleSet> circle_components() const {
        std::vector<CircleSet> out;
        const auto& ps = line_.pieces();
        if (ps.empty()) return out;
        const bool wrap = wrap_joined();
        const std::size_t begin = wrap ? 1 : 0;
        if (wrap) {
            out.push_back(CircleSet(Line::from_pieces({ps.front(), ps.back()})));
        }
        for (std::size_t i = begin; i + (wrap ? 1 : 0) < ps.size(); ++i)
            out.push_back(CircleSet(Line::from_pieces(single(ps[i]))));
        std::sort(out.begin(), out.end(), [](const CircleSet& a, const CircleSet& b) {
            return less_canonical(a, b);
        });
        return out;
    }

    std::optional<CircleSet> component_containing(const Value& v) const {
        for (const CircleSet& c : circle_components())
            if (c.member(v)) return c;
        return std::nullopt;
    }

    // Circular normal form: wrapping pieces fused back into arcs; degenerate
    // pieces reported as isolated points.
    struct Arc {
        Value start, end;
        bool start_closed, end_closed;
    };
    struct NormalForm {
        bool full = false;
        std::vector<Arc> arcs;          // sorted by start
        std::vector<Value> isolated;    // sorted
    };

    NormalForm normal_form() const {
        NormalForm nf;
        if (is_full()) {
            nf.full = true;
            return nf;
        }
        const auto& ps = line_.pieces();
        const bool wrap = wrap_joined();
        auto emit = [&](const Piece& p) {
            if (Dom::compare(p.lo, p.hi) == 0) {
                nf.isolated.push_back(p.lo);
            } else {
                const bool hi_is_sentinel = Dom::compare(p.hi, Dom::one()) == 0;
                nf.arcs.push_back({p.lo, hi_is_sentinel ? Dom::zero() : p.hi, p.lo_closed,
                                   hi_is_sentinel ? false : p.hi_closed});
            }
        };
        if (wrap) {
            const Piece& first = ps.front();
            const Piece& last = ps.back();
            nf.arcs.push_back({last.lo, first.hi, last.lo_closed, first.hi_closed});
            for (std::size_t i = 1; i + 1 < ps.size(); ++i) emit(ps[i]);
        } else {
            for (const Piece& p : ps) emit(p);
        }
        std::sort(nf.arcs.begin(), nf.arcs.end(), [](const Arc& a, const Arc& b) {
            return Dom::compare(a.start, b.start) < 0;
        });
        std::sort(nf.isolated.begin(), nf.isolated.end(),
                  [](const Value& a, const Value& b) { return Dom::compare(a, b) < 0; });
        return nf;
    }

    static CircleSet from_normal_form(const NormalForm& nf) {
        if (nf.full) return full();
        CircleSet out = empty();
        for (const Arc& a : nf.arcs) out = unite(out, arc(a.start, a.end, a.start_closed, a.end_closed));
        for (const Value& v : nf.isolated) out = unite(out, point(v));
        return out;
    }

    static bool less_canonical(const CircleSet& a, const CircleSet& b) {
        const auto& pa = a.line_.pieces();
        const auto& pb = b.line_.pieces();
        for (std::size_t i = 0; i < std::min(pa.size(), pb.size()); ++i) {
            int c = Dom::compare(pa[i].lo, pb[i].lo);
            if (c != 0) return c < 0;
            c = Dom::compare(pa[i].hi, pb[i].hi);
            if (c != 0) return c < 0;
            if (pa[i].lo_closed != pb[i].lo_closed) return pa[i].lo_closed;
            if (pa[i].hi_closed != pb[i].hi_closed) return pa[i].hi_closed;
        }
        return pa.size() < pb.size();
    }

private:
    static std::vector<Piece> single(const Piece& p) { return {p}; }

    static void check_rep(const Value& v) {
        require(Dom::compare(v, Dom::zero()) >= 0 && Dom::compare(v, Dom::one()) < 0,
                "PointOutOfRange", "circle representative out of range");
    }

    Line line_;
};

}  // namespace flimsy
