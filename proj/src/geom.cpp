#include "ctri/geom.hpp"

#include <stdexcept>

namespace ctri {

Rational cross(const Point& p, const Point& q, const Point& r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
    int s = cross(p, q, r).sign();
    if (s > 0) return Orientation::CounterClockwise;
    if (s < 0) return Orientation::Clockwise;
    return Orientation::Collinear;
}

Rational dot(const Point& p, const Point& q, const Point& r) {
    return (q.x - p.x) * (r.x - p.x) + (q.y - p.y) * (r.y - p.y);
}

bool on_segment(const Point& p, const Segment& s) {
    if (cross(s.a, s.b, p).sign() != 0) return false;
    return min(s.a.x, s.b.x) <= p.x && p.x <= max(s.a.x, s.b.x) &&
           min(s.a.y, s.b.y) <= p.y && p.y <= max(s.a.y, s.b.y);
}

bool strictly_inside_segment(const Point& p, const Segment& s) {
    return on_segment(p, s) && p != s.a && p != s.b;
}

namespace {

// Collinear overlap of two segments known to lie on one line.
SegmentIntersection collinear_overlap(const Segment& s1, const Segment& s2) {
    SegmentIntersection out;
    const bool use_x = s1.a.x != s1.b.x;
    auto key = [use_x](const Point& p) -> const Rational& { return use_x ? p.x : p.y; };
    Point lo1 = s1.a, hi1 = s1.b;
    if (key(hi1) < key(lo1)) std::swap(lo1, hi1);
    Point lo2 = s2.a, hi2 = s2.b;
    if (key(hi2) < key(lo2)) std::swap(lo2, hi2);
    const Point& lo = key(lo1) < key(lo2) ? lo2 : lo1;
    const Point& hi = key(hi1) < key(hi2) ? hi1 : hi2;
    if (key(hi) < key(lo)) {
        out.kind = SegmentIntersection::Kind::Disjoint;
        return out;
    }
    if (lo == hi) {
        out.kind = SegmentIntersection::Kind::TouchPoint;
        out.point = lo;
        return out;
    }
    out.kind = SegmentIntersection::Kind::TouchSegment;
    out.overlap = Segment(lo, hi);
    return out;
}

}  // namespace

SegmentIntersection segments_intersect(const Segment& s1, const Segment& s2) {
    SegmentIntersection out;

    if (s1.degenerate() || s2.degenerate()) {
        // Degenerate segments behave as points.
        const bool d1 = s1.degenerate(), d2 = s2.degenerate();
        if (d1 && d2) {
            if (s1.a == s2.a) {
                out.kind = SegmentIntersection::Kind::TouchPoint;
                out.point = s1.a;
            }
            return out;
        }
        const Point& p = d1 ? s1.a : s2.a;
        const Segment& s = d1 ? s2 : s1;
        if (on_segment(p, s)) {
            out.kind = SegmentIntersection::Kind::TouchPoint;
            out.point = p;
        }
        return out;
    }

    Rational d1 = cross(s2.a, s2.b, s1.a);
    Rational d2 = cross(s2.a, s2.b, s1.b);
    Rational d3 = cross(s1.a, s1.b, s2.a);
    Rational d4 = cross(s1.a, s1.b, s2.b);
    int sd1 = d1.sign(), sd2 = d2.sign(), sd3 = d3.sign(), sd4 = d4.sign();

    if (sd1 == 0 && sd2 == 0) return collinear_overlap(s1, s2);

    if (((sd1 > 0 && sd2 < 0) || (sd1 < 0 && sd2 > 0)) &&
        ((sd3 > 0 && sd4 < 0) || (sd3 < 0 && sd4 > 0))) {
        // Proper crossing at s1.a + u * (s1.b - s1.a), u = d1 / (d1 - d2).
        Rational u = d1 / (d1 - d2);
        out.kind = SegmentIntersection::Kind::ProperCrossing;
        out.point = Point(s1.a.x + (s1.b.x - s1.a.x) * u, s1.a.y + (s1.b.y - s1.a.y) * u);
        return out;
    }

    // Touching cases: an endpoint of one lies on the other.
    if (sd1 == 0 && on_segment(s1.a, s2)) {
        out.kind = SegmentIntersection::Kind::TouchPoint;
        out.point = s1.a;
        return out;
    }
    if (sd2 == 0 && on_segment(s1.b, s2)) {
        out.kind = SegmentIntersection::Kind::TouchPoint;
        out.point = s1.b;
        return out;
    }
    if (sd3 == 0 && on_segment(s2.a, s1)) {
        out.kind = SegmentIntersection::Kind::TouchPoint;
        out.point = s2.a;
        return out;
    }
    if (sd4 == 0 && on_segment(s2.b, s1)) {
        out.kind = SegmentIntersection::Kind::TouchPoint;
        out.point = s2.b;
        return out;
    }
    return out;
}

bool segments_meet(const Segment& s1, const Segment& s2) {
    return segments_intersect(s1, s2).kind != SegmentIntersection::Kind::Disjoint;
}

bool proper_crossing(const Segment& s1, const Segment& s2) {
    return segments_intersect(s1, s2).kind == SegmentIntersection::Kind::ProperCrossing;
}

std::optional<Point> line_intersection(const Segment& l1, const Segment& l2) {
    if (l1.degenerate() || l2.degenerate())
        throw std::invalid_argument("line_intersection: degenerate carrier");
    Rational dx1 = l1.b.x - l1.a.x, dy1 = l1.b.y - l1.a.y;
    Rational dx2 = l2.b.x - l2.a.x, dy2 = l2.b.y - l2.a.y;
    Rational denom = dx1 * dy2 - dy1 * dx2;
    if (denom.is_zero()) return std::nullopt;
    Rational t = ((l2.a.x - l1.a.x) * dy2 - (l2.a.y - l1.a.y) * dx2) / denom;
    return Point(l1.a.x + dx1 * t, l1.a.y + dy1 * t);
}

Point midpoint(const Point& p, const Point& q) {
    Rational half(1, 2);
    return Point((p.x + q.x) * half, (p.y + q.y) * half);
}

Rational dist2(const Point& p, const Point& q) {
    Rational dx = p.x - q.x, dy = p.y - q.y;
    return dx * dx + dy * dy;
}

}  // namespace ctri
