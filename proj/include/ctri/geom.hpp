#pragma once

#include <optional>
#include <variant>

#include "ctri/rational.hpp"

namespace ctri {

struct Point {
    Rational x;
    Rational y;

    Point() = default;
    Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    // Lexicographic; used for normalized keys, not geometry.
    friend bool operator<(const Point& a, const Point& b) {
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(const Rational& s) const { return {x * s, y * s}; }

    std::size_t bit_length() const {
        auto bx = x.bit_length(), by = y.bit_length();
        return bx > by ? bx : by;
    }
};

struct Segment {
    Point a;
    Point b;
    Segment() = default;
    Segment(Point pa, Point pb) : a(std::move(pa)), b(std::move(pb)) {}
    bool degenerate() const { return a == b; }
};

enum class Orientation { Clockwise, CounterClockwise, Collinear };

// Exact sign of the cross product (q - p) x (r - p).
Rational cross(const Point& p, const Point& q, const Point& r);
Orientation orientation(const Point& p, const Point& q, const Point& r);

// Dot product (q - p) . (r - p); used for on-segment tests.
Rational dot(const Point& p, const Point& q, const Point& r);

// True iff p lies on the closed segment s.
bool on_segment(const Point& p, const Segment& s);
// True iff p lies strictly between the endpoints of s.
bool strictly_inside_segment(const Point& p, const Segment& s);

struct SegmentIntersection {
    enum class Kind { Disjoint, ProperCrossing, TouchPoint, TouchSegment };
    Kind kind = Kind::Disjoint;
    // Set for ProperCrossing and TouchPoint.
    std::optional<Point> point;
    // Set for TouchSegment (positive-length collinear overlap).
    std::optional<Segment> overlap;
};

// Exact classification of how two closed segments meet.
SegmentIntersection segments_intersect(const Segment& s1, const Segment& s2);

// True iff the two closed segments share at least one point.
bool segments_meet(const Segment& s1, const Segment& s2);

// True iff the open interiors of the segments cross at a single point
// (no endpoint involvement, not collinear).
bool proper_crossing(const Segment& s1, const Segment& s2);

// Intersection of the two supporting lines; nullopt when parallel
// (including coincident lines). Carrier segments must be nondegenerate.
std::optional<Point> line_intersection(const Segment& l1, const Segment& l2);

Point midpoint(const Point& p, const Point& q);

// Squared Euclidean distance (exact).
Rational dist2(const Point& p, const Point& q);

}  // namespace ctri
