#pragma once

#include <vector>

#include "herd/vec2.hpp"

namespace herd {

// Simple (non-self-intersecting) polygon, vertices in any winding order.
using Polygon = std::vector<Vec2>;

struct Rect {
  double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;

  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
  bool contains(const Vec2& p) const {
    return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
  }
  Vec2 center() const { return {(min_x + max_x) * 0.5, (min_y + max_y) * 0.5}; }
};

// True if segments [a,b] and [c,d] share any point, including endpoint
// touches and collinear overlap.
bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);

// Even-odd rule; points exactly on the border count as inside.
bool point_in_polygon(const Vec2& p, const Polygon& poly);

// Closest point on the polygon boundary to p.
Vec2 closest_point_on_polygon(const Vec2& p, const Polygon& poly);

// Distance from p to the polygon boundary (0 if on the border).
double distance_to_polygon(const Vec2& p, const Polygon& poly);

Vec2 closest_point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b);

// True if segment [p,q] touches the polygon (border or interior).
bool segment_hits_polygon(const Vec2& p, const Vec2& q, const Polygon& poly);

// Sutherland-Hodgman clip of a polygon against an axis-aligned rectangle.
// Returns an empty polygon when nothing remains.
Polygon clip_polygon_to_rect(const Polygon& poly, const Rect& rect);

// Axis-aligned rectangle as a CCW polygon.
Polygon make_rect_polygon(double min_x, double min_y, double max_x, double max_y);

// Rectangle centered at c with half extents (hx, hy), rotated by angle (rad).
Polygon make_oriented_rect(const Vec2& c, double hx, double hy, double angle);

}  // namespace herd
