#include "herd/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace herd {

namespace {

int orientation_sign(const Vec2& a, const Vec2& b, const Vec2& c) {
  const double v = (b - a).cross(c - a);
  if (v > 0.0) return 1;
  if (v < 0.0) return -1;
  return 0;
}

bool on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  const int o1 = orientation_sign(a, b, c);
  const int o2 = orientation_sign(a, b, d);
  const int o3 = orientation_sign(c, d, a);
  const int o4 = orientation_sign(c, d, b);

  if (o1 != o2 && o3 != o4) return true;

  // Collinear touches / overlaps.
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

bool point_in_polygon(const Vec2& p, const Polygon& poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;

  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2& a = poly[j];
    const Vec2& b = poly[i];
    // Border counts as inside.
    if (orientation_sign(a, b, p) == 0 && on_segment(a, b, p)) return true;
    if ((b.y > p.y) != (a.y > p.y)) {
      const double x_cross = b.x + (p.y - b.y) * (a.x - b.x) / (a.y - b.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

Vec2 closest_point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 ab = b - a;
  const double len_sq = ab.norm_sq();
  if (len_sq == 0.0) return a;
  double t = (p - a).dot(ab) / len_sq;
  t = std::clamp(t, 0.0, 1.0);
  return a + ab * t;
}

Vec2 closest_point_on_polygon(const Vec2& p, const Polygon& poly) {
  Vec2 best = poly.front();
  double best_d = (p - best).norm_sq();
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 q = closest_point_on_segment(p, poly[j], poly[i]);
    const double d = (p - q).norm_sq();
    if (d < best_d) {
      best_d = d;
      best = q;
    }
  }
  return best;
}

double distance_to_polygon(const Vec2& p, const Polygon& poly) {
  return (p - closest_point_on_polygon(p, poly)).norm();
}

bool segment_hits_polygon(const Vec2& p, const Vec2& q, const Polygon& poly) {
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    if (segments_intersect(p, q, poly[j], poly[i])) return true;
  }
  // No edge crossing: the segment is fully inside or fully outside.
  return point_in_polygon(p, poly);
}

namespace {

// Clips against one half-plane keep(v) == true; inter(a,b) returns the
// boundary crossing point.
template <typename Keep, typename Inter>
Polygon clip_half_plane(const Polygon& poly, Keep keep, Inter inter) {
  Polygon out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2& cur = poly[i];
    const Vec2& prev = poly[(i + n - 1) % n];
    const bool cur_in = keep(cur);
    const bool prev_in = keep(prev);
    if (cur_in) {
      if (!prev_in) out.push_back(inter(prev, cur));
      out.push_back(cur);
    } else if (prev_in) {
      out.push_back(inter(prev, cur));
    }
  }
  return out;
}

}  // namespace

Polygon clip_polygon_to_rect(const Polygon& poly, const Rect& r) {
  Polygon p = poly;
  auto lerp_x = [](const Vec2& a, const Vec2& b, double x) {
    const double t = (x - a.x) / (b.x - a.x);
    return Vec2{x, a.y + t * (b.y - a.y)};
  };
  auto lerp_y = [](const Vec2& a, const Vec2& b, double y) {
    const double t = (y - a.y) / (b.y - a.y);
    return Vec2{a.x + t * (b.x - a.x), y};
  };
  p = clip_half_plane(
      p, [&](const Vec2& v) { return v.x >= r.min_x; },
      [&](const Vec2& a, const Vec2& b) { return lerp_x(a, b, r.min_x); });
  if (p.size() < 3) return {};
  p = clip_half_plane(
      p, [&](const Vec2& v) { return v.x <= r.max_x; },
      [&](const Vec2& a, const Vec2& b) { return lerp_x(a, b, r.max_x); });
  if (p.size() < 3) return {};
  p = clip_half_plane(
      p, [&](const Vec2& v) { return v.y >= r.min_y; },
      [&](const Vec2& a, const Vec2& b) { return lerp_y(a, b, r.min_y); });
  if (p.size() < 3) return {};
  p = clip_half_plane(
      p, [&](const Vec2& v) { return v.y <= r.max_y; },
      [&](const Vec2& a, const Vec2& b) { return lerp_y(a, b, r.max_y); });
  if (p.size() < 3) return {};
  return p;
}

Polygon make_rect_polygon(double min_x, double min_y, double max_x, double max_y) {
  return {{min_x, min_y}, {max_x, min_y}, {max_x, max_y}, {min_x, max_y}};
}

Polygon make_oriented_rect(const Vec2& c, double hx, double hy, double angle) {
  const double ca = std::cos(angle);
  const double sa = std::sin(angle);
  auto rot = [&](double x, double y) {
    return Vec2{c.x + x * ca - y * sa, c.y + x * sa + y * ca};
  };
  return {rot(-hx, -hy), rot(hx, -hy), rot(hx, hy), rot(-hx, hy)};
}

}  // namespace herd
