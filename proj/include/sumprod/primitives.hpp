#pragma once

// Planar primitives shared by the tube/ball predicates and the overlap oracle.
// Everything is templated on the scalar so the same code can be instantiated
// in long double when cross-checking binary64 results.

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace sumprod {

template <typename Scalar>
using Point2 = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
using Polygon2 = std::vector<Point2<Scalar>>;

/// Squared Euclidean distance from `p` to the closed segment [a, b].
template <typename Scalar>
Scalar segment_distance_squared(const Point2<Scalar>& p, const Point2<Scalar>& a, const Point2<Scalar>& b) {
  const Point2<Scalar> d = b - a;
  const Scalar len2 = d.squaredNorm();
  Scalar t = len2 > Scalar(0) ? (p - a).dot(d) / len2 : Scalar(0);
  t = std::clamp(t, Scalar(0), Scalar(1));
  return (p - (a + t * d)).squaredNorm();
}

template <typename Scalar>
Scalar cross2(const Point2<Scalar>& u, const Point2<Scalar>& v) {
  return u.x() * v.y() - u.y() * v.x();
}

/// Shoelace area; positive for counter-clockwise polygons.
template <typename Scalar>
Scalar polygon_area(const Polygon2<Scalar>& poly) {
  if (poly.size() < 3) return Scalar(0);
  Scalar twice = 0;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) twice += cross2(poly[j], poly[i]);
  return twice / Scalar(2);
}

/// Sutherland-Hodgman clip of `subject` against a convex counter-clockwise `clip`.
template <typename Scalar>
Polygon2<Scalar> clip_convex(Polygon2<Scalar> subject, const Polygon2<Scalar>& clip) {
  for (std::size_t e = 0; e < clip.size() && !subject.empty(); ++e) {
    const Point2<Scalar>& a = clip[e];
    const Point2<Scalar>& b = clip[(e + 1) % clip.size()];
    const Point2<Scalar> edge = b - a;
    auto side = [&](const Point2<Scalar>& p) { return cross2<Scalar>(edge, p - a); };
    Polygon2<Scalar> out;
    out.reserve(subject.size() + 2);
    for (std::size_t i = 0; i < subject.size(); ++i) {
      const Point2<Scalar>& cur = subject[i];
      const Point2<Scalar>& prev = subject[(i + subject.size() - 1) % subject.size()];
      const Scalar sc = side(cur);
      const Scalar sp = side(prev);
      if (sc >= 0) {
        if (sp < 0) out.push_back(prev + (cur - prev) * (sp / (sp - sc)));
        out.push_back(cur);
      } else if (sp >= 0) {
        out.push_back(prev + (cur - prev) * (sp / (sp - sc)));
      }
    }
    subject = std::move(out);
  }
  return subject;
}

/// Counter-clockwise polygon inscribed in the radius-r neighbourhood of the
/// segment [a, b]; each cap is sampled with `cap_steps` + 1 vertices.
template <typename Scalar>
Polygon2<Scalar> stadium_polygon(const Point2<Scalar>& a, const Point2<Scalar>& b, Scalar r, int cap_steps = 64) {
  const Point2<Scalar> d = b - a;
  const Scalar base = std::atan2(d.y(), d.x());
  const Scalar pi = std::numbers::pi_v<Scalar>;
  Polygon2<Scalar> poly;
  poly.reserve(2 * (cap_steps + 1));
  // Cap around b sweeps from base - pi/2 to base + pi/2, cap around a continues to base + 3pi/2.
  for (int k = 0; k <= cap_steps; ++k) {
    const Scalar th = base - pi / 2 + pi * Scalar(k) / Scalar(cap_steps);
    poly.emplace_back(b.x() + r * std::cos(th), b.y() + r * std::sin(th));
  }
  for (int k = 0; k <= cap_steps; ++k) {
    const Scalar th = base + pi / 2 + pi * Scalar(k) / Scalar(cap_steps);
    poly.emplace_back(a.x() + r * std::cos(th), a.y() + r * std::sin(th));
  }
  return poly;
}

}  // namespace sumprod
