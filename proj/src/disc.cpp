#include "rcm/disc.hpp"

#include <cmath>

namespace rcm {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double wrap_turn(double t) {
  double w = t - std::floor(t);
  if (w >= 1.0) w -= 1.0;  // guard against t = -1e-20 rounding up
  return w;
}

DiscPoint::DiscPoint(double re_, double im_) : re(re_), im(im_) {
  if (re * re + im * im > 1.0 + kDiscTol) {
    throw ParameterError("DiscPoint outside the closed unit disc: |z|^2 = " +
                         std::to_string(re * re + im * im));
  }
}

double DiscPoint::angle_turns() const {
  if (re == 0.0 && im == 0.0) return 0.0;
  return wrap_turn(std::atan2(im, re) / kTwoPi);
}

DiscPoint DiscPoint::polar(double r, double t) {
  return DiscPoint(r * std::cos(kTwoPi * t), r * std::sin(kTwoPi * t));
}

Arc::Arc(double start_, double length_) : start(start_), length(length_) {
  if (!(start >= 0.0 && start < 1.0)) {
    throw ParameterError("Arc start must lie in [0,1), got " +
                         std::to_string(start));
  }
  if (!(length > 0.0 && length <= 1.0)) {
    throw ParameterError("Arc length must lie in (0,1], got " +
                         std::to_string(length));
  }
}

bool Arc::contains(double t) const {
  if (length >= 1.0) return true;
  double d = wrap_turn(t) - start;
  if (d < 0.0) d += 1.0;
  return d < length;
}

CarlesonWindow::CarlesonWindow(Arc arc_, double depth_)
    : arc(arc_), depth(depth_) {
  if (!(depth > 0.0 && depth <= 1.0)) {
    throw ParameterError("CarlesonWindow depth must lie in (0,1], got " +
                         std::to_string(depth));
  }
}

bool CarlesonWindow::contains(const DiscPoint& z) const {
  double r = z.radius();
  if (r > 1.0 + kDiscTol) {
    throw ParameterError("point outside the closed disc: |z| = " +
                         std::to_string(r));
  }
  if (r < 1.0 - depth - kDiscTol) return false;
  if (r == 0.0) return depth >= 1.0 && arc.length >= 1.0;
  return arc.contains(z.angle_turns());
}

std::vector<Arc> dyadic_arc_family(int level_max) {
  if (level_max < 0 || level_max > 24) {
    throw ParameterError("dyadic level_max must lie in [0,24], got " +
                         std::to_string(level_max));
  }
  std::vector<Arc> arcs;
  arcs.reserve(2 * ((std::size_t{2} << level_max) - 1));
  for (int j = 0; j <= level_max; ++j) {
    const double len = std::ldexp(1.0, -j);
    const int count = 1 << j;
    for (int k = 0; k < count; ++k) arcs.emplace_back(k * len, len);
    for (int k = 0; k < count; ++k)
      arcs.emplace_back(wrap_turn((k + 0.5) * len), len);
  }
  return arcs;
}

}  // namespace rcm
