#include "valext/newton.hpp"

#include "valext/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace valext {

namespace {

// Cross product of O->A with O->B in (index, value) coordinates.
Rat cross(const PolygonPoint& o, const PolygonPoint& a, const PolygonPoint& b) {
  Rat ax = Rat(a.index - o.index), ay = a.value.rat() - o.value.rat();
  Rat bx = Rat(b.index - o.index), by = b.value.rat() - o.value.rat();
  return ax * by - ay * bx;
}

}  // namespace

NewtonPolygon lower_hull(const std::vector<PolygonPoint>& pts, const Int& group_denominator) {
  NewtonPolygon poly;
  poly.group_den_ = group_denominator;
  for (const auto& p : pts)
    if (p.value.is_finite()) poly.points_.push_back(p);
  if (poly.points_.empty()) throw Error("lower_hull: no finite points");
  std::sort(poly.points_.begin(), poly.points_.end(),
            [](const PolygonPoint& a, const PolygonPoint& b) { return a.index < b.index; });
  for (std::size_t i = 1; i < poly.points_.size(); ++i)
    if (poly.points_[i].index == poly.points_[i - 1].index)
      throw Error("lower_hull: duplicate index");

  // Monotone chain; popping on cross <= 0 drops collinear interior points so
  // the vertex list is strictly convex.
  auto& hull = poly.vertices_;
  for (const auto& p : poly.points_) {
    while (hull.size() >= 2 && !(cross(hull[hull.size() - 2], hull.back(), p) > 0)) hull.pop_back();
    hull.push_back(p);
  }

  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    Side s;
    s.left = hull[i];
    s.right = hull[i + 1];
    s.length = s.right.index - s.left.index;
    s.beta = (s.left.value.rat() - s.right.value.rat()) / Rat(s.length);
    Rat scaled = s.beta * Rat(group_denominator);
    s.e_rel = static_cast<int>(rat_den(scaled).convert_to<long>());
    Rat side_min = Rat(s.left.index) * s.beta + s.left.value.rat();
    for (const auto& p : poly.points_) {
      if (Rat(p.index) * s.beta + p.value.rat() == side_min) s.support.push_back(p.index);
    }
    poly.sides_.push_back(std::move(s));
  }
  return poly;
}

bool NewtonPolygon::determines_side(const Rat& beta) const {
  Value best = Value::infinity();
  int count = 0;
  for (const auto& p : points_) {
    Value v = Value(Rat(p.index) * beta + p.value.rat());
    if (v < best) {
      best = v;
      count = 1;
    } else if (v == best) {
      ++count;
    }
  }
  return count >= 2;
}

Side NewtonPolygon::side_for(const Rat& beta) const {
  for (const auto& s : sides_)
    if (s.beta == beta) return s;
  throw Error("beta = " + rat_to_string(beta) + " does not determine a side");
}

PolygonInvariants polygon_invariants(const NewtonPolygon& poly, const Rat& chosen_beta) {
  const Side& s = poly.side_for(chosen_beta);
  PolygonInvariants inv;
  inv.delta = s.support.back();
  inv.theta = s.support.front();
  for (const auto& p : poly.points()) {
    if (p.index == inv.delta) inv.pivotal = p;
    if (p.index == inv.theta) inv.characteristic = p;
  }
  inv.nu_plus = Value::infinity();
  for (const auto& p : poly.points()) {
    if (p.index <= inv.delta) continue;
    Value v = Value(Rat(p.index) * chosen_beta + p.value.rat());
    if (v < inv.nu_plus) inv.nu_plus = v;
  }
  if (inv.nu_plus.is_finite()) {
    int eps = inv.delta;
    for (const auto& p : poly.points()) {
      if (p.index <= inv.delta) continue;
      if (Value(Rat(p.index) * chosen_beta + p.value.rat()) == inv.nu_plus) eps = std::max(eps, p.index);
    }
    inv.epsilon = eps;
    if (eps <= inv.delta) throw InvariantViolation("epsilon <= delta on a polygon side");
  }
  return inv;
}

}  // namespace valext
