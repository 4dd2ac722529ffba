/// \file newton.hpp
/// Exact Newton polygons: lower convex hulls of (index, value) point sets
/// with rational slopes. The polygon of a polynomial places the exponent on
/// the horizontal axis and the coefficient value on the vertical axis, so the
/// candidate values beta are the negatives of the side slopes.
#pragma once

#include "valext/rational.hpp"

#include <optional>
#include <vector>

namespace valext {

struct PolygonPoint {
  int index = 0;  // exponent j
  Value value;    // value of the j-th expansion coefficient
};

struct Side {
  Rat beta;            // -slope; positive after input normalization
  PolygonPoint left;   // lower index endpoint
  PolygonPoint right;  // higher index endpoint
  std::vector<int> support;  // indices attaining the minimum of j*beta + v_j
  int e_rel = 1;       // denominator of beta relative to the ambient group (1/E)Z
  int length = 0;      // right.index - left.index
};

class NewtonPolygon {
 public:
  const std::vector<PolygonPoint>& points() const { return points_; }      // finite, index-sorted
  const std::vector<PolygonPoint>& vertices() const { return vertices_; }  // strictly convex
  const std::vector<Side>& sides() const { return sides_; }
  const Int& group_denominator() const { return group_den_; }

  int min_index() const { return vertices_.front().index; }
  int max_index() const { return vertices_.back().index; }

  /// True iff beta is the negative slope of an actual side (|S| >= 2).
  bool determines_side(const Rat& beta) const;
  Side side_for(const Rat& beta) const;  // by value: polygons are often temporaries

  friend NewtonPolygon lower_hull(const std::vector<PolygonPoint>& pts, const Int& group_denominator);

 private:
  std::vector<PolygonPoint> points_;
  std::vector<PolygonPoint> vertices_;
  std::vector<Side> sides_;
  Int group_den_ = 1;
};

/// Lower hull of the finite-valued points. Points with value ∞ are omitted;
/// at least one finite point is required. `group_denominator` E is the
/// denominator of the current level's value group (1/E)Z and fixes how each
/// side's relative ramification e_rel is read off.
NewtonPolygon lower_hull(const std::vector<PolygonPoint>& pts, const Int& group_denominator = 1);

/// Numerical characters of a chosen side.
struct PolygonInvariants {
  int delta = 0;               // max support index: degree of the initial form
  PolygonPoint pivotal;        // (delta, value at delta)
  Value nu_plus;               // min of j*beta + v_j over j > delta; ∞ if none
  std::optional<int> epsilon;  // max index attaining nu_plus; empty = ∞
  int theta = 0;               // min support index: the degree carried upward
  PolygonPoint characteristic; // (theta, value at theta)
};

PolygonInvariants polygon_invariants(const NewtonPolygon& poly, const Rat& chosen_beta);

}  // namespace valext
