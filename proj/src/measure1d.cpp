// Copyright 2026 The swgeo Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swgeo/measure1d.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "swgeo/rng.hpp"

namespace swgeo {
namespace {

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

bool all_finite(std::initializer_list<double> values) {
  return std::all_of(values.begin(), values.end(),
                     [](double v) { return std::isfinite(v); });
}

// CDF of the unit arcsine law at u.
double arcsine_cdf(double u) {
  if (u <= -1.0) return 0.0;
  if (u >= 1.0) return 1.0;
  return 0.5 + std::asin(u) / std::numbers::pi;
}

}  // namespace

// ---------------------------------------------------------------------------
// Measure1D

Measure1D::Measure1D(std::vector<Atom> atoms, std::vector<DensityPiece> pieces,
                     std::vector<ArcsinePart> arcsines) {
  for (const ArcsinePart& a : arcsines) {
    require(all_finite({a.center, a.half_width, a.mass}),
            "Measure1D: non-finite arcsine parameter");
    require(a.mass >= 0.0, "Measure1D: negative arcsine mass");
    require(a.half_width >= 0.0, "Measure1D: negative arcsine half-width");
    if (a.mass == 0.0) continue;
    if (a.half_width == 0.0) {
      atoms.push_back({a.center, a.mass});
    } else {
      arcsines_.push_back(a);
    }
  }
  std::sort(arcsines_.begin(), arcsines_.end(),
            [](const ArcsinePart& l, const ArcsinePart& r) {
              return l.center != r.center ? l.center < r.center
                                          : l.half_width < r.half_width;
            });

  for (const Atom& a : atoms) {
    require(all_finite({a.position, a.mass}), "Measure1D: non-finite atom");
    require(a.mass >= 0.0, "Measure1D: negative atom mass");
  }
  std::erase_if(atoms, [](const Atom& a) { return a.mass == 0.0; });
  std::stable_sort(atoms.begin(), atoms.end(),
                   [](const Atom& l, const Atom& r) {
                     return l.position < r.position;
                   });
  for (const Atom& a : atoms) {
    if (!atoms_.empty() && atoms_.back().position == a.position) {
      atoms_.back().mass += a.mass;
    } else {
      atoms_.push_back(a);
    }
  }

  for (const DensityPiece& p : pieces) {
    require(all_finite({p.lo, p.hi, p.density}), "Measure1D: non-finite piece");
    require(p.lo <= p.hi, "Measure1D: piece with lo > hi");
    require(p.density >= 0.0, "Measure1D: negative density");
  }
  std::erase_if(pieces, [](const DensityPiece& p) {
    return p.lo == p.hi || p.density == 0.0;
  });
  std::sort(pieces.begin(), pieces.end(),
            [](const DensityPiece& l, const DensityPiece& r) {
              return l.lo < r.lo;
            });
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    require(pieces[i - 1].hi <= pieces[i].lo,
            "Measure1D: overlapping pieces (use MeasureBuilder to sum them)");
  }

  // Split at interior atom positions, then merge equal-density neighbours
  // whose junction carries no atom.
  std::vector<DensityPiece> split;
  for (const DensityPiece& p : pieces) {
    double lo = p.lo;
    auto it = std::upper_bound(
        atoms_.begin(), atoms_.end(), p.lo,
        [](double x, const Atom& a) { return x < a.position; });
    for (; it != atoms_.end() && it->position < p.hi; ++it) {
      split.push_back({lo, it->position, p.density});
      lo = it->position;
    }
    split.push_back({lo, p.hi, p.density});
  }
  for (const DensityPiece& p : split) {
    if (!pieces_.empty() && pieces_.back().hi == p.lo &&
        pieces_.back().density == p.density && atom_mass(p.lo) == 0.0) {
      pieces_.back().hi = p.hi;
    } else {
      pieces_.push_back(p);
    }
  }

  atom_prefix_.assign(atoms_.size() + 1, 0.0);
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    atom_prefix_[i + 1] = atom_prefix_[i] + atoms_[i].mass;
  }
  piece_prefix_.assign(pieces_.size() + 1, 0.0);
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    piece_prefix_[i + 1] = piece_prefix_[i] + pieces_[i].mass();
  }

  const double mass = total_mass();
  if (std::abs(mass - 1.0) > kMassTolerance) {
    std::ostringstream msg;
    msg << std::setprecision(17) << "Measure1D: total mass " << mass
        << " is not 1";
    throw std::invalid_argument(msg.str());
  }
}

Measure1D Measure1D::dirac(double x) { return Measure1D({{x, 1.0}}, {}); }

Measure1D Measure1D::uniform(double a, double b) {
  require(a < b, "Measure1D::uniform: need a < b");
  return Measure1D({}, {{a, b, 1.0 / (b - a)}});
}

Measure1D Measure1D::arcsine(double center, double half_width) {
  require(half_width > 0.0, "Measure1D::arcsine: need half_width > 0");
  return Measure1D({}, {}, {{center, half_width, 1.0}});
}

double Measure1D::total_mass() const {
  double mass = atom_prefix_.back() + piece_prefix_.back();
  for (const ArcsinePart& a : arcsines_) mass += a.mass;
  return mass;
}

double Measure1D::support_min() const {
  double lo = kInfinity;
  if (!atoms_.empty()) lo = std::min(lo, atoms_.front().position);
  if (!pieces_.empty()) lo = std::min(lo, pieces_.front().lo);
  for (const ArcsinePart& a : arcsines_) {
    lo = std::min(lo, a.center - a.half_width);
  }
  return lo;
}

double Measure1D::support_max() const {
  double hi = -kInfinity;
  if (!atoms_.empty()) hi = std::max(hi, atoms_.back().position);
  if (!pieces_.empty()) hi = std::max(hi, pieces_.back().hi);
  for (const ArcsinePart& a : arcsines_) {
    hi = std::max(hi, a.center + a.half_width);
  }
  return hi;
}

double Measure1D::cdf(double x) const {
  const auto atom_end = std::partition_point(
      atoms_.begin(), atoms_.end(),
      [x](const Atom& a) { return a.position < x; });
  double f = atom_prefix_[atom_end - atoms_.begin()];

  const auto piece_end = std::partition_point(
      pieces_.begin(), pieces_.end(),
      [x](const DensityPiece& p) { return p.lo < x; });
  if (piece_end != pieces_.begin()) {
    const std::size_t j = (piece_end - pieces_.begin()) - 1;
    const DensityPiece& p = pieces_[j];
    f += piece_prefix_[j];
    f += x >= p.hi ? p.mass() : p.density * (x - p.lo);
  }

  for (const ArcsinePart& a : arcsines_) {
    f += a.mass * arcsine_cdf((x - a.center) / a.half_width);
  }
  return std::clamp(f, 0.0, 1.0);
}

double Measure1D::atom_mass(double x) const {
  const auto it = std::partition_point(
      atoms_.begin(), atoms_.end(),
      [x](const Atom& a) { return a.position < x; });
  return (it != atoms_.end() && it->position == x) ? it->mass : 0.0;
}

std::vector<double> Measure1D::knots() const {
  std::vector<double> out;
  for (const Atom& a : atoms_) out.push_back(a.position);
  for (const DensityPiece& p : pieces_) {
    out.push_back(p.lo);
    out.push_back(p.hi);
  }
  for (const ArcsinePart& a : arcsines_) {
    out.push_back(a.center - a.half_width);
    out.push_back(a.center + a.half_width);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

QuantileFn Measure1D::quantile() const {
  if (!is_piecewise()) {
    return QuantileFn::analytic(std::make_shared<const Measure1D>(*this));
  }
  struct Item {
    double start;
    double end;
    double mass;
    bool atom;
  };
  std::vector<Item> items;
  items.reserve(atoms_.size() + pieces_.size());
  for (const Atom& a : atoms_) {
    items.push_back({a.position, a.position, a.mass, true});
  }
  for (const DensityPiece& p : pieces_) {
    items.push_back({p.lo, p.hi, p.mass(), false});
  }
  // An atom at x precedes a piece starting at x.
  std::sort(items.begin(), items.end(), [](const Item& l, const Item& r) {
    if (l.start != r.start) return l.start < r.start;
    return l.atom && !r.atom;
  });

  std::vector<QuantilePoint> points;
  double s = 0.0;
  double x = items.front().start;
  points.push_back({s, x});
  for (const Item& item : items) {
    if (item.start > x) {
      x = item.start;
      points.push_back({s, x});
    }
    s = std::min(1.0, s + item.mass);
    x = item.end;
    points.push_back({s, x});
  }
  points.back().s = 1.0;
  return QuantileFn::piecewise(std::move(points));
}

// ---------------------------------------------------------------------------
// QuantileFn

QuantileFn QuantileFn::piecewise(std::vector<QuantilePoint> points) {
  require(!points.empty(), "QuantileFn: no breakpoints");
  QuantileFn q;
  for (const QuantilePoint& p : points) {
    if (!q.points_.empty() && q.points_.back().s == p.s &&
        q.points_.back().x == p.x) {
      continue;
    }
    if (!q.points_.empty()) {
      require(p.s >= q.points_.back().s && p.x >= q.points_.back().x,
              "QuantileFn: breakpoints must be nondecreasing");
    }
    q.points_.push_back(p);
  }
  require(q.points_.front().s == 0.0 && q.points_.back().s == 1.0,
          "QuantileFn: breakpoints must span s in [0, 1]");
  for (const QuantilePoint& p : q.points_) {
    if (q.kinks_.empty() || q.kinks_.back() != p.s) q.kinks_.push_back(p.s);
  }
  return q;
}

QuantileFn QuantileFn::analytic(std::shared_ptr<const Measure1D> measure) {
  require(measure != nullptr, "QuantileFn: null measure");
  QuantileFn q;
  q.kinks_ = {0.0, 1.0};
  for (double x : measure->knots()) {
    const double f = measure->cdf(x);
    q.kinks_.push_back(f);
    q.kinks_.push_back(std::min(1.0, f + measure->atom_mass(x)));
  }
  std::sort(q.kinks_.begin(), q.kinks_.end());
  q.kinks_.erase(std::unique(q.kinks_.begin(), q.kinks_.end()),
                 q.kinks_.end());
  const std::vector<double> xs = measure->knots();
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const double f = measure->cdf(xs[k]);
    Knot knot{xs[k], f, f + measure->atom_mass(xs[k]), -1};
    if (k + 1 < xs.size()) {
      const double lo = xs[k];
      const double hi = xs[k + 1];
      int parts = 0;
      for (const DensityPiece& p : measure->pieces()) {
        if (p.lo < hi && p.hi > lo && p.density > 0.0) ++parts;
      }
      const auto& arcsines = measure->arcsines();
      for (std::size_t i = 0; i < arcsines.size(); ++i) {
        const ArcsinePart& a = arcsines[i];
        if (a.center - a.half_width < hi && a.center + a.half_width > lo) {
          ++parts;
          knot.arcsine = static_cast<int>(i);
        }
      }
      if (parts != 1) knot.arcsine = -1;
    }
    q.knots_.push_back(knot);
  }
  q.measure_ = std::move(measure);
  return q;
}

double QuantileFn::solve_between(std::size_t k, double s, bool closed) const {
  const Measure1D& m = *measure_;
  const Knot& a = knots_[k];
  const Knot& b = knots_[k + 1];
  if (a.arcsine >= 0) {
    const ArcsinePart& part = m.arcsines()[a.arcsine];
    const double level =
        arcsine_cdf((a.x - part.center) / part.half_width) +
        (s - a.closed) / part.mass;
    const double u =
        std::sin(std::numbers::pi * (std::clamp(level, 0.0, 1.0) - 0.5));
    return std::clamp(part.center + part.half_width * u, a.x, b.x);
  }
  double lo = a.x;
  double hi = b.x;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (closed ? m.cdf(mid) + m.atom_mass(mid) >= s : m.cdf(mid) > s) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return closed ? hi : lo;
}

double QuantileFn::operator()(double s) const {
  s = std::clamp(s, 0.0, 1.0);
  if (measure_) {
    // Last knot with F(x) <= s.
    const auto it = std::upper_bound(
        knots_.begin(), knots_.end(), s,
        [](double v, const Knot& k) { return v < k.open; });
    if (it == knots_.begin()) return knots_.front().x;
    const auto k = static_cast<std::size_t>(it - knots_.begin()) - 1;
    if (s == 1.0 || k + 1 == knots_.size() || knots_[k].closed > s) {
      return knots_[k].x;
    }
    return solve_between(k, s, false);
  }
  const auto it = std::upper_bound(
      points_.begin(), points_.end(), s,
      [](double v, const QuantilePoint& p) { return v < p.s; });
  if (it == points_.end()) return points_.back().x;
  const QuantilePoint& a = *(it - 1);
  if (a.s == s) return a.x;
  const QuantilePoint& b = *it;
  return a.x + (s - a.s) / (b.s - a.s) * (b.x - a.x);
}

double QuantileFn::left_limit(double s) const {
  s = std::clamp(s, 0.0, 1.0);
  if (s == 0.0) return (*this)(0.0);
  if (measure_) {
    // First knot with mu((-inf, x]) >= s.
    const auto it = std::lower_bound(
        knots_.begin(), knots_.end(), s,
        [](const Knot& k, double v) { return k.closed < v; });
    if (it == knots_.end()) return knots_.back().x;
    const auto k = static_cast<std::size_t>(it - knots_.begin());
    if (k == 0 || knots_[k].open < s) return knots_[k].x;
    return solve_between(k - 1, s, true);
  }
  const auto it = std::lower_bound(
      points_.begin(), points_.end(), s,
      [](const QuantilePoint& p, double v) { return p.s < v; });
  if (it == points_.end()) return points_.back().x;
  if (it->s == s) return it->x;
  const QuantilePoint& a = *(it - 1);
  const QuantilePoint& b = *it;
  return a.x + (s - a.s) / (b.s - a.s) * (b.x - a.x);
}

// ---------------------------------------------------------------------------
// MeasureBuilder

MeasureBuilder& MeasureBuilder::add_atom(double x, double mass) {
  atoms_.push_back({x, mass});
  return *this;
}

MeasureBuilder& MeasureBuilder::add_density(double lo, double hi,
                                            double density) {
  pieces_.push_back({lo, hi, density});
  return *this;
}

MeasureBuilder& MeasureBuilder::add_uniform(double lo, double hi,
                                            double mass) {
  require(lo <= hi, "MeasureBuilder::add_uniform: need lo <= hi");
  if (lo == hi) return add_atom(lo, mass);
  return add_density(lo, hi, mass / (hi - lo));
}

MeasureBuilder& MeasureBuilder::add_arcsine(double center, double half_width,
                                            double mass) {
  arcsines_.push_back({center, half_width, mass});
  return *this;
}

MeasureBuilder& MeasureBuilder::add(const Measure1D& m, double weight) {
  for (const Atom& a : m.atoms()) add_atom(a.position, weight * a.mass);
  for (const DensityPiece& p : m.pieces()) {
    add_density(p.lo, p.hi, weight * p.density);
  }
  for (const ArcsinePart& a : m.arcsines()) {
    add_arcsine(a.center, a.half_width, weight * a.mass);
  }
  return *this;
}

Measure1D MeasureBuilder::build() const {
  std::vector<DensityPiece> pieces;
  for (const DensityPiece& p : pieces_) {
    require(std::isfinite(p.lo) && std::isfinite(p.hi) && p.lo <= p.hi,
            "MeasureBuilder: invalid piece");
    if (p.lo < p.hi && p.density != 0.0) pieces.push_back(p);
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const DensityPiece& l, const DensityPiece& r) {
              return l.lo < r.lo;
            });
  bool disjoint = true;
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i - 1].hi > pieces[i].lo) disjoint = false;
  }
  if (!disjoint) {
    std::vector<double> ends;
    for (const DensityPiece& p : pieces) {
      ends.push_back(p.lo);
      ends.push_back(p.hi);
    }
    std::sort(ends.begin(), ends.end());
    ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
    std::vector<DensityPiece> refined;
    for (std::size_t k = 0; k + 1 < ends.size(); ++k) {
      double density = 0.0;
      for (const DensityPiece& p : pieces) {
        if (p.lo <= ends[k] && p.hi >= ends[k + 1]) density += p.density;
      }
      if (density != 0.0) refined.push_back({ends[k], ends[k + 1], density});
    }
    pieces = std::move(refined);
  }
  return Measure1D(atoms_, std::move(pieces), arcsines_);
}

// ---------------------------------------------------------------------------
// PiecewiseLinearMap

PiecewiseLinearMap::PiecewiseLinearMap(std::vector<MapPoint> points,
                                       double left_slope, double right_slope)
    : points_(std::move(points)),
      left_slope_(left_slope),
      right_slope_(right_slope) {
  require(!points_.empty(), "PiecewiseLinearMap: no points");
  require(left_slope_ >= 0.0 && right_slope_ >= 0.0,
          "PiecewiseLinearMap: end slopes must be >= 0 (map not monotone)");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    require(std::isfinite(points_[i].x) && std::isfinite(points_[i].y),
            "PiecewiseLinearMap: non-finite point");
    if (i > 0) {
      require(points_[i].x >= points_[i - 1].x,
              "PiecewiseLinearMap: x must be nondecreasing");
      require(points_[i].y >= points_[i - 1].y,
              "PiecewiseLinearMap: map is not monotone nondecreasing");
    }
  }
}

PiecewiseLinearMap PiecewiseLinearMap::identity() {
  return PiecewiseLinearMap({{0.0, 0.0}}, 1.0, 1.0);
}

PiecewiseLinearMap PiecewiseLinearMap::affine(double scale, double shift) {
  return PiecewiseLinearMap({{0.0, shift}}, scale, scale);
}

double PiecewiseLinearMap::operator()(double x) const {
  if (x < points_.front().x) {
    return points_.front().y + left_slope_ * (x - points_.front().x);
  }
  if (x > points_.back().x) {
    return points_.back().y + right_slope_ * (x - points_.back().x);
  }
  const auto it = std::upper_bound(
      points_.begin(), points_.end(), x,
      [](double v, const MapPoint& p) { return v < p.x; });
  const MapPoint& a = *(it - 1);
  if (a.x == x || it == points_.end()) return a.y;
  const MapPoint& b = *it;
  return a.y + (b.y - a.y) * ((x - a.x) / (b.x - a.x));
}

PiecewiseLinearMap PiecewiseLinearMap::blend_with_identity(
    double lambda) const {
  require(lambda >= 0.0 && lambda <= 1.0,
          "blend_with_identity: lambda must lie in [0, 1]");
  std::vector<MapPoint> pts;
  pts.reserve(points_.size());
  for (const MapPoint& p : points_) {
    pts.push_back({p.x, (1.0 - lambda) * p.x + lambda * p.y});
  }
  return PiecewiseLinearMap(std::move(pts),
                            (1.0 - lambda) + lambda * left_slope_,
                            (1.0 - lambda) + lambda * right_slope_);
}

// ---------------------------------------------------------------------------
// Free functions

double cdf_eval(const Measure1D& m, double x) { return m.cdf(x); }

QuantileFn quantile(const Measure1D& m) { return m.quantile(); }

Measure1D pushforward_pwl(const Measure1D& m, const PiecewiseLinearMap& map) {
  require(m.is_piecewise(),
          "pushforward_pwl: measure must be a discrete mixture");
  std::vector<MapPoint> pts = map.points();
  const double lo = m.support_min();
  const double hi = m.support_max();
  if (lo < pts.front().x) pts.insert(pts.begin(), {lo, map(lo)});
  if (hi > pts.back().x) pts.push_back({hi, map(hi)});

  // Drop interior points where the slope does not change, so a map that is
  // affine on the support does not split pieces.
  std::vector<MapPoint> merged = {pts.front()};
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (merged.size() >= 2 && i + 1 <= pts.size()) {
      const MapPoint& a = merged[merged.size() - 2];
      const MapPoint& b = merged.back();
      const MapPoint& c = pts[i];
      if (a.x < b.x && b.x < c.x &&
          (b.y - a.y) / (b.x - a.x) == (c.y - b.y) / (c.x - b.x)) {
        merged.back() = c;
        continue;
      }
    }
    merged.push_back(pts[i]);
  }
  pts = std::move(merged);

  auto segment_value = [&pts](std::size_t i, double x) {
    if (x == pts[i].x) return pts[i].y;
    if (x == pts[i + 1].x) return pts[i + 1].y;
    const double slope = (pts[i + 1].y - pts[i].y) / (pts[i + 1].x - pts[i].x);
    const double intercept = pts[i].y - slope * pts[i].x;
    if (slope * pts[i].x + intercept == pts[i].y &&
        slope * pts[i + 1].x + intercept == pts[i + 1].y) {
      return slope * x + intercept;
    }
    return pts[i].y + slope * (x - pts[i].x);
  };

  MeasureBuilder builder;
  for (const Atom& a : m.atoms()) builder.add_atom(map(a.position), a.mass);
  for (const DensityPiece& p : m.pieces()) {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      if (pts[i + 1].x <= p.lo) continue;
      if (pts[i].x >= p.hi) break;
      if (pts[i].x == pts[i + 1].x) continue;
      const double a = std::max(p.lo, pts[i].x);
      const double b = std::min(p.hi, pts[i + 1].x);
      if (a >= b) continue;
      const double ya = segment_value(i, a);
      const double yb = segment_value(i, b);
      const double mass = p.density * (b - a);
      if (yb > ya) {
        builder.add_density(ya, yb, mass / (yb - ya));
      } else {
        builder.add_atom(ya, mass);
      }
    }
  }
  return builder.build();
}

Measure1D affine_pushforward(const Measure1D& m, double scale, double shift) {
  require(std::isfinite(scale) && std::isfinite(shift),
          "affine_pushforward: non-finite parameters");
  if (scale == 0.0) return Measure1D::dirac(shift);
  MeasureBuilder builder;
  const double abs_scale = std::abs(scale);
  for (const Atom& a : m.atoms()) {
    builder.add_atom(scale * a.position + shift, a.mass);
  }
  for (const DensityPiece& p : m.pieces()) {
    double lo = scale * p.lo + shift;
    double hi = scale * p.hi + shift;
    if (lo > hi) std::swap(lo, hi);
    builder.add_density(lo, hi, p.density / abs_scale);
  }
  for (const ArcsinePart& a : m.arcsines()) {
    builder.add_arcsine(scale * a.center + shift, abs_scale * a.half_width,
                        a.mass);
  }
  return builder.build();
}

std::vector<double> sample(const Measure1D& m, std::size_t n,
                           std::uint64_t seed) {
  require(n >= 1, "sample: n must be >= 1");
  const QuantileFn q = m.quantile();
  Rng rng(seed);
  std::vector<double> out(n);
  for (double& v : out) v = q(rng.uniform());
  return out;
}

double cdf_sup_distance(const Measure1D& a, const Measure1D& b) {
  std::vector<double> xs = a.knots();
  const std::vector<double> kb = b.knots();
  xs.insert(xs.end(), kb.begin(), kb.end());
  if (!a.is_piecewise() || !b.is_piecewise()) {
    const double lo = std::min(a.support_min(), b.support_min());
    const double hi = std::max(a.support_max(), b.support_max());
    constexpr int kGrid = 10000;
    for (int i = 0; i <= kGrid; ++i) {
      xs.push_back(lo + (hi - lo) * i / kGrid);
    }
  }
  double worst = 0.0;
  for (double x : xs) {
    const double fa = a.cdf(x);
    const double fb = b.cdf(x);
    worst = std::max(worst, std::abs(fa - fb));
    worst = std::max(worst, std::abs(std::min(1.0, fa + a.atom_mass(x)) -
                                     std::min(1.0, fb + b.atom_mass(x))));
  }
  return worst;
}

bool approx_equal(const Measure1D& a, const Measure1D& b, double tol) {
  if (a.atoms().size() != b.atoms().size()) return false;
  for (std::size_t i = 0; i < a.atoms().size(); ++i) {
    if (std::abs(a.atoms()[i].position - b.atoms()[i].position) > tol ||
        std::abs(a.atoms()[i].mass - b.atoms()[i].mass) > tol) {
      return false;
    }
  }
  if (a.arcsines().size() != b.arcsines().size()) return false;
  for (std::size_t i = 0; i < a.arcsines().size(); ++i) {
    const ArcsinePart& pa = a.arcsines()[i];
    const ArcsinePart& pb = b.arcsines()[i];
    if (std::abs(pa.center - pb.center) > tol ||
        std::abs(pa.half_width - pb.half_width) > tol ||
        std::abs(pa.mass - pb.mass) > tol) {
      return false;
    }
  }
  return cdf_sup_distance(a, b) <= tol;
}

Measure1D parse_measure_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  std::vector<Atom> atoms;
  std::vector<DensityPiece> pieces;
  std::vector<ArcsinePart> arcsines;
  auto fail = [&line_number](const std::string& what) {
    throw std::runtime_error("measure text line " +
                             std::to_string(line_number) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword) || keyword.front() == '#') continue;
    std::vector<double> values;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(token, &used);
      } catch (const std::exception&) {
        fail("cannot parse number '" + token + "'");
      }
      if (used != token.size()) fail("cannot parse number '" + token + "'");
      values.push_back(v);
    }
    if (keyword == "atom") {
      if (values.size() != 2) fail("expected 'atom <pos> <mass>'");
      atoms.push_back({values[0], values[1]});
    } else if (keyword == "piece") {
      if (values.size() != 3) fail("expected 'piece <lo> <hi> <density>'");
      pieces.push_back({values[0], values[1], values[2]});
    } else if (keyword == "arcsine") {
      if (values.size() != 3) {
        fail("expected 'arcsine <center> <half_width> <mass>'");
      }
      arcsines.push_back({values[0], values[1], values[2]});
    } else {
      fail("unknown record '" + keyword + "'");
    }
  }
  try {
    return Measure1D(std::move(atoms), std::move(pieces), std::move(arcsines));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("measure text: ") + e.what());
  }
}

Measure1D read_measure_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open measure file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_measure_text(buffer.str());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_measure_text(std::ostream& os, const Measure1D& m) {
  const auto old_precision = os.precision(17);
  for (const Atom& a : m.atoms()) {
    os << "atom " << a.position << ' ' << a.mass << '\n';
  }
  for (const DensityPiece& p : m.pieces()) {
    os << "piece " << p.lo << ' ' << p.hi << ' ' << p.density << '\n';
  }
  for (const ArcsinePart& a : m.arcsines()) {
    os << "arcsine " << a.center << ' ' << a.half_width << ' ' << a.mass
       << '\n';
  }
  os.precision(old_precision);
}

}  // namespace swgeo
