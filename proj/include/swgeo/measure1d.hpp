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

#ifndef SWGEO_MEASURE1D_HPP_
#define SWGEO_MEASURE1D_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace swgeo {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Total mass of every measure must be within this of 1.
inline constexpr double kMassTolerance = 1e-12;

struct Atom {
  double position;
  double mass;
};

// Constant density on [lo, hi].
struct DensityPiece {
  double lo;
  double hi;
  double density;

  double mass() const { return density * (hi - lo); }
};

// `mass` times the arcsine law stretched to (center - half_width,
// center + half_width). The unit arcsine law has density 1/(pi sqrt(1-x^2))
// on (-1, 1) and quantile s -> sin(pi (s - 1/2)).
struct ArcsinePart {
  double center;
  double half_width;
  double mass;
};

class Measure1D;

struct QuantilePoint {
  double s;
  double x;
};

// Generalized inverse of a CDF, s -> sup{x : F(x) <= s} on [0, 1].
//
// For measures built only from atoms and constant-density pieces the function
// is piecewise affine and stored exactly as breakpoints. Consecutive points
// with equal s and increasing x are jumps (gaps in the support); consecutive
// points with equal x are flat runs (atoms). Measures with arcsine parts
// invert the CDF between consecutive knots: in closed form where a single
// arcsine part is the only mass there, by bisection otherwise.
class QuantileFn {
 public:
  static QuantileFn piecewise(std::vector<QuantilePoint> points);
  static QuantileFn analytic(std::shared_ptr<const Measure1D> measure);

  bool is_piecewise() const { return measure_ == nullptr; }

  // Right-continuous value (the supremum in the definition). s is clamped to
  // [0, 1]; the value at s = 1 is the right end of the support.
  double operator()(double s) const;

  // Limit from the left at s; equals operator() where the function is
  // continuous. At s = 0 returns the value at 0.
  double left_limit(double s) const;

  const std::vector<QuantilePoint>& breakpoints() const { return points_; }

  // Sorted s-values where the function may fail to be smooth, including 0
  // and 1. Between consecutive kinks the function is affine (piecewise case)
  // or analytic.
  const std::vector<double>& kinks() const { return kinks_; }

 private:
  QuantileFn() = default;

  // Knot of an analytic measure with its open and closed CDF values.
  // arcsine is the index of the only part carrying mass on (x, next x), or
  // -1 when there is none or more than one.
  struct Knot {
    double x;
    double open;
    double closed;
    int arcsine;
  };

  // Root of F(x) = s on (knots_[k].x, knots_[k + 1].x).
  double solve_between(std::size_t k, double s, bool closed) const;

  std::vector<QuantilePoint> points_;
  std::vector<Knot> knots_;
  std::vector<double> kinks_;
  std::shared_ptr<const Measure1D> measure_;
};

// Probability measure on the real line: atoms, constant-density pieces and
// (for the analytic variant) stretched arcsine parts.
//
// The constructor validates and canonicalizes: zero masses are dropped,
// atoms at equal positions merge, pieces are sorted and split at interior
// atom positions, and adjacent pieces with equal density merge unless an atom
// sits at the junction. Total mass must be 1 within kMassTolerance; nothing
// is renormalized. Throws std::invalid_argument on invalid input.
class Measure1D {
 public:
  enum class Kind { kDiscreteMixture, kAnalytic };

  Measure1D(std::vector<Atom> atoms, std::vector<DensityPiece> pieces,
            std::vector<ArcsinePart> arcsines = {});

  static Measure1D dirac(double x);
  static Measure1D uniform(double a, double b);
  static Measure1D arcsine(double center = 0.0, double half_width = 1.0);

  Kind kind() const {
    return arcsines_.empty() ? Kind::kDiscreteMixture : Kind::kAnalytic;
  }
  bool is_piecewise() const { return kind() == Kind::kDiscreteMixture; }
  bool has_atoms() const { return !atoms_.empty(); }

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<DensityPiece>& pieces() const { return pieces_; }
  const std::vector<ArcsinePart>& arcsines() const { return arcsines_; }

  double total_mass() const;
  double support_min() const;
  double support_max() const;

  // Mass of the open half-line (-inf, x); atoms at x are excluded.
  double cdf(double x) const;

  // Mass of the atom at exactly x (0 if none).
  double atom_mass(double x) const;

  // Sorted positions where the CDF is not smooth: atoms, piece ends and
  // arcsine support ends.
  std::vector<double> knots() const;

  QuantileFn quantile() const;

 private:
  std::vector<Atom> atoms_;
  std::vector<DensityPiece> pieces_;
  std::vector<ArcsinePart> arcsines_;
  std::vector<double> atom_prefix_;   // mass of atoms_[0..i)
  std::vector<double> piece_prefix_;  // mass of pieces_[0..i)
};

// Accumulates possibly overlapping parts and produces a canonical measure;
// overlapping pieces are summed over the common refinement of their
// endpoints.
class MeasureBuilder {
 public:
  MeasureBuilder& add_atom(double x, double mass);
  MeasureBuilder& add_density(double lo, double hi, double density);
  // `mass` spread uniformly on [lo, hi]; an atom when lo == hi.
  MeasureBuilder& add_uniform(double lo, double hi, double mass);
  MeasureBuilder& add_arcsine(double center, double half_width, double mass);
  // Adds every part of m with its mass multiplied by weight.
  MeasureBuilder& add(const Measure1D& m, double weight);

  Measure1D build() const;

 private:
  std::vector<Atom> atoms_;
  std::vector<DensityPiece> pieces_;
  std::vector<ArcsinePart> arcsines_;
};

struct MapPoint {
  double x;
  double y;
};

// Nondecreasing piecewise-affine map of the real line. Between consecutive
// points the map is affine; two points with the same x encode a jump, and the
// map takes the upper value there. Outside [first x, last x] it extends
// affinely with the given end slopes.
class PiecewiseLinearMap {
 public:
  // Throws std::invalid_argument unless x and y are nondecreasing and both
  // end slopes are >= 0.
  explicit PiecewiseLinearMap(std::vector<MapPoint> points,
                              double left_slope = 0.0,
                              double right_slope = 0.0);

  static PiecewiseLinearMap identity();
  // x -> scale * x + shift, scale >= 0.
  static PiecewiseLinearMap affine(double scale, double shift);

  double operator()(double x) const;

  const std::vector<MapPoint>& points() const { return points_; }
  double left_slope() const { return left_slope_; }
  double right_slope() const { return right_slope_; }

  // (1 - lambda) id + lambda T.
  PiecewiseLinearMap blend_with_identity(double lambda) const;

 private:
  std::vector<MapPoint> points_;
  double left_slope_;
  double right_slope_;
};

double cdf_eval(const Measure1D& m, double x);
QuantileFn quantile(const Measure1D& m);

// Exact pushforward of a discrete-mixture measure by a monotone map. Pieces
// over segments of positive slope become pieces; mass over flat segments
// collapses into an atom; atoms map to atoms.
Measure1D pushforward_pwl(const Measure1D& m, const PiecewiseLinearMap& map);

// Pushforward by x -> scale * x + shift for any real scale (scale < 0
// reflects). Works for both variants.
Measure1D affine_pushforward(const Measure1D& m, double scale, double shift);

// n i.i.d. draws by inverse-CDF sampling with Rng(seed).
std::vector<double> sample(const Measure1D& m, std::size_t n,
                           std::uint64_t seed);

// sup_x |F_a(x) - F_b(x)| over both one-sided limits. Exact when both are
// discrete mixtures; otherwise evaluated at all knots plus a 10^4-point grid.
double cdf_sup_distance(const Measure1D& a, const Measure1D& b);

// Same atoms (positions and masses within tol) and CDF sup distance <= tol.
bool approx_equal(const Measure1D& a, const Measure1D& b, double tol);

// Line-oriented text form:
//   atom <pos> <mass>
//   piece <lo> <hi> <density>
//   arcsine <center> <half_width> <mass>
// Blank lines and lines starting with '#' are ignored. Parse errors throw
// std::runtime_error with the line number.
Measure1D parse_measure_text(const std::string& text);
Measure1D read_measure_file(const std::string& path);
void write_measure_text(std::ostream& os, const Measure1D& m);

}  // namespace swgeo

#endif  // SWGEO_MEASURE1D_HPP_
