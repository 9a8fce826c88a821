#pragma once

#include "heatdet/errors.hpp"
#include "heatdet/reduce.hpp"

#include <array>
#include <string>
#include <vector>

namespace heatdet {

enum class ManifoldKind { Circle, FlatTorus, Sphere2 };

std::string to_string(ManifoldKind k);

/// Chart coordinates, canonicalized into the fundamental domain on
/// construction: angles in [0, period) per cycle for circle/torus,
/// (colatitude, longitude) with theta in [0,pi], phi in [0,2pi) for the sphere.
struct Point {
  std::array<double, 4> c{};
  int dim = 0;

  double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
};

/// Curvature contractions entering the closed-form expansion coefficients.
/// LapR (box of the scalar curvature) is identically zero for every model here
/// but is stored so the full coefficient formulas stay transcribed.
struct CurvatureScalars {
  double R = 0.0;      // scalar curvature
  double RicSq = 0.0;  // R_{mn} R^{mn}
  double RiemSq = 0.0; // R_{abmn} R^{abmn}
  double LapR = 0.0;   // always 0 on these models
};

struct ManifoldModel {
  ManifoldKind kind = ManifoldKind::Circle;
  std::vector<double> lengths; // periods (circle/torus) or {radius} (sphere)
  int n = 1;                   // dimension
  double volume = 0.0;
  double injectivity_radius = 0.0;
  CurvatureScalars curvature;

  double radius() const { return lengths.at(0); }

  /// Canonicalize chart coordinates into the fundamental domain.
  Point make_point(std::initializer_list<double> coords) const;
  Point make_point(const std::vector<double>& coords) const;
  Point canonicalize(Point p) const;
};

/// make_model(kind, params): params = periods for circle/torus, {radius} for
/// the sphere. Populates volume, injectivity radius and curvature scalars.
ManifoldModel make_model(ManifoldKind kind, const std::vector<double>& params);

/// Trivial rank-N bundle with constant Hermitian potential Q and optional flat
/// twist angles (circle/torus only). Q is diagonalized once on construction;
/// channels are the sorted eigenvalues and q_frame the diagonalizing unitary.
struct BundleModel {
  int rank = 1;
  std::vector<cplx> q;        // row-major N x N, Hermitian
  std::vector<double> twists; // one angle per cycle, empty on the sphere
  double curv_sq = 0.0;       // tr R_{mn} R^{mn} of the connection; flat => 0

  std::vector<double> channels; // eigenvalues of Q, ascending
  std::vector<cplx> q_frame;    // row-major unitary, Q = U diag(channels) U^*

  double trace_q() const;
  double trace_q_sq() const;
};

/// Builds and validates a bundle for the given model. q entries row-major;
/// hermiticity is checked to machine tolerance. Empty twists = untwisted.
BundleModel make_bundle(const ManifoldModel& model, int rank, const std::vector<cplx>& q,
                        const std::vector<double>& twists = {});

/// Two-point geodesic data: Synge function sigma = dist^2/2, the Van Vleck
/// determinant (theta/sin theta on the sphere, 1 on flat models) and the
/// geodesic distance with the minimal-image convention on circle/torus.
struct GeodesicData {
  double sigma = 0.0;
  double vanvleck = 1.0;
  double dist = 0.0;
};

/// Fails with domain_error for sphere pairs at or beyond the injectivity
/// radius (antipodal points), where the Van Vleck factor degenerates.
GeodesicData geodesic(const ManifoldModel& model, const Point& x, const Point& xp);

/// Signed minimal-image displacement x - xp per cycle (flat models only);
/// feeds the flat parallel-transport phase of twisted bundles.
std::vector<double> minimal_displacement(const ManifoldModel& model, const Point& x,
                                         const Point& xp);

} // namespace heatdet
