#pragma once

// Pinching constants and theorem hypotheses.
//
// Half-conformally flat case: with v_i = u + w_i+/2 sorted ascending and
// m(x) = min{1 - x, x - delta}, the pointwise lower bound F(g)/2 >= f(v) uses
//   f(x) = 5/9 (sum x)^2 - 2/3 sum x^2 - sum m(x_i)^2
// on E = {delta <= x1 <= x2 <= x3 <= 1}. The vertex shortcut evaluates f only
// at the four corners of E; positivity there holds exactly for
// delta >= (3 sqrt3 - 5)/4.
//
// Biorthogonal case: the quadratics P(t) have discriminant
//   (4/9)|w+||w-|(-72 lambda1 K1perp + s^2 - 24 K1perp s),
// nonpositive exactly when K1perp >= s^2 / (24 (3 lambda1 + s)).

#include <array>
#include <optional>
#include <string>

#include "curvpinch/curvature.hpp"
#include "curvpinch/planescan.hpp"

namespace curvpinch {

double m_func(double x, double delta);

double f_eval(double x1, double x2, double x3, double delta);

struct CornerValues {
  double delta = 0.0;
  double at_ddd = 0.0;
  double at_dd1 = 0.0;
  double at_d11 = 0.0;
  double at_111 = 0.0;
};

/// Direct evaluation of f at the four vertices of E.
CornerValues corner_values(double delta);

/// Eigenvalues of [[-2,1,1],[1,-2,1],[1,1,-2]], ascending.
Vec3 hessian_inner_eigs();

enum class Vertex { DDD, DD1, D11, V111 };
std::string vertex_name(Vertex v);

struct EMinimum {
  double min_value = 0.0;
  Vertex argmin = Vertex::DDD;
};

/// Minimum of f over the vertices of E.
EMinimum min_over_E(double delta);

struct GridMinimum {
  double min_value = 0.0;
  Vec3 argmin = Vec3::Zero();
  int points = 0;
};

/// Brute-force minimum of f over an n-per-axis lattice of E (n >= 2).
GridMinimum grid_min_over_E(double delta, int n = 201);

struct CriticalDelta {
  double numeric = 0.0;      // bisection on min_over_E
  double closed_form = 0.0;  // (3 sqrt3 - 5)/4
  int iterations = 0;
};

/// Smallest delta in [0, 1] with min_over_E(delta) >= 0, bisected until the
/// bracket cannot shrink further in double precision.
CriticalDelta critical_delta();

double critical_delta_closed_form();

enum class Theorem { One, Two };

struct TheoremVerdict {
  Theorem theorem = Theorem::One;
  bool hypotheses_hold = false;
  double computed_threshold = 0.0;
  double margin = 0.0;
  std::string claim_text;          // nonempty iff hypotheses_hold
  std::string notes;
  bool orientation_flipped = false;

  // Half-flat verdict only: pointwise chain F(g)/2 >= f(v) >= 0 (evaluated when the
  // hypotheses hold).
  std::optional<double> fg_half;
  std::optional<double> f_at_v;
  std::optional<bool> chain_upper_holds;  // F/2 >= f(v)
  std::optional<bool> chain_lower_holds;  // f(v) >= 0
};

/// Throws InconsistentInputs when the scan and the decomposition disagree
/// about the scalar curvature range.
TheoremVerdict theorem1_verdict(const CurvatureDecomposition& d, const PinchingReport& scan,
                                double tol = ScanBudget::kAccuracy);

/// s^2 / (24 (3 lambda1 + s)). Throws NonPositiveInput.
double theorem2_threshold(double s, double lambda1);

double discriminant(double lambda1, double s, double k1perp, double a, double b);

enum class Regime { A, B };

/// The pointwise quadratic in t. Regime A (|w+| >= t^2 |w-|):
///   [l + 4K - c] a - 2 l sqrt(ab) t + [l + 4K + c] b t^2
/// Regime B (|w+| < t^2 |w-|):
///   [l + 4K + c] a - 2 l sqrt(ab) t + [l + 4K - c] b t^2
/// with l = lambda1, K = K1perp, c = (s - 12K)/3, a = |w+|, b = |w-|.
double p_quadratic(double t, Regime regime, double lambda1, double s, double k1perp, double a,
                   double b);

/// Throws NonPositiveScalarCurvature for s <= 0 and NonPositiveInput for
/// lambda1 <= 0.
TheoremVerdict theorem2_verdict(const CurvatureDecomposition& d, const PinchingReport& scan,
                                double lambda1, double tol = ScanBudget::kAccuracy);

}  // namespace curvpinch
