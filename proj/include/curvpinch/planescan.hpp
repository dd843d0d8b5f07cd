#pragma once

// Sectional and biorthogonal curvature over the Grassmannian of 2-planes.
//
// Oriented planes are parametrised by pairs (H, K) of unit self-dual and unit
// anti-self-dual forms, P = (H + K)/sqrt2, so the search space is S^2 x S^2.

#include <cstdint>
#include <optional>

#include "curvpinch/check.hpp"
#include "curvpinch/curvature.hpp"

namespace curvpinch {

struct ScanBudget {
  int grid = 64;          // Fibonacci points per sphere factor
  int top_cells = 16;     // coarse cells refined per objective
  int refine_steps = 200; // Nelder-Mead iterations per refined cell

  static constexpr int kMinGrid = 8;
  static constexpr int kMinTopCells = 1;
  static constexpr int kMinRefineSteps = 20;

  /// Agreement with the closed forms that the default budget reaches on
  /// model spaces and random tensors.
  static constexpr double kAccuracy = 1e-6;
};

struct PinchingReport {
  double k_min = 0.0;
  double k_max = 0.0;
  double k1perp = 0.0;
  double k3perp = 0.0;
  /// k_min / k_max, only when k_max > 0.
  std::optional<double> delta;
  Plane2 argmin;
  Plane2 argmax;
  Plane2 argmin_perp;
  Plane2 argmax_perp;
  ScanBudget budget;
};

double sectional(const RiemannTensor& r, const Plane2& p);
double sectional(const CurvatureOperator& op, const Plane2& p);

/// (K(P) + K(P^perp)) / 2.
double biorthogonal(const RiemannTensor& r, const Plane2& p);
double biorthogonal(const CurvatureOperator& op, const Plane2& p);

/// Coarse Fibonacci grid on S^2 x S^2 followed by Nelder-Mead refinement of
/// the best cells. Throws BudgetTooSmall or InvalidSymmetry.
PinchingReport scan_extremes(const RiemannTensor& r, const ScanBudget& budget = {});

/// (w1+ + w1-)/2 + s/12
double k1perp_closed_form(const CurvatureDecomposition& d);
/// (w3+ + w3-)/2 + s/12
double k3perp_closed_form(const CurvatureDecomposition& d);

/// Samples random oriented frames and checks
///   |R(f1, f2, f3, f4)| <= (2/3)(K3perp - K1perp)
/// on the fully mixed component. max_ratio is |R_1234| / bound (0 when the
/// bound vanishes and so does the component).
CheckReport seaman_check(const RiemannTensor& r, int n_frames, std::uint64_t seed,
                         double tol = 1e-9);

}  // namespace curvpinch
