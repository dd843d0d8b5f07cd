#pragma once

// Operator bounds for delta-pinched curvature (1 >= K >= delta), the estimate
// |Z|^2 <= 2 sum A_i^2 and the lower bound for
//   F(g) = s^2/24 - |W+|^2/3 + 7|W-|^2/3 - |Ric0|^2/2.

#include <array>
#include <cstdint>
#include <optional>

#include "curvpinch/check.hpp"
#include "curvpinch/curvature.hpp"
#include "curvpinch/planescan.hpp"

namespace curvpinch {

/// Which expression for A_i to use. `Proof` is
///   min{1 - v_i - lambda_i/2, v_i + lambda_i/2 - delta},
/// the quantity that actually bounds |<Ric0*(H_i), K_i>|. `Statement` is the
/// printed variant min{1 - v_i + lambda_i/2, v_i + lambda_i/2 - delta}, kept
/// for comparison.
enum class AVariant { Proof, Statement };

struct VilleData {
  double delta = 0.0;
  Mat3 h_basis = Mat3::Identity();            // columns H_i, SD coordinates
  std::array<std::optional<Vec3>, 3> k_units; // K_i, ASD coordinates
  Vec3 z = Vec3::Zero();                      // <Ric0*(H_i), K_i> = |Ric0*(H_i)|
  Vec3 lambda_minus = Vec3::Zero();           // <W- K_i, K_i>
  Vec3 v = Vec3::Zero();                      // u + w_i+/2
  double alpha = 0.0;                         // max |lambda_i|
  Vec3 a_proof = Vec3::Zero();
  Vec3 a_statement = Vec3::Zero();

  const Vec3& a(AVariant variant) const {
    return variant == AVariant::Proof ? a_proof : a_statement;
  }
};

/// When Ric0*(H_i) = 0, K_i stays empty and z_i = lambda_i = 0.
VilleData ville_data(const CurvatureDecomposition& d, double delta);

/// Evidence that a tensor is delta-pinched: a scan with k_max <= 1 + acc and
/// k_min >= delta - acc. Throws PinchingNotVerified otherwise.
void require_pinching(const PinchingReport& scan, double delta,
                      double accuracy = ScanBudget::kAccuracy);

/// delta <= <(U+W)P, P> <= 1 for random planes and delta <= u + <W+H,H>/2 <= 1
/// for random unit self-dual H. Runs its own scan for the precondition.
CheckReport operator_bound_check(const RiemannTensor& r, double delta, int n_planes,
                                 std::uint64_t seed, const ScanBudget& budget = {},
                                 double tol = ScanBudget::kAccuracy);

/// delta <= v_i <= 1.
CheckReport v_bound_check(const VilleData& vd, double tol = ScanBudget::kAccuracy);

/// |Z|^2 = 2 sum z_i^2 <= 2 sum A_i^2. Warns about negative A_i.
CheckReport znorm_bound_check(const CurvatureDecomposition& d, double delta,
                              const PinchingReport& scan,
                              AVariant variant = AVariant::Proof,
                              double tol = ScanBudget::kAccuracy);

struct DegBound {
  double fg = 0.0;
  double bound = 0.0;
  double slack() const { return fg - bound; }
};

/// F(g) against
///   10/9 (sum v)^2 - 4/3 sum v^2 + 7/2 alpha^2
///   - 2 sum min{(1 - v - lambda/2)^2, (v + lambda/2 - delta)^2}.
DegBound deg_lower_bound(const CurvatureDecomposition& d, double delta,
                         const PinchingReport& scan);

/// Same quantities without the pinching precondition; callers own the check.
DegBound deg_lower_bound_unchecked(const CurvatureDecomposition& d, double delta);

}  // namespace curvpinch
