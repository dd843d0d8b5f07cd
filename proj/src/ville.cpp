#include "curvpinch/ville.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "curvpinch/errors.hpp"
#include "curvpinch/sampling.hpp"
#include "curvpinch/topology.hpp"

namespace curvpinch {

VilleData ville_data(const CurvatureDecomposition& d, double delta) {
  VilleData vd;
  vd.delta = delta;
  vd.h_basis = d.wp_vecs;
  const double scale = std::max(1.0, d.z_block.norm());
  for (int i = 0; i < 3; ++i) {
    const Vec3 h = d.wp_vecs.col(i);
    const Vec3 image = d.z_block.transpose() * h;  // Ric0*: Lambda^+ -> Lambda^-
    const double norm = image.norm();
    if (norm > 1e-14 * scale) {
      const Vec3 k = image / norm;
      vd.k_units[i] = k;
      vd.z[i] = image.dot(k);
      vd.lambda_minus[i] = k.dot(d.wminus * k);
    }
    vd.v[i] = d.u + 0.5 * d.wp_eigs[i];
    vd.alpha = std::max(vd.alpha, std::abs(vd.lambda_minus[i]));
    const double lam = vd.lambda_minus[i];
    vd.a_proof[i] = std::min(1.0 - vd.v[i] - 0.5 * lam, vd.v[i] + 0.5 * lam - delta);
    vd.a_statement[i] = std::min(1.0 - vd.v[i] + 0.5 * lam, vd.v[i] + 0.5 * lam - delta);
  }
  return vd;
}

void require_pinching(const PinchingReport& scan, double delta, double accuracy) {
  if (scan.k_max > 1.0 + accuracy || scan.k_min < delta - accuracy) {
    std::ostringstream os;
    os << "scan gives K in [" << scan.k_min << ", " << scan.k_max
       << "], not inside [" << delta << ", 1] (accuracy " << accuracy << ")";
    throw PinchingNotVerified(os.str());
  }
}

CheckReport operator_bound_check(const RiemannTensor& r, double delta, int n_planes,
                                 std::uint64_t seed, const ScanBudget& budget, double tol) {
  require_pinching(scan_extremes(r, budget), delta);
  const CurvatureDecomposition d = decompose(r);
  const Mat6& basis = sd_asd_basis();

  // U + W in the wedge basis: the block-diagonal part of the operator.
  Mat6 q = Mat6::Zero();
  q.topLeftCorner<3, 3>() = d.wplus + d.u * Mat3::Identity();
  q.bottomRightCorner<3, 3>() = d.wminus + d.u * Mat3::Identity();
  const Mat6 uw = basis * q * basis.transpose();

  CheckReport rep;
  rep.name = "ville-operator";
  rep.tol = tol;
  Rng rng(seed);
  for (int n = 0; n < n_planes; ++n) {
    const Plane2 p = random_plane(rng);
    const double val = p.form().coeffs().dot(uw * p.form().coeffs());
    rep.record(val, 1.0);
    rep.record(delta, val);

    const Vec3 h = random_unit3(rng);
    const double vh = d.u + 0.5 * h.dot(d.wplus * h);
    rep.record(vh, 1.0);
    rep.record(delta, vh);
  }
  return rep;
}

CheckReport v_bound_check(const VilleData& vd, double tol) {
  CheckReport rep;
  rep.name = "ville-v";
  rep.tol = tol;
  for (int i = 0; i < 3; ++i) {
    rep.record(vd.v[i], 1.0);
    rep.record(vd.delta, vd.v[i]);
  }
  return rep;
}

CheckReport znorm_bound_check(const CurvatureDecomposition& d, double delta,
                              const PinchingReport& scan, AVariant variant, double tol) {
  require_pinching(scan, delta);
  const VilleData vd = ville_data(d, delta);
  CheckReport rep;
  rep.name = variant == AVariant::Proof ? "znorm" : "znorm-statement";
  rep.tol = tol;
  const Vec3& a = vd.a(variant);
  for (int i = 0; i < 3; ++i) {
    if (a[i] < -tol) {
      std::ostringstream os;
      os << "A_" << (i + 1) << " = " << a[i] << " is negative";
      rep.warnings.push_back(os.str());
    }
  }
  // The per-component estimate |z_i| <= A_i implies the norm bound.
  rep.record(d.z_sq(), 2.0 * a.squaredNorm());
  return rep;
}

DegBound deg_lower_bound_unchecked(const CurvatureDecomposition& d, double delta) {
  const VilleData vd = ville_data(d, delta);
  DegBound out;
  out.fg = fg_value(d);
  double penalty = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double lam = vd.lambda_minus[i];
    const double upper = 1.0 - vd.v[i] - 0.5 * lam;
    const double lower = vd.v[i] + 0.5 * lam - delta;
    penalty += std::min(upper * upper, lower * lower);
  }
  const double sum_v = vd.v.sum();
  out.bound = (10.0 / 9.0) * sum_v * sum_v - (4.0 / 3.0) * vd.v.squaredNorm() +
              3.5 * vd.alpha * vd.alpha - 2.0 * penalty;
  return out;
}

DegBound deg_lower_bound(const CurvatureDecomposition& d, double delta,
                         const PinchingReport& scan) {
  require_pinching(scan, delta);
  return deg_lower_bound_unchecked(d, delta);
}

}  // namespace curvpinch
