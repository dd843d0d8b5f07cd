#include "curvpinch/topology.hpp"

#include <cmath>

#include "curvpinch/errors.hpp"
#include "curvpinch/models.hpp"

namespace curvpinch {

namespace {
const double kEightPiSq = 8.0 * M_PI * M_PI;
const double kTwelvePiSq = 12.0 * M_PI * M_PI;
}  // namespace

double gbc_integrand(const CurvatureDecomposition& d) {
  return (d.s * d.s / 24.0 + d.wplus_sq() + d.wminus_sq() - 0.5 * d.ric0_sq()) / kEightPiSq;
}

double signature_integrand(const CurvatureDecomposition& d) {
  return (d.wplus_sq() - d.wminus_sq()) / kTwelvePiSq;
}

double fg_value(const CurvatureDecomposition& d) {
  return d.s * d.s / 24.0 - d.wplus_sq() / 3.0 + 7.0 * d.wminus_sq() / 3.0 -
         0.5 * d.ric0_sq();
}

IntegrandValues integrands(const CurvatureDecomposition& d) {
  IntegrandValues v;
  v.gbc = gbc_integrand(d);
  v.sig = signature_integrand(d);
  v.fg = fg_value(d);
  v.chi_minus_2tau_density = v.fg / kEightPiSq;
  return v;
}

Invariants homogeneous_invariants(const ModelSpace& model) {
  if (!model.homogeneous) {
    throw NotHomogeneous(model.name + " has point-dependent curvature");
  }
  const IntegrandValues v = integrands(decompose(model.tensor));
  Invariants inv;
  inv.chi = v.gbc * model.volume;
  inv.tau = v.sig * model.volume;
  inv.chi_minus_2tau = v.chi_minus_2tau_density * model.volume;
  return inv;
}

}  // namespace curvpinch
