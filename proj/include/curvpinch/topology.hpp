#pragma once

// Characteristic-number integrands. Norm conventions: |W+-|^2 is the sum of
// squared eigenvalues of W+- on Lambda+-, |Ric0|^2 = sum_ij (Ric0)_ij^2. These
// are the normalisations for which the homogeneous models return their
// classical Euler characteristic and signature.

#include "curvpinch/curvature.hpp"

namespace curvpinch {

struct ModelSpace;

/// (1/8pi^2)(s^2/24 + |W+|^2 + |W-|^2 - |Ric0|^2/2)
double gbc_integrand(const CurvatureDecomposition& d);

/// (1/12pi^2)(|W+|^2 - |W-|^2)
double signature_integrand(const CurvatureDecomposition& d);

/// s^2/24 - |W+|^2/3 + 7|W-|^2/3 - |Ric0|^2/2
double fg_value(const CurvatureDecomposition& d);

struct IntegrandValues {
  double gbc = 0.0;
  double sig = 0.0;
  double fg = 0.0;
  double chi_minus_2tau_density = 0.0;  // fg / 8pi^2
};

IntegrandValues integrands(const CurvatureDecomposition& d);

struct Invariants {
  double chi = 0.0;
  double tau = 0.0;
  double chi_minus_2tau = 0.0;
};

/// Integrand times total volume. Throws NotHomogeneous.
Invariants homogeneous_invariants(const ModelSpace& model);

}  // namespace curvpinch
