#pragma once

// Curvature term of the Weitzenboeck formula on 2-forms,
//
//   <N(v1^v2), w1^w2> = Ric(v1,w1)<v2,w2> + Ric(v2,w2)<v1,w1>
//                     - Ric(v1,w2)<v2,w1> - Ric(v2,w1)<v1,w2>
//                     + 2<R(v1,v2)w1, w2>.
//
// With the library's convention R(x,y,x,y) = K(x^y), the endomorphism
// R(v1,v2) satisfies <R(v1,v2)w1, w2> = -R(v1,v2,w1,w2); this is the sign for
// which the unit round sphere gives N = 4 Id. The Laplacian convention
// (Delta f = div grad f) never enters: only this algebraic operator is built.

#include "curvpinch/check.hpp"
#include "curvpinch/curvature.hpp"

namespace curvpinch {

struct WeitzenbockOperator {
  Mat6 matrix = Mat6::Zero();

  double quadratic(const Form2& w) const { return w.coeffs().dot(matrix * w.coeffs()); }
};

/// Evaluates the defining bilinear expression on all basis pairs.
/// Throws InvalidSymmetry.
WeitzenbockOperator weitzenbock_operator(const RiemannTensor& r);

struct Lemma1Values {
  double lhs = 0.0;  // <N w, w>
  double rhs = 0.0;  // 4 K1perp |w|^2 - (s - 12 K1perp) | |w+|^2 - |w-|^2 | / 3
  double slack() const { return lhs - rhs; }
};

Lemma1Values lemma1_check(const RiemannTensor& r, const Form2& w);
Lemma1Values lemma1_check(const WeitzenbockOperator& n, const CurvatureDecomposition& d,
                          const Form2& w);

/// K3perp <= s/4 - 2 K1perp from the closed forms.
CheckReport k3_bound_check(const CurvatureDecomposition& d, double tol = 1e-12);

/// Oriented orthonormal frame in which
///   w = (|w+| + |w-|)/sqrt2 e1^e2 + (|w+| - |w-|)/sqrt2 e3^e4.
/// When one of w+ or w- vanishes any completion is used. Throws
/// DegenerateForm for w = 0.
Frame4 adapted_frame(const Form2& w);

struct IdentityCheck {
  double lhs = 0.0;  // <N w, w> from the operator
  double rhs = 0.0;  // |w|^2 (K13 + K14 + K23 + K24) - 2 R_1234 (|w+|^2 - |w-|^2)
  double residual() const { return lhs - rhs; }
  bool holds(double tol = 1e-9) const;
};

/// Checks the adapted-frame expansion of <N w, w>. Throws InconsistentInputs
/// if `frame` does not put w in the adapted normal form.
IdentityCheck intermediate_identity_check(const RiemannTensor& r, const Form2& w,
                                          const Frame4& frame);
IdentityCheck intermediate_identity_check(const RiemannTensor& r, const Form2& w);

}  // namespace curvpinch
