#include "curvpinch/weitzenbock.hpp"

#include <cmath>
#include <sstream>

#include "curvpinch/errors.hpp"
#include "curvpinch/planescan.hpp"

namespace curvpinch {

WeitzenbockOperator weitzenbock_operator(const RiemannTensor& r) {
  const CurvatureOperator op = operator_from_tensor(r);
  const Mat4 ric = ricci(r);
  const Mat4 g = Mat4::Identity();
  WeitzenbockOperator n;
  for (int a = 0; a < 6; ++a) {
    auto [v1, v2] = kWedgeBasis[a];
    for (int b = 0; b < 6; ++b) {
      auto [w1, w2] = kWedgeBasis[b];
      const double ric_terms = ric(v1, w1) * g(v2, w2) + ric(v2, w2) * g(v1, w1) -
                               ric(v1, w2) * g(v2, w1) - ric(v2, w1) * g(v1, w2);
      // 2<R(v1,v2)w1, w2> = -2 R(v1, v2, w1, w2)
      n.matrix(a, b) = ric_terms - 2.0 * op.matrix(a, b);
    }
  }
  return n;
}

Lemma1Values lemma1_check(const WeitzenbockOperator& n, const CurvatureDecomposition& d,
                          const Form2& w) {
  const auto [wp, wm] = sd_asd_split(w);
  const double k1 = k1perp_closed_form(d);
  Lemma1Values v;
  v.lhs = n.quadratic(w);
  v.rhs = 4.0 * k1 * w.squared_norm() -
          (d.s - 12.0 * k1) * std::abs(wp.squared_norm() - wm.squared_norm()) / 3.0;
  return v;
}

Lemma1Values lemma1_check(const RiemannTensor& r, const Form2& w) {
  return lemma1_check(weitzenbock_operator(r), decompose(r), w);
}

CheckReport k3_bound_check(const CurvatureDecomposition& d, double tol) {
  CheckReport rep;
  rep.name = "k3bound";
  rep.tol = tol;
  rep.record(k3perp_closed_form(d), d.s / 4.0 - 2.0 * k1perp_closed_form(d));
  return rep;
}

Frame4 adapted_frame(const Form2& w) {
  const auto [wp, wm] = sd_asd_split(w);
  const double p = wp.norm(), q = wm.norm();
  const double scale = std::max(1.0, w.norm());
  if (p <= 1e-14 * scale && q <= 1e-14 * scale) {
    throw DegenerateForm("both self-dual and anti-self-dual parts vanish");
  }
  const double r = 1.0 / std::sqrt(2.0);
  const Form2 h = p > 1e-14 * scale ? wp / p : Form2(r, 0, 0, 0, 0, r);
  const Form2 k = q > 1e-14 * scale ? wm / q : Form2(r, 0, 0, 0, 0, -r);
  const Form2 plane = (h + k) * r;

  auto [x, y] = span_of(plane);
  Mat4 f = Mat4::Zero();
  f.col(0) = x;
  f.col(1) = y;
  int filled = 2;
  for (int e = 0; e < 4 && filled < 4; ++e) {
    Vec4 v = Vec4::Unit(e);
    for (int c = 0; c < filled; ++c) v -= v.dot(f.col(c)) * f.col(c);
    if (v.norm() > 1e-6) f.col(filled++) = v.normalized();
  }
  if (f.determinant() < 0.0) f.col(3) = -f.col(3);
  // Re-orthonormalise to machine precision.
  Eigen::HouseholderQR<Mat4> qr(f);
  Mat4 qm = qr.householderQ();
  const Mat4 rm = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 4; ++i)
    if (rm(i, i) < 0.0) qm.col(i) = -qm.col(i);
  return Frame4(qm);
}

bool IdentityCheck::holds(double tol) const {
  return std::abs(residual()) <= tol * std::max(1.0, std::abs(lhs));
}

IdentityCheck intermediate_identity_check(const RiemannTensor& r, const Form2& w,
                                          const Frame4& frame) {
  const auto [wp, wm] = sd_asd_split(w);
  const double p = wp.norm(), q = wm.norm();

  // Coefficients of w in the frame's wedge basis.
  const Vec6 local = frame.lambda2().transpose() * w.coeffs();
  Vec6 expected = Vec6::Zero();
  expected[0] = (p + q) / std::sqrt(2.0);
  expected[5] = (p - q) / std::sqrt(2.0);
  if ((local - expected).norm() > 1e-8 * std::max(1.0, w.norm())) {
    std::ostringstream os;
    os << "frame is not adapted to the form (residual " << (local - expected).norm() << ")";
    throw InconsistentInputs(os.str());
  }

  const CurvatureOperator op = operator_from_tensor(r);
  auto k = [&](int a, int b) {
    const Form2 f = wedge(frame[a], frame[b]);
    return op.apply(f, f);
  };
  const double r1234 = op.apply(wedge(frame[0], frame[1]), wedge(frame[2], frame[3]));

  IdentityCheck c;
  c.lhs = weitzenbock_operator(r).quadratic(w);
  c.rhs = w.squared_norm() * (k(0, 2) + k(0, 3) + k(1, 2) + k(1, 3)) -
          2.0 * r1234 * (p * p - q * q);
  return c;
}

IdentityCheck intermediate_identity_check(const RiemannTensor& r, const Form2& w) {
  return intermediate_identity_check(r, w, adapted_frame(w));
}

}  // namespace curvpinch
