#include "curvpinch/forms.hpp"

#include <cmath>
#include <sstream>

#include "curvpinch/errors.hpp"

namespace curvpinch {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Mat6 build_sd_asd_basis() {
  Mat6 s = Mat6::Zero();
  const double r = kInvSqrt2;
  // self-dual
  s(0, 0) = r;  s(5, 0) = r;
  s(1, 1) = r;  s(4, 1) = -r;
  s(2, 2) = r;  s(3, 2) = r;
  // anti-self-dual
  s(0, 3) = r;  s(5, 3) = -r;
  s(1, 4) = r;  s(4, 4) = r;
  s(2, 5) = r;  s(3, 5) = -r;
  return s;
}

}  // namespace

std::pair<int, int> wedge_index(int i, int j) {
  if (i == j) return {-1, 0};
  const int sign = i < j ? 1 : -1;
  if (i > j) std::swap(i, j);
  for (int k = 0; k < 6; ++k) {
    if (kWedgeBasis[k].first == i && kWedgeBasis[k].second == j) return {k, sign};
  }
  return {-1, 0};
}

Form2 Form2::basis(int i, int j) {
  auto [k, sign] = wedge_index(i, j);
  Vec6 c = Vec6::Zero();
  if (k >= 0) c[k] = sign;
  return Form2(c);
}

Mat4 Form2::as_matrix() const {
  Mat4 a = Mat4::Zero();
  for (int k = 0; k < 6; ++k) {
    auto [i, j] = kWedgeBasis[k];
    a(i, j) = c_[k];
    a(j, i) = -c_[k];
  }
  return a;
}

Form2 wedge(const Vec4& x, const Vec4& y) {
  Vec6 c;
  for (int k = 0; k < 6; ++k) {
    auto [i, j] = kWedgeBasis[k];
    c[k] = x[i] * y[j] - x[j] * y[i];
  }
  return Form2(c);
}

Form2 hodge_star(const Form2& w) {
  return Form2(w[5], -w[4], w[3], w[2], -w[1], w[0]);
}

SdAsdSplit sd_asd_split(const Form2& w) {
  const Form2 s = hodge_star(w);
  return {(w + s) * 0.5, (w - s) * 0.5};
}

double plucker_residual(const Form2& w) { return w.dot(hodge_star(w)); }

const Mat6& sd_asd_basis() {
  static const Mat6 basis = build_sd_asd_basis();
  return basis;
}

Vec3 sd_coords(const Form2& w) {
  return sd_asd_basis().leftCols<3>().transpose() * w.coeffs();
}

Vec3 asd_coords(const Form2& w) {
  return sd_asd_basis().rightCols<3>().transpose() * w.coeffs();
}

Form2 from_sd_coords(const Vec3& h) {
  return Form2(Vec6(sd_asd_basis().leftCols<3>() * h));
}

Form2 from_asd_coords(const Vec3& k) {
  return Form2(Vec6(sd_asd_basis().rightCols<3>() * k));
}

Frame4::Frame4(const Mat4& columns, double tol) : m_(columns) {
  const double orth = (m_.transpose() * m_ - Mat4::Identity()).cwiseAbs().maxCoeff();
  if (orth > tol) {
    std::ostringstream os;
    os << "frame columns not orthonormal (residual " << orth << ")";
    throw NonOrthonormalInput(os.str());
  }
  if (m_.determinant() < 0.0) {
    throw NonOrthonormalInput("frame is negatively oriented");
  }
}

Mat6 Frame4::lambda2() const {
  Mat6 l;
  for (int k = 0; k < 6; ++k) {
    auto [i, j] = kWedgeBasis[k];
    l.col(k) = wedge(m_.col(i), m_.col(j)).coeffs();
  }
  return l;
}

Plane2::Plane2()
    : form_(Form2::basis(0, 1)),
      h_(Form2(1, 0, 0, 0, 0, 1) * kInvSqrt2),
      k_(Form2(1, 0, 0, 0, 0, -1) * kInvSqrt2) {}

Form2 Plane2::complement_form() const { return (h_ - k_) * kInvSqrt2; }

Plane2 Plane2::complement() const { return Plane2(complement_form(), h_, -k_); }

Plane2 plane_from_vectors(const Vec4& x, const Vec4& y, double tol) {
  const double nx = x.norm(), ny = y.norm(), xy = x.dot(y);
  if (std::abs(nx - 1.0) > tol || std::abs(ny - 1.0) > tol || std::abs(xy) > tol) {
    std::ostringstream os;
    os << "|x|=" << nx << " |y|=" << ny << " <x,y>=" << xy;
    throw NonOrthonormalInput(os.str());
  }
  const Form2 p = wedge(x, y);
  auto [sd, asd] = sd_asd_split(p);
  // |sd| = |asd| = 1/sqrt2 for a unit decomposable form.
  return Plane2(p, sd * std::sqrt(2.0), asd * std::sqrt(2.0));
}

Plane2 plane_from_sd_asd(const Form2& h, const Form2& k, double tol) {
  if (std::abs(h.norm() - 1.0) > tol || std::abs(k.norm() - 1.0) > tol) {
    std::ostringstream os;
    os << "|H|=" << h.norm() << " |K|=" << k.norm();
    throw NonUnitInput(os.str());
  }
  if ((hodge_star(h) - h).norm() > tol) throw WrongDuality("H is not self-dual");
  if ((hodge_star(k) + k).norm() > tol) throw WrongDuality("K is not anti-self-dual");
  return Plane2((h + k) * kInvSqrt2, h, k);
}

std::pair<Vec4, Vec4> span_of(const Form2& p) {
  const Mat4 a = p.as_matrix();
  int best = 0;
  for (int j = 1; j < 4; ++j) {
    if (a.col(j).squaredNorm() > a.col(best).squaredNorm()) best = j;
  }
  const Vec4 x = a.col(best).normalized();
  // For A = x y^T - y x^T and unit x in the span, -A x is the unit vector
  // completing x to an oriented basis of the plane.
  Vec4 y = -a * x;
  y -= y.dot(x) * x;
  y.normalize();
  return {x, y};
}

}  // namespace curvpinch
