#pragma once

// Exterior algebra of an oriented 4-dimensional inner-product space.
//
// 2-forms are stored in the ordered orthonormal basis
//   (e1^e2, e1^e3, e1^e4, e2^e3, e2^e4, e3^e4)
// and e1^e2^e3^e4 is positively oriented. Every 6x6 matrix in the library
// uses this order.

#include <array>
#include <utility>

#include <Eigen/Dense>

namespace curvpinch {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;

inline constexpr double kDefaultTol = 1e-9;

/// Index pair (i, j), i < j, zero-based, of each basis 2-form.
inline constexpr std::array<std::pair<int, int>, 6> kWedgeBasis{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Position of e_i^e_j in the basis and the sign relating e_i^e_j to it.
/// Returns {-1, 0} when i == j.
std::pair<int, int> wedge_index(int i, int j);

class Form2 {
 public:
  Form2() : c_(Vec6::Zero()) {}
  explicit Form2(const Vec6& coeffs) : c_(coeffs) {}
  Form2(double a12, double a13, double a14, double a23, double a24, double a34) {
    c_ << a12, a13, a14, a23, a24, a34;
  }

  /// Basis element e_i^e_j for zero-based i, j (sign-adjusted if i > j).
  static Form2 basis(int i, int j);

  const Vec6& coeffs() const { return c_; }
  double operator[](int k) const { return c_[k]; }

  double dot(const Form2& o) const { return c_.dot(o.c_); }
  double norm() const { return c_.norm(); }
  double squared_norm() const { return c_.squaredNorm(); }

  Form2 operator+(const Form2& o) const { return Form2(Vec6(c_ + o.c_)); }
  Form2 operator-(const Form2& o) const { return Form2(Vec6(c_ - o.c_)); }
  Form2 operator-() const { return Form2(Vec6(-c_)); }
  Form2 operator*(double k) const { return Form2(Vec6(c_ * k)); }
  Form2 operator/(double k) const { return Form2(Vec6(c_ / k)); }
  friend Form2 operator*(double k, const Form2& f) { return f * k; }

  /// Antisymmetric 4x4 matrix A with A(i,j) = coefficient of e_i^e_j.
  Mat4 as_matrix() const;

 private:
  Vec6 c_;
};

Form2 wedge(const Vec4& x, const Vec4& y);

/// (a1..a6) -> (a6, -a5, a4, a3, -a2, a1).
Form2 hodge_star(const Form2& w);

struct SdAsdSplit {
  Form2 sd;
  Form2 asd;
};

/// (w + *w)/2 and (w - *w)/2.
SdAsdSplit sd_asd_split(const Form2& w);

/// Coefficient of e1^e2^e3^e4 in w^w, equal to <w, *w>. Zero exactly for
/// decomposable forms.
double plucker_residual(const Form2& w);

/// Orthonormal basis of Lambda^2 adapted to the splitting: columns 0..2 span
/// Lambda^+ and are (e12+e34, e13-e24, e14+e23)/sqrt2; columns 3..5 span
/// Lambda^- and are (e12-e34, e13+e24, e14-e23)/sqrt2.
const Mat6& sd_asd_basis();

/// Coordinates of a self-dual / anti-self-dual form in the 3-dim bases above.
Vec3 sd_coords(const Form2& w);
Vec3 asd_coords(const Form2& w);
Form2 from_sd_coords(const Vec3& h);
Form2 from_asd_coords(const Vec3& k);

/// Oriented orthonormal frame {f1..f4} stored as columns.
class Frame4 {
 public:
  Frame4() : m_(Mat4::Identity()) {}
  /// Throws NonOrthonormalInput unless columns are orthonormal with det +1.
  explicit Frame4(const Mat4& columns, double tol = kDefaultTol);

  const Mat4& matrix() const { return m_; }
  Vec4 operator[](int i) const { return m_.col(i); }

  /// Matrix whose columns are f_i^f_j in basis order: the action of the frame
  /// on Lambda^2.
  Mat6 lambda2() const;

 private:
  Mat4 m_;
};

/// An oriented 2-plane: the unit decomposable form and its SD/ASD halves,
/// form = (H + K)/sqrt2 with |H| = |K| = 1.
class Plane2 {
 public:
  /// The coordinate plane e1^e2.
  Plane2();

  const Form2& form() const { return form_; }
  const Form2& sd_unit() const { return h_; }
  const Form2& asd_unit() const { return k_; }

  /// (H - K)/sqrt2, the orthogonal complement with induced orientation.
  Form2 complement_form() const;
  Plane2 complement() const;

  friend Plane2 plane_from_vectors(const Vec4&, const Vec4&, double);
  friend Plane2 plane_from_sd_asd(const Form2&, const Form2&, double);

 private:
  Plane2(Form2 form, Form2 h, Form2 k)
      : form_(std::move(form)), h_(std::move(h)), k_(std::move(k)) {}
  Form2 form_, h_, k_;
};

/// x^y for orthonormal x, y. Throws NonOrthonormalInput.
Plane2 plane_from_vectors(const Vec4& x, const Vec4& y, double tol = kDefaultTol);

/// (H + K)/sqrt2. Throws NonUnitInput or WrongDuality.
Plane2 plane_from_sd_asd(const Form2& h, const Form2& k, double tol = kDefaultTol);

/// Recovers an orthonormal pair (x, y) with x^y equal to a unit decomposable
/// form.
std::pair<Vec4, Vec4> span_of(const Form2& decomposable);

}  // namespace curvpinch
