#include "curvpinch/sampling.hpp"

namespace curvpinch {

namespace {

double gauss(Rng& rng) {
  std::normal_distribution<double> n01(0.0, 1.0);
  return n01(rng);
}

}  // namespace

Vec3 random_unit3(Rng& rng) {
  Vec3 v;
  do {
    for (int i = 0; i < 3; ++i) v[i] = gauss(rng);
  } while (v.norm() < 1e-12);
  return v.normalized();
}

Vec4 random_unit4(Rng& rng) {
  Vec4 v;
  do {
    for (int i = 0; i < 4; ++i) v[i] = gauss(rng);
  } while (v.norm() < 1e-12);
  return v.normalized();
}

Form2 random_form(Rng& rng) {
  Vec6 c;
  for (int i = 0; i < 6; ++i) c[i] = gauss(rng);
  return Form2(c);
}

Frame4 random_frame(Rng& rng) {
  Mat4 g;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = gauss(rng);
  Eigen::HouseholderQR<Mat4> qr(g);
  Mat4 q = qr.householderQ();
  const Mat4 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 4; ++i) {
    if (r(i, i) < 0.0) q.col(i) = -q.col(i);
  }
  if (q.determinant() < 0.0) q.col(3) = -q.col(3);
  return Frame4(q);
}

Plane2 random_plane(Rng& rng) {
  const Frame4 f = random_frame(rng);
  return plane_from_vectors(f[0], f[1]);
}

}  // namespace curvpinch
