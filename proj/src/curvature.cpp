#include "curvpinch/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "curvpinch/errors.hpp"

namespace curvpinch {

double RiemannTensor::eval(const Vec4& x, const Vec4& y, const Vec4& z,
                           const Vec4& w) const {
  double acc = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) acc += (*this)(i, j, k, l) * x[i] * y[j] * z[k] * w[l];
  return acc;
}

RiemannTensor RiemannTensor::operator+(const RiemannTensor& o) const {
  RiemannTensor out;
  for (std::size_t n = 0; n < c_.size(); ++n) out.c_[n] = c_[n] + o.c_[n];
  return out;
}

RiemannTensor RiemannTensor::operator*(double k) const {
  RiemannTensor out;
  for (std::size_t n = 0; n < c_.size(); ++n) out.c_[n] = c_[n] * k;
  return out;
}

double RiemannTensor::max_abs_diff(const RiemannTensor& o) const {
  double m = 0.0;
  for (std::size_t n = 0; n < c_.size(); ++n) m = std::max(m, std::abs(c_[n] - o.c_[n]));
  return m;
}

double SymmetryReport::max_residual() const {
  return std::max({antisym_first_pair, antisym_second_pair, pair_symmetry, bianchi});
}

SymmetryReport validate_symmetries(const RiemannTensor& r, double tol) {
  SymmetryReport rep;
  rep.tol = tol;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          const double v = r(i, j, k, l);
          rep.antisym_first_pair = std::max(rep.antisym_first_pair, std::abs(v + r(j, i, k, l)));
          rep.antisym_second_pair = std::max(rep.antisym_second_pair, std::abs(v + r(i, j, l, k)));
          rep.pair_symmetry = std::max(rep.pair_symmetry, std::abs(v - r(k, l, i, j)));
          rep.bianchi =
              std::max(rep.bianchi, std::abs(v + r(i, k, l, j) + r(i, l, j, k)));
        }
  return rep;
}

namespace {

void require_symmetric(const RiemannTensor& r, double tol) {
  const auto rep = validate_symmetries(r, tol);
  if (!rep.valid()) {
    std::ostringstream os;
    os << "max residual " << rep.max_residual() << " exceeds " << tol
       << " (antisym " << rep.antisym_first_pair << "/" << rep.antisym_second_pair
       << ", pair " << rep.pair_symmetry << ", bianchi " << rep.bianchi << ")";
    throw InvalidSymmetry(os.str());
  }
}

CurvatureOperator matrix_of(const RiemannTensor& r) {
  CurvatureOperator op;
  for (int a = 0; a < 6; ++a) {
    auto [i, j] = kWedgeBasis[a];
    for (int b = 0; b < 6; ++b) {
      auto [k, l] = kWedgeBasis[b];
      op.matrix(a, b) = r(i, j, k, l);
    }
  }
  return op;
}

}  // namespace

CurvatureOperator operator_from_tensor(const RiemannTensor& r, double tol) {
  require_symmetric(r, tol);
  return matrix_of(r);
}

RiemannTensor tensor_from_operator(const CurvatureOperator& op) {
  RiemannTensor r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      auto [a, sa] = wedge_index(i, j);
      if (a < 0) continue;
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          auto [b, sb] = wedge_index(k, l);
          if (b < 0) continue;
          r(i, j, k, l) = sa * sb * op.matrix(a, b);
        }
    }
  return r;
}

Mat4 ricci(const RiemannTensor& r) {
  Mat4 ric = Mat4::Zero();
  for (int j = 0; j < 4; ++j)
    for (int l = 0; l < 4; ++l)
      for (int i = 0; i < 4; ++i) ric(j, l) += r(i, j, i, l);
  return ric;
}

std::pair<Vec3, Mat3> symmetric_eigen3(const Mat3& m) {
  const Mat3 sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Mat3> es(sym);
  return {es.eigenvalues(), es.eigenvectors()};
}

CurvatureDecomposition CurvatureDecomposition::flipped() const {
  CurvatureDecomposition d = *this;
  std::swap(d.wplus, d.wminus);
  std::swap(d.wp_eigs, d.wm_eigs);
  std::swap(d.wp_vecs, d.wm_vecs);
  d.z_block = z_block.transpose();
  return d;
}

CurvatureDecomposition decompose(const RiemannTensor& r, double tol) {
  const CurvatureOperator op = operator_from_tensor(r, tol);
  const Mat6& basis = sd_asd_basis();
  const Mat6 q = basis.transpose() * op.matrix * basis;

  CurvatureDecomposition d;
  d.s = 2.0 * op.matrix.trace();
  d.u = d.s / 12.0;
  d.ric = ricci(r);
  d.ric0 = d.ric - (d.s / 4.0) * Mat4::Identity();
  d.wplus = q.topLeftCorner<3, 3>() - d.u * Mat3::Identity();
  d.wminus = q.bottomRightCorner<3, 3>() - d.u * Mat3::Identity();
  d.z_block = q.topRightCorner<3, 3>();
  std::tie(d.wp_eigs, d.wp_vecs) = symmetric_eigen3(d.wplus);
  std::tie(d.wm_eigs, d.wm_vecs) = symmetric_eigen3(d.wminus);
  return d;
}

CurvatureOperator reassemble(const CurvatureDecomposition& d) {
  Mat6 q = Mat6::Zero();
  q.topLeftCorner<3, 3>() = d.wplus + d.u * Mat3::Identity();
  q.bottomRightCorner<3, 3>() = d.wminus + d.u * Mat3::Identity();
  q.topRightCorner<3, 3>() = d.z_block;
  q.bottomLeftCorner<3, 3>() = d.z_block.transpose();
  const Mat6& basis = sd_asd_basis();
  return CurvatureOperator{basis * q * basis.transpose()};
}

RiemannTensor random_algebraic_tensor(std::uint64_t seed, double scale) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n01(0.0, 1.0);
  Mat6 m;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) m(a, b) = n01(rng);
  m = (0.5 * (m + m.transpose())).eval();

  // The Bianchi identity reads tr(M S) = 0 for the Hodge star matrix S, which
  // is symmetric with S^2 = Id.
  Mat6 star = Mat6::Zero();
  for (int a = 0; a < 6; ++a) {
    Vec6 e = Vec6::Zero();
    e[a] = 1.0;
    star.col(a) = hodge_star(Form2(e)).coeffs();
  }
  m -= ((m * star).trace() / 6.0) * star;
  return tensor_from_operator(CurvatureOperator{scale * m});
}

RiemannTensor rotate(const RiemannTensor& r, const Frame4& frame) {
  const Mat6 l = frame.lambda2();
  const CurvatureOperator op = matrix_of(r);
  return tensor_from_operator(CurvatureOperator{l.transpose() * op.matrix * l});
}

}  // namespace curvpinch
