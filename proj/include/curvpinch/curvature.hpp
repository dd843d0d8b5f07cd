#pragma once

// Pointwise algebraic curvature tensors in dimension four.
//
// Sign convention: R(x, y, x, y) = K(x^y) is the sectional curvature, so the
// unit round sphere has R_ijkl = d_ik d_jl - d_il d_jk. The curvature operator
// is the symmetric 6x6 matrix M with M(ij, kl) = R_ijkl in the wedge basis, and
// K(P) = <M P, P> for a unit decomposable P.

#include <array>
#include <cstdint>

#include "curvpinch/forms.hpp"

namespace curvpinch {

class RiemannTensor {
 public:
  RiemannTensor() { c_.fill(0.0); }

  /// Zero-based indices.
  double operator()(int i, int j, int k, int l) const { return c_[idx(i, j, k, l)]; }
  double& operator()(int i, int j, int k, int l) { return c_[idx(i, j, k, l)]; }

  /// R(x, y, z, w) for arbitrary vectors.
  double eval(const Vec4& x, const Vec4& y, const Vec4& z, const Vec4& w) const;

  RiemannTensor operator+(const RiemannTensor& o) const;
  RiemannTensor operator*(double k) const;
  friend RiemannTensor operator*(double k, const RiemannTensor& r) { return r * k; }

  double max_abs_diff(const RiemannTensor& o) const;

  const std::array<double, 256>& data() const { return c_; }

 private:
  static constexpr int idx(int i, int j, int k, int l) { return ((i * 4 + j) * 4 + k) * 4 + l; }
  std::array<double, 256> c_;
};

struct SymmetryReport {
  double antisym_first_pair = 0.0;   // |R_ijkl + R_jikl|
  double antisym_second_pair = 0.0;  // |R_ijkl + R_ijlk|
  double pair_symmetry = 0.0;        // |R_ijkl - R_klij|
  double bianchi = 0.0;              // |R_ijkl + R_iklj + R_iljk|
  double tol = kDefaultTol;

  double max_residual() const;
  bool valid() const { return max_residual() <= tol; }
};

SymmetryReport validate_symmetries(const RiemannTensor& r, double tol = kDefaultTol);

struct CurvatureOperator {
  Mat6 matrix = Mat6::Zero();

  double apply(const Form2& a, const Form2& b) const {
    return a.coeffs().dot(matrix * b.coeffs());
  }
};

/// Throws InvalidSymmetry when validate_symmetries fails at `tol`.
CurvatureOperator operator_from_tensor(const RiemannTensor& r, double tol = kDefaultTol);

/// Inverse of operator_from_tensor; does not check the Bianchi identity.
RiemannTensor tensor_from_operator(const CurvatureOperator& op);

/// Block decomposition R = U + W+ + W- + Z.
///
/// Blocks are 3x3 matrices in the SD/ASD bases of sd_asd_basis(). `z_block`
/// is the traceless Ricci part as a map Lambda^- -> Lambda^+ (its transpose is
/// the adjoint Lambda^+ -> Lambda^-). With the reassembly normalisation
/// |Z|^2 = 2|z_block|^2 and the tensor norm sum_ij ric0_ij^2 equals
/// 4|z_block|^2.
struct CurvatureDecomposition {
  double s = 0.0;
  double u = 0.0;
  Mat4 ric = Mat4::Zero();
  Mat4 ric0 = Mat4::Zero();
  Mat3 wplus = Mat3::Zero();
  Mat3 wminus = Mat3::Zero();
  Mat3 z_block = Mat3::Zero();
  Vec3 wp_eigs = Vec3::Zero();  // ascending
  Vec3 wm_eigs = Vec3::Zero();  // ascending
  Mat3 wp_vecs = Mat3::Identity();  // columns, matching wp_eigs
  Mat3 wm_vecs = Mat3::Identity();

  double wplus_sq() const { return wp_eigs.squaredNorm(); }
  double wminus_sq() const { return wm_eigs.squaredNorm(); }
  /// sum_ij (ric0)_ij^2
  double ric0_sq() const { return ric0.squaredNorm(); }
  /// |Z|^2 as an endomorphism of Lambda^2.
  double z_sq() const { return 2.0 * z_block.squaredNorm(); }

  /// Reverses the orientation: swaps the roles of Lambda^+ and Lambda^-.
  CurvatureDecomposition flipped() const;
};

/// Throws InvalidSymmetry.
CurvatureDecomposition decompose(const RiemannTensor& r, double tol = kDefaultTol);

/// U + W+ + W- + Z back in the wedge basis.
CurvatureOperator reassemble(const CurvatureDecomposition& d);

/// Ricci contraction Ric_jl = sum_i R_ijil.
Mat4 ricci(const RiemannTensor& r);

/// Ascending eigen-decomposition of a symmetric 3x3 matrix.
std::pair<Vec3, Mat3> symmetric_eigen3(const Mat3& m);

/// Tensor satisfying every algebraic symmetry, built by symmetrising Gaussian
/// noise on Lambda^2 and projecting out the Bianchi defect (the component along
/// the Hodge star). Deterministic per seed; entries have size ~`scale`.
RiemannTensor random_algebraic_tensor(std::uint64_t seed, double scale = 1.0);

/// Components in a new oriented frame: R'(a,b,c,d) = R(f_a, f_b, f_c, f_d).
RiemannTensor rotate(const RiemannTensor& r, const Frame4& frame);

}  // namespace curvpinch
