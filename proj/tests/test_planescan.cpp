#include <cmath>

#include <Eigen/Eigenvalues>

#include "doctest.h"

#include "curvpinch/errors.hpp"
#include "curvpinch/models.hpp"
#include "curvpinch/planescan.hpp"
#include "curvpinch/sampling.hpp"

using namespace curvpinch;

namespace {

Mat6 star_matrix() {
  Mat6 s;
  for (int a = 0; a < 6; ++a) s.col(a) = hodge_star(Form2(Vec6(Vec6::Unit(a)))).coeffs();
  return s;
}

// Decomposable unit forms are the unit forms with <w, *w> = 0, so
//   min K = max over mu of lambda_min(M + mu *)
// (the Lagrangian dual is exact for two quadratic constraints in this
// dimension). Golden-section on the concave dual function.
double thorpe_min(const Mat6& m) {
  const Mat6 star = star_matrix();
  auto dual = [&](double mu) {
    Eigen::SelfAdjointEigenSolver<Mat6> es(m + mu * star, Eigen::EigenvaluesOnly);
    return es.eigenvalues()[0];
  };
  double lo = -100.0, hi = 100.0;
  for (int i = 0; i < 400; ++i) {
    const double a = lo + (hi - lo) / 3.0, b = hi - (hi - lo) / 3.0;
    if (dual(a) < dual(b)) {
      lo = a;
    } else {
      hi = b;
    }
  }
  return dual(0.5 * (lo + hi));
}

}  // namespace

TEST_CASE("sectional and biorthogonal curvature of model planes") {
  const RiemannTensor sphere = round_sphere_tensor();
  const RiemannTensor s2s2 = make_model(ModelKind::S2xS2).tensor;
  const Vec4 e1 = Vec4::Unit(0), e2 = Vec4::Unit(1), e3 = Vec4::Unit(2);
  const Plane2 p12 = plane_from_vectors(e1, e2), p13 = plane_from_vectors(e1, e3);

  Rng rng(1);
  for (int n = 0; n < 20; ++n) {
    const Plane2 p = random_plane(rng);
    CHECK(sectional(sphere, p) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(sectional(RiemannTensor{}, p) == 0.0);
  }
  CHECK(sectional(s2s2, p12) == doctest::Approx(1.0));
  CHECK(sectional(s2s2, p13) == doctest::Approx(0.0));
  CHECK(biorthogonal(s2s2, p12) == doctest::Approx(1.0));
  CHECK(biorthogonal(s2s2, p13) == doctest::Approx(0.0));

  const RiemannTensor r = random_algebraic_tensor(2);
  for (int n = 0; n < 20; ++n) {
    const Plane2 p = random_plane(rng);
    CHECK(biorthogonal(r, p) == doctest::Approx(biorthogonal(r, p.complement())).epsilon(1e-12));
    // The complement form is the wedge of the orthogonal complement.
    const auto [x, y] = span_of(p.form());
    Mat4 f = Mat4::Zero();
    f.col(0) = x;
    f.col(1) = y;
    const Eigen::FullPivLU<Eigen::Matrix<double, 2, 4>> lu(f.leftCols<2>().transpose());
    const Eigen::Matrix<double, 4, 2> kernel = lu.kernel();
    const Eigen::HouseholderQR<Eigen::Matrix<double, 4, 2>> qr(kernel);
    const Eigen::Matrix<double, 4, 2> q = Mat4(qr.householderQ()).leftCols<2>();
    const Form2 perp = wedge(q.col(0), q.col(1));
    CHECK(std::abs(std::abs(perp.dot(p.complement_form())) - 1.0) < 1e-10);
  }
}

TEST_CASE("scan extremes of the model spaces") {
  const PinchingReport sphere = scan_extremes(round_sphere_tensor());
  CHECK(sphere.k_min == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sphere.k_max == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sphere.k1perp == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sphere.k3perp == doctest::Approx(1.0).epsilon(1e-12));
  REQUIRE(sphere.delta);
  CHECK(*sphere.delta == doctest::Approx(1.0));

  const PinchingReport s2s2 = scan_extremes(make_model(ModelKind::S2xS2).tensor);
  CHECK(std::abs(s2s2.k_min) < 1e-6);
  CHECK(std::abs(s2s2.k_max - 1.0) < 1e-6);
  CHECK(std::abs(s2s2.k1perp) < 1e-6);
  CHECK(std::abs(s2s2.k3perp - 1.0) < 1e-6);

  const PinchingReport cp2 = scan_extremes(make_model(ModelKind::CP2).tensor);
  CHECK(std::abs(cp2.k_min - 1.0) < 1e-6);
  CHECK(std::abs(cp2.k_max - 4.0) < 1e-6);

  const PinchingReport quarter = scan_extremes(make_model(ModelKind::CP2, {.c = 1.0}).tensor);
  CHECK(std::abs(quarter.k_min - 0.25) < 1e-6);
  CHECK(std::abs(quarter.k_max - 1.0) < 1e-6);

  const PinchingReport flat = scan_extremes(RiemannTensor{});
  CHECK(flat.k_max == 0.0);
  CHECK_FALSE(flat.delta);
}

TEST_CASE("returned planes realise the reported values") {
  const RiemannTensor r = random_algebraic_tensor(77);
  const PinchingReport rep = scan_extremes(r);
  CHECK(sectional(r, rep.argmin) == doctest::Approx(rep.k_min).epsilon(1e-12));
  CHECK(sectional(r, rep.argmax) == doctest::Approx(rep.k_max).epsilon(1e-12));
  CHECK(biorthogonal(r, rep.argmin_perp) == doctest::Approx(rep.k1perp).epsilon(1e-12));
  CHECK(std::abs(plucker_residual(rep.argmin.form())) < 1e-10);
}

TEST_CASE("scan agrees with the dual eigenvalue oracle") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const RiemannTensor r = random_algebraic_tensor(seed);
    const Mat6 m = operator_from_tensor(r).matrix;
    const PinchingReport rep = scan_extremes(r);
    CHECK(std::abs(rep.k_min - thorpe_min(m)) < 1e-6);
    CHECK(std::abs(rep.k_max + thorpe_min(-m)) < 1e-6);
  }
}

TEST_CASE("closed-form biorthogonal extremes") {
  CHECK(k1perp_closed_form(decompose(make_model(ModelKind::S2xS2).tensor)) ==
        doctest::Approx(0.0).scale(1.0));
  CHECK(k1perp_closed_form(decompose(round_sphere_tensor())) == doctest::Approx(1.0));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const RiemannTensor r = random_algebraic_tensor(seed);
    const CurvatureDecomposition d = decompose(r);
    const PinchingReport rep = scan_extremes(r);
    CHECK(std::abs(rep.k1perp - k1perp_closed_form(d)) < 1e-6);
    CHECK(std::abs(rep.k3perp - k3perp_closed_form(d)) < 1e-6);
    CHECK(rep.k_min <= rep.k1perp + 1e-9);
    CHECK(rep.k3perp <= rep.k_max + 1e-9);
  }
}

TEST_CASE("scan budget floors") {
  const RiemannTensor r = round_sphere_tensor();
  CHECK_THROWS_AS(scan_extremes(r, {.grid = 4}), BudgetTooSmall);
  CHECK_THROWS_AS(scan_extremes(r, {.top_cells = 0}), BudgetTooSmall);
  CHECK_THROWS_AS(scan_extremes(r, {.refine_steps = 5}), BudgetTooSmall);
  CHECK_NOTHROW(scan_extremes(r, {.grid = ScanBudget::kMinGrid,
                                  .top_cells = ScanBudget::kMinTopCells,
                                  .refine_steps = ScanBudget::kMinRefineSteps}));
}

TEST_CASE("mixed component estimate") {
  const CheckReport sphere = seaman_check(round_sphere_tensor(), 100, 1);
  CHECK(sphere.passed());
  CHECK(sphere.max_ratio == 0.0);

  const CheckReport s2s2 = seaman_check(make_model(ModelKind::S2xS2).tensor, 100, 1);
  CHECK(s2s2.passed());
  CHECK(s2s2.max_ratio <= 1.0);

  // In the coordinate frame the product has no fully mixed component.
  const Mat6 prod = operator_from_tensor(make_model(ModelKind::S2xS2).tensor).matrix;
  CHECK(prod(0, 5) == 0.0);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const CheckReport rep = seaman_check(random_algebraic_tensor(seed), 100, seed);
    CHECK(rep.violations == 0);
    CHECK(rep.samples == 100);
  }
}
