#include <cmath>

#include "doctest.h"

#include "curvpinch/errors.hpp"
#include "curvpinch/models.hpp"
#include "curvpinch/planescan.hpp"
#include "curvpinch/sampling.hpp"
#include "curvpinch/weitzenbock.hpp"

using namespace curvpinch;

namespace {

// Coordinate form of the curvature term of the Hodge Laplacian on 2-forms:
//   (R w)_ij = Ric_ik w_kj + Ric_jk w_ik - 2 R_ikjl w_kl,
// summed over all k, l with w the full antisymmetric matrix.
Vec6 bochner_term(const RiemannTensor& r, const Form2& w) {
  const Mat4 a = w.as_matrix();
  Mat4 ric = Mat4::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) ric(i, j) += r(k, i, k, j);
  Mat4 out = ric * a + a * ric.transpose();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) out(i, j) -= 2.0 * r(i, k, j, l) * a(k, l);
  Vec6 c;
  for (int b = 0; b < 6; ++b) c[b] = out(kWedgeBasis[b].first, kWedgeBasis[b].second);
  return c;
}

}  // namespace

TEST_CASE("operator on model spaces") {
  CHECK((weitzenbock_operator(round_sphere_tensor()).matrix - 4.0 * Mat6::Identity()).norm() <
        1e-14);
  CHECK(weitzenbock_operator(RiemannTensor{}).matrix.norm() == 0.0);
}

TEST_CASE("operator agrees with the coordinate Bochner term") {
  Rng rng(4);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const RiemannTensor r = random_algebraic_tensor(seed);
    const WeitzenbockOperator n = weitzenbock_operator(r);
    CHECK((n.matrix - n.matrix.transpose()).norm() < 1e-13);
    for (int k = 0; k < 3; ++k) {
      const Form2 w = random_form(rng);
      CHECK((n.matrix * w.coeffs() - bochner_term(r, w)).norm() < 1e-12);
    }
    // Preserves the self-dual / anti-self-dual splitting, and equals s/3 - 2W.
    const Mat6& basis = sd_asd_basis();
    const Mat6 q = basis.transpose() * n.matrix * basis;
    CHECK(q.topRightCorner<3, 3>().norm() < 1e-12);
    const CurvatureDecomposition d = decompose(r);
    CHECK((q.topLeftCorner<3, 3>() - (d.s / 3.0 * Mat3::Identity() - 2.0 * d.wplus)).norm() <
          1e-12);
    CHECK((q.bottomRightCorner<3, 3>() - (d.s / 3.0 * Mat3::Identity() - 2.0 * d.wminus))
              .norm() < 1e-12);
  }
}

TEST_CASE("lower bound on the Weitzenbock form") {
  Rng rng(8);
  const RiemannTensor sphere = round_sphere_tensor();
  for (int n = 0; n < 20; ++n) {
    const Form2 w = random_form(rng);
    const Form2 unit = w / w.norm();
    const Lemma1Values v = lemma1_check(sphere, unit);
    CHECK(v.lhs == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(v.rhs == doctest::Approx(4.0).epsilon(1e-12));
  }
  const Lemma1Values zero = lemma1_check(sphere, Form2{});
  CHECK(zero.lhs == 0.0);
  CHECK(zero.rhs == 0.0);

  int violations = 0;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    const RiemannTensor r = random_algebraic_tensor(seed);
    const WeitzenbockOperator op = weitzenbock_operator(r);
    const CurvatureDecomposition d = decompose(r);
    for (int k = 0; k < 5; ++k) {
      if (lemma1_check(op, d, random_form(rng)).slack() < -1e-9) ++violations;
    }
  }
  CHECK(violations == 0);
}

TEST_CASE("upper bound on K3perp") {
  const CheckReport s2s2 = k3_bound_check(decompose(make_model(ModelKind::S2xS2).tensor));
  CHECK(s2s2.passed());
  CHECK(std::abs(s2s2.min_slack) < 1e-12);
  const CheckReport sphere = k3_bound_check(decompose(round_sphere_tensor()));
  CHECK(sphere.passed());
  CHECK(std::abs(sphere.min_slack) < 1e-12);
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const CheckReport rep = k3_bound_check(decompose(random_algebraic_tensor(seed)));
    CHECK(rep.passed());
    CHECK(rep.min_slack >= -1e-12);
  }
}

TEST_CASE("adapted frames") {
  CHECK_THROWS_AS(adapted_frame(Form2{}), DegenerateForm);
  Rng rng(12);
  for (int n = 0; n < 100; ++n) {
    Form2 w = random_form(rng);
    if (n == 0) w = sd_asd_split(w).sd;   // pure self-dual
    if (n == 1) w = sd_asd_split(w).asd;  // pure anti-self-dual
    const Frame4 f = adapted_frame(w);
    const auto [wp, wm] = sd_asd_split(w);
    const double p = wp.norm(), q = wm.norm();
    const Vec6 local = f.lambda2().transpose() * w.coeffs();
    Vec6 expected = Vec6::Zero();
    expected[0] = (p + q) / std::sqrt(2.0);
    expected[5] = (p - q) / std::sqrt(2.0);
    CHECK((local - expected).norm() < 1e-10);
  }
}

TEST_CASE("expansion of the Weitzenbock form in an adapted frame") {
  const RiemannTensor sphere = round_sphere_tensor();
  const Form2 sd(1, 0, 0, 0, 0, 1);
  const IdentityCheck c = intermediate_identity_check(sphere, sd / sd.norm());
  CHECK(c.lhs == doctest::Approx(4.0));
  CHECK(c.rhs == doctest::Approx(4.0));

  const IdentityCheck prod =
      intermediate_identity_check(make_model(ModelKind::S2xS2).tensor, Form2::basis(0, 1));
  CHECK(prod.holds());
  CHECK(prod.lhs == doctest::Approx(0.0).scale(1.0));

  Rng rng(99);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const IdentityCheck ic = intermediate_identity_check(random_algebraic_tensor(seed),
                                                         random_form(rng));
    CHECK(ic.holds(1e-9));
  }

  // A frame that is not adapted to the form is rejected.
  CHECK_THROWS_AS(intermediate_identity_check(sphere, Form2(0, 1, 0, 0, 0, 0), Frame4{}),
                  InconsistentInputs);
}
