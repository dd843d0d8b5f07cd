#include <cmath>

#include "doctest.h"

#include "curvpinch/errors.hpp"
#include "curvpinch/models.hpp"

using namespace curvpinch;

TEST_CASE("model tensors") {
  for (ModelKind k : all_models()) {
    const ModelSpace m = make_model(k);
    CHECK(validate_symmetries(m.tensor).max_residual() < 1e-14);
    CHECK(m.homogeneous);
    CHECK(model_kind_from_name(m.name) == k);
    CHECK(model_name(k) == m.name);
  }
  const ModelSpace s4 = make_model(ModelKind::S4);
  CHECK(decompose(s4.tensor).s == doctest::Approx(12.0));
  CHECK(make_model(ModelKind::FlatT4).tensor.max_abs_diff(RiemannTensor{}) == 0.0);

  const ModelSpace s4r = make_model(ModelKind::S4, {.r = 2.0});
  CHECK(s4r.tensor.max_abs_diff(round_sphere_tensor(0.25)) < 1e-15);
}

TEST_CASE("Fubini-Study tensor against the Kahler curvature formula") {
  const double c = 4.0;
  Mat4 j = Mat4::Zero();  // J e1 = e2, J e3 = e4
  j(1, 0) = 1.0;
  j(0, 1) = -1.0;
  j(3, 2) = 1.0;
  j(2, 3) = -1.0;
  const ModelSpace cp2 = make_model(ModelKind::CP2, {.c = c});
  const Mat4 g = Mat4::Identity();
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int z = 0; z < 4; ++z)
        for (int w = 0; w < 4; ++w) {
          const Vec4 jx = j.col(x), jy = j.col(y);
          const double expected =
              (c / 4.0) * (g(x, z) * g(y, w) - g(x, w) * g(y, z) + jx[z] * jy[w] - jx[w] * jy[z] +
                           2.0 * jx[y] * j.col(z)[w]);
          CHECK(cp2.tensor(x, y, z, w) == doctest::Approx(expected).scale(1.0));
        }
  const CurvatureDecomposition d = decompose(cp2.tensor);
  CHECK(d.wminus.norm() < 1e-13);
  CHECK(d.s == doctest::Approx(24.0));
}

TEST_CASE("model constants") {
  const double pi2 = M_PI * M_PI;
  const ModelSpace s4 = make_model(ModelKind::S4, {.r = 2.0});
  CHECK(s4.volume == doctest::Approx(8.0 * pi2 * 16.0 / 3.0));
  CHECK(*s4.lambda1 == doctest::Approx(1.0));
  CHECK(s4.expected_chi == 2);

  const ModelSpace cp2 = make_model(ModelKind::CP2);
  CHECK(cp2.volume == doctest::Approx(pi2 / 2.0));
  CHECK(*cp2.lambda1 == doctest::Approx(12.0));
  CHECK(cp2.expected_tau == 1);

  const ModelSpace s2s2 = make_model(ModelKind::S2xS2, {.a = 1.0, .b = 2.0});
  CHECK(s2s2.volume == doctest::Approx(16.0 * pi2 * 4.0));
  CHECK(*s2s2.lambda1 == doctest::Approx(0.5));

  const ModelSpace t4 = make_model(ModelKind::FlatT4, {.L = 2.0});
  CHECK(t4.volume == doctest::Approx(16.0));
  CHECK(*t4.lambda1 == doctest::Approx(pi2));
}

TEST_CASE("model errors") {
  CHECK_THROWS_AS(make_model(ModelKind::S4, {.r = 0.0}), NonPositiveParam);
  CHECK_THROWS_AS(make_model(ModelKind::CP2, {.c = -1.0}), NonPositiveParam);
  CHECK_THROWS_AS(make_model(ModelKind::S2xS2, {.a = 1.0, .b = 0.0}), NonPositiveParam);
  CHECK_THROWS_AS(make_model(ModelKind::FlatT4, {.L = -2.0}), NonPositiveParam);
  CHECK_THROWS_AS(model_kind_from_name("K3"), UnknownModel);
  CHECK(model_kind_from_name("cp2") == ModelKind::CP2);
}

TEST_CASE("pinched samples") {
  const PinchedSample round = pinched_sample(3, 0.5, 0.0);
  CHECK(round.tensor.max_abs_diff(round_sphere_tensor()) == 0.0);
  REQUIRE(round.scan.delta);
  CHECK(*round.scan.delta == doctest::Approx(1.0));

  const PinchedSample a = pinched_sample(11, 0.5, 0.3);
  const PinchedSample b = pinched_sample(11, 0.5, 0.3);
  CHECK(a.tensor.max_abs_diff(b.tensor) == 0.0);
  CHECK(a.scan.k_min >= 0.5);
  CHECK(a.scan.k_max <= 1.0 + 1e-12);
  CHECK(validate_symmetries(a.tensor).valid());
  CHECK(pinched_sample(12, 0.5, 0.3).tensor.max_abs_diff(a.tensor) > 0.0);

  const PinchedSample h = half_flat_sample(4, 0.1, 1.0);
  const CurvatureDecomposition d = decompose(h.tensor);
  CHECK(d.wminus.norm() < 1e-12);
  CHECK(d.z_block.norm() < 1e-12);
  CHECK(h.scan.k_min >= 0.1);

  CHECK_THROWS_AS(pinched_sample(1, 0.0, 1.0), NonPositiveParam);
  CHECK_THROWS_AS(pinched_sample(1, 1.5, 1.0), NonPositiveParam);
  const ScanBudget cheap{.grid = 8, .top_cells = 1, .refine_steps = 20};
  CHECK_THROWS_AS(pinched_sample(1, 1.0, 2.0, cheap), SamplingExhausted);
}
