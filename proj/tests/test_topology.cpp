#include <cmath>

#include "doctest.h"

#include "curvpinch/errors.hpp"
#include "curvpinch/models.hpp"
#include "curvpinch/topology.hpp"

using namespace curvpinch;

TEST_CASE("integrands of the model spaces") {
  const double pi2 = M_PI * M_PI;
  const CurvatureDecomposition sphere = decompose(round_sphere_tensor());
  CHECK(gbc_integrand(sphere) == doctest::Approx(3.0 / (4.0 * pi2)));
  CHECK(signature_integrand(sphere) == doctest::Approx(0.0));
  CHECK(fg_value(sphere) == doctest::Approx(6.0));

  const CurvatureDecomposition cp2 = decompose(make_model(ModelKind::CP2).tensor);
  CHECK(gbc_integrand(cp2) == doctest::Approx(6.0 / pi2));
  CHECK(signature_integrand(cp2) == doctest::Approx(24.0 / (12.0 * pi2)));
  CHECK(fg_value(cp2) == doctest::Approx(16.0));

  const CurvatureDecomposition s2s2 = decompose(make_model(ModelKind::S2xS2).tensor);
  CHECK(gbc_integrand(s2s2) == doctest::Approx(2.0 / (8.0 * pi2)));
  CHECK(signature_integrand(s2s2) == doctest::Approx(0.0).scale(1.0));

  const CurvatureDecomposition flat = decompose(RiemannTensor{});
  CHECK(gbc_integrand(flat) == 0.0);
  CHECK(fg_value(flat) == 0.0);

  const IntegrandValues iv = integrands(cp2);
  CHECK(iv.chi_minus_2tau_density == doctest::Approx(iv.gbc - 2.0 * iv.sig));
}

TEST_CASE("characteristic numbers of the models") {
  struct Case {
    ModelKind kind;
    ModelParams params;
    double chi, tau;
  };
  const Case cases[] = {
      {ModelKind::S4, {}, 2, 0},
      {ModelKind::S4, {.r = 2.5}, 2, 0},
      {ModelKind::CP2, {}, 3, 1},
      {ModelKind::CP2, {.c = 1.0}, 3, 1},
      {ModelKind::S2xS2, {}, 4, 0},
      {ModelKind::S2xS2, {.a = 1.0, .b = 3.0}, 4, 0},
      {ModelKind::FlatT4, {}, 0, 0},
  };
  for (const Case& c : cases) {
    const ModelSpace m = make_model(c.kind, c.params);
    const Invariants inv = homogeneous_invariants(m);
    CHECK(std::abs(inv.chi - c.chi) < 1e-9);
    CHECK(std::abs(inv.tau - c.tau) < 1e-9);
    CHECK(std::abs(inv.chi_minus_2tau - (c.chi - 2 * c.tau)) < 1e-9);
    CHECK(std::abs(inv.chi - m.expected_chi) < 1e-9);
    CHECK(std::abs(inv.tau - m.expected_tau) < 1e-9);
  }
}

TEST_CASE("the traceless Ricci term matters for unequal products") {
  const ModelSpace m = make_model(ModelKind::S2xS2, {.a = 1.0, .b = 2.0});
  const CurvatureDecomposition d = decompose(m.tensor);
  CHECK(d.ric0_sq() > 0.1);
  CHECK(homogeneous_invariants(m).chi == doctest::Approx(4.0));
}

TEST_CASE("non-homogeneous inputs are rejected") {
  ModelSpace m = make_model(ModelKind::S4);
  m.homogeneous = false;
  CHECK_THROWS_AS(homogeneous_invariants(m), NotHomogeneous);
}
