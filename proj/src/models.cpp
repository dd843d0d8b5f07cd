#include "curvpinch/models.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>

#include "curvpinch/errors.hpp"

namespace curvpinch {

RiemannTensor round_sphere_tensor(double curvature) {
  return tensor_from_operator(CurvatureOperator{curvature * Mat6::Identity()});
}

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) throw NonPositiveParam(std::string(what) + " must be positive");
}

RiemannTensor fubini_study(double c) {
  Mat4 j = Mat4::Zero();
  // columns are J e_i
  j(1, 0) = 1.0;
  j(0, 1) = -1.0;
  j(3, 2) = 1.0;
  j(2, 3) = -1.0;
  const Mat4 g = Mat4::Identity();
  // <J e_x, e_z> = j(z, x)
  auto jg = [&](int x, int z) { return j(z, x); };
  RiemannTensor r;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int z = 0; z < 4; ++z)
        for (int w = 0; w < 4; ++w) {
          r(x, y, z, w) = 0.25 * c *
                          (g(x, z) * g(y, w) - g(x, w) * g(y, z) + jg(x, z) * jg(y, w) -
                           jg(x, w) * jg(y, z) + 2.0 * jg(x, y) * jg(z, w));
        }
  return r;
}

}  // namespace

ModelSpace make_model(ModelKind kind, const ModelParams& p) {
  ModelSpace m;
  m.kind = kind;
  m.params = p;
  m.name = model_name(kind);
  const double pi2 = M_PI * M_PI;
  switch (kind) {
    case ModelKind::S4:
      require_positive(p.r, "r");
      m.tensor = round_sphere_tensor(1.0 / (p.r * p.r));
      m.volume = 8.0 * pi2 * std::pow(p.r, 4) / 3.0;
      m.lambda1 = 4.0 / (p.r * p.r);
      m.lambda1_source = "n/r^2 for the round n-sphere";
      m.expected_chi = 2;
      m.expected_tau = 0;
      break;
    case ModelKind::CP2:
      require_positive(p.c, "c");
      m.tensor = fubini_study(p.c);
      m.volume = 8.0 * pi2 / (p.c * p.c);
      m.lambda1 = 3.0 * p.c;
      m.lambda1_source =
          "4(n+1) for CP^n with holomorphic curvature 4, scaled by c/4 (externally sourced; "
          "CP^1 case: S^2 of radius 1/2 has lambda1 = 8)";
      m.expected_chi = 3;
      m.expected_tau = 1;
      break;
    case ModelKind::S2xS2: {
      require_positive(p.a, "a");
      require_positive(p.b, "b");
      Mat6 op = Mat6::Zero();
      op(0, 0) = 1.0 / (p.a * p.a);
      op(5, 5) = 1.0 / (p.b * p.b);
      m.tensor = tensor_from_operator(CurvatureOperator{op});
      m.volume = 16.0 * pi2 * p.a * p.a * p.b * p.b;
      m.lambda1 = std::min(2.0 / (p.a * p.a), 2.0 / (p.b * p.b));
      m.lambda1_source = "first eigenvalue of the smaller round factor";
      m.expected_chi = 4;
      m.expected_tau = 0;
      break;
    }
    case ModelKind::FlatT4:
      require_positive(p.L, "L");
      m.volume = std::pow(p.L, 4);
      m.lambda1 = std::pow(2.0 * M_PI / p.L, 2);
      m.lambda1_source = "(2 pi / L)^2 for the cubic flat torus";
      m.expected_chi = 0;
      m.expected_tau = 0;
      break;
  }
  return m;
}

std::string model_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::S4: return "S4";
    case ModelKind::CP2: return "CP2";
    case ModelKind::S2xS2: return "S2xS2";
    case ModelKind::FlatT4: return "FlatT4";
  }
  return "?";
}

std::vector<ModelKind> all_models() {
  return {ModelKind::S4, ModelKind::CP2, ModelKind::S2xS2, ModelKind::FlatT4};
}

ModelKind model_kind_from_name(const std::string& name) {
  std::string low = name;
  std::transform(low.begin(), low.end(), low.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (ModelKind k : all_models()) {
    std::string n = model_name(k);
    std::transform(n.begin(), n.end(), n.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (n == low) return k;
  }
  throw UnknownModel("'" + name + "' (known: S4, CP2, S2xS2, FlatT4)");
}

namespace {

template <typename Perturb>
PinchedSample rejection_sample(std::uint64_t seed, double delta_target, double scale,
                               const ScanBudget& budget, Perturb perturb) {
  if (!(delta_target > 0.0 && delta_target <= 1.0)) {
    throw NonPositiveParam("delta_target must lie in (0, 1]");
  }
  if (scale == 0.0) {
    PinchedSample s;
    s.tensor = round_sphere_tensor();
    s.scan = scan_extremes(s.tensor, budget);
    s.attempts = 1;
    return s;
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int attempt = 1; attempt <= kSampleAttemptCap; ++attempt) {
    const double t = scale * unif(rng);
    const Mat6 candidate = Mat6::Identity() + t * perturb(rng);
    RiemannTensor r = tensor_from_operator(CurvatureOperator{candidate});
    PinchingReport scan = scan_extremes(r, budget);
    if (!(scan.k_max > 0.0)) continue;
    r = r * (1.0 / scan.k_max);
    scan = scan_extremes(r, budget);
    if (scan.k_min >= delta_target) return {r, scan, attempt};
  }
  throw SamplingExhausted("no sample with k_min >= " + std::to_string(delta_target) +
                          " after " + std::to_string(kSampleAttemptCap) + " attempts");
}

}  // namespace

PinchedSample pinched_sample(std::uint64_t seed, double delta_target, double scale,
                             const ScanBudget& budget) {
  return rejection_sample(seed, delta_target, scale, budget, [](std::mt19937_64& rng) {
    const RiemannTensor n = random_algebraic_tensor(rng(), 1.0);
    Mat6 m = operator_from_tensor(n).matrix;
    return Mat6(m / m.norm());
  });
}

PinchedSample half_flat_sample(std::uint64_t seed, double delta_target, double scale,
                               const ScanBudget& budget) {
  return rejection_sample(seed, delta_target, scale, budget, [](std::mt19937_64& rng) {
    std::normal_distribution<double> n01(0.0, 1.0);
    Mat3 w;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) w(i, j) = n01(rng);
    w = (0.5 * (w + w.transpose())).eval();
    w -= (w.trace() / 3.0) * Mat3::Identity();
    w /= w.norm();
    Mat6 q = Mat6::Zero();
    q.topLeftCorner<3, 3>() = w;
    const Mat6& basis = sd_asd_basis();
    return Mat6(basis * q * basis.transpose());
  });
}

}  // namespace curvpinch
