#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvpinch/curvature.hpp"
#include "curvpinch/planescan.hpp"

namespace curvpinch {

enum class ModelKind { S4, CP2, S2xS2, FlatT4 };

struct ModelParams {
  double r = 1.0;  // S4 radius
  double c = 4.0;  // CP2 holomorphic sectional curvature
  double a = 1.0;  // S2xS2 factor radii
  double b = 1.0;
  double L = 1.0;  // flat torus side
};

struct ModelSpace {
  std::string name;
  ModelKind kind = ModelKind::S4;
  ModelParams params;
  RiemannTensor tensor;
  double volume = 0.0;
  /// First nonzero Laplace eigenvalue on functions (literature constant).
  std::optional<double> lambda1;
  std::string lambda1_source;
  int expected_chi = 0;
  int expected_tau = 0;
  bool homogeneous = true;
};

/// Throws NonPositiveParam for a nonpositive scale parameter of the model.
///
///   S4(r):      K = 1/r^2, Vol = 8 pi^2 r^4 / 3, lambda1 = 4/r^2, (chi, tau) = (2, 0)
///   CP2(c):     Fubini-Study, holomorphic curvature c, J e1 = e2, J e3 = e4,
///               W- = 0, Vol = 8 pi^2 / c^2, lambda1 = 3c, (3, 1)
///   S2xS2(a,b): product of round spheres, Vol = 16 pi^2 a^2 b^2,
///               lambda1 = min(2/a^2, 2/b^2), (4, 0)
///   FlatT4(L):  zero tensor, Vol = L^4, lambda1 = (2 pi / L)^2, (0, 0)
ModelSpace make_model(ModelKind kind, const ModelParams& params = {});

/// Accepts S4, CP2, S2xS2, FlatT4 (case-insensitive). Throws UnknownModel.
ModelKind model_kind_from_name(const std::string& name);
std::string model_name(ModelKind kind);
std::vector<ModelKind> all_models();

/// Unit sphere tensor R_ijkl = d_ik d_jl - d_il d_jk.
RiemannTensor round_sphere_tensor(double curvature = 1.0);

inline constexpr int kSampleAttemptCap = 500;

struct PinchedSample {
  RiemannTensor tensor;
  PinchingReport scan;
  int attempts = 0;
};

/// S4(1) plus a symmetry-projected random perturbation of size up to `scale`,
/// normalised so the scanned k_max is 1, rejection-sampled until the scanned
/// k_min >= delta_target. Deterministic per seed. Throws SamplingExhausted
/// after kSampleAttemptCap attempts.
PinchedSample pinched_sample(std::uint64_t seed, double delta_target, double scale,
                             const ScanBudget& budget = {});

/// As pinched_sample, but the perturbation only touches W+, so the sample is
/// Einstein with W- = 0.
PinchedSample half_flat_sample(std::uint64_t seed, double delta_target, double scale,
                               const ScanBudget& budget = {});

}  // namespace curvpinch
