#pragma once

// Random inputs for property checks. Every generator draws from a caller-owned
// engine so that suites are deterministic for a fixed seed.

#include <random>

#include "curvpinch/forms.hpp"

namespace curvpinch {

using Rng = std::mt19937_64;

Vec3 random_unit3(Rng& rng);
Vec4 random_unit4(Rng& rng);
Form2 random_form(Rng& rng);
/// Haar-distributed element of SO(4).
Frame4 random_frame(Rng& rng);
/// Uniform random oriented plane.
Plane2 random_plane(Rng& rng);

}  // namespace curvpinch
