#pragma once

#include "balflip/complex.hpp"

namespace balflip {

enum class ManifoldVerdict { Closed, WithBoundary, No, Undecided };

const char* to_string(ManifoldVerdict v);

enum class SphereBall { Sphere, Ball, Neither, Undecided };

// Exact recognition of combinatorial spheres and balls up to dimension 2.
SphereBall classify_sphere_or_ball(const Complex& c);

// Exact for dim(c) <= 3 via vertex links; Undecided above. Throws NotPure.
ManifoldVerdict is_combinatorial_manifold(const Complex& c);

}  // namespace balflip
