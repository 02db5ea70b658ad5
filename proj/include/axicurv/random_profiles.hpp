#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "axicurv/profile.hpp"

// Seeded generators for admissible test profiles. Angle values are drawn
// first; the endpoint constraint x(L) = 0 is then enforced by bisecting the
// exponent of a one-parameter time reparametrization s_k = L u_k^alpha
// (warping the abscissae trades arclength between the cos > 0 and cos < 0
// parts of the range). Draws whose bracket fails or whose warped profile
// does not validate are rejected and redrawn, so a fixed seed always yields
// the same suite.

namespace axicurv {

enum class ProfileClass {
    inner_convex,  // theta non-decreasing from 0 to pi
    axiconvex,     // theta valued in [0,pi]
    admissible     // theta unrestricted (validated for simplicity)
};

Profile random_profile(ProfileClass cls, std::mt19937_64& rng);

std::vector<Profile> random_suite(ProfileClass cls, int count,
                                  std::uint64_t seed);

}  // namespace axicurv
