#pragma once

#include <cstdint>
#include <random>

#include "geohom/geometry.hpp"

namespace geohom {

/// Uniform integer in [0, range) by rejection, so the stream is identical on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t range);

/// Point with both coordinates uniform in [0, bound].
Point random_point(std::mt19937_64& rng, std::int64_t bound);

}  // namespace geohom
