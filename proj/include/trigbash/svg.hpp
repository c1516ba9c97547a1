#pragma once

#include <cstdint>
#include <string>

#include "trigbash/dsl/scene.hpp"

namespace trigbash {

/// Renders one non-degenerate instantiation of the scene as an SVG document:
/// labeled point dots, lines clipped to a padded bounding box, circles.
/// Deterministic for a fixed (scene, seed); throws after 1000 degenerate
/// attempts.
std::string render_svg(const dsl::Scene& scene, uint64_t seed);

}  // namespace trigbash
