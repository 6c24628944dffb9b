#pragma once

#include "interpen/vec2.hpp"

namespace interpen {

// Sign of (b - a) x (c - a): +1 counter-clockwise, -1 clockwise, 0 collinear.
// Exact: a floating-point filter with a rational fallback for near-degenerate triples.
[[nodiscard]] int orient2d(Vec2 a, Vec2 b, Vec2 c);

// Exact sign of (a - o) . (b - o).
[[nodiscard]] int dot_sign(Vec2 o, Vec2 a, Vec2 b);

}  // namespace interpen
