#pragma once

namespace jdiv {

/// Global multiplier applied to every numerical check tolerance (dual-formula
/// agreement, negative-type and positive-definiteness certification, Menger
/// signs, bound sandwiches). Initialised from the JG_TOLERANCE_SCALE
/// environment variable on first use; defaults to 1.
double tolerance_scale();

/// Overrides the scale for the rest of the process. Must be positive.
void set_tolerance_scale(double scale);

}  // namespace jdiv
