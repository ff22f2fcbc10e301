#pragma once

namespace fo2 {

// Orientation of one-sided notions: Right matches the X-started / leftmost-
// factorization world, Left its mirror image.
enum class Side { Right, Left };

constexpr Side flipped(Side s) { return s == Side::Right ? Side::Left : Side::Right; }

}
