#pragma once

#include <string>

namespace supconv {

/// Subdivision of the triangle at scale 1/n. Cells with m = 1 are drawn
/// shaded (class "shaded"), cells with m = 2 unshaded (class "unshaded").
/// Output is byte-stable. Throws Error(OutOfDomain) unless k == 2.
std::string emit_subdivision_svg(int k, int n);

}  // namespace supconv
