#include "supconv/svg.hpp"

#include "supconv/error.hpp"
#include "supconv/subdivision.hpp"

#include <cstdio>
#include <sstream>

namespace supconv {

namespace {

constexpr double kSide = 400.0;
constexpr double kMargin = 20.0;
constexpr double kHeight = 346.41016151377545;  // kSide * sqrt(3) / 2

std::string point_text(const BaryPoint& p) {
  // e1 bottom left, e2 bottom right, e3 apex.
  const double x = kMargin + kSide * (to_double(p[1]) + 0.5 * to_double(p[2]));
  const double y = kMargin + kHeight * (1.0 - to_double(p[2]));
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f,%.3f", x, y);
  return buf;
}

}  // namespace

std::string emit_subdivision_svg(int k, int n) {
  require(k == 2, ErrorKind::OutOfDomain, "subdivision figures are only drawn for k = 2");
  require(n >= 1, ErrorKind::InvalidInput, "n must be >= 1");
  std::ostringstream out;
  char size[64];
  std::snprintf(size, sizeof size, "width=\"%.0f\" height=\"%.0f\"", kSide + 2 * kMargin, kHeight + 2 * kMargin);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" " << size << ">\n";
  out << "<style>.shaded{fill:#b0b0b0;stroke:#000;stroke-width:1}"
         ".unshaded{fill:#fff;stroke:#000;stroke-width:1}</style>\n";
  for (const auto& cell : subdivide(2, n)) {
    out << "<polygon class=\"" << (cell.m == 1 ? "shaded" : "unshaded") << "\" data-m=\"" << cell.m
        << "\" points=\"";
    const auto verts = cell_vertices(n, cell);
    for (std::size_t i = 0; i < verts.size(); ++i) out << (i ? " " : "") << point_text(verts[i]);
    out << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace supconv
