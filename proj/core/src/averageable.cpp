#include "supconv/averageable.hpp"

#include "supconv/combinatorics.hpp"
#include "supconv/error.hpp"
#include "supconv/generators.hpp"
#include "supconv/sup_convolution.hpp"

#include <sstream>

namespace supconv {

AffinePiece AffinePiece::from_vertex_images(SimplexGeom domain, const std::vector<BaryPoint>& images) {
  require(images.size() == domain.vertices().size(), ErrorKind::InvalidInput, "one image per domain vertex");
  std::vector<RationalVector> cols;
  for (const auto& p : images) {
    require(p.coords().size() == images.size(), ErrorKind::InvalidInput, "image dimension mismatch");
    cols.push_back(p.coords());
  }
  auto inv = inverse(domain.vertex_matrix());
  require(inv.has_value(), ErrorKind::DegenerateInput, "piece domain is degenerate");
  Matrix linear = Matrix::from_columns(cols) * *inv;
  const std::size_t width = images.size();
  return AffinePiece{std::move(domain), std::move(linear), RationalVector(width)};
}

BaryPoint AffinePiece::apply(const BaryPoint& p) const {
  RationalVector out = linear * p.coords();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += offset[i];
  return BaryPoint(std::move(out));
}

std::vector<BaryPoint> AffinePiece::image_vertices() const {
  std::vector<BaryPoint> out;
  for (const auto& v : domain.vertices()) out.push_back(apply(v));
  return out;
}

SimplexGeom AffinePiece::image() const { return SimplexGeom(image_vertices()); }

Rational AffinePiece::jacobian() const {
  const std::size_t k = linear.rows() - 1;
  // Directions e_i - e_{k+1} map to column differences; the chart keeps the
  // first k coordinates.
  Matrix chart(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < k; ++r) chart(r, i) = linear(r, i) - linear(r, k);
  return determinant(std::move(chart));
}

PLMap PLMap::linear(int k, const Matrix& m) {
  const auto width = static_cast<std::size_t>(k) + 1;
  return PLMap{{AffinePiece{SimplexGeom::standard(k), m, RationalVector(width)}}};
}

BaryPoint PLMap::apply(const BaryPoint& p) const {
  for (const auto& piece : pieces) {
    if (contains(piece.domain, p)) return piece.apply(p);
  }
  fail(ErrorKind::InvalidInput, "point lies outside every piece domain");
}

Rational AverageTarget::relative_volume() const {
  if (hypersimplex_m) {
    return Rational(eulerian(k, *hypersimplex_m - 1)) / pow(Rational(*hypersimplex_m), static_cast<unsigned>(k));
  }
  return supconv::relative_volume(*simplex);
}

bool AverageTarget::contains(const BaryPoint& p) const {
  if (hypersimplex_m) {
    const Rational cap = make_rational(1, *hypersimplex_m);
    for (const auto& x : p.coords()) {
      if (x < 0 || x > cap) return false;
    }
    return p.total() == 1;
  }
  return supconv::contains(*simplex, p);
}

namespace {

Matrix cyclic_shift(int k) {
  const auto width = static_cast<std::size_t>(k) + 1;
  Matrix sigma(width, width);
  for (std::size_t j = 0; j < width; ++j) sigma((j + 1) % width, j) = 1;
  return sigma;
}

BaryPoint midpoint(int k, int i, int j) {
  RationalVector c(static_cast<std::size_t>(k) + 1);
  c[static_cast<std::size_t>(i)] += make_rational(1, 2);
  c[static_cast<std::size_t>(j)] += make_rational(1, 2);
  return BaryPoint(std::move(c));
}

AverageabilityCertificate finish(int k, int m, std::vector<PLMap> maps, AverageTarget target) {
  AverageabilityCertificate cert;
  cert.k = k;
  cert.m = m;
  cert.maps = std::move(maps);
  cert.target = std::move(target);
  cert.average_pieces = average_map(cert.maps);
  for (const auto& piece : cert.average_pieces) cert.image_pieces.push_back(piece.image());
  cert.jacobian = abs(cert.average_pieces.front().jacobian());
  return cert;
}

AverageTarget hypersimplex_target(int k, int m) {
  AverageTarget t;
  t.k = k;
  t.hypersimplex_m = m;
  t.description = m == 1 ? "T = P_{" + std::to_string(k) + ",1}"
                         : "(1/" + std::to_string(m) + ")P_{" + std::to_string(k) + "," + std::to_string(m) + "}";
  return t;
}

// Four-piece local isometry of the 3-simplex: R_{i,i+1} -> R_{i+1,i+2}
// where R_{i,i+1} = conv(e_i, e_{i+1}, (e_1+e_3)/2, (e_2+e_4)/2).
PLMap octahedron_rotation() {
  const BaryPoint mid13 = midpoint(3, 0, 2);
  const BaryPoint mid24 = midpoint(3, 1, 3);
  PLMap map;
  for (int i = 0; i < 4; ++i) {
    SimplexGeom domain({BaryPoint::vertex(3, i), BaryPoint::vertex(3, (i + 1) % 4), mid13, mid24});
    std::vector<BaryPoint> images{BaryPoint::vertex(3, (i + 1) % 4), BaryPoint::vertex(3, (i + 2) % 4), mid13, mid24};
    map.pieces.push_back(AffinePiece::from_vertex_images(std::move(domain), images));
  }
  return map;
}

}  // namespace

std::vector<AffinePiece> average_map(const std::vector<PLMap>& maps) {
  require(!maps.empty(), ErrorKind::InvalidInput, "average of zero maps");
  const PLMap* refinement = nullptr;
  for (const auto& map : maps) {
    require(!map.pieces.empty(), ErrorKind::InvalidInput, "map without pieces");
    if (map.pieces.size() == 1) continue;
    if (!refinement) {
      refinement = &map;
      continue;
    }
    bool same = map.pieces.size() == refinement->pieces.size();
    for (std::size_t i = 0; same && i < map.pieces.size(); ++i) {
      same = map.pieces[i].domain.vertices() == refinement->pieces[i].domain.vertices();
    }
    require(same, ErrorKind::NotConstructed, "maps with different piece domains cannot be averaged");
  }

  const std::size_t count = refinement ? refinement->pieces.size() : 1;
  const Rational weight = make_rational(1, static_cast<long>(maps.size()));
  std::vector<AffinePiece> out;
  for (std::size_t p = 0; p < count; ++p) {
    const AffinePiece& shape = refinement ? refinement->pieces[p] : maps.front().pieces.front();
    Matrix linear(shape.linear.rows(), shape.linear.cols());
    RationalVector offset(shape.offset.size());
    for (const auto& map : maps) {
      const AffinePiece& piece = map.pieces.size() == 1 ? map.pieces.front() : map.pieces[p];
      linear = linear + piece.linear;
      for (std::size_t i = 0; i < offset.size(); ++i) offset[i] += piece.offset[i];
    }
    for (auto& x : offset) x *= weight;
    out.push_back(AffinePiece{shape.domain, linear.scaled(weight), std::move(offset)});
  }
  return out;
}

AverageabilityCertificate build_maps(int k, int m) {
  const bool supported = (k >= 1 && k <= 4 && (m == 1 || m == k)) || (k == 3 && m == 2);
  require(supported, ErrorKind::NotConstructed,
          "no averaging maps are constructed for (k, m) = (" + std::to_string(k) + ", " + std::to_string(m) + ")");
  const auto width = static_cast<std::size_t>(k) + 1;

  if (m == 1) {
    return finish(k, 1, {PLMap::linear(k, Matrix::identity(width))}, hypersimplex_target(k, 1));
  }
  if (m == k) {
    std::vector<PLMap> maps;
    const Matrix sigma = cyclic_shift(k);
    Matrix power = sigma;
    for (int i = 1; i <= k; ++i) {
      maps.push_back(PLMap::linear(k, power));
      power = sigma * power;
    }
    return finish(k, k, std::move(maps), hypersimplex_target(k, k));
  }
  return finish(3, 2, {PLMap::linear(3, Matrix::identity(4)), octahedron_rotation()}, hypersimplex_target(3, 2));
}

AverageabilityCertificate build_medial_example() {
  // Common vertex e_4; H_2 cycles e_1 -> e_2 -> e_3 -> e_1.
  Matrix cycle(4, 4);
  cycle(1, 0) = 1;
  cycle(2, 1) = 1;
  cycle(0, 2) = 1;
  cycle(3, 3) = 1;
  AverageTarget target;
  target.k = 3;
  target.description = "conv(e_4, (e_1+e_2)/2, (e_2+e_3)/2, (e_3+e_1)/2)";
  target.simplex = SimplexGeom({midpoint(3, 0, 1), midpoint(3, 1, 2), midpoint(3, 2, 0), BaryPoint::vertex(3, 3)});
  return finish(3, 2, {PLMap::linear(3, Matrix::identity(4)), PLMap::linear(3, cycle)}, std::move(target));
}

namespace {

std::string point_string(const BaryPoint& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.coords().size(); ++i) os << (i ? ", " : "") << to_string(p[i]);
  os << ")";
  return os.str();
}

void record(VerificationReport& report, CheckResult check) {
  if (!check.passed) report.passed = false;
  report.checks.push_back(std::move(check));
}

// Volume sum plus exact pairwise interior-disjointness.
CheckResult tiling_check(const std::string& name, const std::vector<SimplexGeom>& pieces, const Rational& expected) {
  CheckResult c{name, true, "", std::nullopt};
  Rational total;
  for (const auto& s : pieces) total += relative_volume(s);
  if (total != expected) {
    c.passed = false;
    c.detail = "volumes sum to " + to_string(total) + ", expected " + to_string(expected);
    return c;
  }
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      if (auto p = common_interior_point(pieces[i], pieces[j])) {
        c.passed = false;
        c.detail = "pieces " + std::to_string(i) + " and " + std::to_string(j) + " overlap at " + point_string(*p);
        c.witness = *p;
        return c;
      }
    }
  c.detail = std::to_string(pieces.size()) + " pieces, total volume " + to_string(total);
  return c;
}

template <class Pred>
CheckResult containment_check(const std::string& name, const std::vector<std::vector<BaryPoint>>& vertex_sets, Pred inside) {
  CheckResult c{name, true, "", std::nullopt};
  for (const auto& verts : vertex_sets)
    for (const auto& v : verts) {
      if (!inside(v)) {
        c.passed = false;
        c.detail = "vertex " + point_string(v) + " lies outside";
        c.witness = v;
        return c;
      }
    }
  return c;
}

// Vertices might collapse in a corrupted certificate; report instead of throwing.
std::optional<SimplexGeom> try_image(const AffinePiece& piece) {
  try {
    return piece.image();
  } catch (const Error&) {
    return std::nullopt;
  }
}

int functional_resolution(int k) {
  switch (k) {
    case 1: case 2: return 12;
    case 3: return 6;
    default: return 4;
  }
}

}  // namespace

VerificationReport verify_certificate(const AverageabilityCertificate& cert, const FunctionalCheckOptions& options) {
  VerificationReport report;
  const int k = cert.k;
  auto in_t = [](const BaryPoint& p) { return p.in_standard_simplex(); };

  record(report, {"map count", cert.maps.size() == static_cast<std::size_t>(cert.m),
                  std::to_string(cert.maps.size()) + " maps for m = " + std::to_string(cert.m), std::nullopt});

  for (std::size_t i = 0; i < cert.maps.size(); ++i) {
    const std::string tag = "H_" + std::to_string(i + 1);
    const auto& map = cert.maps[i];
    std::vector<SimplexGeom> domains;
    std::vector<std::vector<BaryPoint>> domain_vertices;
    std::vector<std::vector<BaryPoint>> image_vertices;
    std::vector<SimplexGeom> images;
    bool images_ok = true;
    CheckResult unit{tag + " unit jacobian", true, "", std::nullopt};
    for (const auto& piece : map.pieces) {
      domains.push_back(piece.domain);
      domain_vertices.push_back(piece.domain.vertices());
      image_vertices.push_back(piece.image_vertices());
      if (auto img = try_image(piece)) images.push_back(*img); else images_ok = false;
      const Rational jac = abs(piece.jacobian());
      if (jac != 1 && unit.passed) {
        unit.passed = false;
        unit.detail = "piece jacobian " + to_string(jac);
        unit.witness = piece.domain.vertex(0);
      }
    }
    record(report, containment_check(tag + " domains inside T", domain_vertices, in_t));
    record(report, tiling_check(tag + " domains tile T", domains, 1));
    record(report, unit);
    record(report, containment_check(tag + " images inside T", image_vertices, in_t));
    if (images_ok) {
      record(report, tiling_check(tag + " images tile T", images, 1));
    } else {
      record(report, {tag + " images tile T", false, "an image piece is degenerate", std::nullopt});
    }
  }

  const Rational target_volume = cert.target.relative_volume();
  std::vector<AffinePiece> average;
  try {
    average = average_map(cert.maps);
  } catch (const Error& e) {
    record(report, {"average map", false, e.what(), std::nullopt});
    return report;
  }

  bool stored_match = average.size() == cert.average_pieces.size();
  for (std::size_t i = 0; stored_match && i < average.size(); ++i) {
    stored_match = average[i].linear == cert.average_pieces[i].linear && average[i].offset == cert.average_pieces[i].offset;
  }
  record(report, {"stored average matches maps", stored_match, "", std::nullopt});

  CheckResult jac{"average jacobian = |S|/|T|", true, "", std::nullopt};
  if (cert.jacobian != target_volume) {
    jac.passed = false;
    jac.detail = "recorded jacobian " + to_string(cert.jacobian) + " vs |S|/|T| = " + to_string(target_volume);
  }
  for (const auto& piece : average) {
    const Rational j = abs(piece.jacobian());
    if (j != target_volume && jac.passed) {
      jac.passed = false;
      jac.detail = "piece jacobian " + to_string(j) + " vs |S|/|T| = " + to_string(target_volume);
      jac.witness = piece.domain.vertex(0);
    }
  }
  if (jac.passed) jac.detail = to_string(target_volume);
  record(report, jac);

  std::vector<std::vector<BaryPoint>> avg_vertices;
  std::vector<SimplexGeom> avg_images;
  bool avg_ok = true;
  for (const auto& piece : average) {
    avg_vertices.push_back(piece.image_vertices());
    if (auto img = try_image(piece)) avg_images.push_back(*img); else avg_ok = false;
  }
  record(report, containment_check("average images inside S", avg_vertices,
                                   [&](const BaryPoint& p) { return cert.target.contains(p); }));
  if (avg_ok) {
    record(report, tiling_check("average images tile S", avg_images, target_volume));
  } else {
    record(report, {"average images tile S", false, "an image piece is degenerate", std::nullopt});
  }

  if (avg_ok) {
    SplitMix64 rng(options.seed);
    CheckResult probe{"random-point overlap probe", true, "", std::nullopt};
    for (int t = 0; t < options.random_points && probe.passed; ++t) {
      const BaryPoint p = random_point(k, rng);
      int hits = 0;
      for (const auto& s : avg_images) hits += contains_interior(s, p) ? 1 : 0;
      if (hits > 1) {
        probe.passed = false;
        probe.detail = std::to_string(hits) + " image pieces contain " + point_string(p);
        probe.witness = p;
      }
    }
    if (probe.passed) probe.detail = std::to_string(options.random_points) + " points";
    record(report, probe);
  }

  // Integral inequality with equal-weight quadrature: the mean of f^{*m}
  // over lattice points of S should dominate the mean of f over T.
  CheckResult functional{"functional inequality", true, "", std::nullopt};
  const int resolution = functional_resolution(k);
  for (int t = 0; t < options.trials && functional.passed; ++t) {
    const double roughness = 0.25 + 0.75 * static_cast<double>(t % 4) / 3.0;
    const SampledFunction f = make_random(k, resolution, options.seed + static_cast<std::uint64_t>(t), roughness);
    const SampledFunction conv = sup_convolve_n(f, cert.m);
    Rational s_sum;
    long s_count = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (cert.target.contains(f.lattice().point(i))) {
        s_sum += conv[i];
        ++s_count;
      }
    }
    if (s_count == 0) {
      functional.passed = false;
      functional.detail = "no lattice points in S at resolution " + std::to_string(resolution);
      break;
    }
    const Rational lhs = s_sum / s_count;
    const Rational rhs = lattice_mean(f);
    const Rational tol = options.tol_rel * abs(rhs) + options.tol_abs;
    if (lhs < rhs - tol) {
      functional.passed = false;
      functional.detail = "trial " + std::to_string(t) + ": mean over S " + to_string(lhs) + " < mean over T " + to_string(rhs);
    }
  }
  if (functional.passed) functional.detail = std::to_string(options.trials) + " random functions at N = " + std::to_string(resolution);
  record(report, functional);
  return report;
}

}  // namespace supconv
