#include "supconv/averageable.hpp"
#include "supconv/error.hpp"

#include <doctest.h>

using namespace supconv;

namespace {

FunctionalCheckOptions quick() {
  FunctionalCheckOptions o;
  o.trials = 3;
  o.random_points = 50;
  return o;
}

std::string failures(const VerificationReport& r) {
  std::string out;
  for (const auto& c : r.checks)
    if (!c.passed) out += c.name + ": " + c.detail + "\n";
  return out;
}

}  // namespace

TEST_CASE("constructed certificates verify") {
  const std::pair<int, int> cases[] = {{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 4}};
  for (const auto& [k, m] : cases) {
    CAPTURE(k);
    CAPTURE(m);
    const AverageabilityCertificate cert = build_maps(k, m);
    const VerificationReport r = verify_certificate(cert, quick());
    INFO(failures(r));
    CHECK(r.passed);
    CHECK(cert.jacobian == cert.target.relative_volume());
  }
}

TEST_CASE("jacobians") {
  CHECK(build_maps(1, 1).jacobian == 1);
  CHECK(build_maps(2, 2).jacobian == make_rational(1, 4));
  const AverageabilityCertificate octa = build_maps(3, 2);
  CHECK(octa.jacobian == make_rational(1, 2));
  REQUIRE(octa.image_pieces.size() == 4);
  for (const auto& s : octa.image_pieces) CHECK(relative_volume(s) == make_rational(1, 8));
  // Each image is the cone of a square edge over the two diagonal midpoints.
  const BaryPoint mid13(RationalVector{make_rational(1, 2), 0, make_rational(1, 2), 0});
  const BaryPoint mid24(RationalVector{0, make_rational(1, 2), 0, make_rational(1, 2)});
  for (const auto& s : octa.image_pieces) {
    const auto& v = s.vertices();
    CHECK(std::find(v.begin(), v.end(), mid13) != v.end());
    CHECK(std::find(v.begin(), v.end(), mid24) != v.end());
  }
  for (const auto& map : octa.maps)
    for (const auto& piece : map.pieces) CHECK(abs(piece.jacobian()) == 1);
}

TEST_CASE("medial example") {
  const AverageabilityCertificate cert = build_medial_example();
  CHECK(cert.jacobian == make_rational(1, 4));
  REQUIRE(cert.maps.size() == 2);
  REQUIRE(cert.maps[1].pieces.size() == 1);
  CHECK(abs(cert.maps[1].pieces[0].jacobian()) == 1);
  const auto images = cert.average_pieces.front().image_vertices();
  const Rational h = make_rational(1, 2);
  const std::vector<BaryPoint> expected{BaryPoint(RationalVector{h, h, 0, 0}), BaryPoint(RationalVector{0, h, h, 0}),
                                        BaryPoint(RationalVector{h, 0, h, 0}), BaryPoint::vertex(3, 3)};
  for (const auto& p : expected) CHECK(std::find(images.begin(), images.end(), p) != images.end());
  const VerificationReport r = verify_certificate(cert, quick());
  INFO(failures(r));
  CHECK(r.passed);
}

TEST_CASE("corrupted maps are rejected with a witness") {
  AverageabilityCertificate cert = build_maps(3, 2);
  auto& piece = cert.maps[1].pieces[0];
  piece.offset[0] += make_rational(1, 16);
  piece.offset[1] -= make_rational(1, 16);
  cert.average_pieces = average_map(cert.maps);
  cert.image_pieces.clear();
  for (const auto& p : cert.average_pieces) cert.image_pieces.push_back(p.image());
  const VerificationReport r = verify_certificate(cert, quick());
  CHECK_FALSE(r.passed);
  bool witnessed = false;
  for (const auto& c : r.checks) witnessed = witnessed || (!c.passed && c.witness.has_value());
  CHECK(witnessed);
}

TEST_CASE("unsupported pairs") {
  CHECK_THROWS_AS(build_maps(4, 2), Error);
  CHECK_THROWS_AS(build_maps(2, 3), Error);
}
