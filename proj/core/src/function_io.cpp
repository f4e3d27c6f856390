#include "supconv/function_io.hpp"

#include "supconv/error.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace supconv {

namespace {

using nlohmann::json;

std::string integer_token(const Integer& value) {
  if (value.fits_slong_p()) return value.get_str();
  return "\"" + value.get_str() + "\"";
}

Integer integer_from(const json& node, const std::string& where) {
  if (node.is_number_integer()) return Integer(node.get<long>());
  if (node.is_string()) {
    Integer out;
    if (out.set_str(node.get<std::string>(), 10) != 0) fail(ErrorKind::MalformedFile, where + ": not an integer");
    return out;
  }
  fail(ErrorKind::MalformedFile, where + ": expected an integer or a decimal string");
}

int small_int(const json& node, const std::string& where) {
  if (!node.is_number_integer()) fail(ErrorKind::MalformedFile, where + ": expected an integer");
  const auto v = node.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    fail(ErrorKind::MalformedFile, where + ": integer out of range");
  return static_cast<int>(v);
}

}  // namespace

std::string format_function(const SampledFunction& f) {
  const auto& lat = f.lattice();
  std::ostringstream out;
  out << "{\"k\": " << lat.dim() << ", \"N\": " << lat.resolution() << ", \"values\": [\n";
  for (std::size_t i = 0; i < lat.size(); ++i) {
    out << "  [";
    for (int c : lat.composition(i)) out << c << ", ";
    out << integer_token(f[i].get_num()) << ", " << integer_token(f[i].get_den()) << "]";
    out << (i + 1 < lat.size() ? ",\n" : "\n");
  }
  out << "]}\n";
  return out.str();
}

SampledFunction parse_function(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(ErrorKind::MalformedFile, std::string("function file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("k") || !doc.contains("N") || !doc.contains("values"))
    fail(ErrorKind::MalformedFile, "function file needs keys k, N and values");
  const int k = small_int(doc["k"], "k");
  const int resolution = small_int(doc["N"], "N");
  if (k < 1 || k > kMaxDimension) fail(ErrorKind::MalformedFile, "k out of range [1, 6]");
  if (resolution < 1) fail(ErrorKind::MalformedFile, "N must be positive");
  const json& values = doc["values"];
  if (!values.is_array()) fail(ErrorKind::MalformedFile, "values must be an array");

  BaryLattice lat(k, resolution);
  if (values.size() != lat.size())
    fail(ErrorKind::MalformedFile, "expected " + std::to_string(lat.size()) + " entries, found " +
                                       std::to_string(values.size()));
  RationalVector out(lat.size());
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const json& entry = values[i];
    const std::string where = "entry " + std::to_string(i);
    if (!entry.is_array() || entry.size() != static_cast<std::size_t>(k) + 3)
      fail(ErrorKind::MalformedFile, where + ": expected k+3 numbers");
    Composition c(static_cast<std::size_t>(k) + 1);
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = small_int(entry[j], where);
    if (c != lat.composition(i))
      fail(ErrorKind::MalformedFile, where + ": lattice point missing, duplicated or out of order");
    const Integer num = integer_from(entry[c.size()], where);
    const Integer den = integer_from(entry[c.size() + 1], where);
    if (den == 0) fail(ErrorKind::MalformedFile, where + ": zero denominator");
    out[i] = make_rational(num, den);
  }
  return SampledFunction(std::move(lat), std::move(out));
}

SampledFunction read_function_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::MalformedFile, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_function(buf.str());
}

void write_function_file(const std::filesystem::path& path, const SampledFunction& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::InvalidInput, "cannot write " + path.string());
  out << format_function(f);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

}  // namespace supconv
