#include "supconv/harness.hpp"

#include "supconv/combinatorics.hpp"
#include "supconv/envelope.hpp"
#include "supconv/error.hpp"
#include "supconv/function_io.hpp"
#include "supconv/subdivision.hpp"
#include "supconv/sup_convolution.hpp"

#include <json.hpp>

#include <sstream>

namespace supconv {

namespace {

void judge(InequalityReport& r) {
  const Rational slack = r.tolerance.rel * r.rhs_raw + r.tolerance.abs;
  r.threshold = r.constant * r.rhs_raw - slack;
  if (r.rhs_raw == 0) {
    r.verdict = r.lhs >= 0 ? Verdict::PassDegenerate : Verdict::Fail;
    return;
  }
  r.ratio = r.lhs / r.rhs_raw;
  r.verdict = r.lhs >= r.threshold ? Verdict::Pass : Verdict::Fail;
}

void check_tolerance(const Tolerance& tol) {
  require(tol.rel >= 0 && tol.abs >= 0, ErrorKind::InvalidInput, "tolerances must be non-negative");
}

std::string ratio_text(const std::optional<Rational>& r) { return r ? to_string(*r) : ""; }

CellAccounting accumulate(int n, const SampledFunction& f, const SampledFunction& upper,
                          const SampledFunction& baseline, const SampledFunction& envelope) {
  const int k = f.dim();
  const int resolution = f.resolution();
  require(resolution % n == 0, ErrorKind::InvalidInput, "cell accounting needs n to divide N");
  CellAccounting out;
  for (const auto& cell : subdivide(k, n)) {
    const auto point = interior_lattice_point(k, n, resolution, cell.m, cell.v);
    require(point.has_value(), ErrorKind::InvalidInput, "lattice too coarse for interior cell points");
    const std::size_t i = f.lattice().index_of(*point);
    const Rational vol = cell_relative_volume(k, n, cell);
    out.lhs += vol * (upper[i] - baseline[i]);
    out.rhs += vol * (envelope[i] - f[i]);
    ++out.cells;
  }
  if (out.rhs != 0) out.ratio = out.lhs / out.rhs;
  return out;
}

}  // namespace

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Pass:
      return "pass";
    case Verdict::PassDegenerate:
      return "pass-degenerate";
    case Verdict::Fail:
      return "fail";
  }
  return "fail";
}

InequalityReport verify_n_fold(const SampledFunction& f, int n, const Tolerance& tol) {
  check_dimension(f.dim());
  require(n >= 1, ErrorKind::InvalidInput, "n must be >= 1");
  check_tolerance(tol);
  const SampledFunction g = normalize_to_simplex_form(f);
  const SampledFunction conv = sup_convolve_n(g, n);
  const SampledFunction env = concave_envelope(g).envelope;

  InequalityReport r;
  r.mode = "n-fold";
  r.k = f.dim();
  r.n = n;
  r.resolution = f.resolution();
  r.lhs = lattice_mean(conv - g);
  r.rhs_raw = lattice_mean(env - g);
  const ConstantReport c = constant_c(r.k, n);
  r.constant = c.value();
  r.conjectural = c.conjectural();
  r.tolerance = tol;
  r.provenance.input_hash = hex64(fnv1a64(format_function(f)));
  judge(r);
  return r;
}

InequalityReport verify_pair(const SampledFunction& f, const SampledFunction& g, const Tolerance& tol) {
  require(f.lattice() == g.lattice(), ErrorKind::InvalidInput, "f and g must share a lattice");
  check_dimension(f.dim());
  check_tolerance(tol);
  const SampledFunction conv = sup_convolve_pair(f, g);
  const SampledFunction env = concave_envelope(f).envelope;

  InequalityReport r;
  r.mode = "pair";
  r.k = f.dim();
  r.n = 2;
  r.resolution = f.resolution();
  r.lhs = lattice_mean(conv - (f + g).scaled(make_rational(1, 2)));
  r.rhs_raw = lattice_mean(env - f);
  r.constant = pair_constant(r.k);
  r.conjectural = false;
  r.tolerance = tol;
  r.provenance.input_hash = hex64(fnv1a64(format_function(f) + format_function(g)));
  judge(r);
  return r;
}

std::string report_json(const InequalityReport& r) {
  nlohmann::ordered_json j;
  j["mode"] = r.mode;
  j["k"] = r.k;
  j["n"] = r.n;
  j["N"] = r.resolution;
  j["lhs"] = to_string(r.lhs);
  j["rhs_raw"] = to_string(r.rhs_raw);
  j["constant"] = to_string(r.constant);
  j["constant_kind"] = r.conjectural ? "conjectural" : "sharp";
  j["ratio"] = r.ratio ? nlohmann::ordered_json(to_string(*r.ratio)) : nlohmann::ordered_json(nullptr);
  j["ratio_approx"] = r.ratio ? nlohmann::ordered_json(to_double(*r.ratio)) : nlohmann::ordered_json(nullptr);
  j["tol_rel"] = to_string(r.tolerance.rel);
  j["tol_abs"] = to_string(r.tolerance.abs);
  j["threshold"] = to_string(r.threshold);
  j["verdict"] = to_string(r.verdict);
  j["provenance"]["input_hash"] = r.provenance.input_hash;
  j["provenance"]["seed"] =
      r.provenance.seed ? nlohmann::ordered_json(*r.provenance.seed) : nlohmann::ordered_json(nullptr);
  return j.dump(2) + "\n";
}

std::string report_csv_header() {
  return "mode,k,n,N,lhs,rhs_raw,constant,constant_kind,ratio,tol_rel,tol_abs,threshold,verdict,input_hash,seed\n";
}

std::string report_csv_row(const InequalityReport& r) {
  std::ostringstream out;
  out << r.mode << ',' << r.k << ',' << r.n << ',' << r.resolution << ',' << to_string(r.lhs) << ','
      << to_string(r.rhs_raw) << ',' << to_string(r.constant) << ',' << (r.conjectural ? "conjectural" : "sharp")
      << ',' << ratio_text(r.ratio) << ',' << to_string(r.tolerance.rel) << ',' << to_string(r.tolerance.abs) << ','
      << to_string(r.threshold) << ',' << to_string(r.verdict) << ',' << r.provenance.input_hash << ',';
  if (r.provenance.seed) out << *r.provenance.seed;
  out << '\n';
  return out.str();
}

std::optional<Composition> interior_lattice_point(int k, int n, int resolution, int m, const Composition& v) {
  if (resolution % n != 0) return std::nullopt;
  const int q = resolution / n;
  const int parts = k + 1;
  // n x - v = t / q with every t_j in [1, q-1] and sum t = m q.
  long remaining = static_cast<long>(m) * q - parts;
  if (q < 2 || remaining < 0 || remaining > static_cast<long>(parts) * (q - 2)) return std::nullopt;
  Composition out(static_cast<std::size_t>(parts));
  for (std::size_t j = 0; j < out.size(); ++j) {
    const long extra = std::min<long>(remaining, q - 2);
    remaining -= extra;
    out[j] = q * v[j] + 1 + static_cast<int>(extra);
  }
  return out;
}

CellAccounting cell_accounting_n_fold(const SampledFunction& f, int n) {
  check_dimension(f.dim());
  require(n >= 1, ErrorKind::InvalidInput, "n must be >= 1");
  const SampledFunction g = normalize_to_simplex_form(f);
  return accumulate(n, g, sup_convolve_n(g, n), g, concave_envelope(g).envelope);
}

CellAccounting cell_accounting_pair(const SampledFunction& f, const SampledFunction& g) {
  require(f.lattice() == g.lattice(), ErrorKind::InvalidInput, "f and g must share a lattice");
  check_dimension(f.dim());
  return accumulate(2, f, sup_convolve_pair(f, g), (f + g).scaled(make_rational(1, 2)),
                    concave_envelope(f).envelope);
}

}  // namespace supconv
