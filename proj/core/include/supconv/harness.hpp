#pragma once

#include "supconv/sampled_function.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace supconv {

struct Tolerance {
  Rational rel = make_rational(1, 20);
  Rational abs = make_rational(1, 1000000000);
};

enum class Verdict { Pass, PassDegenerate, Fail };

std::string to_string(Verdict verdict);

struct Provenance {
  std::string input_hash;  // FNV-1a of the canonical function file(s)
  std::optional<std::uint64_t> seed;
};

/// Integrals use equal weights over lattice points with |T| = 1. Every
/// quantity except the pass threshold is exact.
struct InequalityReport {
  std::string mode;  // "n-fold" or "pair"
  int k = 0;
  int n = 0;  // number of summands; 2 in pair mode
  int resolution = 0;
  Rational lhs;
  Rational rhs_raw;
  Rational constant;
  bool conjectural = false;
  std::optional<Rational> ratio;  // lhs / rhs_raw when rhs_raw > 0
  Tolerance tolerance;
  Rational threshold;  // constant * rhs_raw - (tol.rel * rhs_raw + tol.abs)
  Verdict verdict = Verdict::Fail;
  Provenance provenance;

  bool passed() const { return verdict != Verdict::Fail; }
};

/// mean(f^{*n} - f) >= c_{k,n} * mean(co f - f) up to tolerance. Uses the
/// conjectural constant for k >= 4.
InequalityReport verify_n_fold(const SampledFunction& f, int n, const Tolerance& tol = {});

/// mean(f*g - (f+g)/2) >= (k+1)/2^{k+1} * mean(co f - f) up to tolerance.
InequalityReport verify_pair(const SampledFunction& f, const SampledFunction& g, const Tolerance& tol = {});

std::string report_json(const InequalityReport& report);
std::string report_csv_header();
std::string report_csv_row(const InequalityReport& report);

/// Integrals weighted by the cells of the subdivision of T at scale 1/n:
/// every integrand is read at one lattice point interior to each cell. Exact
/// whenever the integrands are constant on open cells, as they are for the
/// vertex indicator. Requires N to be a multiple of n with N/n >= k+1.
struct CellAccounting {
  Rational lhs;
  Rational rhs;
  std::optional<Rational> ratio;
  std::size_t cells = 0;
};

CellAccounting cell_accounting_n_fold(const SampledFunction& f, int n);
CellAccounting cell_accounting_pair(const SampledFunction& f, const SampledFunction& g);

/// A lattice point of resolution N interior to the cell; nullopt when the
/// lattice is too coarse.
std::optional<Composition> interior_lattice_point(int k, int n, int resolution, int m, const Composition& v);

}  // namespace supconv
