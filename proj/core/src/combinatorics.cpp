#include "supconv/combinatorics.hpp"

#include "supconv/error.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace supconv {

namespace {

constexpr int kMaxEulerianOrder = 20;

// Built once; read-only afterwards, so concurrent readers are fine.
const std::vector<std::vector<Integer>>& eulerian_table() {
  static const std::vector<std::vector<Integer>> table = [] {
    std::vector<std::vector<Integer>> t(kMaxEulerianOrder + 1);
    t[1] = {1};
    for (int k = 2; k <= kMaxEulerianOrder; ++k) {
      t[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(k), 0);
      const auto& prev = t[static_cast<std::size_t>(k - 1)];
      for (int l = 0; l < k; ++l) {
        Integer a = l < k - 1 ? prev[static_cast<std::size_t>(l)] * (l + 1) : Integer(0);
        Integer b = l >= 1 ? prev[static_cast<std::size_t>(l - 1)] * (k - l) : Integer(0);
        t[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)] = a + b;
      }
    }
    return t;
  }();
  return table;
}

Integer ipow(long base, unsigned exp) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exp);
  return out;
}

void check_kn(int k, int n) {
  require(k >= 1 && k <= kMaxEulerianOrder, ErrorKind::InvalidInput, "k out of range");
  require(n >= 1, ErrorKind::InvalidInput, "n must be >= 1");
}

}  // namespace

Integer eulerian(int k, int descents) {
  require(k >= 1 && k <= kMaxEulerianOrder, ErrorKind::InvalidInput,
          "eulerian: k must lie in [1, " + std::to_string(kMaxEulerianOrder) + "]");
  require(descents >= 0 && descents <= k - 1, ErrorKind::InvalidInput,
          "eulerian: descent count out of range for k=" + std::to_string(k));
  return eulerian_table()[static_cast<std::size_t>(k)][static_cast<std::size_t>(descents)];
}

Rational sharp_constant_closed_form(int k, int n) {
  check_kn(k, n);
  switch (k) {
    case 1: return make_rational(n - 1, n);
    case 2: return make_rational((2L * n - 1) * (n - 1), 2L * n * n);
    case 3: return make_rational(static_cast<long>(n - 1) * (n - 1), static_cast<long>(n) * n);
    default: fail(ErrorKind::OutOfDomain, "sharp closed form is only known for k <= 3");
  }
}

Rational constant_hypersimplex_sum(int k, int n) {
  check_kn(k, n);
  Rational sum;
  for (int m = 1; m <= k; ++m) {
    const Integer cells = binomial(n + k - m, k);
    if (cells == 0) continue;
    sum += make_rational(n - m, n) * Rational(cells * eulerian(k, m - 1));
  }
  return sum / Rational(ipow(n, static_cast<unsigned>(k)));
}

Rational constant_power_sum(int k, int n) {
  check_kn(k, n);
  Integer powers;
  for (int j = 1; j < n; ++j) powers += ipow(j, static_cast<unsigned>(k));
  return make_rational(Integer(k + 1) * powers, ipow(n, static_cast<unsigned>(k + 1)));
}

Rational asymptotic_bound(int k, int n) {
  check_kn(k, n);
  require(n >= k + 1, ErrorKind::OutOfDomain, "asymptotic bound requires n >= k+1");
  return 1 - make_rational(binomial(n, k) * ipow(k, static_cast<unsigned>(k + 1)),
                           ipow(n, static_cast<unsigned>(k + 1)));
}

ConstantReport constant_c(int k, int n) {
  check_kn(k, n);
  ConstantReport r;
  r.k = k;
  r.n = n;
  r.c_hypersimplex_sum = constant_hypersimplex_sum(k, n);
  r.c_power_sum = constant_power_sum(k, n);
  if (k <= 3) r.c_sharp = sharp_constant_closed_form(k, n);
  if (n >= k + 1) r.asymptotic_lower = asymptotic_bound(k, n);

  if (r.c_hypersimplex_sum != r.c_power_sum)
    throw std::logic_error("c_{k,n}: hypersimplex sum and power sum disagree");
  if (r.c_sharp && *r.c_sharp != r.c_hypersimplex_sum)
    throw std::logic_error("c_{k,n}: sharp closed form disagrees with hypersimplex sum");
  if (r.asymptotic_lower && *r.asymptotic_lower > r.c_hypersimplex_sum)
    throw std::logic_error("c_{k,n}: asymptotic lower bound exceeds the constant");
  return r;
}

bool worpitzky_check(int k, int n) {
  check_kn(k, n);
  Integer sum;
  for (int m = 1; m <= k; ++m) sum += binomial(n + k - m, k) * eulerian(k, m - 1);
  return sum == ipow(n, static_cast<unsigned>(k));
}

Rational pair_constant(int k) {
  require(k >= 1, ErrorKind::InvalidInput, "k must be >= 1");
  return make_rational(Integer(k + 1), ipow(2, static_cast<unsigned>(k + 1)));
}

}  // namespace supconv
