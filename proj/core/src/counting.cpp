#include "mdenum/counting.hpp"

#include <stdexcept>
#include <string>

#include "mdenum/bar_state.hpp"
#include "mdenum/errors.hpp"
#include "mdenum/transfer.hpp"

namespace mdenum {

namespace {

void check_dims(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("grid dimensions must be >= 1, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
  }
}

std::vector<NumericOperator> row_operators(int m, int n, const std::vector<Site>& fixed, const Limits& limits) {
  std::vector<NumericOperator> ops;
  ops.reserve(static_cast<std::size_t>(n));
  for (int row = 1; row <= n; ++row) ops.push_back(build_row_operator(m, n, row, fixed, limits));
  return ops;
}

Natural lcm(const Natural& a, const Natural& b) {
  Natural out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace

MDPolynomial partition_function(int m, int n, const Limits& limits) {
  check_dims(m, n);
  const auto op = build_bar_operator(m, symbolic_weights(), limits);
  MDPolynomial g = sweep_power(op, n, 1, 1);
  if (g.grade() != m * n || !g.well_formed()) {
    throw CrossCheckError("partition polynomial for " + std::to_string(m) + "x" + std::to_string(n) +
                          " is not homogeneous of grade mn");
  }
  return g;
}

Rational partition_value(int m, int n, const Rational& v, const Rational& x, const Rational& y, const Limits& limits) {
  check_dims(m, n);
  if (v < 0 || x < 0 || y < 0) throw std::invalid_argument("activities must be nonnegative");
  // With D = lcm of the denominators, v = V/D and x = X/D^2, y = Y/D^2 for
  // integers V, X, Y; every term then has denominator D^(nv + 2nx + 2ny) = D^(mn).
  const Natural d = lcm(lcm(v.get_den(), x.get_den()), y.get_den());
  const Rational vv = v * Rational(d);
  const Rational xx = x * Rational(d * d);
  const Rational yy = y * Rational(d * d);
  const auto op = build_bar_operator(m, numeric_weights(vv.get_num(), xx.get_num(), yy.get_num()), limits);
  const Natural scaled = sweep_power(op, n, 1, 1);
  Natural denom;
  mpz_pow_ui(denom.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(m) * static_cast<unsigned long>(n));
  Rational out(scaled, denom);
  out.canonicalize();
  return out;
}

UniPolynomial matching_polynomial(int m, int n, const Limits& limits) {
  const MDPolynomial g = partition_function(m, n, limits);
  UniPolynomial out;
  for (const auto& t : g.terms()) {
    const auto k = static_cast<std::size_t>(t.nx + t.ny);
    if (out.coeffs.size() <= k) out.coeffs.resize(k + 1, 0);
    out.coeffs[k] += t.coeff;
  }
  return out;
}

Natural hosoya_index(int m, int n, const Limits& limits) {
  check_dims(m, n);
  return sweep_power(build_bar_operator(m, numeric_weights(1, 1, 1), limits), n, 1, 1);
}

Natural pure_dimer_count(int m, int n, const Natural& x0, const Natural& y0, const Limits& limits) {
  check_dims(m, n);
  if (x0 < 0 || y0 < 0) throw std::invalid_argument("dimer activities must be nonnegative");
  const auto op = build_bar_operator(m, numeric_weights(0, x0, y0), limits);
  if ((m * n) % 2 != 0) return 0;
  return sweep_power(op, n, 1, 1);
}

std::vector<Natural> corner_series(int m, int max_n, const Weights<NumericSemiring>& weights, const Limits& limits) {
  check_dims(m, max_n);
  const auto op = build_bar_operator(m, weights, limits);
  std::vector<Natural> out;
  out.reserve(static_cast<std::size_t>(max_n));
  sweep_power_each(op, max_n, 1, [&](int, const std::vector<Natural>& vec) { out.push_back(vec[0]); });
  return out;
}

SingleMonomerResult single_boundary_monomer_count(int m, int n, bool verify_entries, const Limits& limits) {
  check_dims(m, n);
  if (m % 2 == 0 || n % 2 == 0) {
    throw std::invalid_argument("single boundary monomer coverings need odd m and n, got m=" + std::to_string(m) +
                                ", n=" + std::to_string(n));
  }
  const auto op = build_bar_operator(m, pure_dimer_weights(), limits);
  SingleMonomerResult result;
  result.count = sweep_power(op, n, 2, 1);
  if (!verify_entries) return result;

  std::vector<Natural> from_trivial;
  sweep_power_each(op, n, 1, [&](int i, const std::vector<Natural>& vec) {
    if (i == n) from_trivial = vec;
  });
  for (int k = 0; k <= m - 1; k += 2) {
    const std::uint64_t idx = (std::uint64_t{1} << k) + 1;
    result.entries.push_back({idx, 1, sweep_power(op, n, idx, 1)});
    result.entries.push_back({1, idx, from_trivial[idx - 1]});
  }
  for (const auto& e : result.entries) {
    if (e.value != result.count) {
      throw CrossCheckError("entry (" + std::to_string(e.start) + "," + std::to_string(e.end) + ") = " +
                            e.value.get_str() + " differs from the (2,1)-entry " + result.count.get_str());
    }
  }
  return result;
}

Natural fixed_monomer_count(int m, int n, const std::vector<Site>& fixed, const Limits& limits) {
  check_dims(m, n);
  return sweep(row_operators(m, n, fixed, limits), 1, 1);
}

Natural aztec_octagon_count(const RegionSpec& region, const Limits& limits) {
  if (!region.sites.empty()) throw std::invalid_argument("aztec_octagon_count takes no holes");
  region.validate();
  const auto op = build_bar_operator(region.m, pure_dimer_weights(), limits);
  const std::uint64_t start = b_index(region.m, region.r, region.s);
  const std::uint64_t end = b_index(region.m, region.q, region.p);
  return sweep_power(op, region.n, start, end);
}

Natural aztec_octagon_holes_count(const RegionSpec& region, const Limits& limits) {
  region.validate();
  const std::uint64_t start = b_index(region.m, region.r, region.s);
  const std::uint64_t end = b_index(region.m, region.q, region.p);
  return sweep(row_operators(region.m, region.n, region.sites, limits), start, end);
}

}  // namespace mdenum
