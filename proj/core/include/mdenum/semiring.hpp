#pragma once

#include <gmpxx.h>

#include <utility>

#include "mdenum/poly.hpp"

namespace mdenum {

/// Size limits enforced before any 2^m-sized allocation.
struct Limits {
  int max_numeric_bits = 26;
  int max_symbolic_bits = 14;
  int max_dense_bits = 8;
  int max_enumeration_cells = 20;
};

/// Entries are exact naturals; tile weights are naturals substituted up front.
struct NumericSemiring {
  using value_type = Natural;
  using weight_type = Natural;

  static constexpr const char* name = "numeric";

  static value_type zero() { return 0; }
  static value_type one() { return 1; }
  static weight_type weight_zero() { return 0; }
  static weight_type weight_one() { return 1; }
  static bool is_zero(const value_type& a) { return a == 0; }
  static bool is_zero_weight(const weight_type& w) { return w == 0; }
  static int max_bits(const Limits& limits) { return limits.max_numeric_bits; }

  /// acc += a * w
  static void add_scaled(value_type& acc, const value_type& a, const weight_type& w) {
    if (w == 1) {
      acc += a;
    } else if (w != 0) {
      mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), w.get_mpz_t());
    }
  }
  static void set_zero(value_type& a) { a = 0; }
};

/// Entries are MDPolynomials; tile weights are the atoms v, x, y, 1, 0.
struct SymbolicSemiring {
  using value_type = MDPolynomial;
  using weight_type = Atom;

  static constexpr const char* name = "symbolic";

  static value_type zero() { return {}; }
  static value_type one() { return MDPolynomial::one(); }
  static weight_type weight_zero() { return Atom::Zero; }
  static weight_type weight_one() { return Atom::One; }
  static bool is_zero(const value_type& a) { return a.is_zero(); }
  static bool is_zero_weight(const weight_type& w) { return w == Atom::Zero; }
  static int max_bits(const Limits& limits) { return limits.max_symbolic_bits; }

  static void add_scaled(value_type& acc, const value_type& a, const weight_type& w) { acc.add_scaled(a, w); }
  static void set_zero(value_type& a) { a = MDPolynomial{}; }
};

/// Monomer, x-dimer and y-dimer activities in a given semiring.
template <class S>
struct Weights {
  typename S::weight_type v;
  typename S::weight_type x;
  typename S::weight_type y;
};

inline Weights<SymbolicSemiring> symbolic_weights() { return {Atom::V, Atom::X, Atom::Y}; }

inline Weights<NumericSemiring> numeric_weights(Natural v, Natural x, Natural y) {
  return {std::move(v), std::move(x), std::move(y)};
}

/// v = 0, x = y = 1: only dimers.
inline Weights<NumericSemiring> pure_dimer_weights() { return numeric_weights(0, 1, 1); }

}  // namespace mdenum
