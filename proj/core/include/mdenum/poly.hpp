#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace mdenum {

using Natural = mpz_class;
using Rational = mpq_class;

/// Multipliers that appear in the bar-state recursions.
enum class Atom { Zero, One, V, X, Y };

/// Homogeneous polynomial in v, x, y with natural coefficients.
///
/// Every term v^nv x^nx y^ny satisfies nv + 2(nx + ny) = grade, so only the
/// (nx, ny) pair is stored and nv is recovered from the grade. Terms are kept
/// sorted by total dimer count ascending, then by nx descending; that is also
/// the canonical print order ("v^4 + 2*v^2*x + 2*v^2*y + x^2 + y^2").
/// The zero polynomial has no terms and adopts the grade of whatever it is
/// added to.
class MDPolynomial {
 public:
  struct Term {
    int nx;
    int ny;
    Natural coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  MDPolynomial() = default;

  static MDPolynomial one();
  static MDPolynomial atom(Atom a);
  /// coeff * v^nv x^nx y^ny
  static MDPolynomial monomial(int nv, int nx, int ny, const Natural& coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  int grade() const { return grade_; }
  const std::vector<Term>& terms() const { return terms_; }

  Natural coefficient(int nv, int nx, int ny) const;
  Natural coefficient_sum() const;

  /// Adds coeff * v^nv x^nx y^ny; the term must match the current grade
  /// unless the polynomial is zero.
  void add_term(int nv, int nx, int ny, const Natural& coeff);

  MDPolynomial& operator+=(const MDPolynomial& other);
  friend MDPolynomial operator+(MDPolynomial a, const MDPolynomial& b) { return a += b; }

  /// this += other * atom, without materializing the product.
  void add_scaled(const MDPolynomial& other, Atom a);

  MDPolynomial times(Atom a) const;

  /// Full product; grades add. Only the dense test oracles need this.
  friend MDPolynomial operator*(const MDPolynomial& a, const MDPolynomial& b);

  Rational eval(const Rational& v, const Rational& x, const Rational& y) const;

  /// Checks the storage invariants (positive coefficients, sorted unique
  /// keys, nonnegative recovered nv).
  bool well_formed() const;

  std::string to_string() const;

  friend bool operator==(const MDPolynomial& a, const MDPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.grade_ == b.grade_ && a.terms_ == b.terms_;
  }

 private:
  int grade_ = 0;
  std::vector<Term> terms_;
};

MDPolynomial poly_add(const MDPolynomial& a, const MDPolynomial& b);
MDPolynomial poly_mul_atom(const MDPolynomial& a, Atom atom);
Rational poly_eval(const MDPolynomial& a, const Rational& v, const Rational& x, const Rational& y);

/// Polynomial in one variable z with natural coefficients, dense by degree.
struct UniPolynomial {
  std::vector<Natural> coeffs;

  std::string to_string(char var = 'z') const;
  friend bool operator==(const UniPolynomial&, const UniPolynomial&) = default;
};

/// Parses "p/q" or "p" into an exact rational; decimals are rejected.
Rational parse_rational(const std::string& text);

}  // namespace mdenum
