#include "mdenum/poly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace mdenum {

namespace {

using Term = MDPolynomial::Term;

// Canonical order: fewer dimers first, then more x-dimers first.
int compare_keys(int nx_a, int ny_a, int nx_b, int ny_b) {
  const int da = nx_a + ny_a;
  const int db = nx_b + ny_b;
  if (da != db) return da < db ? -1 : 1;
  if (nx_a != nx_b) return nx_a > nx_b ? -1 : 1;
  return 0;
}

int atom_grade(Atom a) {
  switch (a) {
    case Atom::V:
      return 1;
    case Atom::X:
    case Atom::Y:
      return 2;
    default:
      return 0;
  }
}

Rational power(const Rational& base, int exponent) {
  Rational result = 1;
  if (exponent == 0) return result;
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  result = Rational(num, den);
  result.canonicalize();
  return result;
}

void append_factor(std::string& out, char var, int exponent) {
  if (exponent == 0) return;
  if (!out.empty()) out += '*';
  out += var;
  if (exponent > 1) out += "^" + std::to_string(exponent);
}

}  // namespace

MDPolynomial MDPolynomial::one() { return monomial(0, 0, 0, 1); }

MDPolynomial MDPolynomial::atom(Atom a) {
  switch (a) {
    case Atom::Zero:
      return {};
    case Atom::One:
      return one();
    case Atom::V:
      return monomial(1, 0, 0);
    case Atom::X:
      return monomial(0, 1, 0);
    case Atom::Y:
      return monomial(0, 0, 1);
  }
  return {};
}

MDPolynomial MDPolynomial::monomial(int nv, int nx, int ny, const Natural& coeff) {
  MDPolynomial p;
  p.add_term(nv, nx, ny, coeff);
  return p;
}

Natural MDPolynomial::coefficient(int nv, int nx, int ny) const {
  if (is_zero() || nv + 2 * (nx + ny) != grade_) return 0;
  for (const auto& t : terms_) {
    if (t.nx == nx && t.ny == ny) return t.coeff;
  }
  return 0;
}

Natural MDPolynomial::coefficient_sum() const {
  Natural sum = 0;
  for (const auto& t : terms_) sum += t.coeff;
  return sum;
}

void MDPolynomial::add_term(int nv, int nx, int ny, const Natural& coeff) {
  if (nv < 0 || nx < 0 || ny < 0) throw std::invalid_argument("negative exponent");
  if (coeff < 0) throw std::invalid_argument("negative coefficient");
  if (coeff == 0) return;
  const int g = nv + 2 * (nx + ny);
  if (is_zero()) {
    grade_ = g;
  } else if (g != grade_) {
    throw std::invalid_argument("term grade " + std::to_string(g) + " does not match polynomial grade " +
                                std::to_string(grade_));
  }
  auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair{nx, ny}, [](const Term& t, const auto& key) {
    return compare_keys(t.nx, t.ny, key.first, key.second) < 0;
  });
  if (it != terms_.end() && it->nx == nx && it->ny == ny) {
    it->coeff += coeff;
  } else {
    terms_.insert(it, Term{nx, ny, coeff});
  }
}

MDPolynomial& MDPolynomial::operator+=(const MDPolynomial& other) {
  add_scaled(other, Atom::One);
  return *this;
}

void MDPolynomial::add_scaled(const MDPolynomial& other, Atom a) {
  if (other.is_zero() || a == Atom::Zero) return;
  const int dx = a == Atom::X ? 1 : 0;
  const int dy = a == Atom::Y ? 1 : 0;
  const int other_grade = other.grade_ + atom_grade(a);
  if (is_zero()) {
    grade_ = other_grade;
    terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_) terms_.push_back(Term{t.nx + dx, t.ny + dy, t.coeff});
    return;
  }
  if (grade_ != other_grade) {
    throw std::invalid_argument("grade mismatch in polynomial sum: " + std::to_string(grade_) + " vs " +
                                std::to_string(other_grade));
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto lhs = terms_.begin();
  auto rhs = other.terms_.begin();
  while (lhs != terms_.end() || rhs != other.terms_.end()) {
    if (rhs == other.terms_.end()) {
      merged.push_back(std::move(*lhs++));
      continue;
    }
    const int nx = rhs->nx + dx;
    const int ny = rhs->ny + dy;
    const int c = lhs == terms_.end() ? 1 : compare_keys(lhs->nx, lhs->ny, nx, ny);
    if (c < 0) {
      merged.push_back(std::move(*lhs++));
    } else if (c > 0) {
      merged.push_back(Term{nx, ny, rhs->coeff});
      ++rhs;
    } else {
      lhs->coeff += rhs->coeff;
      merged.push_back(std::move(*lhs++));
      ++rhs;
    }
  }
  terms_ = std::move(merged);
}

MDPolynomial MDPolynomial::times(Atom a) const {
  MDPolynomial p;
  p.add_scaled(*this, a);
  return p;
}

MDPolynomial operator*(const MDPolynomial& a, const MDPolynomial& b) {
  MDPolynomial product;
  if (a.is_zero() || b.is_zero()) return product;
  const int grade = a.grade_ + b.grade_;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      const int nx = s.nx + t.nx;
      const int ny = s.ny + t.ny;
      product.add_term(grade - 2 * (nx + ny), nx, ny, s.coeff * t.coeff);
    }
  }
  return product;
}

Rational MDPolynomial::eval(const Rational& v, const Rational& x, const Rational& y) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    const int nv = grade_ - 2 * (t.nx + t.ny);
    sum += Rational(t.coeff) * power(v, nv) * power(x, t.nx) * power(y, t.ny);
  }
  sum.canonicalize();
  return sum;
}

bool MDPolynomial::well_formed() const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (t.coeff <= 0 || t.nx < 0 || t.ny < 0 || 2 * (t.nx + t.ny) > grade_) return false;
    if (i > 0 && compare_keys(terms_[i - 1].nx, terms_[i - 1].ny, t.nx, t.ny) >= 0) return false;
  }
  return true;
}

std::string MDPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    std::string monomial;
    append_factor(monomial, 'v', grade_ - 2 * (t.nx + t.ny));
    append_factor(monomial, 'x', t.nx);
    append_factor(monomial, 'y', t.ny);
    std::string term;
    if (monomial.empty()) {
      term = t.coeff.get_str();
    } else if (t.coeff == 1) {
      term = monomial;
    } else {
      term = t.coeff.get_str() + "*" + monomial;
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

MDPolynomial poly_add(const MDPolynomial& a, const MDPolynomial& b) { return a + b; }

MDPolynomial poly_mul_atom(const MDPolynomial& a, Atom atom) { return a.times(atom); }

Rational poly_eval(const MDPolynomial& a, const Rational& v, const Rational& x, const Rational& y) {
  return a.eval(v, x, y);
}

std::string UniPolynomial::to_string(char var) const {
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0) continue;
    std::string term;
    if (k == 0) {
      term = coeffs[k].get_str();
    } else {
      if (coeffs[k] != 1) term = coeffs[k].get_str() + "*";
      term += var;
      if (k > 1) term += "^" + std::to_string(k);
    }
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out.empty() ? "0" : out;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("weight '" + text + "' is not an exact rational of the form p/q");
  }
  const mpz_class denominator(den);
  if (denominator == 0) throw std::invalid_argument("weight '" + text + "' has zero denominator");
  Rational r(mpz_class(num[0] == '+' ? num.substr(1) : num), denominator);
  r.canonicalize();
  return r;
}

}  // namespace mdenum
