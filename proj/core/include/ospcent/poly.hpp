#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ospcent/matrix.hpp"
#include "ospcent/rational.hpp"

namespace ospcent {

// Univariate polynomial over Rational, coefficients lowest degree first.
// The zero polynomial has an empty coefficient list.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static PolyQ constant(const Rational& c);
  static PolyQ x();                      // the monomial t
  static PolyQ from_roots(const std::vector<Rational>& roots);  // prod (t - r)

  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rational& leading() const { return c_.back(); }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }

  PolyQ monic() const;

  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(const Rational& c, const PolyQ& a);
  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }

  // Euclidean division by a nonzero divisor.
  std::pair<PolyQ, PolyQ> divrem(const PolyQ& divisor) const;

  Rational eval(const Rational& x) const;
  MatrixQ eval_matrix(const MatrixQ& a) const;  // Horner with matrix products

  // True iff p(a) = 0, checked column by column without forming p(a).
  bool annihilates(const MatrixQ& a) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

bool divides(const PolyQ& divisor, const PolyQ& dividend);
PolyQ poly_gcd(const PolyQ& a, const PolyQ& b);  // monic
PolyQ poly_lcm(const PolyQ& a, const PolyQ& b);  // monic

// All integer roots of a nonzero polynomial with their multiplicities,
// sorted ascending. Rational-root search over divisors of the trailing
// coefficient after clearing denominators, capped by the Fujiwara root
// bound.
std::vector<std::pair<mpz_class, int>> integer_roots(const PolyQ& p);

// Convenience: the distinct integer roots as Rationals, sorted ascending.
std::vector<Rational> integer_root_set(const PolyQ& p);

}  // namespace ospcent
