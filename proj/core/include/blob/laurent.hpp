#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace blob {

using Int = boost::multiprecision::cpp_int;

/**
 * Integer-coefficient Laurent polynomial in one variable t.
 *
 * Kept in canonical form: the term map never stores a zero coefficient, so
 * the zero polynomial is the empty map and equality is plain map equality.
 */
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Int constant);
  static LaurentPoly monomial(int exponent, Int coefficient = Int(1));

  bool is_zero() const { return _terms.empty(); }
  bool is_monomial() const { return _terms.size() == 1; }
  bool is_constant() const;

  Int coefficient(int exponent) const;
  int min_exponent() const;  // requires a nonzero polynomial
  int max_exponent() const;  // requires a nonzero polynomial
  const std::map<int, Int>& terms() const { return _terms; }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  LaurentPoly operator*(const LaurentPoly& other) const;
  bool operator==(const LaurentPoly& other) const = default;

  // Multiplication by t^d, the grade-shift operator.
  LaurentPoly shifted(int d) const;

  // Sum of coefficients, i.e. the ungraded dimension.
  Int eval_at_one() const;

  bool has_negative_coefficient() const;
  // Invariance under t <-> t^-1.
  bool is_bar_symmetric() const;

  // Terms in descending exponent with unit coefficients elided:
  // "t^3+t", "2t^2+1", "3t^-2", "0".
  std::string to_string() const;

 private:
  void set(int exponent, Int coefficient);

  std::map<int, Int> _terms;
};

}  // namespace blob
