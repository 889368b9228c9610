#pragma once

// Dense univariate polynomials with exact integer coefficients, stored
// constant term first. The zero polynomial has an empty coefficient vector
// and degree -1. Doubles as a ring scalar for fraction-free elimination.

#include <string>
#include <vector>

#include "sympow/types.hpp"

namespace sympow {

class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(long c) : IntPolynomial(constant(Int(c))) {}  // NOLINT: ring literal
  explicit IntPolynomial(std::vector<Int> coeffs);  // constant first, trimmed

  static IntPolynomial constant(Int c);
  static IntPolynomial variable();  // t

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  // Coefficient of t^k; zero beyond the degree.
  const Int& coeff(int k) const;
  const std::vector<Int>& coeffs() const { return c_; }

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    return a += b;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    return a -= b;
  }
  friend IntPolynomial operator*(const IntPolynomial& a,
                                 const IntPolynomial& b);
  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }
  friend IntPolynomial operator*(const Int& s, const IntPolynomial& a);

  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

  Int eval(const Int& x) const;

  // Quotient of an exact division; throws std::domain_error if the division
  // leaves a remainder (used by fraction-free elimination, where a remainder
  // signals a bug).
  IntPolynomial exact_div(const IntPolynomial& divisor) const;

  // Decimal coefficients, constant term first, space separated. Zero is "0".
  std::string to_string() const;
  static IntPolynomial parse(const std::string& text);

 private:
  void trim();
  std::vector<Int> c_;
};

// Total order used to sort polynomial decks: coefficient vectors compared
// entrywise from the constant term, missing coefficients read as zero.
bool poly_less(const IntPolynomial& a, const IntPolynomial& b);

}  // namespace sympow

namespace Eigen {

// Lets Eigen dense containers hold polynomial entries (fraction-free
// elimination works on Mat<IntPolynomial>).
template <>
struct NumTraits<sympow::IntPolynomial>
    : GenericNumTraits<sympow::IntPolynomial> {
  typedef sympow::IntPolynomial Real;
  typedef sympow::IntPolynomial NonInteger;
  typedef sympow::IntPolynomial Nested;
  static inline Real epsilon() { return sympow::IntPolynomial(); }
  static inline Real dummy_precision() { return sympow::IntPolynomial(); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 200,
    MulCost = 400,
  };
};

}  // namespace Eigen
