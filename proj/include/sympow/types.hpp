#pragma once

// Dense types shared across the library. Everything is an Eigen matrix over
// one of three scalars: exact integers (GMP), exact rationals (GMP), double.

#include <Eigen/Core>
#include <gmpxx.h>

namespace Eigen {

// GMP classes as Eigen scalars (the documented custom-scalar hooks).
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 60,
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100,
  };
};

}  // namespace Eigen

namespace sympow {

using Int = mpz_class;
using Rat = mpq_class;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Mat<Int>;
using RatMatrix = Mat<Rat>;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

// Kronecker product, plain loops so it works for any scalar (GMP included).
template <typename Scalar>
Mat<Scalar> kron(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  Mat<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

inline Int int_binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// Unsigned binomial that must fit in 64 bits; throws if it cannot.
std::uint64_t binomial64(long n, long k);

Int factorial(long n);

}  // namespace sympow
