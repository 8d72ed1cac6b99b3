#ifndef TWISTLAB_RATIONAL_HPP
#define TWISTLAB_RATIONAL_HPP

// Exact rational scalar for the whole library. Backed by GMP's mpq_class:
// always canonical (denominator > 0, gcd(num, den) = 1), arbitrary precision.
// Eigen matrices over Rational are the workhorse linear algebra type; the
// NumTraits specialization below makes that legal.

#include <gmpxx.h>

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace twistlab {

using Rational = mpq_class;
using Integer = mpz_class;

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatrixZ = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

/// Error with a stable machine-readable code, surfaced verbatim by the CLI.
class DomainError : public std::runtime_error {
 public:
  DomainError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline Rational rational_from_string(const std::string& s) {
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw DomainError("PARSE", "not a rational: '" + s + "'");
  }
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
  if (!is_integer(r)) throw DomainError("NON_INTEGRAL", "expected integer, got " + to_string(r));
  if (!r.get_num().fits_slong_p())
    throw DomainError("OVERFLOW", "integer too large: " + to_string(r));
  return r.get_num().get_si();
}

inline Rational pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = e > 0 ? base : Rational(1) / base;
  unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
  Rational acc(1);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

/// Exact square root: returns the positive root if r is a square in Q.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  Integer num = r.get_num(), den = r.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    Integer sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rational(sn, sd);
  }
  return std::nullopt;
}

inline bool is_rational_square(const Rational& r) { return rational_sqrt(r).has_value(); }

/// Squarefree part of a nonzero rational, by trial division of num*den.
/// r = squarefree_part(r) * (square); used to put square classes in canonical form.
inline Integer squarefree_part(const Rational& r) {
  if (r == 0) throw DomainError("DOMAIN", "squarefree part of zero");
  Integer n = r.get_num() * r.get_den();
  Integer sign = n < 0 ? -1 : 1;
  n = abs(n);
  Integer out = 1;
  for (Integer p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e & 1) out *= p;
  }
  return sign * out * n;
}

}  // namespace twistlab

namespace Eigen {

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
    MulCost = 100
  };
};

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
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

#endif  // TWISTLAB_RATIONAL_HPP
