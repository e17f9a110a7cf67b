#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace cp2 {

/// Integer Laurent polynomial with finite support.
///
/// Alexander polynomials are stored here normalized so that the
/// coefficients are symmetric (coeff(k) == coeff(-k)) and the value at
/// t = 1 equals 1.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(long constant) {
    if (constant != 0) coeffs_[0] = constant;
  }

  static LaurentPoly monomial(long exp, mpz_class coeff);

  const std::map<long, mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff(long exp) const;
  bool is_zero() const { return coeffs_.empty(); }
  long min_exp() const;
  long max_exp() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return coeffs_ == o.coeffs_; }

  LaurentPoly shifted(long k) const;  // multiply by t^k
  LaurentPoly reversed() const;       // substitute t -> 1/t

  mpz_class eval_at_one() const;
  mpz_class eval_at_minus_one() const;
  bool is_symmetric() const;

  /// Rendering such as "t^-1 - 1 + t" (ascending exponents).
  std::string str() const;

 private:
  std::map<long, mpz_class> coeffs_;  // exponent -> nonzero coefficient
  void trim();
};

/// Dense integer polynomial, coefficient i belongs to x^i, no trailing zeros.
using ZPoly = std::vector<mpz_class>;

ZPoly zpoly_trim(ZPoly p);
ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b);
/// Exact division a / b for monic b; throws InternalError if not divisible.
ZPoly zpoly_div_exact(const ZPoly& a, const ZPoly& b);
bool zpoly_divides(const ZPoly& divisor, const ZPoly& p);  // divisor monic

/// The m-th cyclotomic polynomial, computed by the x^m - 1 recursion.
ZPoly cyclotomic(long m);

/// Laurent polynomial as a dense polynomial times t^{min_exp}.
ZPoly laurent_to_zpoly(const LaurentPoly& p);

}  // namespace cp2
