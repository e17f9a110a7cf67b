#pragma once

#include <gmpxx.h>

#include <vector>

#include "cp2genus/signature.hpp"

namespace cp2 {

/// Element of the cyclotomic field Q(zeta_m), stored as a rational
/// polynomial in zeta_m reduced mod the m-th cyclotomic polynomial.
class CycloNum {
 public:
  CycloNum(long m, std::vector<mpq_class> coeffs);
  static CycloNum zero(long m);
  static CycloNum rational(long m, const mpq_class& c);
  static CycloNum zeta_power(long m, long k);

  long field() const { return m_; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  CycloNum operator+(const CycloNum& o) const;
  CycloNum operator-(const CycloNum& o) const;
  CycloNum operator*(const CycloNum& o) const;
  CycloNum inverse() const;  // throws InternalError on zero
  CycloNum conj() const;     // zeta -> zeta^{-1}
  bool is_real() const { return conj().coeffs() == coeffs_; }

  /// Certified sign of a real, nonzero element via the 64/256/1024-bit
  /// MPFR ladder; throws PrecisionExhausted if the ladder fails.
  int certified_sign() const;

 private:
  long m_;
  std::vector<mpq_class> coeffs_;  // degree < phi(m)
};

/// Exact Levine-Tristram signature by Hermitian congruence diagonalization
/// over Q(zeta). Cost grows quickly with size; callers cap it (the oracle
/// module enforces size <= 8).
int exact_lt_signature_impl(const SeifertMatrix& v, UnitRoot w);

}  // namespace cp2
