#pragma once

#include <numeric>

#include "cp2genus/laurent.hpp"
#include "cp2genus/seifert.hpp"

namespace cp2 {

/// Point e^{2 pi i num/den} on the unit circle, excluding 1 (num != 0 mod den).
struct UnitRoot {
  long num = 1;
  long den = 2;

  static UnitRoot of(long num, long den);  // normalizes to 0 < num < den
  long order() const { return den; }      // primitive den-th root after of()
  UnitRoot conjugate() const { return UnitRoot{den - num, den}; }
  bool operator==(const UnitRoot&) const = default;
};

inline UnitRoot omega_minus_one() { return UnitRoot{1, 2}; }
/// omega = e^{pi i (p-1)/p}, the point where sigma_p is evaluated.
UnitRoot omega_sigma_p(long p);

enum class SignatureBackend { Float, Exact };

struct SignatureOptions {
  SignatureBackend backend = SignatureBackend::Float;
  double tol = 1e-8;
};

/// Exact test for Delta(omega) = 0 (cyclotomic divisibility).
bool alexander_vanishes_at(const LaurentPoly& delta, UnitRoot w);

/// Signature of (1-omega)V + (1-conj(omega))V^T. Throws SingularAtOmega when
/// the Alexander polynomial vanishes at omega. The float backend escalates
/// to 256- and 1024-bit arithmetic when an eigenvalue is too close to zero,
/// then raises PrecisionExhausted.
int lt_signature(const SeifertMatrix& v, UnitRoot w,
                 const SignatureOptions& opts = {});

/// Same, with the Alexander polynomial already at hand (skips recomputing
/// it for the singularity gate).
int lt_signature(const SeifertMatrix& v, const LaurentPoly& delta, UnitRoot w,
                 const SignatureOptions& opts = {});

/// Ordinary signature = Levine-Tristram signature at omega = -1.
int ordinary_signature(const SeifertMatrix& v,
                       const SignatureOptions& opts = {});

/// Arf invariant from the classical congruence Delta(-1) = +-1 mod 8.
int arf_from_alexander(const LaurentPoly& delta);

namespace detail {
/// Inertia of the realified Hermitian form at the given MPFR precision.
/// Returns false if a pivot could not be certified at this precision.
bool mpfr_inertia(const SeifertMatrix& v, UnitRoot w, long prec, int* signature);
}  // namespace detail

}  // namespace cp2
