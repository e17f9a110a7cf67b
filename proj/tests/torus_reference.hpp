#pragma once

// Independent closed-form references for torus-knot invariants, used to
// cross-check the Seifert-matrix pipeline. Nothing here goes through
// SeifertMatrix: signatures come from the classical lattice-point count and
// Alexander polynomials from the cyclotomic quotient formula.

#include <utility>

#include "cp2genus/errors.hpp"
#include "cp2genus/knot.hpp"
#include "cp2genus/laurent.hpp"

namespace cp2::testref {

/// Lattice-point count for sigma of T(p,q) at e^{2 pi i a/b}: each pair
/// (i,j) in [1,p-1]x[1,q-1] contributes -1 when i/p + j/q lies strictly in
/// (a/b, a/b + 1) and +1 otherwise. Exact rational comparisons; throws if
/// the evaluation point hits a jump of the signature function.
inline int sigma_torus(int p, int q, long a, long b) {
  int sig = 0;
  for (int i = 1; i < p; ++i)
    for (int j = 1; j < q; ++j) {
      const long lhs = static_cast<long>(i * q + j * p) * b;
      const long lo = a * p * q, hi = (a + b) * p * q;
      if (lhs == lo || lhs == hi)
        throw InternalError("reference signature evaluated at a jump");
      sig += (lhs > lo && lhs < hi) ? -1 : 1;
    }
  return sig;
}

/// Delta of T(p,q) = (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)), centered.
inline LaurentPoly alexander_torus(int p, int q) {
  auto xm1 = [](int k) {
    ZPoly r(k + 1, mpz_class(0));
    r[0] = -1;
    r[k] = 1;
    return r;
  };
  ZPoly quot = zpoly_div_exact(zpoly_mul(xm1(p * q), xm1(1)),
                               zpoly_mul(xm1(p), xm1(q)));
  const int g = (p - 1) * (q - 1) / 2;
  LaurentPoly out;
  for (int i = 0; i < static_cast<int>(quot.size()); ++i)
    out = out + LaurentPoly::monomial(i - g, quot[i]);
  return out;
}

/// The standard positive braid whose closure is T(p,q).
inline BraidWord torus_braid(int p, int q) {
  BraidWord w;
  w.strands = p;
  for (int r = 0; r < q; ++r)
    for (int i = 1; i < p; ++i) w.letters.push_back(i);
  return w;
}

}  // namespace cp2::testref
