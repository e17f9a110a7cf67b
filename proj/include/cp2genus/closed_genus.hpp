#pragma once

#include <optional>

namespace cp2 {

/// Minimal genus of a closed surface representing d times the line in
/// CP^2: (|d|-1)(|d|-2)/2, and 0 for the trivial class.
long thom_genus(long d);

/// The polynomial (k-1)(k-2)/2 for k >= 0. Agrees with thom_genus away
/// from 0, where it is off by one (gtilde(0) = 1).
long gtilde(long k);

/// Genus of the blow-up-trick surface for T(n,n-1) capped off in class
/// (n,d); requires n > d >= 0. Same-parity and mixed-parity cases use the
/// two quadratic formulas.
long trick_genus(long n, long d);

/// g4(T(n,n-1)) - trick_genus(n,0): (n-2)/2 for even n, (n-1)/2 for odd.
long corollary_difference(long n);

struct DifferenceBound {
  long value = 0;
  bool significant = false;  // the bound only says something when positive
};

/// Lower bound for gtilde(n) + gtilde(d) - G(n,d): (n-3d)/2 when n and d
/// share parity, (n-3d+1)/2 otherwise; requires n > d >= 0. May be
/// nonpositive; returned unclamped with a significance flag.
DifferenceBound difference_lower_bound(long n, long d);

/// Class n*h1 + d*h2 in CP^2 # CP^2, normalized to n >= d >= 0 using the
/// factor swap and the two orientation-reversals of the generators.
struct ClosedClass {
  long n = 0;
  long d = 0;

  static ClosedClass normalized(long n, long d);
  bool operator==(const ClosedClass&) const = default;
};

struct ClosedClassReport {
  ClosedClass cls;
  long gtilde_sum = 0;
  std::optional<long> trick;  // defined only for n > d
  long naive_upper = 0;       // thom(n) + thom(d)
  long best_upper = 0;
  std::optional<DifferenceBound> difference_rhs;
  std::optional<long> difference_achieved;  // gtilde_sum - trick
};

ClosedClassReport closed_report(long n, long d);

}  // namespace cp2
