#include "cp2genus/closed_genus.hpp"

#include <algorithm>
#include <cstdlib>

#include "cp2genus/errors.hpp"

namespace cp2 {

long thom_genus(long d) {
  if (d == 0) return 0;
  long a = std::abs(d);
  return (a - 1) * (a - 2) / 2;
}

long gtilde(long k) {
  if (k < 0) throw InternalError("gtilde needs k >= 0");
  return (k - 1) * (k - 2) / 2;
}

long trick_genus(long n, long d) {
  if (!(n > d && d >= 0))
    throw SemanticError("trick construction needs n > d >= 0");
  if ((n - d) % 2 == 0) {
    long a = (n + d - 2) / 2, b = (n - d - 2) / 2;
    return a * a + b * b;
  }
  return (n + d - 1) / 2 * ((n + d - 3) / 2) +
         (n - d - 1) / 2 * ((n - d - 3) / 2);
}

long corollary_difference(long n) {
  if (n < 1) throw SemanticError("corollary_difference needs n >= 1");
  return n % 2 == 0 ? (n - 2) / 2 : (n - 1) / 2;
}

DifferenceBound difference_lower_bound(long n, long d) {
  if (!(n > d && d >= 0))
    throw SemanticError("difference bound needs n > d >= 0");
  long v = (n - d) % 2 == 0 ? (n - 3 * d) / 2 : (n - 3 * d + 1) / 2;
  return DifferenceBound{v, v > 0};
}

ClosedClass ClosedClass::normalized(long n, long d) {
  long a = std::abs(n), b = std::abs(d);
  if (a < b) std::swap(a, b);
  return ClosedClass{a, b};
}

ClosedClassReport closed_report(long n, long d) {
  ClosedClassReport r;
  r.cls = ClosedClass::normalized(n, d);
  r.gtilde_sum = gtilde(r.cls.n) + gtilde(r.cls.d);
  r.naive_upper = thom_genus(r.cls.n) + thom_genus(r.cls.d);
  r.best_upper = r.naive_upper;
  if (r.cls.n > r.cls.d) {
    r.trick = trick_genus(r.cls.n, r.cls.d);
    r.best_upper = std::min(r.best_upper, *r.trick);
    r.difference_achieved = r.gtilde_sum - *r.trick;
    r.difference_rhs = difference_lower_bound(r.cls.n, r.cls.d);
  }
  return r;
}

}  // namespace cp2
