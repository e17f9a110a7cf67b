#include "cp2genus/laurent.hpp"

#include <sstream>

#include "cp2genus/errors.hpp"

namespace cp2 {

LaurentPoly LaurentPoly::monomial(long exp, mpz_class coeff) {
  LaurentPoly p;
  if (coeff != 0) p.coeffs_[exp] = std::move(coeff);
  return p;
}

mpz_class LaurentPoly::coeff(long exp) const {
  auto it = coeffs_.find(exp);
  return it == coeffs_.end() ? mpz_class(0) : it->second;
}

long LaurentPoly::min_exp() const {
  if (coeffs_.empty()) throw InternalError("min_exp of zero polynomial");
  return coeffs_.begin()->first;
}

long LaurentPoly::max_exp() const {
  if (coeffs_.empty()) throw InternalError("max_exp of zero polynomial");
  return coeffs_.rbegin()->first;
}

void LaurentPoly::trim() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.coeffs_[e] += c;
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.coeffs_) r.coeffs_[e] -= c;
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : o.coeffs_) r.coeffs_[e1 + e2] += c1 * c2;
  r.trim();
  return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::reversed() const {
  LaurentPoly r;
  for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
  return r;
}

mpz_class LaurentPoly::eval_at_one() const {
  mpz_class s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

mpz_class LaurentPoly::eval_at_minus_one() const {
  mpz_class s = 0;
  for (const auto& [e, c] : coeffs_) {
    if (e % 2 == 0)
      s += c;
    else
      s -= c;
  }
  return s;
}

bool LaurentPoly::is_symmetric() const {
  for (const auto& [e, c] : coeffs_)
    if (coeff(-e) != c) return false;
  return true;
}

std::string LaurentPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

ZPoly zpoly_trim(ZPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return zpoly_trim(std::move(r));
}

ZPoly zpoly_div_exact(const ZPoly& a, const ZPoly& b) {
  if (b.empty() || b.back() != 1)
    throw InternalError("zpoly_div_exact requires a monic divisor");
  ZPoly rem = a;
  if (rem.size() < b.size()) {
    if (zpoly_trim(rem).empty()) return {};
    throw InternalError("zpoly_div_exact: not divisible");
  }
  ZPoly quot(rem.size() - b.size() + 1, mpz_class(0));
  for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
    mpz_class c = rem[i + b.size() - 1];
    quot[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) rem[i + j] -= c * b[j];
  }
  if (!zpoly_trim(rem).empty())
    throw InternalError("zpoly_div_exact: not divisible");
  return zpoly_trim(std::move(quot));
}

bool zpoly_divides(const ZPoly& divisor, const ZPoly& p) {
  if (divisor.empty() || divisor.back() != 1)
    throw InternalError("zpoly_divides requires a monic divisor");
  ZPoly rem = zpoly_trim(p);
  if (rem.empty()) return true;
  if (rem.size() < divisor.size()) return false;
  for (long i = static_cast<long>(rem.size() - divisor.size()); i >= 0; --i) {
    mpz_class c = rem[i + divisor.size() - 1];
    if (c == 0) continue;
    for (std::size_t j = 0; j < divisor.size(); ++j) rem[i + j] -= c * divisor[j];
  }
  return zpoly_trim(std::move(rem)).empty();
}

ZPoly cyclotomic(long m) {
  if (m < 1) throw InternalError("cyclotomic index must be positive");
  // x^m - 1 divided by the product of Phi_d over proper divisors d of m.
  ZPoly num(m + 1, mpz_class(0));
  num[0] = -1;
  num[m] = 1;
  for (long d = 1; d < m; ++d)
    if (m % d == 0) num = zpoly_div_exact(num, cyclotomic(d));
  return num;
}

ZPoly laurent_to_zpoly(const LaurentPoly& p) {
  if (p.is_zero()) return {};
  long lo = p.min_exp();
  ZPoly r(p.max_exp() - lo + 1, mpz_class(0));
  for (const auto& [e, c] : p.coeffs()) r[e - lo] = c;
  return r;
}

}  // namespace cp2
