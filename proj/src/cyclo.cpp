#include "cp2genus/cyclo.hpp"

#include <mpfr.h>

#include <map>
#include <mutex>

#include "cp2genus/errors.hpp"
#include "cp2genus/laurent.hpp"

namespace cp2 {

namespace {

struct FieldData {
  long m;
  std::vector<mpq_class> phi;            // monic, rational copy of Phi_m
  std::vector<std::vector<mpq_class>> zeta_pow;  // zeta^k mod Phi for k < m
  long degree() const { return static_cast<long>(phi.size()) - 1; }
};

const FieldData& field_data(long m) {
  static std::map<long, FieldData> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  FieldData fd;
  fd.m = m;
  for (const mpz_class& c : cyclotomic(m)) fd.phi.emplace_back(c);
  const long deg = fd.degree();
  // zeta^k for k < m, reduced: repeated multiply-by-x with reduction
  std::vector<mpq_class> cur(deg, 0);
  cur[0] = 1;
  for (long k = 0; k < m; ++k) {
    fd.zeta_pow.push_back(cur);
    // cur *= x mod phi
    mpq_class top = cur[deg - 1];
    for (long i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (long i = 0; i < deg; ++i) cur[i] -= top * fd.phi[i];
  }
  return cache.emplace(m, std::move(fd)).first->second;
}

std::vector<mpq_class> poly_mod_phi(std::vector<mpq_class> p,
                                    const FieldData& fd) {
  const long deg = fd.degree();
  for (long i = static_cast<long>(p.size()) - 1; i >= deg; --i) {
    mpq_class c = p[i];
    if (c == 0) continue;
    for (long j = 0; j <= deg; ++j) p[i - deg + j] -= c * fd.phi[j];
  }
  p.resize(deg);
  return p;
}

}  // namespace

CycloNum::CycloNum(long m, std::vector<mpq_class> coeffs) : m_(m) {
  const FieldData& fd = field_data(m);
  coeffs.resize(std::max<std::size_t>(coeffs.size(), fd.degree()), 0);
  coeffs_ = poly_mod_phi(std::move(coeffs), fd);
  for (auto& c : coeffs_) c.canonicalize();
}

CycloNum CycloNum::zero(long m) { return CycloNum(m, {}); }

CycloNum CycloNum::rational(long m, const mpq_class& c) {
  return CycloNum(m, {c});
}

CycloNum CycloNum::zeta_power(long m, long k) {
  k %= m;
  if (k < 0) k += m;
  return CycloNum(m, field_data(m).zeta_pow[k]);
}

bool CycloNum::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
  std::vector<mpq_class> r = coeffs_;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.coeffs_[i];
  return CycloNum(m_, std::move(r));
}

CycloNum CycloNum::operator-(const CycloNum& o) const {
  std::vector<mpq_class> r = coeffs_;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.coeffs_[i];
  return CycloNum(m_, std::move(r));
}

CycloNum CycloNum::operator*(const CycloNum& o) const {
  std::vector<mpq_class> r(2 * coeffs_.size(), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return CycloNum(m_, std::move(r));
}

CycloNum CycloNum::conj() const {
  const FieldData& fd = field_data(m_);
  std::vector<mpq_class> r(fd.degree(), 0);
  for (long k = 0; k < fd.degree(); ++k) {
    if (coeffs_[k] == 0) continue;
    const auto& pw = fd.zeta_pow[(m_ - k) % m_];
    for (long i = 0; i < fd.degree(); ++i) r[i] += coeffs_[k] * pw[i];
  }
  return CycloNum(m_, std::move(r));
}

namespace {

using QPoly = std::vector<mpq_class>;  // dense, no trailing zeros

QPoly qpoly_trim(QPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// quotient and remainder of a / b over Q[x], b nonzero
std::pair<QPoly, QPoly> qpoly_divmod(QPoly a, const QPoly& b) {
  QPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  while (a.size() >= b.size()) {
    mpq_class c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    a = qpoly_trim(std::move(a));
  }
  return {qpoly_trim(std::move(q)), std::move(a)};
}

QPoly qpoly_sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  // a - q * b
  QPoly r(std::max(a.size(), q.empty() || b.empty() ? 0 : q.size() + b.size() - 1), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] -= q[i] * b[j];
  return qpoly_trim(std::move(r));
}

}  // namespace

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw InternalError("inverse of zero cyclotomic element");
  // extended Euclid over Q[x]: u * this + v * Phi = constant gcd
  const FieldData& fd = field_data(m_);
  QPoly r0 = fd.phi, r1 = qpoly_trim(coeffs_);
  QPoly u0 = {}, u1 = {mpq_class(1)};  // cofactors of `this`
  while (!r1.empty()) {
    auto [q, rem] = qpoly_divmod(r0, r1);
    QPoly un = qpoly_sub_mul(u0, q, u1);
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(un);
  }
  if (r0.size() != 1)
    throw InternalError("cyclotomic inverse: gcd not constant");
  mpq_class inv_c = 1 / r0[0];
  for (auto& c : u0) c *= inv_c;
  return CycloNum(m_, std::move(u0));
}

int CycloNum::certified_sign() const {
  if (is_zero()) throw InternalError("certified_sign of zero");
  for (long prec : {64L, 256L, 1024L}) {
    mpfr_t acc, term, angle, pi, bound, tmp;
    mpfr_inits2(prec, acc, term, angle, pi, bound, tmp, (mpfr_ptr) nullptr);
    mpfr_set_ui(acc, 0, MPFR_RNDN);
    mpfr_set_ui(bound, 0, MPFR_RNDN);
    mpfr_const_pi(pi, MPFR_RNDN);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k] == 0) continue;
      // real part of c_k * zeta^k = c_k * cos(2 pi k / m)
      mpfr_mul_si(angle, pi, 2 * static_cast<long>(k), MPFR_RNDN);
      mpfr_div_si(angle, angle, m_, MPFR_RNDN);
      mpfr_cos(term, angle, MPFR_RNDN);
      mpfr_mul_q(term, term, coeffs_[k].get_mpq_t(), MPFR_RNDN);
      mpfr_add(acc, acc, term, MPFR_RNDN);
      mpfr_abs(tmp, term, MPFR_RNDN);
      mpfr_add(bound, bound, tmp, MPFR_RNDN);
      mpfr_add_ui(bound, bound, 1, MPFR_RNDN);
    }
    // coarse but safe error envelope: a few ulps per accumulated term
    mpfr_mul_2si(bound, bound, -prec + 8, MPFR_RNDN);
    mpfr_abs(tmp, acc, MPFR_RNDN);
    bool certain = mpfr_cmp(tmp, bound) > 0;
    int sign = mpfr_sgn(acc);
    mpfr_clears(acc, term, angle, pi, bound, tmp, (mpfr_ptr) nullptr);
    if (certain) return sign > 0 ? 1 : -1;
  }
  throw PrecisionExhausted("cyclotomic sign not certified at 1024 bits");
}

int exact_lt_signature_impl(const SeifertMatrix& v, UnitRoot w) {
  const int n = v.size();
  const long m = w.den;
  // H = (1 - omega) V + (1 - conj omega) V^T with omega = zeta^num
  CycloNum one = CycloNum::rational(m, 1);
  CycloNum omega = CycloNum::zeta_power(m, w.num);
  CycloNum a = one - omega;
  CycloNum b = one - omega.conj();
  std::vector<std::vector<CycloNum>> h(n, std::vector<CycloNum>(n, CycloNum::zero(m)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      h[i][j] = a * CycloNum::rational(m, v.at(i, j)) +
                b * CycloNum::rational(m, v.at(j, i));

  std::vector<int> alive(n, 1);
  int remaining = n, pos = 0, neg = 0;
  while (remaining > 0) {
    int piv = -1;
    for (int i = 0; i < n && piv < 0; ++i)
      if (alive[i] && !h[i][i].is_zero()) piv = i;
    if (piv < 0) {
      // all live diagonal entries vanish; mix in an off-diagonal one
      int bi = -1, bj = -1;
      for (int i = 0; i < n && bi < 0; ++i)
        for (int j = 0; j < n; ++j)
          if (alive[i] && alive[j] && i != j && !h[i][j].is_zero()) {
            bi = i;
            bj = j;
            break;
          }
      if (bi < 0) throw SingularAtOmega("exact backend: form is singular");
      // congruence e_bi += h[bi][bj] e_bj makes the bi diagonal 2|h|^2 > 0
      CycloNum c = h[bi][bj];
      CycloNum cbar = c.conj();
      for (int k = 0; k < n; ++k)
        if (alive[k]) h[bi][k] = h[bi][k] + c * h[bj][k];
      for (int k = 0; k < n; ++k)
        if (alive[k]) h[k][bi] = h[k][bi] + cbar * h[k][bj];
      continue;
    }
    if (!h[piv][piv].is_real())
      throw InternalError("exact backend: non-real diagonal entry");
    int sign = h[piv][piv].certified_sign();
    (sign > 0 ? pos : neg)++;
    alive[piv] = 0;
    --remaining;
    CycloNum inv = h[piv][piv].inverse();
    for (int i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      CycloNum f = h[i][piv] * inv;
      CycloNum fbar = f.conj();
      for (int j = 0; j < n; ++j) {
        if (!alive[j]) continue;
        h[i][j] = h[i][j] - f * h[piv][j];
      }
      (void)fbar;
    }
  }
  if (pos + neg != n)
    throw InternalError("exact backend: rank mismatch");
  return pos - neg;
}

}  // namespace cp2
