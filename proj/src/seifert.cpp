#include "cp2genus/seifert.hpp"

#include <utility>
#include <vector>

#include "cp2genus/errors.hpp"
#include "cp2genus/knot.hpp"

namespace cp2 {

namespace {

// Fraction-free Bareiss determinant with row pivoting.
mpz_class det_bareiss(std::vector<std::vector<mpz_class>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

mpz_class det_skew_part(const std::vector<std::vector<long>>& rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = rows[i][j] - rows[j][i];
  return det_bareiss(std::move(m));
}

}  // namespace

SeifertMatrix::SeifertMatrix(std::vector<std::vector<long>> entries)
    : rows_(std::move(entries)) {
  const std::size_t n = rows_.size();
  if (n % 2 != 0) throw SemanticError("Seifert matrix must have even size");
  for (const auto& row : rows_)
    if (row.size() != n) throw SemanticError("Seifert matrix must be square");
  if (n > 0 && det_skew_part(rows_) != 1)
    throw SemanticError("Seifert matrix rejected: det(V - V^T) != 1");
}

SeifertMatrix SeifertMatrix::mirrored() const {
  const int n = size();
  std::vector<std::vector<long>> out(n, std::vector<long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = -rows_[j][i];
  SeifertMatrix v;
  v.rows_ = std::move(out);
  return v;
}

SeifertMatrix SeifertMatrix::block_diag(const SeifertMatrix& a,
                                        const SeifertMatrix& b) {
  const int n = a.size(), m = b.size();
  std::vector<std::vector<long>> out(n + m, std::vector<long>(n + m, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = a.rows_[i][j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) out[n + i][n + j] = b.rows_[i][j];
  SeifertMatrix v;
  v.rows_ = std::move(out);
  return v;
}

// ---------------------------------------------------------------------------
// Banded Seifert surface of a braid closure.
//
// The surface consists of one disk per strand and one half-twisted band per
// letter. Homology generators are the loops through consecutive bands of the
// same generator column. Within a column the linking numbers are fixed by
// the band signs; loops in adjacent columns link exactly when their band
// intervals interleave in the word (their chords cross on the shared disk).

namespace detail {

SeifertMatrix seifert_from_braid_with(const BraidWord& w,
                                      const InterleaveRule& rule) {
  struct Loop {
    int column;
    int first, second;  // letter positions of the two bands
    int sign_first, sign_second;
  };
  std::vector<Loop> loops;
  for (int col = 1; col < w.strands; ++col) {
    int prev = -1, prev_sign = 0;
    for (int t = 0; t < static_cast<int>(w.letters.size()); ++t) {
      int letter = w.letters[t];
      if (std::abs(letter) != col) continue;
      int sign = letter > 0 ? 1 : -1;
      if (prev >= 0) loops.push_back({col, prev, t, prev_sign, sign});
      prev = t;
      prev_sign = sign;
    }
  }

  const int n = static_cast<int>(loops.size());
  std::vector<std::vector<long>> v(n, std::vector<long>(n, 0));
  for (int a = 0; a < n; ++a) {
    v[a][a] = -(loops[a].sign_first + loops[a].sign_second) / 2;
    for (int b = a + 1; b < n; ++b) {
      const Loop &la = loops[a], &lb = loops[b];
      if (la.column == lb.column) {
        // consecutive loops share exactly one band (the earlier loop's
        // second band); non-consecutive loops are disjoint
        if (la.second == lb.first) {
          int e = la.sign_second;
          v[a][b] = (e + 1) / 2;
          v[b][a] = (e - 1) / 2;
        }
      } else if (lb.column == la.column + 1) {
        if (la.first < lb.first && lb.first < la.second &&
            la.second < lb.second) {
          v[a][b] = rule.left_first_ab;
          v[b][a] = rule.left_first_ba;
        } else if (lb.first < la.first && la.first < lb.second &&
                   lb.second < la.second) {
          v[a][b] = rule.right_first_ab;
          v[b][a] = rule.right_first_ba;
        }
      }
    }
  }

  const int expected =
      static_cast<int>(w.letters.size()) - w.strands + 1;
  if (n != expected)
    throw InternalError("braid surface rank mismatch");
  return SeifertMatrix(std::move(v));
}

}  // namespace detail

SeifertMatrix seifert_from_braid(const BraidWord& w) {
  if (w.strands < 2) throw SemanticError("braid needs at least 2 strands");
  return detail::seifert_from_braid_with(w, detail::InterleaveRule{});
}

// ---------------------------------------------------------------------------
// Alexander polynomial.

namespace {

// P(t) = det(tV - V^T), recovered exactly by interpolation at the integer
// nodes t = 0..2g.
std::vector<mpz_class> det_poly(const SeifertMatrix& v) {
  const int n = v.size();
  std::vector<mpz_class> values;
  for (int t = 0; t <= n; ++t) {
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m[i][j] = mpz_class(t) * v.at(i, j) - v.at(j, i);
    values.push_back(det_bareiss(std::move(m)));
  }

  // Newton divided differences on nodes 0..n, then expansion to monomials.
  std::vector<mpq_class> dd(values.begin(), values.end());
  for (int level = 1; level <= n; ++level)
    for (int i = n; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / level;  // nodes are consecutive integers

  std::vector<mpq_class> coeffs(n + 1, 0), basis(n + 1, 0);
  basis[0] = 1;
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i <= k; ++i) coeffs[i] += dd[k] * basis[i];
    if (k < n) {  // basis *= (t - k)
      for (int i = k + 1; i >= 1; --i)
        basis[i] = basis[i - 1] - mpq_class(k) * basis[i];
      basis[0] *= -mpq_class(k);
    }
  }

  std::vector<mpz_class> out(n + 1);
  for (int i = 0; i <= n; ++i) {
    mpq_class c = coeffs[i];
    c.canonicalize();
    if (c.get_den() != 1)
      throw InternalError("Alexander interpolation yielded a non-integer");
    out[i] = c.get_num();
  }
  return out;
}

}  // namespace

LaurentPoly alexander_from_seifert(const SeifertMatrix& v) {
  if (v.size() == 0) return LaurentPoly(1);
  auto p = det_poly(v);
  LaurentPoly delta;
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    delta = delta + LaurentPoly::monomial(i - v.genus(), p[i]);
  if (!delta.is_symmetric() || delta.eval_at_one() != 1)
    throw InternalError("Alexander polynomial failed normalization");
  return delta;
}

}  // namespace cp2
