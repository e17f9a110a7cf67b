#pragma once

#include <vector>

#include "cp2genus/laurent.hpp"

namespace cp2 {

struct BraidWord;

/// Square integer matrix V of even size 2g representing a Seifert form.
/// V - V^T is required to be unimodular (det = 1); size 0 is the unknot.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;
  explicit SeifertMatrix(std::vector<std::vector<long>> entries);

  int size() const { return static_cast<int>(rows_.size()); }
  int genus() const { return size() / 2; }
  long at(int i, int j) const { return rows_[i][j]; }
  const std::vector<std::vector<long>>& rows() const { return rows_; }

  SeifertMatrix mirrored() const;  // -V^T
  static SeifertMatrix block_diag(const SeifertMatrix& a,
                                  const SeifertMatrix& b);

  bool operator==(const SeifertMatrix&) const = default;

 private:
  std::vector<std::vector<long>> rows_;
};

/// Seifert matrix of the standard banded surface of a braid closure.
/// The word must use every generator index (connected surface) and close to
/// a knot; violations raise SemanticError.
SeifertMatrix seifert_from_braid(const BraidWord& w);

namespace detail {

/// Linking contribution of loops in adjacent generator columns whose band
/// intervals interleave. Exposed so the test suite can run negative
/// controls against the reference torus-knot invariants.
struct InterleaveRule {
  // left column's interval starts first
  int left_first_ab = -1;
  int left_first_ba = 0;
  // right column's interval starts first
  int right_first_ab = 1;
  int right_first_ba = 0;
};

SeifertMatrix seifert_from_braid_with(const BraidWord& w,
                                      const InterleaveRule& rule);

}  // namespace detail

/// det(tV - V^T) * t^{-g}, normalized so the result is symmetric with
/// value 1 at t = 1.
LaurentPoly alexander_from_seifert(const SeifertMatrix& v);

}  // namespace cp2
