#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cp2genus/seifert.hpp"

namespace cp2 {

/// Braid word on a fixed number of strands. Letter k (nonzero) stands for
/// the generator sigma_|k| with crossing sign = sign(k).
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  bool operator==(const BraidWord&) const = default;
};

/// Number of cycles of the permutation induced by the word; the closure is
/// a knot iff this equals 1.
int braid_components(const BraidWord& w);

enum class KnotKind {
  Unknot,
  Torus,
  Mirror,
  Sum,
  Braid,
  WhiteheadDouble,
  SeifertGiven,
};

class KnotExpr;
using KnotPtr = std::shared_ptr<const KnotExpr>;

/// Immutable, canonicalized algebraic knot description.
///
/// Canonical form: Mirror(Mirror(K)) = K, mirrors are pushed through sums,
/// sums are flattened, stripped of unknot summands and sorted by printed
/// form. All factory functions return canonical expressions.
class KnotExpr {
 public:
  KnotKind kind;
  int p = 0, q = 0;          // Torus
  int clasp = 0;             // WhiteheadDouble: +1 or -1
  BraidWord braid;           // Braid
  SeifertMatrix matrix;      // SeifertGiven
  std::vector<KnotPtr> parts;  // Mirror/WhiteheadDouble: 1, Sum: >= 2

  static KnotPtr unknot();
  static KnotPtr torus(int p, int q);
  static KnotPtr mirror(const KnotPtr& k);
  static KnotPtr sum(std::vector<KnotPtr> parts);
  static KnotPtr braid_closure(BraidWord w);
  static KnotPtr whitehead(int clasp, const KnotPtr& companion);
  static KnotPtr seifert_given(SeifertMatrix v);

 private:
  explicit KnotExpr(KnotKind k) : kind(k) {}
  friend KnotPtr make_node(KnotExpr&&);
};

std::string print_knot(const KnotPtr& k);
KnotPtr parse_knot(const std::string& text);

bool knot_equal(const KnotPtr& a, const KnotPtr& b);

/// Seifert matrix of the whole expression: braids via the banded surface,
/// Mirror as -V^T, Sum as block sum, untwisted Whitehead doubles as the
/// 2x2 clasp matrix.
SeifertMatrix seifert_matrix(const KnotPtr& k);

}  // namespace cp2
